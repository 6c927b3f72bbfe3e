#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbm {

// Ambient surface data: n strands on a closed orientable surface of genus g.
// Fixes the alphabet: s1..s(n-1), a1..a(2g), t1..t(n-1).
struct SurfaceParams {
  int strands = 1;  // n >= 1
  int genus = 0;    // g >= 0

  int wall_count() const { return 2 * genus; }
  bool valid() const { return strands >= 1 && genus >= 0; }
  bool operator==(const SurfaceParams&) const = default;
};

enum class LetterKind { Sigma, Wall, Tau };

// One generator occurrence. Tau letters are never negative: t_i has no
// inverse in the monoid.
struct Letter {
  LetterKind kind = LetterKind::Sigma;
  int index = 1;
  int exponent = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

inline Letter sigma(int i, int exp = 1) { return {LetterKind::Sigma, i, exp}; }
inline Letter wall(int r, int exp = 1) { return {LetterKind::Wall, r, exp}; }
inline Letter tau(int i) { return {LetterKind::Tau, i, 1}; }

struct SbmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRangeError : SbmError {
  using SbmError::SbmError;
};

struct NotInvertibleError : SbmError {
  using SbmError::SbmError;
};

enum class ValidationCode { IndexOutOfRange, NegativeTauExponent };

struct ValidationError {
  ValidationCode code;
  std::size_t position;  // letter index in the word
};

struct InvalidWordError : SbmError {
  InvalidWordError(ValidationError d, const std::string& what)
      : SbmError(what), detail(d) {}
  ValidationError detail;
};

// nullopt means the word is valid for p.
std::optional<ValidationError> validate(const Word& w, const SurfaceParams& p);

// Throwing form of validate, for internal preconditions.
void require_valid(const Word& w, const SurfaceParams& p);

// True when x y is a cancellable pair (same invertible generator, opposite
// exponents). Tau letters never cancel.
bool cancels(const Letter& x, const Letter& y);

// Deletes adjacent inverse pairs of Sigma/Wall letters until none remain.
// The result is independent of deletion order.
Word free_reduce(const Word& w);

bool is_freely_reduced(const Word& w);

// Reversed word with exponents negated. Throws NotInvertibleError if w
// contains a Tau letter.
Word invert(const Word& w);

bool is_invertible(const Word& w);

// Plain concatenation; no reduction.
Word concat(const Word& u, const Word& v);

std::size_t tau_count(const Word& w);

}  // namespace sbm
