#pragma once

#include <optional>
#include <vector>

#include "sbm/word.hpp"

namespace sbm {

struct DimensionMismatchError : SbmError {
  using SbmError::SbmError;
};

// Computable isotopy data of a word: induced permutation, abelianized wall
// crossings per strand, wall exponent sums, sigma parity, singular count.
// Equal for words equal in the monoid; not a complete invariant.
struct InvariantProfile {
  SurfaceParams params;
  std::vector<int> permutation;  // permutation[s-1] = end position of strand s
  std::vector<std::vector<long>> strand_homology;  // [s-1] -> Z^{2g}
  std::vector<long> a_exponent;                    // Z^{2g}
  int sigma_parity = 0;
  long tau_count = 0;

  bool operator==(const InvariantProfile&) const = default;
};

InvariantProfile evaluate(const Word& w, const SurfaceParams& p);

// Componentwise equality; throws DimensionMismatchError when the ambient
// (n, g) differ.
bool profiles_equal(const InvariantProfile& x, const InvariantProfile& y);

enum class ProfileComponent {
  Permutation,
  StrandHomology,
  AExponent,
  SigmaParity,
  TauCount,
};

const char* component_name(ProfileComponent c);

// nullopt when the profiles agree; otherwise the first differing component
// in the order permutation, strand_homology, a_exponent, sigma_parity,
// tau_count.
std::optional<ProfileComponent> distinguish(const Word& u, const Word& v,
                                            const SurfaceParams& p);

std::optional<ProfileComponent> profile_difference(const InvariantProfile& x,
                                                   const InvariantProfile& y);

}  // namespace sbm
