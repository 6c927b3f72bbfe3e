#include "sbm/word.hpp"

namespace sbm {

std::optional<ValidationError> validate(const Word& w, const SurfaceParams& p) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const Letter& l = w[pos];
    switch (l.kind) {
      case LetterKind::Sigma:
        if (l.index < 1 || l.index > p.strands - 1)
          return ValidationError{ValidationCode::IndexOutOfRange, pos};
        break;
      case LetterKind::Wall:
        if (l.index < 1 || l.index > p.wall_count())
          return ValidationError{ValidationCode::IndexOutOfRange, pos};
        break;
      case LetterKind::Tau:
        if (l.index < 1 || l.index > p.strands - 1)
          return ValidationError{ValidationCode::IndexOutOfRange, pos};
        if (l.exponent != 1)
          return ValidationError{ValidationCode::NegativeTauExponent, pos};
        break;
    }
    if (l.exponent != 1 && l.exponent != -1)
      return ValidationError{ValidationCode::IndexOutOfRange, pos};
  }
  return std::nullopt;
}

void require_valid(const Word& w, const SurfaceParams& p) {
  if (auto err = validate(w, p)) {
    const char* what = err->code == ValidationCode::NegativeTauExponent
                           ? "tau letter with negative exponent"
                           : "letter index out of range";
    throw InvalidWordError(*err, std::string(what) + " at position " +
                                     std::to_string(err->position));
  }
}

bool cancels(const Letter& x, const Letter& y) {
  if (x.kind == LetterKind::Tau || y.kind == LetterKind::Tau) return false;
  return x.kind == y.kind && x.index == y.index && x.exponent == -y.exponent;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (cancels(w[i], w[i + 1])) return false;
  return true;
}

bool is_invertible(const Word& w) {
  for (const Letter& l : w)
    if (l.kind == LetterKind::Tau) return false;
  return true;
}

Word invert(const Word& w) {
  if (!is_invertible(w))
    throw NotInvertibleError("word contains a tau letter and has no inverse");
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->kind, it->index, -it->exponent});
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::size_t tau_count(const Word& w) {
  std::size_t k = 0;
  for (const Letter& l : w)
    if (l.kind == LetterKind::Tau) ++k;
  return k;
}

}  // namespace sbm
