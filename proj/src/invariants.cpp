#include "sbm/invariants.hpp"

namespace sbm {

const char* component_name(ProfileComponent c) {
  switch (c) {
    case ProfileComponent::Permutation: return "permutation";
    case ProfileComponent::StrandHomology: return "strand_homology";
    case ProfileComponent::AExponent: return "a_exponent";
    case ProfileComponent::SigmaParity: return "sigma_parity";
    case ProfileComponent::TauCount: return "tau_count";
  }
  return "?";
}

InvariantProfile evaluate(const Word& w, const SurfaceParams& p) {
  require_valid(w, p);
  const int n = p.strands;
  const int walls = p.wall_count();

  // occupants[pos-1] = strand currently at position pos; strands are named
  // by their start position.
  std::vector<int> occupants(n);
  for (int pos = 1; pos <= n; ++pos) occupants[pos - 1] = pos;

  InvariantProfile out;
  out.params = p;
  out.strand_homology.assign(n, std::vector<long>(walls, 0));
  out.a_exponent.assign(walls, 0);

  long sigma_letters = 0;
  for (const Letter& l : w) {
    switch (l.kind) {
      case LetterKind::Sigma:
        std::swap(occupants[l.index - 1], occupants[l.index]);
        ++sigma_letters;
        break;
      case LetterKind::Tau:
        std::swap(occupants[l.index - 1], occupants[l.index]);
        ++out.tau_count;
        break;
      case LetterKind::Wall:
        out.strand_homology[occupants[0] - 1][l.index - 1] += l.exponent;
        out.a_exponent[l.index - 1] += l.exponent;
        break;
    }
  }

  out.sigma_parity = static_cast<int>(sigma_letters % 2);
  out.permutation.assign(n, 0);
  for (int pos = 1; pos <= n; ++pos) out.permutation[occupants[pos - 1] - 1] = pos;
  return out;
}

std::optional<ProfileComponent> profile_difference(const InvariantProfile& x,
                                                   const InvariantProfile& y) {
  if (x.params != y.params)
    throw DimensionMismatchError("profiles for different (n, g)");
  // tau_count first: a singular-count mismatch is the strongest witness
  // (words with different counts differ regardless of any braiding).
  if (x.tau_count != y.tau_count) return ProfileComponent::TauCount;
  if (x.permutation != y.permutation) return ProfileComponent::Permutation;
  if (x.strand_homology != y.strand_homology)
    return ProfileComponent::StrandHomology;
  if (x.a_exponent != y.a_exponent) return ProfileComponent::AExponent;
  if (x.sigma_parity != y.sigma_parity) return ProfileComponent::SigmaParity;
  return std::nullopt;
}

bool profiles_equal(const InvariantProfile& x, const InvariantProfile& y) {
  return !profile_difference(x, y).has_value();
}

std::optional<ProfileComponent> distinguish(const Word& u, const Word& v,
                                            const SurfaceParams& p) {
  return profile_difference(evaluate(u, p), evaluate(v, p));
}

}  // namespace sbm
