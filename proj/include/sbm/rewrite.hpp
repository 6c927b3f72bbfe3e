#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sbm/invariants.hpp"
#include "sbm/presentation.hpp"
#include "sbm/word.hpp"

namespace sbm {

struct NotApplicableError : SbmError {
  using SbmError::SbmError;
};

enum class StepKind { RelationApply, FreeCancel, PairInsert };

// One elementary move. Application is a literal splice:
//   RelationApply: replace one side of rels[relation_index] occurring at
//     position by the other side (forward = lhs -> rhs);
//   FreeCancel: delete the inverse pair at position, position+1;
//   PairInsert: insert letter letter^-1 at position (invertible letters only).
struct RewriteStep {
  StepKind kind = StepKind::RelationApply;
  std::size_t position = 0;
  int relation_index = -1;
  bool forward = true;
  Letter letter{};  // pair letter for FreeCancel / PairInsert

  bool operator==(const RewriteStep&) const = default;
};

// A replayable derivation: applying steps to start, in order, yields end
// letter-for-letter.
struct ProofTrace {
  Word start;
  std::vector<RewriteStep> steps;
  Word end;
};

struct SearchBudget {
  std::size_t max_word_length = 0;
  std::size_t max_nodes = 0;
};

// max_word_length = |u| + |v| + 8, max_nodes = 10^5 per side.
SearchBudget default_budget(const Word& u, const Word& v);

// Every applicable step on w: ascending position, relations in list order
// with forward before reverse, then the free cancellation at that position.
std::vector<RewriteStep> find_applications(const Word& w,
                                           const std::vector<Relation>& rels);

// Applies one step literally. Throws NotApplicableError when the step does
// not fit w.
Word apply_step(const Word& w, const RewriteStep& s,
                const std::vector<Relation>& rels);

// Replays a trace from its start word; does not compare against trace.end.
Word replay(const ProofTrace& t, const std::vector<Relation>& rels);

// Strips the longest common letter prefix. Sound by left-cancellativity of
// the monoid: the stripped pair is equivalent iff the originals are.
std::pair<Word, Word> cancel_common_prefix(const Word& u, const Word& v);

enum class Verdict { Equivalent, DistinctByInvariant, Unknown };

struct EquivResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<ProofTrace> trace;              // Equivalent
  std::optional<ProfileComponent> witness;      // DistinctByInvariant
};

// Invariant check first, then bidirectional breadth-first search over
// relation applications (kept freely reduced) and pair insertions.
// Deterministic for fixed inputs and budget.
EquivResult equiv_search(const Word& u, const Word& v, const SurfaceParams& p,
                         const SearchBudget& b);
EquivResult equiv_search(const Word& u, const Word& v, const SurfaceParams& p,
                         const SearchBudget& b,
                         const std::vector<Relation>& rels);

}  // namespace sbm
