#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbm/rewrite.hpp"

using namespace sbm;

namespace {

std::vector<Relation> only_family(const SurfaceParams& p, RelationFamily f) {
  std::vector<Relation> out;
  for (const Relation& r : all_relations(p))
    if (r.family == f) out.push_back(r);
  return out;
}

// Replays a trace step by step, asserting that the invariant profile never
// changes.
void check_trace(const ProofTrace& t, const std::vector<Relation>& rels,
                 const SurfaceParams& p) {
  const auto prof = evaluate(t.start, p);
  Word w = t.start;
  for (const RewriteStep& s : t.steps) {
    w = apply_step(w, s, rels);
    CHECK(evaluate(w, p) == prof);
  }
  CHECK(w == t.end);
}

}  // namespace

TEST_CASE("find_applications locates relation matches and cancellations") {
  const SurfaceParams p{3, 0};
  const auto r2 = only_family(p, RelationFamily::R2);
  REQUIRE(r2.size() == 1);

  auto steps = find_applications({sigma(1), sigma(2), sigma(1)}, r2);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].kind == StepKind::RelationApply);
  CHECK(steps[0].position == 0);
  CHECK(steps[0].forward);

  // no relation side of the sphere presentation occurs inside t1
  steps = find_applications({tau(1)}, all_relations({2, 0}));
  CHECK(steps.empty());

  steps = find_applications({sigma(1), sigma(1, -1)}, {});
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].kind == StepKind::FreeCancel);
  CHECK(steps[0].position == 0);
}

TEST_CASE("find_applications order is position-major") {
  const SurfaceParams p{4, 0};
  const auto rels = all_relations(p);
  const Word w{sigma(1), sigma(2), sigma(1), sigma(2), sigma(1), sigma(2)};
  const auto steps = find_applications(w, rels);
  REQUIRE(!steps.empty());
  for (std::size_t k = 1; k < steps.size(); ++k)
    CHECK(steps[k - 1].position <= steps[k].position);
}

TEST_CASE("apply_step splices literally") {
  const SurfaceParams p{3, 0};
  const auto rels = all_relations(p);
  int r2 = -1;
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (rels[i].family == RelationFamily::R2) r2 = static_cast<int>(i);
  REQUIRE(r2 >= 0);

  const Word w{sigma(1), sigma(2), sigma(1)};
  CHECK(apply_step(w, {StepKind::RelationApply, 0, r2, true, {}}, rels) ==
        Word{sigma(2), sigma(1), sigma(2)});

  CHECK(apply_step({tau(1)}, {StepKind::PairInsert, 0, -1, true, sigma(1)},
                   rels) == Word{sigma(1), sigma(1, -1), tau(1)});

  CHECK(apply_step({sigma(1), sigma(1, -1), tau(1)},
                   {StepKind::FreeCancel, 0, -1, true, sigma(1)}, rels) ==
        Word{tau(1)});

  CHECK_THROWS_AS(
      apply_step({tau(1)}, {StepKind::RelationApply, 0, r2, true, {}}, rels),
      NotApplicableError);
  CHECK_THROWS_AS(
      apply_step({tau(1)}, {StepKind::FreeCancel, 0, -1, true, sigma(1)}, rels),
      NotApplicableError);
  CHECK_THROWS_AS(
      apply_step({tau(1)}, {StepKind::PairInsert, 0, -1, true, tau(1)}, rels),
      NotApplicableError);
}

TEST_CASE("cancel_common_prefix strips the longest shared prefix") {
  const Word u{tau(1), sigma(1), wall(1)};
  const Word v{tau(1), wall(1), sigma(1)};
  auto [su, sv] = cancel_common_prefix(u, v);
  CHECK(su == Word{sigma(1), wall(1)});
  CHECK(sv == Word{wall(1), sigma(1)});

  auto [eu, ev] = cancel_common_prefix({sigma(1)}, {sigma(1)});
  CHECK(eu == Word{});
  CHECK(ev == Word{});

  auto [wu, wv] = cancel_common_prefix({wall(1), tau(1)}, {tau(1), wall(1)});
  CHECK(wu == Word{wall(1), tau(1)});
  CHECK(wv == Word{tau(1), wall(1)});
}

TEST_CASE("equiv_search proves reflexivity with an empty trace") {
  const SurfaceParams p{2, 1};
  const Word w{sigma(1), tau(1), wall(2)};
  const auto res = equiv_search(w, w, p, {1, 1});
  REQUIRE(res.verdict == Verdict::Equivalent);
  CHECK(res.trace->steps.empty());
  CHECK(res.trace->start == res.trace->end);
}

TEST_CASE("equiv_search proves the sigma-tau commutation") {
  const SurfaceParams p{2, 0};
  const Word u{sigma(1), tau(1)};
  const Word v{tau(1), sigma(1)};
  const auto res = equiv_search(u, v, p, SearchBudget{12, 1000});
  REQUIRE(res.verdict == Verdict::Equivalent);
  check_trace(*res.trace, all_relations(p), p);
  CHECK(res.trace->start == u);
  CHECK(res.trace->end == v);
}

TEST_CASE("equiv_search refutes by homology") {
  const SurfaceParams p{2, 1};
  const auto res = equiv_search({wall(1), tau(1)}, {tau(1), wall(1)}, p,
                                SearchBudget{12, 1000});
  REQUIRE(res.verdict == Verdict::DistinctByInvariant);
  CHECK(*res.witness == ProfileComponent::StrandHomology);
}

TEST_CASE("equiv_search proves the conjugated singular generator") {
  const SurfaceParams p{3, 0};
  const Word u = tau_conjugate(1, 2, p);
  const Word v{tau(2)};
  const auto res = equiv_search(u, v, p, SearchBudget{14, 10000});
  REQUIRE(res.verdict == Verdict::Equivalent);
  check_trace(*res.trace, all_relations(p), p);
}

TEST_CASE("every relation instance is proved within the default budget") {
  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 1; ++g) {
      const SurfaceParams p{n, g};
      const auto rels = all_relations(p);
      for (const Relation& r : rels) {
        const auto res =
            equiv_search(r.lhs, r.rhs, p, default_budget(r.lhs, r.rhs), rels);
        REQUIRE(res.verdict == Verdict::Equivalent);
        check_trace(*res.trace, rels, p);
      }
    }
}

TEST_CASE("larger budgets preserve an Equivalent verdict") {
  const SurfaceParams p{3, 0};
  const Word u = tau_conjugate(1, 2, p);
  const Word v{tau(2)};
  const SearchBudget small{14, 10000};
  const SearchBudget large{20, 50000};
  CHECK(equiv_search(u, v, p, small).verdict == Verdict::Equivalent);
  CHECK(equiv_search(u, v, p, large).verdict == Verdict::Equivalent);
}

TEST_CASE("prefix cancellation does not change verdicts") {
  const SurfaceParams p{2, 0};
  const Word u{tau(1), sigma(1), tau(1)};
  const Word v{tau(1), tau(1), sigma(1)};
  const auto direct = equiv_search(u, v, p, SearchBudget{14, 1000});
  auto [su, sv] = cancel_common_prefix(u, v);
  const auto stripped = equiv_search(su, sv, p, SearchBudget{14, 1000});
  CHECK(direct.verdict == Verdict::Equivalent);
  CHECK(stripped.verdict == Verdict::Equivalent);

  // and on a refutable pair
  const SurfaceParams q{2, 1};
  const Word a{tau(1), wall(1), tau(1)};
  const Word b{tau(1), tau(1), wall(1)};
  auto [sa, sb] = cancel_common_prefix(a, b);
  CHECK(equiv_search(a, b, q, SearchBudget{14, 1000}).verdict ==
        equiv_search(sa, sb, q, SearchBudget{14, 1000}).verdict);
}

TEST_CASE("budget exhaustion reports Unknown") {
  const SurfaceParams p{4, 0};
  const Word u = tau_conjugate(1, 3, p);
  const Word v{tau(3)};
  const auto res = equiv_search(u, v, p, SearchBudget{4, 2});
  CHECK(res.verdict == Verdict::Unknown);
}
