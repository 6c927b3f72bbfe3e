#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sbm/word.hpp"

using namespace sbm;
using sbm::testhelpers::random_order_reduce;
using sbm::testhelpers::random_word;

TEST_CASE("validate accepts in-range letters") {
  CHECK(!validate({sigma(1)}, {2, 0}));
  CHECK(!validate({sigma(1), tau(1), wall(2)}, {2, 1}));
  CHECK(!validate({}, {1, 0}));
}

TEST_CASE("validate flags out-of-range indices with position") {
  auto err = validate({wall(1)}, {2, 0});  // no walls on the sphere
  REQUIRE(err);
  CHECK(err->code == ValidationCode::IndexOutOfRange);
  CHECK(err->position == 0);

  err = validate({sigma(1), sigma(2)}, {2, 0});
  REQUIRE(err);
  CHECK(err->position == 1);
}

TEST_CASE("validate rejects negative tau exponents") {
  auto err = validate({Letter{LetterKind::Tau, 1, -1}}, {2, 1});
  REQUIRE(err);
  CHECK(err->code == ValidationCode::NegativeTauExponent);
}

TEST_CASE("free_reduce cancels inverse sigma and wall pairs") {
  CHECK(free_reduce({sigma(1), sigma(1, -1)}) == Word{});
  CHECK(free_reduce({tau(1), tau(1)}) == Word{tau(1), tau(1)});
  // nested cancellation: inner pair first, then the outer one
  CHECK(free_reduce({wall(1), sigma(2), sigma(2, -1), wall(1, -1)}) == Word{});
}

TEST_CASE("free_reduce is idempotent and order-independent") {
  std::mt19937 rng(7);
  const SurfaceParams p{4, 2};
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(rng, p, 50);
    const Word r = free_reduce(w);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);
    CHECK(random_order_reduce(w, rng) == r);
    CHECK(tau_count(r) == tau_count(w));
  }
}

TEST_CASE("invert reverses and negates") {
  CHECK(invert({sigma(1), wall(2, -1)}) == Word{wall(2), sigma(1, -1)});
  CHECK(invert({}) == Word{});
  CHECK_THROWS_AS(invert({tau(1)}), NotInvertibleError);
}

TEST_CASE("invert is an involution and a two-sided inverse") {
  std::mt19937 rng(11);
  const SurfaceParams p{5, 2};
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, p, 30, /*allow_tau=*/false);
    CHECK(invert(invert(w)) == w);
    CHECK(free_reduce(concat(w, invert(w))) == Word{});
    CHECK(free_reduce(concat(invert(w), w)) == Word{});
  }
}

TEST_CASE("invert refuses words containing any tau letter") {
  std::mt19937 rng(13);
  const SurfaceParams p{4, 1};
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, p, 20);
    if (tau_count(w) > 0) CHECK_THROWS_AS(invert(w), NotInvertibleError);
  }
}

TEST_CASE("concat is plain juxtaposition") {
  CHECK(concat({sigma(1)}, {sigma(1, -1)}) == Word{sigma(1), sigma(1, -1)});
  CHECK(concat({}, {tau(1)}) == Word{tau(1)});
  CHECK(concat({wall(1)}, {tau(2)}) == Word{wall(1), tau(2)});
}

TEST_CASE("concat is associative with empty identity") {
  std::mt19937 rng(17);
  const SurfaceParams p{3, 1};
  for (int trial = 0; trial < 100; ++trial) {
    const Word a = random_word(rng, p, 10);
    const Word b = random_word(rng, p, 10);
    const Word c = random_word(rng, p, 10);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, {}) == a);
    CHECK(concat({}, a) == a);
  }
}
