#include <doctest.h>

#include <algorithm>
#include <random>

#include "arr/os_algebra.hpp"
#include "test_util.hpp"

using arr::Arrangement;
using arr::Error;
using arr::ErrorKind;
using arr::Matroid;
using arr::Partition;
using arr::Rat;
using testutil::blocks;
using testutil::from_poly;
using testutil::load_corpus;

namespace {

std::uint32_t mask_of(std::initializer_list<int> one_based) {
  std::uint32_t m = 0;
  for (int i : one_based) m |= 1u << (i - 1);
  return m;
}

}  // namespace

TEST_CASE("matroid of B2") {
  Arrangement b2 = load_corpus("a222");  // x, y, x-y, x+y
  Matroid m = arr::build_matroid(b2);
  CHECK(m.rank == 2);
  // every 3-subset is a circuit
  std::vector<std::uint32_t> expected{mask_of({1, 2, 3}), mask_of({1, 2, 4}), mask_of({1, 3, 4}),
                                      mask_of({2, 3, 4})};
  std::sort(expected.begin(), expected.end());
  std::vector<std::uint32_t> got = m.circuits;
  std::sort(got.begin(), got.end());
  CHECK(got == expected);

  arr::GradedBasis g = arr::nbc_basis(m);
  CHECK(g.nbc_sets[0].size() == 1);
  CHECK(g.nbc_sets[1].size() == 4);
  CHECK(g.nbc_sets[2].size() == 3);  // {1,2}, {1,3}, {1,4}
}

TEST_CASE("straighten") {
  Arrangement b2 = load_corpus("a222");
  Matroid m = arr::build_matroid(b2);

  // NBC monomials are fixed
  arr::OSElement fixed = arr::straighten(m, {0, 1});
  REQUIRE(fixed.size() == 1);
  CHECK(fixed.begin()->first == mask_of({1, 2}));
  CHECK(fixed.begin()->second == Rat(1));

  // dependent monomials vanish
  CHECK(arr::straighten(m, {0, 1, 2}).empty());

  // the broken circuit {3,4}: the boundary of the circuit {2,3,4} gives
  // a34 = a24 - a23, and rewriting those through the circuits {1,2,4} and
  // {1,2,3} leaves a14 - a13
  arr::OSElement rewritten = arr::straighten(m, {2, 3});
  REQUIRE(rewritten.size() == 2);
  CHECK(rewritten.at(mask_of({1, 4})) == Rat(1));
  CHECK(rewritten.at(mask_of({1, 3})) == Rat(-1));

  // straightening is idempotent on every emitted basis set
  for (const auto& [basis_set, coeff] : rewritten) {
    std::vector<int> s;
    for (int i = 0; i < 32; ++i)
      if (basis_set & (1u << i)) s.push_back(i);
    arr::OSElement again = arr::straighten(m, s);
    REQUIRE(again.size() == 1);
    CHECK(again.begin()->first == basis_set);
  }

  CHECK_THROWS_AS(arr::straighten(m, {1, 0}), Error);   // NotSorted
  CHECK_THROWS_AS(arr::straighten(m, {0, 9}), Error);   // OutOfRange
}

TEST_CASE("os_poincare equals the lattice computation") {
  CHECK(arr::render(arr::os_poincare(from_poly("", 3))) == "1");
  CHECK(arr::render(arr::os_poincare(load_corpus("ot454"))) == "1+5t+8t^2+4t^3");
  CHECK(arr::render(arr::os_poincare(load_corpus("notfactored"))) == "1+4t+6t^2+3t^3");
  for (const char* name : {"boolean3", "a222", "notfactored", "ot454", "d13", "d21xphi1", "g333",
                           "g333hat", "gf4_11", "zeta3_11", "notheredfactored"}) {
    Arrangement a = load_corpus(name);
    CHECK(arr::os_poincare(a) == arr::poincare(a));
  }
}

TEST_CASE("NBC counts are order-independent") {
  std::mt19937 rng(13);
  Arrangement a = load_corpus("d13");
  std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Arrangement b = a.subarrangement(perm);
    CHECK(arr::os_poincare(b) == arr::os_poincare(a));
  }
}

TEST_CASE("kappa on explicit partitions") {
  Arrangement b3 = from_poly("x y z", 3);
  CHECK(arr::kappa_is_isomorphism(b3, blocks({{1}, {2}, {3}})).verdict);

  // the non-nice B2 partition fails on dimensions in degree 2
  Arrangement b2 = load_corpus("a222");
  arr::KappaReport rep = arr::kappa_report(b2, blocks({{1, 3}, {2, 4}}));
  CHECK(!rep.isomorphism);
  CHECK(rep.failing_degree == 2);
  CHECK(rep.domain_dims[2] == 4);
  CHECK(rep.codomain_dims[2] == 3);

  CHECK(arr::kappa_is_isomorphism(load_corpus("ot454"), blocks({{1}, {2, 4}, {3, 5}})).verdict);

  // when kappa is an isomorphism the number of blocks is the rank
  arr::KappaReport ok = arr::kappa_report(load_corpus("ot454"), blocks({{1}, {2, 4}, {3, 5}}));
  CHECK(ok.isomorphism);
  CHECK(static_cast<int>(ok.codomain_dims.size()) - 1 ==
        arr::arrangement_rank(load_corpus("ot454")));
}

TEST_CASE("kappa agrees with niceness") {
  struct Case {
    const char* name;
    Partition p;
  };
  std::vector<Case> cases{
      {"boolean3", blocks({{1}, {2}, {3}})},
      {"a222", blocks({{1}, {2, 3, 4}})},
      {"a222", blocks({{1, 3}, {2, 4}})},
      {"ot454", blocks({{1}, {2, 4}, {3, 5}})},
      {"ot454", blocks({{1}, {2, 3}, {4, 5}})},
      {"d13", blocks({{1}, {2, 3, 6}, {4, 5, 7}})},
      {"d13", blocks({{1}, {2, 3, 4}, {5, 6, 7}})},
      {"g333", blocks({{1, 2, 4, 5}, {7}, {3, 6, 8, 9}})},
      {"notfactored", blocks({{1}, {2}, {3, 4}})},
  };
  for (const auto& c : cases) {
    Arrangement a = load_corpus(c.name);
    CHECK(arr::kappa_is_isomorphism(a, c.p).verdict == arr::is_nice(a, c.p).verdict);
  }
}

TEST_CASE("both Poincare routes agree on random prime-field arrangements") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 30; ++trial) {
    Arrangement a = testutil::random_arrangement(rng, 5, 3, 7);
    CHECK(arr::os_poincare(a) == arr::poincare(a));
  }
}

TEST_CASE("matroid size cap") {
  Arrangement big = arr::product(load_corpus("gf4_11"), load_corpus("gf4_11"));
  try {
    arr::build_matroid(big);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}
