#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_util.hpp"

using arr::Arrangement;
using arr::Error;
using arr::ErrorKind;
using arr::FieldSpec;
using arr::Matrix;
using arr::Scalar;
using testutil::from_poly;
using testutil::load_corpus;

namespace {

// Canonical form of the solution space of M x = 0: the RREF of a basis of
// the nullspace. Used as an independent oracle for restriction counts.
Matrix nullspace_canonical(Matrix m, const FieldSpec& f) {
  int n = m.cols;
  arr::rref(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : m.rows)
    for (int c = 0; c < n; ++c)
      if (!row[c].is_zero()) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  Matrix basis;
  basis.cols = n;
  for (int fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    arr::Row v(n, Scalar::zero(f));
    v[fcol] = Scalar::one(f);
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m.rows[i][fcol];
    basis.rows.push_back(std::move(v));
  }
  arr::rref(basis);
  return basis;
}

std::string matrix_key(const Matrix& m) {
  std::string k;
  for (const auto& row : m.rows)
    for (const auto& v : row) k += v.render() + ",";
  return k;
}

// Distinct subspaces H cap H0 for H != H0, by brute-force nullspaces.
int distinct_intersections(const Arrangement& a, int pivot) {
  std::set<std::string> seen;
  for (int h = 0; h < a.size(); ++h) {
    if (h == pivot) continue;
    Matrix m;
    m.cols = a.dim;
    m.rows = {a.hyperplanes[pivot].normal, a.hyperplanes[h].normal};
    seen.insert(matrix_key(nullspace_canonical(m, a.field)));
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("make_arrangement basics") {
  Arrangement b3 = from_poly("x y z", 3);
  CHECK(b3.size() == 3);
  CHECK(b3.dim == 3);
  CHECK(load_corpus("d13").size() == 7);
  Arrangement empty = from_poly("", 3);
  CHECK(empty.empty());
  CHECK(arr::arrangement_rank(empty) == 0);
}

TEST_CASE("triples delete and restrict") {
  Arrangement b3 = from_poly("x y z", 3);
  arr::Triple t = arr::make_triple(b3, 0);
  CHECK(t.deleted.size() == 2);
  CHECK(t.restricted.size() == 2);
  CHECK(t.restricted.dim == 2);

  // A' plus the pivot is A again, as sets
  std::set<std::string> whole, reunion;
  for (const auto& h : b3.hyperplanes) whole.insert(arr::render_linear_form(h.normal, b3.field));
  for (const auto& h : t.deleted.hyperplanes)
    reunion.insert(arr::render_linear_form(h.normal, b3.field));
  reunion.insert(arr::render_linear_form(b3.hyperplanes[0].normal, b3.field));
  CHECK(whole == reunion);

  CHECK_THROWS_AS(arr::make_triple(from_poly("", 2), 0), Error);
  CHECK_THROWS_AS(arr::make_triple(b3, 5), Error);
}

TEST_CASE("B2 restriction collapses to a point") {
  // brute-force oracle: in a rank-2 arrangement every H cap H0 is the
  // center, so the restriction has exactly one element
  Arrangement b2 = load_corpus("a222");
  arr::Triple t = arr::make_triple(b2, 0);  // pivot ker x
  int expected = distinct_intersections(b2, 0);
  CHECK(expected == 1);
  CHECK(t.restricted.size() == expected);
  // the trace matches the oracle on every pivot of every corpus arrangement
  for (const char* name : {"a222", "ot454", "d13", "g333"}) {
    Arrangement a = load_corpus(name);
    for (int pivot = 0; pivot < a.size(); ++pivot) {
      arr::Triple tr = arr::make_triple(a, pivot);
      CHECK(tr.restricted.size() == distinct_intersections(a, pivot));
      for (int i = 0; i < tr.deleted.size(); ++i) {
        CHECK(tr.trace[i] >= 0);
        CHECK(tr.trace[i] < tr.restricted.size());
      }
    }
  }
}

TEST_CASE("g333 restrictions have four lines") {
  Arrangement g = load_corpus("g333");
  for (int pivot = 0; pivot < g.size(); ++pivot) {
    arr::Triple t = arr::make_triple(g, pivot);
    CHECK(t.restricted.size() == 4);
  }
}

TEST_CASE("localize") {
  Arrangement b3 = from_poly("x y z", 3);
  const arr::Lattice& lat = arr::lattice_for(b3);
  CHECK(arr::localize(lat, 0).empty());  // no hyperplane contains V
  int xy = lat.flat_of({0, 1});
  CHECK(arr::localize_indices(lat, xy) == std::vector<int>{0, 1});

  Arrangement z11 = load_corpus("zeta3_11");
  const arr::Lattice& zlat = arr::lattice_for(z11);
  int f = zlat.flat_of({2, 5});  // H3 cap H6
  CHECK(arr::localize_indices(zlat, f) == std::vector<int>{2, 5, 7, 10});
}

TEST_CASE("restrict") {
  Arrangement b3 = from_poly("x y z", 3);
  const arr::Lattice& lat = arr::lattice_for(b3);
  // A^V = A
  arr::Restriction atv = arr::restrict_to_flat(lat, 0);
  CHECK(atv.arr.size() == 3);
  CHECK(atv.arr.dim == 3);
  // restriction to a coordinate hyperplane is the Boolean 2-arrangement
  arr::Restriction line = arr::restrict_to_flat(lat, lat.flat_of({0}));
  CHECK(line.arr.size() == 2);
  CHECK(line.arr.dim == 2);

  // the restriction of the rank-4 example to ker t has a Poincare
  // polynomial without an integral linear factorization
  Arrangement nh = load_corpus("notheredfactored");
  const arr::Lattice& nhlat = arr::lattice_for(nh);
  arr::Restriction rt = arr::restrict_to_flat(nhlat, nhlat.flat_of({0}));
  CHECK(!arr::try_factor_linear(arr::poincare(rt.arr)));
}

TEST_CASE("checked flats reject foreign subspaces") {
  Arrangement b3 = from_poly("x y z", 3);
  const arr::Lattice& lat = arr::lattice_for(b3);
  arr::Flat bogus;
  bogus.basis.cols = 3;
  bogus.basis.rows = {
      {Scalar::one(b3.field), Scalar::one(b3.field), Scalar::zero(b3.field)}};
  try {
    arr::checked_flat_id(lat, bogus);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFlat);
  }
}

TEST_CASE("products") {
  Arrangement phi1 = from_poly("", 1), phi2 = from_poly("", 2);
  Arrangement p = arr::product(phi1, phi2);
  CHECK(p.dim == 3);
  CHECK(p.empty());

  Arrangement d21 = from_poly("x (x-y) (x+y)", 2);
  Arrangement d21xphi1 = arr::product(d21, phi1);
  CHECK(d21xphi1.canonical_key() == load_corpus("d21xphi1").canonical_key());

  Arrangement a222 = load_corpus("a222");
  CHECK(arr::product(a222, d21).size() == a222.size() + d21.size());
  CHECK_THROWS_AS(arr::product(a222, load_corpus("gf4_11")), Error);
}

TEST_CASE("product lattices multiply Whitney numbers") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Arrangement a1 = testutil::random_arrangement(rng, 5, 2, 4);
    Arrangement a2 = testutil::random_arrangement(rng, 5, 2, 4);
    Arrangement p = arr::product(a1, a2);
    arr::IntPoly expected = arr::poincare(a1) * arr::poincare(a2);
    CHECK(arr::poincare(p) == expected);
    // flat counts per rank are the convolution of the factors' counts
    const arr::Lattice &l1 = arr::lattice_for(a1), &l2 = arr::lattice_for(a2),
                       &lp = arr::lattice_for(p);
    for (int k = 0; k <= lp.rank(); ++k) {
      size_t expected_count = 0;
      for (int i = 0; i <= k; ++i)
        if (i <= l1.rank() && k - i <= l2.rank())
          expected_count += l1.by_rank[i].size() * l2.by_rank[k - i].size();
      CHECK(lp.by_rank[k].size() == expected_count);
    }
  }
}

TEST_CASE("localization and restriction commute with products") {
  Arrangement a1 = load_corpus("a222");
  Arrangement a2 = from_poly("x (x-y)", 2);
  Arrangement p = arr::product(a1, a2);
  const arr::Lattice& lat1 = arr::lattice_for(a1);
  const arr::Lattice& latp = arr::lattice_for(p);

  // X = X1 + V2 with X1 the center of A1: no hyperplane of the second
  // factor contains V2, so A_X = (A1)_{X1} x Phi
  std::vector<int> span;
  for (int h = 0; h < a1.size(); ++h) span.push_back(h);
  int x1 = lat1.flat_of(span);
  int xp = latp.flat_of(span);
  Arrangement locp = arr::localize(latp, xp);
  Arrangement phi2 = from_poly("", a2.dim);
  Arrangement expected_loc = arr::product(arr::localize(lat1, x1), phi2);
  CHECK(locp.canonical_key() == expected_loc.canonical_key());

  arr::Restriction resp = arr::restrict_to_flat(latp, xp);
  arr::Restriction res1 = arr::restrict_to_flat(lat1, x1);
  Arrangement expected_res = arr::product(res1.arr, a2);
  CHECK(resp.arr.canonical_key() == expected_res.canonical_key());
}
