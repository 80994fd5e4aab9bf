#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arr/factor.hpp"

namespace arr {

/// Matroid of the normal vectors, over the arrangement's own field.
/// Supports arrangements with at most 20 hyperplanes.
struct Matroid {
  int groundset = 0;
  int rank = 0;
  std::vector<std::uint32_t> circuits;         // minimal dependent sets, as bitmasks
  std::vector<std::uint32_t> broken_circuits;  // circuit minus its minimum
};

Matroid build_matroid(const Arrangement& a);

/// Per degree p, the p-subsets containing no broken circuit, in
/// lexicographic order of their sorted index lists.
struct GradedBasis {
  std::vector<std::vector<std::uint32_t>> nbc_sets;  // nbc_sets[p]
};

GradedBasis nbc_basis(const Matroid& m);

/// Element of the Orlik-Solomon algebra in the NBC basis; the structure
/// constants are integers, so rational coefficients are exact for every
/// coefficient field in scope.
using OSElement = std::map<std::uint32_t, Rat>;

/// Class of the monomial a_S in the NBC basis: dependent sets vanish, sets
/// containing a broken circuit rewrite through the circuit boundary
/// relation. `s` lists strictly increasing generator indices.
OSElement straighten(const Matroid& m, const std::vector<int>& s);

/// Poincare polynomial of A(A) from NBC counts; an independent route to
/// the lattice computation.
IntPoly os_poincare(const Arrangement& a);

/// Per-degree dimensions seen by the tensor map kappa.
struct KappaReport {
  bool isomorphism = false;
  int failing_degree = -1;
  std::vector<int> domain_dims;    // prod over chosen blocks, per degree
  std::vector<int> codomain_dims;  // NBC counts, per degree
};

/// Builds the degree-d matrices of the multiplication map from the tensor
/// product of the block subspaces to A(A) and tests each for invertibility
/// over the rationals.
KappaReport kappa_report(const Arrangement& a, const Partition& p);

Certificate kappa_is_isomorphism(const Arrangement& a, const Partition& p);

}  // namespace arr
