#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arr/linform.hpp"
#include "arr/matrix.hpp"

namespace arr {

/// Sets of hyperplane indices are bitmasks, capping arrangements at 64
/// hyperplanes.
using MemberMask = std::uint64_t;

/// Hyperplane through the origin, stored as its normal form scaled so the
/// first nonzero coefficient is 1.
struct Hyperplane {
  LinearForm normal;
  bool operator==(const Hyperplane& o) const { return normal == o.normal; }
};

/// Ordered central arrangement. Order is significant: it drives induction
/// tables and broken-circuit data. Equality of hyperplanes is equality of
/// normalized normals.
struct Arrangement {
  FieldSpec field = FieldSpec::rationals();
  int dim = 0;
  std::vector<Hyperplane> hyperplanes;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(hyperplanes.size()); }
  bool empty() const { return hyperplanes.empty(); }
  const std::string& label(int i) const { return labels[i]; }

  /// Order-insensitive memoization key: field, dim, sorted normals. Only
  /// valid for order-independent data (verdicts, exponent multisets).
  std::string canonical_key() const;

  /// Order-sensitive identity: field, dim, normals in order. Required for
  /// caches whose values reference hyperplane indices.
  std::string ordered_key() const;

  /// Sub-arrangement on the given indices, in the given order.
  Arrangement subarrangement(const std::vector<int>& indices) const;
};

Arrangement make_arrangement(const ArrangementSource& src);

ArrangementSource to_source(const Arrangement& a);

Matrix normals_matrix(const Arrangement& a);
Matrix normals_matrix(const Arrangement& a, const std::vector<int>& indices);

int arrangement_rank(const Arrangement& a);

/// Restriction of `a` to the subspace cut out by `basis` (an RREF matrix of
/// normal vectors). Coordinates on the subspace: the pivot variables of
/// `basis` are eliminated by substitution, the free variables remain in
/// ascending order.
struct Restriction {
  Arrangement arr;
  std::vector<int> trace;    // original index -> index in arr, -1 for members of the subspace
  std::vector<int> members;  // hyperplanes containing the subspace
};
Restriction restrict_to_subspace(const Arrangement& a, const Matrix& basis);

/// Triple (A, A', A'') with respect to hyperplanes[pivot].
struct Triple {
  Arrangement whole;
  Arrangement deleted;     // A' = A minus the pivot, order preserved
  Arrangement restricted;  // A'' in coordinates on the pivot hyperplane
  int pivot = 0;
  std::vector<int> trace;  // index in `deleted` -> index in `restricted`

  int whole_to_deleted(int i) const { return i < pivot ? i : i - 1; }
  int deleted_to_whole(int i) const { return i < pivot ? i : i + 1; }
};
Triple make_triple(const Arrangement& a, int pivot);

/// Product arrangement: A1-blocks padded with zeros on the right, A2-blocks
/// on the left; A1 summands first.
Arrangement product(const Arrangement& a1, const Arrangement& a2);

}  // namespace arr
