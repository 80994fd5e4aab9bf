#pragma once

#include <cstdint>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/polynomial.hpp"

namespace arr {

/// Flat of the intersection lattice. `basis` is the RREF of the normals of
/// the hyperplanes containing it; flats are equal iff their bases are.
struct Flat {
  Matrix basis;
  int rank = 0;
  MemberMask members = 0;
};

/// L(A), ordered by reverse inclusion; flats[0] is V, flats are grouped by
/// ascending rank, and `center` indexes the unique maximal flat.
struct Lattice {
  Arrangement arrangement;
  std::vector<Flat> flats;
  std::vector<std::vector<int>> by_rank;
  std::vector<Int> mobius;
  int center = 0;

  int rank() const { return static_cast<int>(by_rank.size()) - 1; }
  int flat_count() const { return static_cast<int>(flats.size()); }
  /// x <= y in L(A), i.e. the subspace of y is contained in the subspace of x.
  bool leq(int x, int y) const {
    return (flats[x].members & ~flats[y].members) == 0;
  }
  /// Index of the flat with exactly this member set, or -1.
  int find_by_members(MemberMask m) const;
  /// Index of the flat spanned by the given hyperplanes.
  int flat_of(const std::vector<int>& hyperplane_indices) const;
};

Lattice build_lattice(const Arrangement& a);

/// Memoized lattice, keyed by the arrangement's canonical key. The returned
/// reference stays valid for the process lifetime.
const Lattice& lattice_for(const Arrangement& a);

IntPoly poincare(const Lattice& lat);
IntPoly poincare(const Arrangement& a);

/// Whitney numbers: coefficient list of the Poincare polynomial.
std::vector<Int> whitney_numbers(const Lattice& lat);

/// True iff X + Y is again a flat for every flat Y.
bool is_modular(const Lattice& lat, int flat_id);

/// A_X: the hyperplanes containing the flat (order preserved).
Arrangement localize(const Lattice& lat, int flat_id);
std::vector<int> localize_indices(const Lattice& lat, int flat_id);

/// A^X with the restriction trace, in coordinates on X.
Restriction restrict_to_flat(const Lattice& lat, int flat_id);

/// Validates that (basis, members) describes a flat of `a` and returns its
/// index in the lattice; NotAFlat otherwise.
int checked_flat_id(const Lattice& lat, const Flat& flat);

}  // namespace arr
