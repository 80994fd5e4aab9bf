#include "arr/lattice.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace arr {

namespace {

std::string basis_key(const Matrix& m) {
  std::string k;
  for (const auto& row : m.rows) {
    for (const auto& v : row) {
      k += v.render();
      k += ",";
    }
    k += ";";
  }
  return k;
}

MemberMask members_of(const Arrangement& a, const Matrix& rr) {
  MemberMask m = 0;
  for (int i = 0; i < a.size(); ++i)
    if (in_row_span(rr, a.hyperplanes[i].normal)) m |= MemberMask(1) << i;
  return m;
}

}  // namespace

int Lattice::find_by_members(MemberMask m) const {
  for (int i = 0; i < flat_count(); ++i)
    if (flats[i].members == m) return i;
  return -1;
}

int Lattice::flat_of(const std::vector<int>& hyperplane_indices) const {
  Matrix m = normals_matrix(arrangement, hyperplane_indices);
  rref(m);
  MemberMask mask = members_of(arrangement, m);
  int id = find_by_members(mask);
  if (id < 0) fail(ErrorKind::Internal, "intersection of hyperplanes missing from lattice");
  return id;
}

Lattice build_lattice(const Arrangement& a) {
  if (a.size() > 64) fail(ErrorKind::CapExceeded, "more than 64 hyperplanes");
  Lattice lat;
  lat.arrangement = a;

  Flat top;
  top.basis.cols = a.dim;
  top.rank = 0;
  top.members = 0;
  lat.flats.push_back(top);
  lat.by_rank.push_back({0});

  // level-wise closure: intersect each rank-k flat with each hyperplane
  std::map<std::string, int> seen;
  seen[basis_key(top.basis)] = 0;
  int level_start = 0;
  while (true) {
    std::vector<int> next_level;
    int level_end = lat.flat_count();
    for (int fi = level_start; fi < level_end; ++fi) {
      for (int h = 0; h < a.size(); ++h) {
        if (lat.flats[fi].members & (MemberMask(1) << h)) continue;
        Matrix m = lat.flats[fi].basis;
        m.rows.push_back(a.hyperplanes[h].normal);
        int r = rref(m);
        if (r != lat.flats[fi].rank + 1) fail(ErrorKind::Internal, "rank did not grow");
        std::string key = basis_key(m);
        auto it = seen.find(key);
        if (it != seen.end()) continue;
        Flat f;
        f.rank = r;
        f.members = members_of(a, m);
        f.basis = std::move(m);
        seen[key] = lat.flat_count();
        next_level.push_back(lat.flat_count());
        lat.flats.push_back(std::move(f));
      }
    }
    if (next_level.empty()) break;
    lat.by_rank.push_back(next_level);
    level_start = level_end;
  }

  // the unique maximal flat: all hyperplanes
  MemberMask all = a.size() == 64 ? ~MemberMask(0) : (MemberMask(1) << a.size()) - 1;
  lat.center = lat.find_by_members(all);
  if (lat.center < 0) fail(ErrorKind::Internal, "center not found");

  // Mobius recursion: mu(V) = 1, sum_{Y <= X} mu(Y) = 0 for X > V
  lat.mobius.assign(lat.flat_count(), Int(0));
  lat.mobius[0] = 1;
  for (int r = 1; r <= lat.rank(); ++r) {
    for (int x : lat.by_rank[r]) {
      Int sum = 0;
      for (int y = 0; y < lat.flat_count(); ++y)
        if (y != x && lat.flats[y].rank < r && lat.leq(y, x)) sum += lat.mobius[y];
      lat.mobius[x] = -sum;
    }
  }
  return lat;
}

const Lattice& lattice_for(const Arrangement& a) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::unique_ptr<Lattice>> cache;
  // member masks index the hyperplanes, so the key must respect order
  std::string key = a.ordered_key();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto lat = std::make_unique<Lattice>(build_lattice(a));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(lat));
  return *it->second;
}

std::vector<Int> whitney_numbers(const Lattice& lat) {
  std::vector<Int> w(lat.rank() + 1, Int(0));
  for (int i = 0; i < lat.flat_count(); ++i) {
    int r = lat.flats[i].rank;
    w[r] += (r % 2 == 0 ? lat.mobius[i] : -lat.mobius[i]);
  }
  return w;
}

IntPoly poincare(const Lattice& lat) {
  IntPoly p;
  p.c = whitney_numbers(lat);
  p.trim();
  return p;
}

IntPoly poincare(const Arrangement& a) { return poincare(lattice_for(a)); }

bool is_modular(const Lattice& lat, int flat_id) {
  const Flat& x = lat.flats[flat_id];
  for (int yi = 0; yi < lat.flat_count(); ++yi) {
    const Flat& y = lat.flats[yi];
    // r(X + Y) from the intersection of the normal row spaces
    int stacked_rank = rank_of(stacked(x.basis, y.basis));
    int r_sum = x.rank + y.rank - stacked_rank;
    // the smallest flat containing X + Y
    MemberMask common = x.members & y.members;
    std::vector<int> idx;
    for (int h = 0; h < lat.arrangement.size(); ++h)
      if (common & (MemberMask(1) << h)) idx.push_back(h);
    int closure_rank = rank_of(normals_matrix(lat.arrangement, idx));
    if (closure_rank != r_sum) return false;
  }
  return true;
}

std::vector<int> localize_indices(const Lattice& lat, int flat_id) {
  if (flat_id < 0 || flat_id >= lat.flat_count()) fail(ErrorKind::NotAFlat, "flat id out of range");
  std::vector<int> idx;
  for (int h = 0; h < lat.arrangement.size(); ++h)
    if (lat.flats[flat_id].members & (MemberMask(1) << h)) idx.push_back(h);
  return idx;
}

Arrangement localize(const Lattice& lat, int flat_id) {
  return lat.arrangement.subarrangement(localize_indices(lat, flat_id));
}

Restriction restrict_to_flat(const Lattice& lat, int flat_id) {
  if (flat_id < 0 || flat_id >= lat.flat_count()) fail(ErrorKind::NotAFlat, "flat id out of range");
  return restrict_to_subspace(lat.arrangement, lat.flats[flat_id].basis);
}

int checked_flat_id(const Lattice& lat, const Flat& flat) {
  Matrix m = flat.basis;
  int r = rref(m);
  MemberMask mask = members_of(lat.arrangement, m);
  int id = lat.find_by_members(mask);
  if (id < 0 || lat.flats[id].rank != r || !(lat.flats[id].basis == m))
    fail(ErrorKind::NotAFlat, "subspace is not an intersection of hyperplanes of this arrangement");
  return id;
}

}  // namespace arr
