#include "arr/factor.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace arr {

namespace {

using json = nlohmann::json;

std::string normal_key(const Hyperplane& h) {
  std::string k;
  for (const Scalar& v : h.normal) {
    k += v.render();
    k += ",";
  }
  return k;
}

// Permutation mapping each hyperplane index to its position in the sorted
// normal order; partitions are rewritten through it for canonical keys.
std::vector<int> sort_positions(const Arrangement& a) {
  std::vector<int> idx(a.size());
  for (int i = 0; i < a.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
    return normal_key(a.hyperplanes[x]) < normal_key(a.hyperplanes[y]);
  });
  std::vector<int> pos(a.size());
  for (int i = 0; i < a.size(); ++i) pos[idx[i]] = i;
  return pos;
}

std::string partition_canonical_key(const Arrangement& a, const Partition& p) {
  std::vector<int> pos = sort_positions(a);
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int h : b) nb.push_back(pos[h]);
    std::sort(nb.begin(), nb.end());
    blocks.push_back(std::move(nb));
  }
  std::sort(blocks.begin(), blocks.end());
  std::string k;
  for (const auto& b : blocks) {
    for (int h : b) k += std::to_string(h) + ",";
    k += "|";
  }
  return k;
}

// ---- memo tables ----------------------------------------------------------

struct IfEntry {
  bool verdict = false;
  std::vector<int> exponents;
  std::vector<std::string> chain;  // pivot normals in addition order
  std::string note;
};

struct IfacEntry {
  bool verdict = false;
  std::vector<std::string> chain;
};

struct Caches {
  std::mutex mu;
  std::unordered_map<std::string, IfEntry> ind_free;
  std::unordered_map<std::string, IfacEntry> ifac_pairs;
  std::unordered_map<std::string, bool> factored;
  std::unordered_map<std::string, bool> arr_ifac;
};

Caches& caches() {
  static Caches c;
  return c;
}

// Optional on-disk persistence of inductive-freeness certificates.
std::filesystem::path cache_file_for(const std::string& key) {
  const char* dir = std::getenv("ARR_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::size_t h = std::hash<std::string>{}(key);
  std::ostringstream name;
  name << "if-" << std::hex << h << "-" << key.size() << ".json";
  return std::filesystem::path(dir) / name.str();
}

std::optional<IfEntry> disk_load(const std::string& key) {
  auto path = cache_file_for(key);
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    IfEntry e;
    e.verdict = j.at("verdict").get<bool>();
    e.exponents = j.at("exponents").get<std::vector<int>>();
    e.chain = j.at("chain").get<std::vector<std::string>>();
    return e;
  } catch (...) {
    return std::nullopt;
  }
}

void disk_store(const std::string& key, const IfEntry& e) {
  auto path = cache_file_for(key);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) return;
  json j;
  j["key"] = key;
  j["verdict"] = e.verdict;
  j["exponents"] = e.exponents;
  j["chain"] = e.chain;
  out << j.dump();
}

int index_of_normal(const Arrangement& a, const std::string& key) {
  for (int i = 0; i < a.size(); ++i)
    if (normal_key(a.hyperplanes[i]) == key) return i;
  fail(ErrorKind::Internal, "cached pivot normal not present in arrangement");
}

std::vector<int> sorted_sizes(const Partition& p) {
  std::vector<int> s;
  for (const auto& b : p.blocks) s.push_back(static_cast<int>(b.size()));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> with_zeros(std::vector<int> sizes, int zeros) {
  std::vector<int> out(zeros, 0);
  out.insert(out.end(), sizes.begin(), sizes.end());
  return out;
}

bool multiset_contains(const std::vector<int>& big, const std::vector<int>& small) {
  // both ascending
  std::map<int, int> count;
  for (int v : big) count[v]++;
  for (int v : small)
    if (--count[v] < 0) return false;
  return true;
}

}  // namespace

// ---- independence and niceness --------------------------------------------

Certificate is_independent(const Arrangement& a, const Partition& p,
                           std::uint64_t max_transversals) {
  validate_partition(a, p);
  Certificate cert;
  int s = p.block_count();
  if (s == 0) {
    cert.verdict = true;
    return cert;
  }
  std::uint64_t total = 1;
  for (const auto& b : p.blocks) {
    total *= b.size();
    if (total > max_transversals)
      fail(ErrorKind::CapExceeded, "transversal count exceeds " + std::to_string(max_transversals));
  }
  std::vector<std::size_t> pick(s, 0);
  while (true) {
    std::vector<int> chosen(s);
    for (int i = 0; i < s; ++i) chosen[i] = p.blocks[i][pick[i]];
    if (rank_of(normals_matrix(a, chosen)) != s) {
      cert.verdict = false;
      cert.transversal = chosen;
      return cert;
    }
    int i = s - 1;
    while (i >= 0 && ++pick[i] == p.blocks[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
  cert.verdict = true;
  return cert;
}

Partition induced_partition_at_flat(const Arrangement& a, const Partition& p, int flat_id) {
  validate_partition(a, p);
  const Lattice& lat = lattice_for(a);
  if (flat_id < 0 || flat_id >= lat.flat_count()) fail(ErrorKind::NotAFlat, "flat id out of range");
  MemberMask members = lat.flats[flat_id].members;
  Partition out;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int h : b)
      if (members & (MemberMask(1) << h)) nb.push_back(h);
    if (!nb.empty()) out.blocks.push_back(std::move(nb));
  }
  return out;
}

Certificate is_nice(const Arrangement& a, const Partition& p, std::uint64_t max_transversals) {
  validate_partition(a, p);
  Certificate cert;
  if (a.empty()) {
    cert.verdict = p.empty();
    cert.note = "empty arrangement";
    return cert;
  }
  Certificate indep = is_independent(a, p, max_transversals);
  if (!indep.verdict) return indep;

  const Lattice& lat = lattice_for(a);
  std::vector<MemberMask> masks = block_masks(p);
  for (int fi = 1; fi < lat.flat_count(); ++fi) {
    MemberMask members = lat.flats[fi].members;
    bool singleton = false;
    for (MemberMask bm : masks) {
      MemberMask inter = bm & members;
      if (inter && (inter & (inter - 1)) == 0) {
        singleton = true;
        break;
      }
    }
    if (!singleton) {
      cert.verdict = false;
      cert.flat_members = members;
      cert.note = "localization without a singleton block";
      return cert;
    }
  }
  cert.verdict = true;
  return cert;
}

// ---- search for nice partitions --------------------------------------------

namespace {

struct NiceSearch {
  const Arrangement& a;
  const std::vector<int> sizes;  // target block sizes, ascending
  std::optional<std::size_t> limit;
  std::vector<MemberMask> rank2;           // member masks of rank-2 flats
  std::vector<std::vector<int>> flats_of;  // hyperplane -> rank-2 flats containing it
  std::vector<int> flat_total;             // popcount per rank-2 flat

  std::vector<int> assignment;                  // hyperplane -> block
  std::vector<int> block_fill;                  // block -> current size
  std::vector<std::vector<int>> flat_count;     // flat -> per-block count
  std::vector<int> flat_assigned, flat_blocks;  // per flat: assigned members, blocks hit
  std::vector<Partition> found;

  NiceSearch(const Arrangement& arr, std::vector<int> target_sizes,
             std::optional<std::size_t> lim)
      : a(arr), sizes(std::move(target_sizes)), limit(lim) {
    const Lattice& lat = lattice_for(a);
    if (lat.rank() >= 2)
      for (int fi : lat.by_rank[2]) rank2.push_back(lat.flats[fi].members);
    flats_of.assign(a.size(), {});
    for (int f = 0; f < static_cast<int>(rank2.size()); ++f) {
      flat_total.push_back(__builtin_popcountll(rank2[f]));
      for (int h = 0; h < a.size(); ++h)
        if (rank2[f] & (MemberMask(1) << h)) flats_of[h].push_back(f);
    }
    assignment.assign(a.size(), -1);
    block_fill.assign(sizes.size(), 0);
    flat_count.assign(rank2.size(), std::vector<int>(sizes.size(), 0));
    flat_assigned.assign(rank2.size(), 0);
    flat_blocks.assign(rank2.size(), 0);
  }

  bool done() const { return limit && found.size() >= *limit; }

  bool place(int h, int b) {
    assignment[h] = b;
    block_fill[b]++;
    for (int f : flats_of[h]) {
      if (flat_count[f][b]++ == 0) flat_blocks[f]++;
      flat_assigned[f]++;
      if (flat_blocks[f] > 2) return false;
      if (flat_blocks[f] == 2) {
        // a rank-2 localization meets exactly two blocks and needs a singleton
        int small = a.size();
        for (int j = 0; j < static_cast<int>(sizes.size()); ++j)
          if (flat_count[f][j]) small = std::min(small, flat_count[f][j]);
        if (small >= 2) return false;
      }
      if (flat_assigned[f] == flat_total[f] && flat_blocks[f] != 2) return false;
    }
    return true;
  }

  void unplace(int h, int b) {
    for (int f : flats_of[h]) {
      flat_assigned[f]--;
      if (--flat_count[f][b] == 0) flat_blocks[f]--;
    }
    block_fill[b]--;
    assignment[h] = -1;
  }

  Partition current_partition() const {
    Partition p;
    p.blocks.assign(sizes.size(), {});
    for (int h = 0; h < a.size(); ++h) p.blocks[assignment[h]].push_back(h);
    return p.canonical();
  }

  void search(int h) {
    if (done()) return;
    if (h == a.size()) {
      Partition p = current_partition();
      if (is_nice(a, p).verdict) found.push_back(p);
      return;
    }
    for (int b = 0; b < static_cast<int>(sizes.size()); ++b) {
      if (block_fill[b] >= sizes[b]) continue;
      if (block_fill[b] == 0) {
        // symmetry break: first empty block among equal target sizes
        bool skip = false;
        for (int j = 0; j < b; ++j)
          if (sizes[j] == sizes[b] && block_fill[j] == 0) skip = true;
        if (skip) continue;
      }
      if (place(h, b)) search(h + 1);
      unplace(h, b);
      if (done()) return;
    }
  }
};

}  // namespace

std::vector<Partition> find_nice_partitions(const Arrangement& a,
                                            std::optional<std::size_t> limit, int jobs) {
  if (a.empty()) {
    if (limit && *limit == 0) return {};
    return {Partition{}};
  }
  auto factors = try_factor_linear(poincare(a));
  if (!factors) return {};  // a nice partition forces a linear factorization
  std::vector<int> sizes(factors->begin(), factors->end());

  if (jobs <= 1 || a.size() < 2) {
    NiceSearch s(a, sizes, limit);
    s.search(0);
    return s.found;
  }

  // parallel fan-out over the first hyperplane's block choice, merged in
  // choice order so the result is identical to the sequential search
  std::vector<int> first_choices;
  for (int b = 0; b < static_cast<int>(sizes.size()); ++b) {
    bool skip = false;
    for (int j = 0; j < b; ++j)
      if (sizes[j] == sizes[b]) skip = true;  // all blocks empty at level 0
    if (!skip) first_choices.push_back(b);
  }
  std::vector<std::vector<Partition>> results(first_choices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= first_choices.size()) return;
      NiceSearch s(a, sizes, std::nullopt);
      if (s.place(0, first_choices[i])) s.search(1);
      results[i] = std::move(s.found);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::min<int>(jobs, static_cast<int>(first_choices.size())); ++j)
    pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<Partition> merged;
  for (auto& r : results)
    for (auto& p : r) merged.push_back(std::move(p));
  if (limit && merged.size() > *limit) merged.resize(*limit);
  return merged;
}

bool is_factored(const Arrangement& a) {
  std::string key = a.canonical_key();
  {
    std::lock_guard<std::mutex> lock(caches().mu);
    auto it = caches().factored.find(key);
    if (it != caches().factored.end()) return it->second;
  }
  bool verdict = !find_nice_partitions(a, 1).empty();
  std::lock_guard<std::mutex> lock(caches().mu);
  caches().factored[key] = verdict;
  return verdict;
}

// ---- restriction map and addition-deletion ---------------------------------

Partition induced_deleted_partition(const Partition& p, int pivot) {
  Partition out;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int h : b)
      if (h != pivot) nb.push_back(h < pivot ? h : h - 1);
    if (!nb.empty()) out.blocks.push_back(std::move(nb));
  }
  return out;
}

RestrictionMapResult restriction_map(const Arrangement& a, const Partition& p, int pivot) {
  validate_partition(a, p);
  if (pivot < 0 || pivot >= a.size()) fail(ErrorKind::OutOfRange, "pivot index out of range");
  int pb = p.block_of(pivot);
  if (pb < 0) fail(ErrorKind::PivotNotInBlockOne, "pivot is not covered by the partition");

  RestrictionMapResult rm;
  rm.triple = make_triple(a, pivot);
  rm.pivot_block = pb;
  rm.image.assign(a.size(), -1);
  int m = rm.triple.restricted.size();

  std::vector<int> hits(m, 0);
  rm.injective = true;
  std::vector<int> image_owner(m, -1);
  for (int h = 0; h < a.size(); ++h) {
    if (p.block_of(h) == pb) continue;  // domain is A minus the pivot block
    int img = rm.triple.trace[rm.triple.whole_to_deleted(h)];
    rm.image[h] = img;
    if (hits[img]++ && rm.injective) {
      rm.injective = false;
      rm.collision = {image_owner[img], h};
    }
    if (image_owner[img] < 0) image_owner[img] = h;
  }
  rm.surjective = std::all_of(hits.begin(), hits.end(), [](int c) { return c > 0; });
  rm.bijective = rm.injective && rm.surjective;

  // images of the non-pivot blocks, as a candidate partition of A''
  std::vector<std::vector<int>> image_blocks;
  MemberMask used = 0;
  bool disjoint = true;
  for (int b = 0; b < p.block_count(); ++b) {
    if (b == pb) continue;
    std::vector<int> ib;
    for (int h : p.blocks[b]) ib.push_back(rm.image[h]);
    std::sort(ib.begin(), ib.end());
    ib.erase(std::unique(ib.begin(), ib.end()), ib.end());
    for (int x : ib) {
      if (used & (MemberMask(1) << x)) disjoint = false;
      used |= MemberMask(1) << x;
    }
    image_blocks.push_back(std::move(ib));
  }
  MemberMask all = m == 0 ? 0 : (m == 64 ? ~MemberMask(0) : (MemberMask(1) << m) - 1);
  rm.partition_ok = disjoint && used == all;
  rm.restricted_partition.blocks = std::move(image_blocks);
  return rm;
}

Certificate is_distinguished(const Arrangement& a, const Partition& p, int pivot) {
  validate_partition(a, p);
  if (pivot < 0 || pivot >= a.size()) fail(ErrorKind::OutOfRange, "pivot index out of range");
  if (p.block_of(pivot) < 0) fail(ErrorKind::PivotNotInBlockOne, "pivot not covered");
  Triple t = make_triple(a, pivot);
  return is_nice(t.deleted, induced_deleted_partition(p, pivot));
}

AddDelReport add_del_check(const Arrangement& a, const Partition& p, int pivot) {
  AddDelReport rep;
  rep.nice_whole = is_nice(a, p).verdict;
  RestrictionMapResult rm = restriction_map(a, p, pivot);
  rep.nice_deleted = is_nice(rm.triple.deleted, induced_deleted_partition(p, pivot)).verdict;
  rep.r_bijective = rm.bijective;
  rep.nice_restricted =
      rm.partition_ok && is_nice(rm.triple.restricted, rm.restricted_partition).verdict;
  int holds = int(rep.nice_whole) + int(rep.nice_deleted) + int(rep.statement_iii());
  rep.violation = holds == 2;
  rep.hypothesis_not_met = rep.nice_restricted && !rep.r_bijective;
  return rep;
}

std::vector<int> exponents_from_partition(const Arrangement& a, const Partition& p) {
  Certificate nice = is_nice(a, p);
  if (!nice.verdict) fail(ErrorKind::NotNice, "partition is not nice for this arrangement");
  return with_zeros(sorted_sizes(p), a.dim - p.block_count());
}

// ---- inductive freeness -----------------------------------------------------

namespace {

IfEntry inductively_free_entry(const Arrangement& a) {
  std::string key = a.canonical_key();
  {
    std::lock_guard<std::mutex> lock(caches().mu);
    auto it = caches().ind_free.find(key);
    if (it != caches().ind_free.end()) return it->second;
  }
  if (auto disk = disk_load(key)) {
    std::lock_guard<std::mutex> lock(caches().mu);
    caches().ind_free[key] = *disk;
    return *disk;
  }

  IfEntry e;
  if (a.empty()) {
    e.verdict = true;
    e.exponents.assign(a.dim, 0);
  } else if (!try_factor_linear(poincare(a))) {
    // inductively free => free => the Poincare polynomial factors
    e.verdict = false;
    e.note = "Poincare polynomial has no integral linear factorization";
  } else {
    for (int pivot = 0; pivot < a.size() && !e.verdict; ++pivot) {
      Triple t = make_triple(a, pivot);
      IfEntry del = inductively_free_entry(t.deleted);
      if (!del.verdict) continue;
      IfEntry res = inductively_free_entry(t.restricted);
      if (!res.verdict) continue;
      if (!multiset_contains(del.exponents, res.exponents)) continue;
      // exp A = exp A'' + {b+1} where {b} = exp A' minus exp A''
      std::vector<int> diff = del.exponents;
      for (int v : res.exponents) diff.erase(std::find(diff.begin(), diff.end(), v));
      if (diff.size() != 1) fail(ErrorKind::Internal, "exponent bookkeeping broke");
      e.exponents = res.exponents;
      e.exponents.push_back(diff[0] + 1);
      std::sort(e.exponents.begin(), e.exponents.end());
      e.chain = del.chain;
      e.chain.push_back(normal_key(a.hyperplanes[pivot]));
      e.verdict = true;
    }
    if (!e.verdict) e.note = "no pivot admits an inductive chain";
  }
  {
    std::lock_guard<std::mutex> lock(caches().mu);
    caches().ind_free[key] = e;
  }
  disk_store(key, e);
  return e;
}

}  // namespace

Certificate is_inductively_free(const Arrangement& a) {
  IfEntry e = inductively_free_entry(a);
  Certificate cert;
  cert.verdict = e.verdict;
  cert.note = e.note;
  if (e.verdict) {
    cert.exponents = e.exponents;
    std::vector<int> chain;
    for (const auto& nk : e.chain) chain.push_back(index_of_normal(a, nk));
    cert.pivot_chain = chain;
  }
  return cert;
}

// ---- inductive factorizations ----------------------------------------------

namespace {

IfacEntry ifac_pair(const Arrangement& a, const Partition& p) {
  validate_partition(a, p);
  std::string key = a.canonical_key() + "#" + partition_canonical_key(a, p);
  {
    std::lock_guard<std::mutex> lock(caches().mu);
    auto it = caches().ifac_pairs.find(key);
    if (it != caches().ifac_pairs.end()) return it->second;
  }
  IfacEntry e;
  if (a.empty()) {
    e.verdict = p.empty();
  } else if (!is_nice(a, p).verdict) {
    // an inductive factorization is nice (addition-deletion, inductively)
    e.verdict = false;
  } else {
    for (int b = 0; b < p.block_count() && !e.verdict; ++b) {
      for (std::size_t k = 0; k < p.blocks[b].size() && !e.verdict; ++k) {
        int pivot = p.blocks[b][k];
        RestrictionMapResult rm = restriction_map(a, p, pivot);
        if (!rm.bijective) continue;
        IfacEntry del = ifac_pair(rm.triple.deleted, induced_deleted_partition(p, pivot));
        if (!del.verdict) continue;
        IfacEntry res = ifac_pair(rm.triple.restricted, rm.restricted_partition);
        if (!res.verdict) continue;
        e.verdict = true;
        e.chain = del.chain;
        e.chain.push_back(normal_key(a.hyperplanes[pivot]));
      }
    }
  }
  std::lock_guard<std::mutex> lock(caches().mu);
  caches().ifac_pairs[key] = e;
  return e;
}

}  // namespace

Certificate is_inductive_factorization(const Arrangement& a, const Partition& p) {
  IfacEntry e = ifac_pair(a, p);
  Certificate cert;
  cert.verdict = e.verdict;
  cert.partition = p;
  if (e.verdict) {
    std::vector<int> chain;
    for (const auto& nk : e.chain) chain.push_back(index_of_normal(a, nk));
    cert.pivot_chain = chain;
    if (!a.empty()) cert.exponents = exponents_from_partition(a, p);
    else cert.exponents = std::vector<int>(a.dim, 0);
  }
  return cert;
}

Certificate is_inductively_factored(const Arrangement& a) {
  Certificate cert;
  Certificate indfree = is_inductively_free(a);
  if (!indfree.verdict) {
    // inductively factored arrangements are inductively free
    cert.verdict = false;
    cert.note = "not inductively free: " + indfree.note;
    return cert;
  }
  for (const Partition& p : find_nice_partitions(a)) {
    Certificate c = is_inductive_factorization(a, p);
    if (c.verdict) return c;
  }
  cert.verdict = false;
  cert.note = "no nice partition is an inductive factorization";
  return cert;
}

// ---- supersolvability --------------------------------------------------------

Certificate is_supersolvable(const Arrangement& a) {
  const Lattice& lat = lattice_for(a);
  int r = lat.rank();
  std::vector<int> modular_cache(lat.flat_count(), -1);
  auto modular = [&](int fi) {
    if (modular_cache[fi] < 0) modular_cache[fi] = is_modular(lat, fi) ? 1 : 0;
    return modular_cache[fi] == 1;
  };

  std::vector<int> chain{0};
  std::function<bool(int, int)> dfs = [&](int flat, int rank) {
    if (rank == r) return true;
    for (int next : lat.by_rank[rank + 1]) {
      if (!lat.leq(flat, next) || !modular(next)) continue;
      chain.push_back(next);
      if (dfs(next, rank + 1)) return true;
      chain.pop_back();
    }
    return false;
  };

  Certificate cert;
  cert.verdict = dfs(0, 0);
  if (cert.verdict) {
    std::vector<MemberMask> masks;
    for (int fi : chain) masks.push_back(lat.flats[fi].members);
    cert.chain = masks;
  } else {
    cert.note = "no maximal chain of modular flats";
  }
  return cert;
}

Partition nice_from_modular_chain(const Arrangement& a, const std::vector<MemberMask>& chain) {
  const Lattice& lat = lattice_for(a);
  int r = lat.rank();
  if (static_cast<int>(chain.size()) != r + 1)
    fail(ErrorKind::NotAModularChain, "chain must have rank(A)+1 elements");
  std::vector<int> ids;
  for (int k = 0; k <= r; ++k) {
    int id = lat.find_by_members(chain[k]);
    if (id < 0) fail(ErrorKind::NotAModularChain, "chain element is not a flat");
    if (lat.flats[id].rank != k) fail(ErrorKind::NotAModularChain, "chain ranks must be 0..r");
    if (k > 0 && !lat.leq(ids.back(), id))
      fail(ErrorKind::NotAModularChain, "chain elements must be nested");
    if (!is_modular(lat, id)) fail(ErrorKind::NotAModularChain, "chain element is not modular");
    ids.push_back(id);
  }
  Partition p;
  for (int k = 1; k <= r; ++k) {
    MemberMask fresh = lat.flats[ids[k]].members & ~lat.flats[ids[k - 1]].members;
    std::vector<int> block;
    for (int h = 0; h < a.size(); ++h)
      if (fresh & (MemberMask(1) << h)) block.push_back(h);
    if (block.empty()) fail(ErrorKind::NotAModularChain, "chain step adds no hyperplane");
    p.blocks.push_back(std::move(block));
  }
  return p;
}

// ---- hereditary properties ---------------------------------------------------

Certificate hereditary_check(const Arrangement& a, Property prop) {
  auto holds = [&](const Arrangement& b) {
    switch (prop) {
      case Property::Factored: return is_factored(b);
      case Property::InductivelyFactored: return is_inductively_factored(b).verdict;
      case Property::InductivelyFree: return is_inductively_free(b).verdict;
    }
    return false;
  };
  const Lattice& lat = lattice_for(a);
  Certificate cert;
  for (int fi = 0; fi < lat.flat_count(); ++fi) {
    Arrangement res = restrict_to_flat(lat, fi).arr;
    if (!holds(res)) {
      cert.verdict = false;
      cert.flat_members = lat.flats[fi].members;
      cert.note = "restriction fails the property";
      return cert;
    }
  }
  cert.verdict = true;
  return cert;
}

// ---- induction tables ---------------------------------------------------------

namespace {

struct TableBuilder {
  const Arrangement& a;
  const std::vector<int>& order;
  std::optional<Partition> target;  // whole-index partition steering choices

  std::vector<int> assigned;                 // whole indices, kept sorted
  std::vector<std::vector<int>> blocks;      // whole indices, creation order
  std::vector<InductionRow> rows;
  int deepest_fail = -1;
  std::string fail_reason;

  TableBuilder(const Arrangement& arr, const std::vector<int>& ord) : a(arr), order(ord) {}

  Partition whole_partition() const {
    Partition p;
    p.blocks = blocks;
    return p;
  }

  std::vector<int> exp_of_blocks(int dim) const {
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end());
    return with_zeros(sizes, dim - static_cast<int>(blocks.size()));
  }

  // Checks the addition of hyperplane `h` into block `b` (b == blocks.size()
  // for a new block); returns the row on success.
  std::optional<InductionRow> check_option(int step, int h, int b) {
    std::vector<int> sub_idx = assigned;
    sub_idx.insert(std::lower_bound(sub_idx.begin(), sub_idx.end(), h), h);
    Arrangement sub = a.subarrangement(sub_idx);
    std::vector<int> local(a.size(), -1);
    for (int i = 0; i < static_cast<int>(sub_idx.size()); ++i) local[sub_idx[i]] = i;

    Partition q;
    for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
      std::vector<int> nb;
      for (int x : blocks[j]) nb.push_back(local[x]);
      if (j == b) nb.push_back(local[h]);
      std::sort(nb.begin(), nb.end());
      q.blocks.push_back(std::move(nb));
    }
    if (b == static_cast<int>(blocks.size())) q.blocks.push_back({local[h]});

    RestrictionMapResult rm = restriction_map(sub, q, local[h]);
    if (!rm.bijective) {
      note_fail(step, "restriction map is not bijective");
      return std::nullopt;
    }
    if (!ifac_pair(rm.triple.restricted, rm.restricted_partition).verdict) {
      note_fail(step, "restricted partition is not an inductive factorization");
      return std::nullopt;
    }

    InductionRow row;
    row.before = whole_partition();
    row.exp_before = exp_of_blocks(a.dim);
    row.added = h;
    row.alpha = a.label(h);
    for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
      if (j == b) continue;
      row.restricted_blocks.push_back(blocks[j]);
    }
    {
      std::vector<int> sizes;
      for (const auto& rb : row.restricted_blocks) sizes.push_back(static_cast<int>(rb.size()));
      std::sort(sizes.begin(), sizes.end());
      row.exp_restricted = with_zeros(sizes, (a.dim - 1) - static_cast<int>(sizes.size()));
    }
    row.chosen_block = b;
    return row;
  }

  void note_fail(int step, const std::string& reason) {
    if (step > deepest_fail) {
      deepest_fail = step;
      fail_reason = reason;
    }
  }

  bool run(int step) {
    if (step == static_cast<int>(order.size())) return true;
    int h = order[step];
    std::vector<int> options;
    if (target) {
      int tb = target->block_of(h);
      int existing = -1;
      for (int j = 0; j < static_cast<int>(blocks.size()); ++j)
        if (target->block_of(blocks[j][0]) == tb) existing = j;
      options.push_back(existing >= 0 ? existing : static_cast<int>(blocks.size()));
    } else {
      for (int j = 0; j <= static_cast<int>(blocks.size()); ++j) options.push_back(j);
    }
    for (int b : options) {
      auto row = check_option(step, h, b);
      if (!row) continue;
      bool created = b == static_cast<int>(blocks.size());
      if (created) blocks.push_back({h});
      else blocks[b].insert(std::lower_bound(blocks[b].begin(), blocks[b].end(), h), h);
      assigned.insert(std::lower_bound(assigned.begin(), assigned.end(), h), h);
      rows.push_back(std::move(*row));
      if (run(step + 1)) return true;
      rows.pop_back();
      assigned.erase(std::find(assigned.begin(), assigned.end(), h));
      if (created) blocks.pop_back();
      else blocks[b].erase(std::find(blocks[b].begin(), blocks[b].end(), h));
    }
    return false;
  }
};

}  // namespace

std::variant<InductionTable, TableFailure> emit_induction_table(
    const Arrangement& a, const std::vector<int>& order,
    const std::optional<std::pair<Arrangement, Partition>>& seed,
    const std::optional<Partition>& target) {
  TableBuilder tb(a, order);

  if (seed) {
    const Arrangement& sa = seed->first;
    if (sa.field != a.field || sa.dim != a.dim)
      fail(ErrorKind::BadSeed, "seed field or dimension does not match");
    validate_partition(sa, seed->second);
    std::vector<int> seed_to_whole;
    for (const auto& h : sa.hyperplanes) {
      int found = -1;
      for (int i = 0; i < a.size(); ++i)
        if (a.hyperplanes[i] == h) found = i;
      if (found < 0) fail(ErrorKind::BadSeed, "seed hyperplane not present in the arrangement");
      seed_to_whole.push_back(found);
    }
    for (const auto& block : seed->second.blocks) {
      std::vector<int> nb;
      for (int h : block) nb.push_back(seed_to_whole[h]);
      std::sort(nb.begin(), nb.end());
      tb.blocks.push_back(std::move(nb));
    }
    tb.assigned = seed_to_whole;
    std::sort(tb.assigned.begin(), tb.assigned.end());
    // the seed must itself carry an inductive factorization
    Arrangement sub = a.subarrangement(tb.assigned);
    std::vector<int> local(a.size(), -1);
    for (int i = 0; i < static_cast<int>(tb.assigned.size()); ++i) local[tb.assigned[i]] = i;
    Partition p_local;
    for (const auto& block : tb.blocks) {
      std::vector<int> nb;
      for (int h : block) nb.push_back(local[h]);
      std::sort(nb.begin(), nb.end());
      p_local.blocks.push_back(std::move(nb));
    }
    if (!ifac_pair(sub, p_local).verdict)
      fail(ErrorKind::BadSeed, "seed partition is not an inductive factorization");
  }

  // order must enumerate the hyperplanes outside the seed
  std::vector<int> expected;
  for (int i = 0; i < a.size(); ++i)
    if (!std::binary_search(tb.assigned.begin(), tb.assigned.end(), i)) expected.push_back(i);
  std::vector<int> sorted_order = order;
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != expected)
    fail(ErrorKind::BadOrder, "order must enumerate each remaining hyperplane exactly once");

  if (target) {
    validate_partition(a, *target);
    std::vector<int> taken(target->block_count(), 0);
    for (const auto& block : tb.blocks) {
      int tbk = target->block_of(block[0]);
      for (int h : block)
        if (target->block_of(h) != tbk)
          fail(ErrorKind::BadSeed, "target partition splits a seed block");
      if (taken[tbk]++) fail(ErrorKind::BadSeed, "two seed blocks land in one target block");
    }
    tb.target = target;
  }

  if (!tb.run(0)) {
    TableFailure f;
    f.step = std::max(tb.deepest_fail, 0);
    f.reason = tb.fail_reason.empty() ? "no admissible block assignment" : tb.fail_reason;
    return f;
  }
  InductionTable t;
  t.rows = std::move(tb.rows);
  t.final_partition = tb.whole_partition();
  t.exp_final = tb.exp_of_blocks(a.dim);
  return t;
}

namespace {

std::string render_blocks(const std::vector<std::vector<int>>& blocks) {
  if (blocks.empty()) return "-";
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << ",";
    os << "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) os << ",";
      os << blocks[b][i] + 1;
    }
    os << "}";
  }
  return os.str();
}

std::string render_exps(const std::vector<int>& exps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) os << ",";
    os << exps[i];
  }
  return os.str();
}

}  // namespace

std::string render_induction_table(const InductionTable& t) {
  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"pi'", "exp A'", "alpha", "pi''", "exp A''"});
  for (const auto& row : t.rows)
    cells.push_back({render_blocks(row.before.blocks), render_exps(row.exp_before), row.alpha,
                     render_blocks(row.restricted_blocks), render_exps(row.exp_restricted)});
  cells.push_back({render_blocks(t.final_partition.blocks), render_exps(t.exp_final), "", "", ""});

  std::array<std::size_t, 5> width{};
  for (const auto& row : cells)
    for (int c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (int c = 0; c < 5; ++c) {
      line += cells[r][c];
      if (c < 4) line += std::string(width[c] - cells[r][c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (int c = 0; c < 5; ++c) total += width[c] + (c < 4 ? 2 : 0);
      os << std::string(total, '-') << "\n";
    }
  }
  return os.str();
}

bool reverify_certificate(const Arrangement& a, const Certificate& c, const std::string& kind) {
  if (kind == "nice") {
    if (c.verdict) return c.partition && is_nice(a, *c.partition).verdict;
    if (c.transversal)
      return rank_of(normals_matrix(a, *c.transversal)) < static_cast<int>(c.transversal->size());
    if (c.flat_members) {
      const Lattice& lat = lattice_for(a);
      return lat.find_by_members(*c.flat_members) >= 0;
    }
    return false;
  }
  if (kind == "independent") {
    if (!c.verdict && c.transversal)
      return rank_of(normals_matrix(a, *c.transversal)) < static_cast<int>(c.transversal->size());
    return c.verdict;
  }
  if (kind == "supersolvable") {
    if (!c.verdict) return !is_supersolvable(a).verdict;
    if (!c.chain) return false;
    Partition p = nice_from_modular_chain(a, *c.chain);  // throws unless modular maximal chain
    return is_nice(a, p).verdict;
  }
  if (kind == "ind-free") {
    if (!c.verdict) return !is_inductively_free(a).verdict;
    if (!c.pivot_chain || !c.exponents) return false;
    // replay the chain: every prefix and its restriction must have linearly
    // factoring Poincare polynomials with contained exponent multisets
    std::vector<int> prefix;
    std::vector<int> prev_exp(a.dim, 0);
    for (int h : *c.pivot_chain) {
      prefix.push_back(h);
      std::vector<int> sorted_prefix = prefix;
      std::sort(sorted_prefix.begin(), sorted_prefix.end());
      Arrangement sub = a.subarrangement(sorted_prefix);
      auto fac = try_factor_linear(poincare(sub));
      if (!fac) return false;
      std::vector<int> exp =
          with_zeros(std::vector<int>(fac->begin(), fac->end()), a.dim - static_cast<int>(fac->size()));
      int local = static_cast<int>(std::find(sorted_prefix.begin(), sorted_prefix.end(), h) -
                                   sorted_prefix.begin());
      Triple t = make_triple(sub, local);
      auto fac2 = try_factor_linear(poincare(t.restricted));
      if (!fac2) return false;
      std::vector<int> exp2 = with_zeros(std::vector<int>(fac2->begin(), fac2->end()),
                                         (a.dim - 1) - static_cast<int>(fac2->size()));
      if (!multiset_contains(prev_exp, exp2)) return false;
      prev_exp = exp;
    }
    return prev_exp == *c.exponents;
  }
  if (kind == "ind-factored") {
    if (!c.verdict) return !is_inductively_factored(a).verdict;
    if (!c.partition || !c.pivot_chain) return false;
    auto table = emit_induction_table(a, *c.pivot_chain, std::nullopt, c.partition);
    return std::holds_alternative<InductionTable>(table);
  }
  return false;
}

}  // namespace arr
