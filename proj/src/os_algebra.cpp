#include "arr/os_algebra.hpp"

#include <algorithm>
#include <functional>

namespace arr {

namespace {

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

std::vector<int> bits_of(std::uint32_t m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace

Matroid build_matroid(const Arrangement& a) {
  if (a.size() > 20) fail(ErrorKind::CapExceeded, "matroid construction capped at 20 hyperplanes");
  Matroid m;
  m.groundset = a.size();
  m.rank = arrangement_rank(a);

  // circuits by increasing size: a dependent set with no smaller circuit
  // inside is minimal dependent
  std::vector<std::uint32_t> subsets{0};
  for (int size = 1; size <= m.rank + 1; ++size) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t s : subsets) {
      int top = s == 0 ? -1 : 31 - __builtin_clz(s);
      for (int i = top + 1; i < m.groundset; ++i) {
        std::uint32_t cand = s | (1u << i);
        bool has_circuit = false;
        for (std::uint32_t c : m.circuits)
          if ((c & cand) == c) {
            has_circuit = true;
            break;
          }
        if (has_circuit) continue;
        if (rank_of(normals_matrix(a, bits_of(cand))) < size) {
          m.circuits.push_back(cand);
        } else {
          next.push_back(cand);
        }
      }
    }
    subsets = std::move(next);
  }
  for (std::uint32_t c : m.circuits) {
    int min = __builtin_ctz(c);
    m.broken_circuits.push_back(c & ~(1u << min));
  }
  return m;
}

GradedBasis nbc_basis(const Matroid& m) {
  GradedBasis g;
  g.nbc_sets.assign(m.rank + 1, {});
  // depth-first enumeration emits sets in lexicographic order per degree
  std::vector<int> stack;
  std::function<void(std::uint32_t, int)> walk = [&](std::uint32_t s, int from) {
    int size = popcount(s);
    if (size <= m.rank) g.nbc_sets[size].push_back(s);
    if (size == m.rank) return;
    for (int i = from; i < m.groundset; ++i) {
      std::uint32_t cand = s | (1u << i);
      bool broken = false;
      for (std::uint32_t b : m.broken_circuits)
        if ((b & cand) == b) {
          broken = true;
          break;
        }
      if (!broken) walk(cand, i + 1);
    }
  };
  walk(0, 0);
  return g;
}

namespace {

// sign of the permutation sorting the concatenation (A asc, B asc)
int merge_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int inversions = 0;
  for (int x : b)
    for (int y : a)
      if (y > x) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

struct Straightener {
  const Matroid& m;
  std::map<std::uint32_t, OSElement> memo;

  explicit Straightener(const Matroid& mm) : m(mm) {}

  const OSElement& run(std::uint32_t s) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;

    OSElement out;
    bool dependent = false;
    for (std::uint32_t c : m.circuits)
      if ((c & s) == c) {
        dependent = true;
        break;
      }
    if (!dependent) {
      std::uint32_t broken = 0, circuit = 0;
      for (std::size_t k = 0; k < m.broken_circuits.size(); ++k)
        if ((m.broken_circuits[k] & s) == m.broken_circuits[k]) {
          broken = m.broken_circuits[k];
          circuit = m.circuits[k];
          break;
        }
      if (!broken) {
        out[s] = Rat(1);
      } else {
        // boundary relation of the circuit c0 < c1 < ... < ck:
        //   sum_j (-1)^j a_{C \ cj} = 0, multiplied by a_T with T = s \ broken
        std::vector<int> cbits = bits_of(circuit);
        std::vector<int> tbits = bits_of(s & ~broken);
        int j0_sign = merge_sign(bits_of(circuit & ~(1u << cbits[0])), tbits);
        for (std::size_t j = 1; j < cbits.size(); ++j) {
          std::uint32_t dropped = circuit & ~(1u << cbits[j]);
          std::uint32_t term = dropped | (s & ~broken);
          int sign = merge_sign(bits_of(dropped), tbits);
          // a_s = -sum_{j>=1} (-1)^j sgn(mu_0) sgn(mu_j) a_{S_j}
          int coeff = -((j % 2 == 0) ? 1 : -1) * j0_sign * sign;
          for (const auto& [basis_set, c] : run(term)) {
            out[basis_set] += c * coeff;
            if (out[basis_set] == 0) out.erase(basis_set);
          }
        }
      }
    }
    return memo.emplace(s, std::move(out)).first->second;
  }
};

}  // namespace

OSElement straighten(const Matroid& m, const std::vector<int>& s) {
  std::uint32_t mask = 0;
  int prev = -1;
  for (int i : s) {
    if (i < 0 || i >= m.groundset) fail(ErrorKind::OutOfRange, "generator index out of range");
    if (i <= prev) fail(ErrorKind::NotSorted, "indices must be strictly increasing");
    prev = i;
    mask |= 1u << i;
  }
  Straightener st(m);
  return st.run(mask);
}

IntPoly os_poincare(const Arrangement& a) {
  Matroid m = build_matroid(a);
  GradedBasis g = nbc_basis(m);
  IntPoly p;
  for (const auto& level : g.nbc_sets) p.c.push_back(Int(level.size()));
  p.trim();
  return p;
}

KappaReport kappa_report(const Arrangement& a, const Partition& p) {
  validate_partition(a, p);
  Matroid m = build_matroid(a);
  GradedBasis g = nbc_basis(m);
  Straightener st(m);
  int s = p.block_count();
  int top = std::max(s, m.rank);

  KappaReport rep;
  rep.domain_dims.assign(top + 1, 0);
  rep.codomain_dims.assign(top + 1, 0);
  for (int d = 0; d <= top; ++d)
    rep.codomain_dims[d] = d <= m.rank ? static_cast<int>(g.nbc_sets[d].size()) : 0;

  FieldSpec q = FieldSpec::rationals();
  for (int d = 0; d <= top; ++d) {
    // domain basis: one generator from each of d distinct blocks
    std::vector<std::vector<int>> domain;  // chosen hyperplanes, in block order
    std::vector<int> block_choice;
    std::function<void(int, std::vector<int>&)> pick = [&](int from, std::vector<int>& acc) {
      if (static_cast<int>(acc.size()) == d) {
        domain.push_back(acc);
        return;
      }
      for (int b = from; b < s; ++b)
        for (int h : p.blocks[b]) {
          acc.push_back(h);
          pick(b + 1, acc);
          acc.pop_back();
        }
    };
    std::vector<int> acc;
    pick(0, acc);
    rep.domain_dims[d] = static_cast<int>(domain.size());
    if (rep.domain_dims[d] != rep.codomain_dims[d]) {
      rep.isomorphism = false;
      rep.failing_degree = d;
      return rep;
    }
    if (rep.domain_dims[d] == 0) continue;

    // matrix of kappa in degree d over the rationals
    std::map<std::uint32_t, int> nbc_index;
    for (std::size_t i = 0; i < g.nbc_sets[d].size(); ++i) nbc_index[g.nbc_sets[d][i]] = static_cast<int>(i);
    int n = rep.domain_dims[d];
    Matrix mat;
    mat.cols = n;
    mat.rows.assign(n, Row(n, Scalar::zero(q)));
    for (int col = 0; col < n; ++col) {
      std::vector<int> chosen = domain[col];
      // sort the product, tracking the permutation sign
      int sign = 1;
      for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
          if (chosen[i] > chosen[j]) {
            std::swap(chosen[i], chosen[j]);
            sign = -sign;
          }
      std::uint32_t mask = 0;
      for (int h : chosen) mask |= 1u << h;
      for (const auto& [basis_set, c] : st.run(mask)) {
        Rat v = c * sign;
        mat.rows[nbc_index[basis_set]][col] = Scalar::from_rational(q, v);
      }
    }
    if (rref(mat) != n) {
      rep.isomorphism = false;
      rep.failing_degree = d;
      return rep;
    }
  }
  rep.isomorphism = true;
  return rep;
}

Certificate kappa_is_isomorphism(const Arrangement& a, const Partition& p) {
  KappaReport rep = kappa_report(a, p);
  Certificate cert;
  cert.verdict = rep.isomorphism;
  if (!rep.isomorphism)
    cert.note = "kappa fails in degree " + std::to_string(rep.failing_degree) + " (domain " +
                std::to_string(rep.domain_dims[rep.failing_degree]) + ", codomain " +
                std::to_string(rep.codomain_dims[rep.failing_degree]) + ")";
  return cert;
}

}  // namespace arr
