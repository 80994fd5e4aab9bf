#include "arr/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace arr {

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

IntPoly shifted(const IntPoly& a, int k) {
  IntPoly r;
  if (a.c.empty()) return r;
  r.c.assign(a.c.size() + k, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
  return r;
}

std::string render(const IntPoly& p) {
  if (p.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < p.c.size(); ++k) {
    if (p.c[k] == 0) continue;
    Int v = p.c[k];
    if (!first) os << (v < 0 ? "-" : "+");
    else if (v < 0) os << "-";
    Int av = abs(v);
    if (k == 0 || av != 1) os << av;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

namespace {

// Divides p by (1 + b t) exactly; returns nullopt if not divisible.
std::optional<IntPoly> divide_linear(const IntPoly& p, long b) {
  // p(t) = q(t)(1+bt): q_0 = p_0, q_k = p_k - b q_{k-1}; remainder must vanish.
  IntPoly q;
  int d = p.degree();
  q.c.assign(d, Int(0));
  Int carry(0);
  for (int k = 0; k < d; ++k) {
    q.c[k] = p.coeff(k) - carry;
    carry = q.c[k] * b;
  }
  if (p.coeff(d) != carry) return std::nullopt;
  q.trim();
  return q;
}

void divisors_of(const Int& n, std::vector<long>& out) {
  Int a = abs(n);
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(static_cast<long>(d));
      Int e = a / d;
      if (e != d) out.push_back(static_cast<long>(e));
    }
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

std::optional<std::vector<long>> try_factor_linear(const IntPoly& p) {
  if (p.coeff(0) != 1) return std::nullopt;
  IntPoly cur = p;
  std::vector<long> roots;
  while (cur.degree() > 0) {
    // any b_i divides the leading coefficient, which is the product of all b_i
    if (cur.c.back() <= 0) return std::nullopt;
    std::vector<long> cand;
    divisors_of(cur.c.back(), cand);
    bool stripped = false;
    for (long b : cand) {
      if (auto q = divide_linear(cur, b)) {
        roots.push_back(b);
        cur = *q;
        stripped = true;
        break;
      }
    }
    if (!stripped) return std::nullopt;
  }
  if (cur.coeff(0) != 1) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string render_factored(const std::vector<long>& roots) {
  if (roots.empty()) return "1";
  std::map<long, int> mult;
  for (long b : roots) mult[b]++;
  std::ostringstream os;
  for (auto& [b, m] : mult) {
    os << "(1";
    if (b != 0) {
      os << "+";
      if (b != 1) os << b;
      os << "t";
    }
    os << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

}  // namespace arr
