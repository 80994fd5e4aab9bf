#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arr/scalar.hpp"

namespace arr {

/// Polynomial in t with arbitrary-precision integer coefficients,
/// coefficient of t^k at index k. Normalized: no trailing zeros
/// (the zero polynomial is an empty vector).
struct IntPoly {
  std::vector<Int> c;

  static IntPoly constant(long v) {
    IntPoly p;
    if (v != 0) p.c = {Int(v)};
    return p;
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Int coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : Int(0); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
/// Multiplies by t^k.
IntPoly shifted(const IntPoly& a, int k);

std::string render(const IntPoly& p);

/// Writes p = prod_i (1 + b_i t) with positive integers b_i and returns the
/// multiset {b_i} sorted ascending (empty for p = 1), or nullopt when no
/// such factorization exists. Requires constant term 1.
std::optional<std::vector<long>> try_factor_linear(const IntPoly& p);

std::string render_factored(const std::vector<long>& roots);

}  // namespace arr
