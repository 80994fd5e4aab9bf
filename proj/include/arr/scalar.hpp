#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "arr/error.hpp"

namespace arr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField, GF4, CyclotomicQ3 };

/// Coefficient field descriptor. GF4 and CyclotomicQ3 share the relation
/// zeta^2 + zeta + 1 = 0 for their generator.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime(unsigned long p);
  static FieldSpec gf4() { return FieldSpec(FieldKind::GF4, 2); }
  static FieldSpec cyclotomic_q3() { return FieldSpec(FieldKind::CyclotomicQ3, 0); }

  FieldKind kind() const { return kind_; }
  unsigned long modulus() const { return p_; }
  bool has_zeta() const { return kind_ == FieldKind::GF4 || kind_ == FieldKind::CyclotomicQ3; }

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string render() const;
  /// Accepts "Q", "GF(p)" for a decimal prime p, "GF(4)", "Q(zeta3)".
  static FieldSpec parse(const std::string& text);

 private:
  FieldSpec(FieldKind k, unsigned long p) : kind_(k), p_(p) {}
  FieldKind kind_;
  unsigned long p_;
};

/// Exact field element. Payload is a pair (a, b) read as a + b*zeta:
///   Rationals    -- a is the value, b = 0
///   PrimeField   -- a is the residue in [0, p), b = 0
///   GF4          -- a, b in {0, 1}
///   CyclotomicQ3 -- a, b arbitrary rationals
/// Payloads are always canonical, so == is exact element equality.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), a_(0), b_(0) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1, 0); }
  static Scalar zeta(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar from_rational(const FieldSpec& f, const Rat& v);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const;

  bool operator==(const Scalar& o) const { return field_ == o.field_ && a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order within one field; used for canonical sorting only.
  int cmp(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }

  std::string render() const;

  const Rat& part_a() const { return a_; }
  const Rat& part_b() const { return b_; }

 private:
  Scalar(const FieldSpec& f, Rat a, Rat b) : field_(f), a_(std::move(a)), b_(std::move(b)) {}
  void reduce();
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  Rat a_, b_;
};

/// Parses a coefficient literal:
///   INT := /-?[0-9]+/ ; FRAC := INT "/" POSINT ; ZETA := "z" | "z^2"
///   TERM := (INT|FRAC)? ("*"? ZETA)? ; coefficient := TERM (("+"|"-") TERM)*
/// A zeta literal in a field without zeta raises FieldMismatch.
Scalar scalar_parse(const std::string& text, const FieldSpec& field);

/// Digit run -> integer, always base 10 (leading zeros are not octal).
Int parse_decimal_digits(const std::string& digits);

}  // namespace arr
