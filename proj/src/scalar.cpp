#include "arr/scalar.hpp"

#include <cctype>
#include <sstream>

namespace arr {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NonLinearFactor: return "NonLinearFactor";
    case ErrorKind::ZeroFactor: return "ZeroFactor";
    case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::EmptyArrangement: return "EmptyArrangement";
    case ErrorKind::NotAFlat: return "NotAFlat";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::PivotNotInBlockOne: return "PivotNotInBlockOne";
    case ErrorKind::NotNice: return "NotNice";
    case ErrorKind::NotAModularChain: return "NotAModularChain";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BadSeed: return "BadSeed";
    case ErrorKind::NotSorted: return "NotSorted";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int mod_reduce(const Int& v, unsigned long p) {
  Int m = v % Int(p);
  if (m < 0) m += p;
  return m;
}

Int mod_inverse(Int a, unsigned long p) {
  // extended Euclid on (a, p)
  Int t = 0, new_t = 1, r = Int(p), new_r = a;
  while (new_r != 0) {
    Int q = r / new_r;
    Int tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(ErrorKind::DivisionByZero, "element has no inverse mod " + std::to_string(p));
  if (t < 0) t += p;
  return t;
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned long p) {
  if (!is_prime(p)) fail(ErrorKind::SchemaError, "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::render() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
    case FieldKind::GF4: return "GF(4)";
    case FieldKind::CyclotomicQ3: return "Q(zeta3)";
  }
  return "?";
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text == "GF(4)") return gf4();
  if (text == "Q(zeta3)") return cyclotomic_q3();
  if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
    std::string num = text.substr(3, text.size() - 4);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::SchemaError, "bad field spec '" + text + "'");
    unsigned long p = std::stoul(num);
    if (p == 4) return gf4();
    return prime(p);
  }
  fail(ErrorKind::SchemaError, "unknown field '" + text + "'");
}

Int parse_decimal_digits(const std::string& digits) {
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  return Int(digits.substr(i));
}

Scalar Scalar::zeta(const FieldSpec& f) {
  if (!f.has_zeta()) fail(ErrorKind::FieldMismatch, "field " + f.render() + " has no zeta");
  return Scalar(f, 0, 1);
}

Scalar Scalar::from_int(const FieldSpec& f, long v) { return from_rational(f, Rat(v)); }

Scalar Scalar::from_rational(const FieldSpec& f, const Rat& v) {
  Scalar s(f, v, 0);
  s.reduce();
  return s;
}

void Scalar::reduce() {
  switch (field_.kind()) {
    case FieldKind::Rationals:
    case FieldKind::CyclotomicQ3:
      break;  // cpp_rational keeps lowest terms, positive denominator
    case FieldKind::PrimeField:
    case FieldKind::GF4: {
      unsigned long p = field_.modulus();
      auto red = [&](Rat& x) {
        Int num = numerator(x), den = denominator(x);
        Int dm = mod_reduce(den, p);
        if (dm == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes in " + field_.render());
        x = Rat(mod_reduce(mod_reduce(num, p) * mod_inverse(dm, p), p));
      };
      red(a_);
      red(b_);
      if (field_.kind() == FieldKind::PrimeField && b_ != 0)
        fail(ErrorKind::FieldMismatch, "zeta component in prime field");
      break;
    }
  }
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    fail(ErrorKind::MixedFields, field_.render() + " vs " + o.field_.render());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r(field_, a_ + o.a_, b_ + o.b_);
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r(field_, -a_, -b_);
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  // (a + b z)(c + d z) with z^2 = -z - 1
  Scalar r(field_, a_ * o.a_ - b_ * o.b_, a_ * o.b_ + b_ * o.a_ - b_ * o.b_);
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + field_.render());
  // norm (a + b z)(a + b z^2) = a^2 - a b + b^2
  Rat n = a_ * a_ - a_ * b_ + b_ * b_;
  Scalar conj(field_, a_ - b_, -b_);
  conj.reduce();
  Scalar norm(field_, n, 0);
  norm.reduce();
  if (norm.is_zero()) fail(ErrorKind::DivisionByZero, "zero norm");  // cannot happen in a field
  Scalar ninv(field_, Rat(denominator(norm.a_), 1) / Rat(numerator(norm.a_), 1), 0);
  if (field_.kind() == FieldKind::PrimeField || field_.kind() == FieldKind::GF4)
    ninv = Scalar(field_, Rat(mod_inverse(numerator(norm.a_), field_.modulus())), 0);
  Scalar r = conj * ninv;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

int Scalar::cmp(const Scalar& o) const {
  check_same_field(o);
  if (a_ != o.a_) return a_ < o.a_ ? -1 : 1;
  if (b_ != o.b_) return b_ < o.b_ ? -1 : 1;
  return 0;
}

namespace {

std::string render_rat(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace

std::string Scalar::render() const {
  if (is_zero()) return "0";
  std::string out;
  if (a_ != 0) out = render_rat(a_);
  if (b_ != 0) {
    std::string zpart;
    if (b_ == 1)
      zpart = "z";
    else if (b_ == -1)
      zpart = "-z";
    else
      zpart = render_rat(b_) + "*z";
    if (!out.empty() && zpart[0] != '-') out += "+";
    out += zpart;
  }
  return out;
}

namespace {

struct ScalarLexer {
  const std::string& s;
  size_t pos = 0;
  explicit ScalarLexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

// Parses INT or FRAC starting at the lexer position.
Rat parse_number(ScalarLexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  bool neg = false;
  if (lx.pos < lx.s.size() && (lx.s[lx.pos] == '-' || lx.s[lx.pos] == '+')) {
    neg = lx.s[lx.pos] == '-';
    ++lx.pos;
  }
  size_t digits = lx.pos;
  while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
  if (lx.pos == digits) fail(ErrorKind::ParseError, "expected number", static_cast<long>(start));
  Int num = parse_decimal_digits(lx.s.substr(digits, lx.pos - digits));
  if (neg) num = -num;
  if (lx.peek() == '/') {
    ++lx.pos;
    lx.skip_ws();
    size_t dstart = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == dstart) fail(ErrorKind::ParseError, "expected denominator", static_cast<long>(dstart));
    Int den = parse_decimal_digits(lx.s.substr(dstart, lx.pos - dstart));
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator", static_cast<long>(dstart));
    return Rat(num, den);
  }
  return Rat(num);
}

}  // namespace

Scalar scalar_parse(const std::string& text, const FieldSpec& field) {
  ScalarLexer lx(text);
  Scalar acc = Scalar::zero(field);
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.pos;
    } else if (!first) {
      fail(ErrorKind::ParseError, "expected '+' or '-'", static_cast<long>(lx.pos));
    }
    first = false;
    lx.skip_ws();
    bool have_coeff = false;
    Rat coeff(1);
    c = lx.peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      coeff = parse_number(lx);
      have_coeff = true;
      if (lx.peek() == '*') ++lx.pos;
    }
    bool have_zeta = false;
    int zpow = 0;
    if (lx.peek() == 'z') {
      ++lx.pos;
      zpow = 1;
      have_zeta = true;
      if (lx.peek() == '^') {
        ++lx.pos;
        if (lx.peek() != '2') fail(ErrorKind::ParseError, "only z and z^2 are allowed", static_cast<long>(lx.pos));
        ++lx.pos;
        zpow = 2;
      }
      if (!field.has_zeta())
        fail(ErrorKind::FieldMismatch, "zeta literal in field " + field.render());
    }
    if (!have_coeff && !have_zeta)
      fail(ErrorKind::ParseError, "expected term", static_cast<long>(lx.pos));
    Scalar term = Scalar::from_rational(field, sign < 0 ? Rat(-coeff) : coeff);
    if (have_zeta) {
      Scalar z = Scalar::zeta(field);
      term = term * z;
      if (zpow == 2) term = term * z;
    }
    acc = acc + term;
  }
  if (first) fail(ErrorKind::ParseError, "empty coefficient", 0);
  return acc;
}

}  // namespace arr
