#include "arr/linform.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace arr {

namespace {

using json = nlohmann::json;

struct FormParser {
  const std::string& s;
  size_t pos = 0;
  long base_offset;
  const FieldSpec& field;
  int nvars;

  FormParser(const std::string& text, long offset, const FieldSpec& f, int nv)
      : s(text), base_offset(offset), field(f), nvars(nv) {}

  long here() const { return base_offset + static_cast<long>(pos); }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Rat parse_number() {
    skip_ws();
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail(ErrorKind::ParseError, "expected number", here());
    Int num = parse_decimal_digits(s.substr(digits, pos - digits));
    if (peek() == '/') {
      ++pos;
      skip_ws();
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) fail(ErrorKind::ParseError, "expected denominator", here());
      Int den = parse_decimal_digits(s.substr(dstart, pos - dstart));
      if (den == 0) fail(ErrorKind::ParseError, "zero denominator", here());
      return Rat(num, den);
    }
    return Rat(num);
  }

  // Variable token: x, y, z, t or x<digits>. Returns 0-based coordinate,
  // or -1 when the next token is not a variable.
  int try_parse_variable() {
    skip_ws();
    if (pos >= s.size()) return -1;
    char c = s[pos];
    if (c == 'x' && pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      size_t dstart = pos + 1;
      size_t p = dstart;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (p - dstart > 6)
        fail(ErrorKind::UnknownVariable, "variable index too large", here());
      long idx = std::stol(s.substr(dstart, p - dstart));
      if (idx < 1 || idx > nvars)
        fail(ErrorKind::UnknownVariable, "x" + std::to_string(idx) + " exceeds nvars=" + std::to_string(nvars), here());
      pos = p;
      return static_cast<int>(idx - 1);
    }
    int coord = -1;
    if (c == 'x') coord = 0;
    else if (c == 'y') coord = 1;
    else if (c == 'z' && !field.has_zeta()) coord = 2;
    else if (c == 't') coord = 3;
    if (coord < 0) return -1;
    if (coord >= nvars)
      fail(ErrorKind::UnknownVariable, std::string(1, c) + " exceeds nvars=" + std::to_string(nvars), here());
    ++pos;
    return coord;
  }

  LinearForm parse() {
    LinearForm coeffs(nvars, Scalar::zero(field));
    Scalar constant = Scalar::zero(field);
    bool first = true;
    while (true) {
      char c = peek();
      if (c == '\0') break;
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail(ErrorKind::NonLinearFactor, "expected '+' or '-' between terms", here());
      }
      first = false;

      Scalar coeff = Scalar::one(field);
      bool have_coeff = false;
      c = peek();
      if (c == '(') {
        size_t close = s.find(')', pos);
        if (close == std::string::npos) fail(ErrorKind::ParseError, "unbalanced '('", here());
        coeff = scalar_parse(s.substr(pos + 1, close - pos - 1), field);
        pos = close + 1;
        have_coeff = true;
        if (peek() == '*') ++pos;
        c = peek();
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = coeff * Scalar::from_rational(field, parse_number());
        have_coeff = true;
        if (peek() == '*') ++pos;
        c = peek();
      }
      if (c == 'z' && field.has_zeta()) {
        ++pos;
        Scalar zp = Scalar::zeta(field);
        if (peek() == '^') {
          ++pos;
          if (peek() != '2') fail(ErrorKind::ParseError, "only z and z^2 are allowed", here());
          ++pos;
          zp = zp * Scalar::zeta(field);
        }
        coeff = coeff * zp;
        have_coeff = true;
        if (peek() == '*') ++pos;
      }
      int var = try_parse_variable();
      if (var < 0 && !have_coeff) {
        if (std::isalpha(static_cast<unsigned char>(peek())))
          fail(ErrorKind::UnknownVariable, std::string("unknown variable '") + peek() + "'", here());
        fail(ErrorKind::ParseError, "expected term", here());
      }
      Scalar value = sign < 0 ? -coeff : coeff;
      if (var < 0) {
        constant = constant + value;
      } else {
        if (peek() == '^')
          fail(ErrorKind::NonLinearFactor, "variable power in factor", here());
        if (peek() == '*' || std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(')
          fail(ErrorKind::NonLinearFactor, "product of variables in factor", here());
        coeffs[var] = coeffs[var] + value;
      }
    }
    if (first) fail(ErrorKind::ParseError, "empty factor", base_offset);
    if (!constant.is_zero())
      fail(ErrorKind::NonLinearFactor, "nonzero constant term (form must vanish at 0)", base_offset);
    bool all_zero = true;
    for (const Scalar& v : coeffs) all_zero = all_zero && v.is_zero();
    if (all_zero) fail(ErrorKind::ZeroFactor, "factor is identically zero", base_offset);
    return coeffs;
  }
};

std::string trim_copy(const std::string& t) {
  size_t a = t.find_first_not_of(" \t\r\n");
  size_t b = t.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return t.substr(a, b - a + 1);
}

void check_no_duplicates(const ArrangementSource& src) {
  std::vector<LinearForm> norm;
  norm.reserve(src.forms.size());
  for (const auto& f : src.forms) norm.push_back(normalize_form(f));
  for (size_t i = 0; i < norm.size(); ++i)
    for (size_t j = i + 1; j < norm.size(); ++j)
      if (norm[i] == norm[j])
        fail(ErrorKind::DuplicateHyperplane,
             "factors " + std::to_string(i + 1) + " ('" + src.labels[i] + "') and " +
                 std::to_string(j + 1) + " ('" + src.labels[j] + "') define the same hyperplane");
}

}  // namespace

LinearForm normalize_form(const LinearForm& form) {
  for (const Scalar& v : form) {
    if (!v.is_zero()) {
      Scalar inv = v.inverse();
      LinearForm out;
      out.reserve(form.size());
      for (const Scalar& w : form) out.push_back(w * inv);
      return out;
    }
  }
  fail(ErrorKind::ZeroFactor, "cannot normalize the zero form");
}

LinearForm parse_linear_form(const std::string& text, const FieldSpec& field, int nvars) {
  FormParser p(text, 0, field, nvars);
  return p.parse();
}

ArrangementSource parse_defining_polynomial(const std::string& text, const FieldSpec& field,
                                            int nvars) {
  if (nvars < 0) fail(ErrorKind::SchemaError, "nvars must be nonnegative");
  ArrangementSource src;
  src.field = field;
  src.nvars = nvars;

  size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    std::string factor;
    long offset = static_cast<long>(pos);
    if (c == '(') {
      int depth = 1;
      size_t p = pos + 1;
      while (p < text.size() && depth > 0) {
        if (text[p] == '(') ++depth;
        if (text[p] == ')') --depth;
        ++p;
      }
      if (depth != 0) fail(ErrorKind::ParseError, "unbalanced '('", offset);
      factor = text.substr(pos + 1, p - pos - 2);
      offset += 1;
      pos = p;
    } else if (c == ')') {
      fail(ErrorKind::ParseError, "unexpected ')'", offset);
    } else {
      size_t p = pos;
      while (p < text.size() && !std::isspace(static_cast<unsigned char>(text[p])) &&
             text[p] != '(' && text[p] != ')' && text[p] != '*')
        ++p;
      factor = text.substr(pos, p - pos);
      pos = p;
    }
    FormParser fp(factor, offset, field, nvars);
    src.forms.push_back(fp.parse());
    src.labels.push_back(trim_copy(factor));
  }
  check_no_duplicates(src);
  return src;
}

ArrangementSource parse_arrangement_file(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what(), static_cast<long>(e.byte));
  }
  if (!j.is_object()) fail(ErrorKind::SchemaError, "top-level value must be an object");
  if (!j.contains("field") || !j["field"].is_string())
    fail(ErrorKind::SchemaError, "missing string field 'field'");
  if (!j.contains("nvars") || !j["nvars"].is_number_integer())
    fail(ErrorKind::SchemaError, "missing integer field 'nvars'");
  FieldSpec field = FieldSpec::parse(j["field"].get<std::string>());
  int nvars = j["nvars"].get<int>();
  if (nvars < 0) fail(ErrorKind::SchemaError, "nvars must be nonnegative");

  bool has_poly = j.contains("polynomial");
  bool has_forms = j.contains("forms");
  if (has_poly == has_forms)
    fail(ErrorKind::SchemaError, "exactly one of 'polynomial' and 'forms' is required");

  ArrangementSource src;
  if (has_poly) {
    if (!j["polynomial"].is_string()) fail(ErrorKind::SchemaError, "'polynomial' must be a string");
    src = parse_defining_polynomial(j["polynomial"].get<std::string>(), field, nvars);
  } else {
    if (!j["forms"].is_array()) fail(ErrorKind::SchemaError, "'forms' must be an array");
    src.field = field;
    src.nvars = nvars;
    for (const auto& row : j["forms"]) {
      if (!row.is_array() || static_cast<int>(row.size()) != nvars)
        fail(ErrorKind::SchemaError, "each form needs exactly nvars coefficients");
      LinearForm form;
      for (const auto& cell : row) {
        if (!cell.is_string()) fail(ErrorKind::SchemaError, "coefficients must be strings");
        form.push_back(scalar_parse(cell.get<std::string>(), field));
      }
      bool all_zero = true;
      for (const Scalar& v : form) all_zero = all_zero && v.is_zero();
      if (all_zero) fail(ErrorKind::ZeroFactor, "zero form in 'forms'");
      src.forms.push_back(std::move(form));
      src.labels.push_back(render_linear_form(src.forms.back(), field));
    }
    check_no_duplicates(src);
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != src.forms.size())
      fail(ErrorKind::SchemaError, "'labels' must list one string per form");
    src.labels.clear();
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) fail(ErrorKind::SchemaError, "'labels' must list strings");
      src.labels.push_back(l.get<std::string>());
    }
  }
  return src;
}

std::string render_arrangement_source(const ArrangementSource& src) {
  json j;
  j["field"] = src.field.render();
  j["nvars"] = src.nvars;
  json forms = json::array();
  for (const auto& f : src.forms) {
    json row = json::array();
    for (const Scalar& v : f) row.push_back(v.render());
    forms.push_back(row);
  }
  j["forms"] = forms;
  j["labels"] = src.labels;
  return j.dump(2);
}

std::string variable_name(const FieldSpec& field, int nvars, int index) {
  static const char* named[] = {"x", "y", "z", "t"};
  // z is reserved for zeta in GF(4) and Q(zeta3), so named coordinates are
  // only used where they cannot collide.
  if (nvars <= 4 && (!field.has_zeta() || nvars <= 2)) return named[index];
  return "x" + std::to_string(index + 1);
}

std::string render_linear_form(const LinearForm& form, const FieldSpec& field) {
  std::ostringstream os;
  bool first = true;
  int nvars = static_cast<int>(form.size());
  for (int i = 0; i < nvars; ++i) {
    const Scalar& v = form[i];
    if (v.is_zero()) continue;
    std::string var = variable_name(field, nvars, i);
    if (v.is_one()) {
      if (!first) os << "+";
      os << var;
    } else if ((-v).is_one()) {
      os << "-" << var;
    } else {
      std::string cs = v.render();
      bool needs_paren = cs.find('+') != std::string::npos ||
                         cs.find('-', 1) != std::string::npos;
      if (!first && cs[0] != '-') os << "+";
      if (needs_paren) {
        if (cs[0] == '-') {
          os << "-(" << cs.substr(1) << ")";
        } else {
          os << "(" << cs << ")";
        }
      } else {
        os << cs;
      }
      os << "*" << var;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace arr
