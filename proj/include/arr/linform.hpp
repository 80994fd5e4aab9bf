#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arr/scalar.hpp"

namespace arr {

using LinearForm = std::vector<Scalar>;  // length nvars, not the zero vector

/// A parsed arrangement description: ordered linear forms over one field.
/// Forms keep their input coefficients; normalization happens downstream.
struct ArrangementSource {
  FieldSpec field = FieldSpec::rationals();
  int nvars = 0;
  std::vector<LinearForm> forms;
  std::vector<std::string> labels;  // one per form

  bool operator==(const ArrangementSource& o) const {
    return field == o.field && nvars == o.nvars && forms == o.forms;
  }
};

/// Parses a product of linear factors, e.g. "x y z (x + y) (x + y - z)".
/// Factors are separated by whitespace, '*', or parentheses; multi-term
/// forms must be parenthesized. Variables: x,y,z,t for coordinates 1..4
/// (z only when the field has no zeta) or x1..xn. Coefficients follow the
/// scalar grammar; in fields with a generator, z/z^2 denote zeta powers.
ArrangementSource parse_defining_polynomial(const std::string& text, const FieldSpec& field,
                                            int nvars);

/// Parses one linear form in the same grammar.
LinearForm parse_linear_form(const std::string& text, const FieldSpec& field, int nvars);

/// JSON schema:
///   { "field": "Q" | "GF(p)" | "GF(4)" | "Q(zeta3)", "nvars": int,
///     "polynomial": string | "forms": [[coeff, ...], ...],   (exactly one)
///     "labels": [string, ...] }                              (optional)
ArrangementSource parse_arrangement_file(const std::string& bytes);

std::string render_arrangement_source(const ArrangementSource& src);

/// Variable name for coordinate `index` (0-based): x,y,z,t when the field
/// allows and nvars <= 4, otherwise x1..xn.
std::string variable_name(const FieldSpec& field, int nvars, int index);

std::string render_linear_form(const LinearForm& form, const FieldSpec& field);

/// First nonzero coefficient scaled to 1. Errors on the zero form.
LinearForm normalize_form(const LinearForm& form);

}  // namespace arr
