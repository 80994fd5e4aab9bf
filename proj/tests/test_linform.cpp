#include <doctest.h>

#include <random>

#include "test_util.hpp"

using arr::Error;
using arr::ErrorKind;
using arr::FieldSpec;
using arr::Scalar;

TEST_CASE("defining polynomial keeps factor order") {
  FieldSpec q = FieldSpec::rationals();
  auto src = arr::parse_defining_polynomial("x y z (x+y) (x+y-z)", q, 3);
  REQUIRE(src.forms.size() == 5);
  CHECK(src.labels == std::vector<std::string>{"x", "y", "z", "x+y", "x+y-z"});
  CHECK(src.forms[3] == arr::LinearForm{Scalar::one(q), Scalar::one(q), Scalar::zero(q)});
  CHECK(src.forms[4] == arr::LinearForm{Scalar::one(q), Scalar::one(q), -Scalar::one(q)});
}

TEST_CASE("zeta coefficients in factors") {
  FieldSpec c = FieldSpec::cyclotomic_q3();
  auto src = arr::parse_defining_polynomial("(x-y)(x-z y)", c, 2);
  REQUIRE(src.forms.size() == 2);
  CHECK(src.forms[0] == arr::LinearForm{Scalar::one(c), -Scalar::one(c)});
  CHECK(src.forms[1] == arr::LinearForm{Scalar::one(c), -Scalar::zeta(c)});
}

TEST_CASE("parser rejects bad factors") {
  FieldSpec q = FieldSpec::rationals();
  auto kind_of = [&](const std::string& text, int nvars) {
    try {
      arr::parse_defining_polynomial(text, q, nvars);
      return ErrorKind::Internal;
    } catch (const Error& e) {
      return e.kind();
    }
  };
  CHECK(kind_of("x (x)", 1) == ErrorKind::DuplicateHyperplane);
  CHECK(kind_of("x (2x)", 1) == ErrorKind::DuplicateHyperplane);  // scalar multiples collide
  CHECK(kind_of("(x y)", 2) == ErrorKind::NonLinearFactor);
  CHECK(kind_of("(x^2)", 1) == ErrorKind::NonLinearFactor);
  CHECK(kind_of("(x+1)", 1) == ErrorKind::NonLinearFactor);
  CHECK(kind_of("(x-x)", 1) == ErrorKind::ZeroFactor);
  CHECK(kind_of("w", 1) == ErrorKind::UnknownVariable);
  CHECK(kind_of("x5", 3) == ErrorKind::UnknownVariable);
  CHECK(kind_of("(x+", 1) == ErrorKind::ParseError);
  CHECK(kind_of(")", 1) == ErrorKind::ParseError);
}

TEST_CASE("z is a coordinate only without zeta") {
  CHECK_NOTHROW(arr::parse_defining_polynomial("z", FieldSpec::rationals(), 3));
  // over GF(4), z alone is the scalar zeta: a constant, hence not linear
  try {
    arr::parse_defining_polynomial("z", FieldSpec::gf4(), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonLinearFactor);
  }
  CHECK_NOTHROW(arr::parse_defining_polynomial("(x1-z*x3)", FieldSpec::gf4(), 3));
}

TEST_CASE("json arrangement files") {
  auto src = arr::parse_arrangement_file(R"({"field":"Q","nvars":3,"polynomial":"x y z"})");
  CHECK(src.forms.size() == 3);

  auto empty = arr::parse_arrangement_file(R"({"field":"Q","nvars":0,"forms":[]})");
  CHECK(empty.forms.empty());
  CHECK(empty.nvars == 0);

  auto forms = arr::parse_arrangement_file(
      R"x({"field":"GF(4)","nvars":3,"forms":[["1","-1","0"],["1","z","0"]]})x");
  CHECK(forms.forms.size() == 2);
  // -1 = 1 in characteristic 2
  CHECK(forms.forms[0][1] == Scalar::one(FieldSpec::gf4()));

  auto kind_of = [](const std::string& text) {
    try {
      arr::parse_arrangement_file(text);
      return ErrorKind::Internal;
    } catch (const Error& e) {
      return e.kind();
    }
  };
  CHECK(kind_of(R"({"nvars":3,"polynomial":"x"})") == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"field":"Q","nvars":3})") == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"field":"Q","nvars":1,"polynomial":"x","forms":[["1"]]})") ==
        ErrorKind::SchemaError);
  CHECK(kind_of(R"({"field":"Q","nvars":2,"forms":[["1"]]})") == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"field":"Q","nvars":1,"forms":[["0"]]})") == ErrorKind::ZeroFactor);
  CHECK(kind_of("{") == ErrorKind::ParseError);
}

TEST_CASE("render and parse round-trip on the corpus") {
  for (const char* name : {"boolean3", "a222", "notfactored", "ot454", "d13", "d21xphi1", "g333",
                           "g333hat", "gf4_11", "zeta3_11", "notheredfactored"}) {
    arr::ArrangementSource src =
        arr::to_source(testutil::load_corpus(name));
    arr::ArrangementSource again = arr::parse_arrangement_file(arr::render_arrangement_source(src));
    CHECK(again == src);
  }
}

TEST_CASE("oversized literals stay inside library errors") {
  FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS_AS(arr::parse_defining_polynomial("x99999999999999999999", q, 3), Error);
  CHECK_THROWS_AS(arr::Partition::parse("99999999999999999999", 4), Error);
  // huge coefficients are fine, they are exact integers
  auto src = arr::parse_defining_polynomial("(340282366920938463463374607431768211456x+y)", q, 2);
  CHECK(src.forms.size() == 1);
}

TEST_CASE("parsing is total: random inputs never crash") {
  std::mt19937 rng(99);
  const std::string alphabet = "xyzt0123456789+-*/()z^ w|,";
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 300; ++i) {
    std::string text;
    for (int k = len(rng); k > 0; --k) text += alphabet[pick(rng)];
    try {
      arr::parse_defining_polynomial(text, FieldSpec::rationals(), 3);
    } catch (const Error&) {
    }
    std::string bytes;
    for (int k = len(rng); k > 0; --k) bytes += static_cast<char>(byte(rng));
    try {
      arr::parse_arrangement_file(bytes);
    } catch (const Error&) {
    }
  }
  CHECK(true);
}
