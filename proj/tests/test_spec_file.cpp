#include <gtest/gtest.h>

#include <filesystem>

#include "generators.hpp"
#include "kemetric/errors.hpp"
#include "kemetric_cli/spec_file.hpp"

using namespace kemetric;
using namespace kemetric::cli;

namespace
{

std::string parse_error(std::string_view text)
{
    try {
        parse_spec(text, "in.json");
    } catch (const ParseError& e) {
        return e.what();
    }
    return "no error";
}

} // namespace

TEST(SpecFile, ParsesNumericAndSymbolic)
{
    const SpecFile f = parse_spec(R"({"n": 2, "monomials": [{"exponents": [2, 0], "coef": "1/4"},
                                      {"exponents": [1, 1], "coef": {"sym": "b"}}], "lambda": "3"})");
    EXPECT_EQ(f.spec.dimension(), 2u);
    EXPECT_EQ(f.lambda, Rational(3));
    ASSERT_EQ(f.spec.codimension(), 2u);
    EXPECT_EQ(f.spec.support()[0].coefficient, CoefPoly(Rational(1L, 4L)));
    EXPECT_EQ(f.spec.symbols().name(support_unknown_id(MultiIndex{1, 1})), "b");
    EXPECT_FALSE(parse_spec(R"({"n": 3, "monomials": []})").lambda.has_value());
}

TEST(SpecFile, ErrorsCarryPointers)
{
    EXPECT_EQ(parse_error(R"({"monomials": []})"), "in.json: /n: missing field");
    EXPECT_EQ(parse_error(R"({"n": 0, "monomials": []})"), "in.json: /n: expected a positive integer");
    EXPECT_EQ(parse_error(R"({"n": 2})"), "in.json: /monomials: missing field");
    EXPECT_EQ(parse_error(R"({"n": 2, "monomials": [{"exponents": [1, 0], "coef": "1"}]})"),
              "in.json: /monomials/0/exponents: support monomials need total degree >= 2");
    EXPECT_EQ(parse_error(R"({"n": 2, "monomials": [{"exponents": [2], "coef": "1"}]})"),
              "in.json: /monomials/0/exponents: expected 2 exponents, got 1");
    EXPECT_EQ(parse_error(R"({"n": 2, "monomials": [{"exponents": [2, 0], "coef": "0"}]})"),
              "in.json: /monomials/0/coef: coefficient must be nonzero");
    EXPECT_EQ(parse_error(R"({"n": 2, "monomials": [{"exponents": [2, 0], "coef": 1}]})"),
              "in.json: /monomials/0/coef: expected a rational string \"p\" or \"p/q\"");
    EXPECT_NE(parse_error(R"({"n": 2, "monomials": [{"exponents": [2, 0], "coef": "0.25"}]})")
                  .find("in.json: /monomials/0/coef: "),
              std::string::npos);
    EXPECT_NE(parse_error(R"({"n": 2, "monomials": [{"exponents": [2, 0], "coef": "1"},
                                                   {"exponents": [2, 0], "coef": "2"}]})")
                  .find("/monomials/1/exponents: duplicate monomial x1^2"),
              std::string::npos);
    EXPECT_NE(parse_error(R"({"n": 1, "monomials": [{"exponents": [2], "coef": {"sym": "lambda"}}]})")
                  .find("reserved"),
              std::string::npos);
    EXPECT_NE(parse_error(R"({"n": 1, "monomials": [], "lambda": "x"})").find("/lambda"), std::string::npos);
}

TEST(SpecFile, SyntaxErrorsCarryLineAndColumn)
{
    const std::string e = parse_error("{\"n\": 2,\n \"monomials\": [{\"exponents\": [2, 0] \"coef\": \"1\"}]}");
    EXPECT_EQ(e.rfind("in.json:2:", 0), 0u) << e;
    EXPECT_NE(e.find("syntax error"), std::string::npos);
}

TEST(SpecFile, CanonicalEmission)
{
    const SpecFile f = parse_spec(R"({"lambda": "4", "monomials": [{"coef": "1", "exponents": [1, 1]}], "n": 2})");
    EXPECT_EQ(emit_spec(f), "{\n  \"n\": 2,\n  \"monomials\": [\n    {\n      \"exponents\": [\n        1,\n        1\n"
                            "      ],\n      \"coef\": \"1\"\n    }\n  ],\n  \"lambda\": \"4\"\n}\n");
}

TEST(SpecFile, FileErrorsNamePath)
{
    try {
        read_file("/nonexistent/spec.json");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(std::string(e.what()), "/nonexistent/spec.json: cannot open for reading");
    }
    EXPECT_THROW(write_file("/nonexistent/dir/out.json", "x"), ParseError);
    const auto path = (std::filesystem::temp_directory_path() / "kemetric_spec_file_test.json").string();
    write_file(path, "abc\n");
    EXPECT_EQ(read_file(path), "abc\n");
    std::filesystem::remove(path);
}

TEST(PotentialFile, Forms)
{
    const PotentialFile a = parse_potential(R"({"n": 1, "potential": {"log_scale": "3/2",
                                              "monomials": [{"exponents": [1], "coef": "1"}]}})", 4);
    EXPECT_EQ(a.phi, log1p(Series::variable(1, 4, 0)) * CoefPoly(Rational(3L, 2L)));
    const PotentialFile b = parse_potential(R"({"n": 1, "potential": {"terms": [{"exponents": [1], "coef": "2"}]}})", 3);
    EXPECT_EQ(b.phi, Series::variable(1, 3, 0) * CoefPoly(2));
    const PotentialFile c = parse_potential(R"({"n": 1, "monomials": [{"exponents": [2], "coef": "1"}]})", 3);
    EXPECT_EQ(c.phi.coefficient(MultiIndex{1}), CoefPoly(1));
    EXPECT_THROW(parse_potential(R"({"n": 1, "potential": {}})", 3), ParseError);
}

// emit then parse is the identity on specs and lambdas.
TEST(SpecFileProperty, RoundTrip)
{
    gen::Gen g(31);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
        SpecFile f{g.spec(n, 4, 4, false), std::nullopt};
        if (g.coin())
            f.lambda = g.positive_rational();
        const SpecFile back = parse_spec(emit_spec(f));
        EXPECT_EQ(back.spec, f.spec);
        EXPECT_EQ(back.lambda, f.lambda);
        EXPECT_EQ(emit_spec(back), emit_spec(f));
    }
}
