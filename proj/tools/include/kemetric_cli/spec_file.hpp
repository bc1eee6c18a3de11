#ifndef KEMETRIC_CLI_SPEC_FILE_HPP
#define KEMETRIC_CLI_SPEC_FILE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "kemetric/potential.hpp"
#include "kemetric/rational.hpp"
#include "kemetric/series.hpp"

namespace kemetric::cli
{

// {"n": 2,
//  "monomials": [{"exponents": [2, 0], "coef": "1/4"},
//                {"exponents": [1, 1], "coef": {"sym": "b"}}],
//  "lambda": "3"}
// The unit linear part is implied. Rationals are strings "p" or "p/q".
struct SpecFile
{
    PotentialSpec spec;
    std::optional<Rational> lambda;
};

// Errors are ParseError with "<origin>: <json pointer>: <reason>" or, for
// malformed JSON, "<origin>:<line>:<column>: <reason>".
SpecFile parse_spec(std::string_view text, const std::string& origin = "<input>");

// Canonical form: fixed key order, two-space indent, trailing newline.
std::string emit_spec(const SpecFile& file);

// Reads a whole file; ParseError naming the path on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// A numeric potential Phi for the induction and normalization commands.
// Either a spec file (Phi = log P), or a file with a "potential" object:
//   {"n": 2, "potential": {"log_scale": "2",
//                          "monomials": [{"exponents": [1, 0], "coef": "1/2"}, ...]}}
// meaning Phi = scale * log(1 + sum coef x^m) (no implied linear part), or
//   {"n": 1, "potential": {"terms": [{"exponents": [1], "coef": "1"}, ...]}}
// listing the series coefficients of Phi directly.
struct PotentialFile
{
    Series phi;
    std::string description;
};

PotentialFile parse_potential(std::string_view text, unsigned truncation, const std::string& origin = "<input>");

} // namespace kemetric::cli

#endif
