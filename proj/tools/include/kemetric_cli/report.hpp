#ifndef KEMETRIC_CLI_REPORT_HPP
#define KEMETRIC_CLI_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "kemetric/certify.hpp"
#include "kemetric/constraints.hpp"
#include "kemetric/induction.hpp"
#include "kemetric/potential.hpp"
#include "kemetric/sweep.hpp"

namespace kemetric::cli
{

inline constexpr const char* kReportSchema = "kemetric.report/1";

enum class Format
{
    Json,
    Text,
};

// "1 + x1 + x2 + 1/4*x1^2"
std::string potential_to_string(const PotentialSpec& spec);

struct VerifyResult
{
    PotentialSpec spec;
    Rational lambda;
    bool exact = true;
    unsigned degree = 0;                   // truncation in degree mode
    bool pass = false;
    std::optional<Certificate> certificate; // exact mode
    Series residual{1, 0};                  // degree mode, nonzero terms only
};

struct OracleResult
{
    PotentialSpec spec;
    bool equal = false;
    std::size_t terms = 0;
    std::optional<MultiIndex> witness;
    Rational xspace;
    Rational zspace;
};

struct NormalizeResult
{
    std::string source;
    unsigned degree = 0;
    std::vector<Rational> scaling;
    Series normalized{1, 0};
};

struct InducedResult
{
    std::string source;
    InductionReport report;
};

std::string render(const VerifyResult& r, Format f);
std::string render(const ConstraintSystem& sys, Format f);
std::string render(const ClassificationReport& r, Format f);
std::string render(const InducedResult& r, Format f);
std::string render(const NormalizeResult& r, Format f);
std::string render(const OracleResult& r, Format f);

// Two lines: status counts, then model spaces / UNKNOWN / UNRESOLVED.
std::string sweep_summary(const ClassificationReport& r);

} // namespace kemetric::cli

#endif
