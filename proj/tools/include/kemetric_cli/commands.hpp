#ifndef KEMETRIC_CLI_COMMANDS_HPP
#define KEMETRIC_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "kemetric/sweep.hpp"
#include "kemetric_cli/report.hpp"

namespace kemetric::cli
{

// Process exit status contract.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;    // parse or I/O error
inline constexpr int kExitInternal = 4; // engine consistency failure

struct Output
{
    Format format = Format::Text;
    std::optional<std::string> path; // stdout when empty
};

struct VerifyArgs
{
    std::string spec;
    std::optional<std::string> lambda;
    std::optional<unsigned> degree; // exact mode when empty
    Output output;
};

struct ConstraintsArgs
{
    std::string spec;
    std::optional<std::string> lambda;
    std::optional<unsigned> degree; // deg P + 1 when empty
    Output output;
};

struct SweepArgs
{
    SweepOptions options;
    Output output;
};

struct InducedArgs
{
    std::string potential;
    unsigned degree = 6;
    Output output;
};

struct NormalizeArgs
{
    std::string potential;
    unsigned degree = 4;
    Output output;
};

struct OracleArgs
{
    std::string spec;
    Output output;
};

// Each command writes its report to args.output (or `out`), diagnostics to
// `err`, and returns an exit status. Exceptions are mapped to statuses.
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_constraints(const ConstraintsArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_induced(const InducedArgs& args, std::ostream& out, std::ostream& err);
int cmd_normalize(const NormalizeArgs& args, std::ostream& out, std::ostream& err);
int cmd_oracle_check(const OracleArgs& args, std::ostream& out, std::ostream& err);

// "2..6" or "4".
std::pair<std::size_t, std::size_t> parse_dims(const std::string& text);
Format parse_format(const std::string& text);

} // namespace kemetric::cli

#endif
