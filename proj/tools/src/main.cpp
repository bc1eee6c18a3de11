#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "kemetric_cli/commands.hpp"

using namespace kemetric::cli;

namespace
{

void add_output(CLI::App* cmd, std::string& format, std::string& out)
{
    cmd->add_option("--format", format, "Report format: json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out, "Write the report to PATH instead of stdout");
}

Output make_output(const std::string& format, const std::string& out)
{
    Output o;
    o.format = parse_format(format);
    if (!out.empty())
        o.path = out;
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification and classification of rotation-invariant projectively induced "
                 "Kahler-Einstein metrics"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    std::string spec_path;
    std::string lambda;
    unsigned degree = 0;

    auto* verify = app.add_subcommand("verify", "Check the Monge-Ampere identity for a spec and lambda");
    verify->add_option("--spec", spec_path, "Spec file")->required();
    verify->add_option("--lambda", lambda, "Einstein constant p/q");
    auto* exact = verify->add_flag("--exact", "Truncation-free certificate (default)");
    auto* vdeg = verify->add_option("--degree", degree, "Check the residual through degree D instead");
    exact->excludes(vdeg);
    add_output(verify, format, out_path);

    auto* constraints = app.add_subcommand("constraints", "Print the coefficient equations of a symbolic spec");
    constraints->add_option("--spec", spec_path, "Spec file with symbolic coefficients")->required();
    constraints->add_option("--lambda", lambda, "Fix the Einstein constant");
    auto* cdeg = constraints->add_option("--degree", degree, "Extraction degree D (default deg P + 1)");
    add_output(constraints, format, out_path);

    std::string dims = "2..6";
    std::size_t max_codim = 3;
    unsigned deg_cap = 0;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool no_shortcut = false;
    auto* sweep = app.add_subcommand("sweep", "Enumerate, solve, certify and classify supports");
    sweep->add_option("--dims", dims, "Dimension range A..B")->capture_default_str();
    sweep->add_option("--max-codim", max_codim, "Largest support size k")->capture_default_str();
    sweep->add_option("--deg-cap", deg_cap, "Largest support monomial degree (default max(k, 2))");
    auto* sdeg = sweep->add_option("--degree", degree, "Solve degree D (default deg cap + 2)");
    sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    sweep->add_flag("--no-shortcut", no_shortcut, "Enumerate even when n > 2k");
    add_output(sweep, format, out_path);

    auto* induced = app.add_subcommand("induced", "Check the sign pattern of exp(Phi) - 1");
    induced->add_option("--spec", spec_path, "Potential or spec file")->required();
    auto* ideg = induced->add_option("--degree", degree, "Inspect through degree D (default 6)");
    add_output(induced, format, out_path);

    auto* normalize = app.add_subcommand("normalize", "Rescale a potential to Bochner form");
    normalize->add_option("--spec", spec_path, "Potential or spec file")->required();
    auto* ndeg = normalize->add_option("--degree", degree, "Truncation degree (default 4)");
    add_output(normalize, format, out_path);

    auto* oracle = app.add_subcommand("oracle-check", "Compare the x-space determinant with the z-space oracle");
    oracle->add_option("--spec", spec_path, "Numeric spec file, n <= 3")->required();
    add_output(oracle, format, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        const Output output = make_output(format, out_path);
        const std::optional<std::string> lam = lambda.empty() ? std::nullopt : std::optional<std::string>(lambda);
        if (verify->parsed()) {
            const std::optional<unsigned> d = vdeg->count() ? std::optional<unsigned>(degree) : std::nullopt;
            return cmd_verify({spec_path, lam, d, output}, std::cout, std::cerr);
        }
        if (constraints->parsed()) {
            const std::optional<unsigned> d = cdeg->count() ? std::optional<unsigned>(degree) : std::nullopt;
            return cmd_constraints({spec_path, lam, d, output}, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            SweepArgs args;
            const auto [lo, hi] = parse_dims(dims);
            args.options.dim_lo = lo;
            args.options.dim_hi = hi;
            args.options.k_max = max_codim;
            args.options.deg_cap = deg_cap != 0 ? deg_cap : static_cast<unsigned>(std::max<std::size_t>(max_codim, 2));
            args.options.degree = sdeg->count() ? degree : 0;
            args.options.jobs = jobs;
            args.options.shortcut = !no_shortcut;
            args.output = output;
            return cmd_sweep(args, std::cout, std::cerr);
        }
        if (induced->parsed())
            return cmd_induced({spec_path, ideg->count() ? degree : 6u, output}, std::cout, std::cerr);
        if (normalize->parsed())
            return cmd_normalize({spec_path, ndeg->count() ? degree : 4u, output}, std::cout, std::cerr);
        if (oracle->parsed())
            return cmd_oracle_check({spec_path, output}, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
