#include "kemetric_cli/commands.hpp"

#include <ostream>

#include "kemetric/errors.hpp"
#include "kemetric/metric.hpp"
#include "kemetric/oracle.hpp"
#include "kemetric_cli/spec_file.hpp"

namespace kemetric::cli
{

namespace
{

template <class F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SpecError& e) {
        err << "error: invalid spec: " << e.what() << "\n";
        return kExitInput;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EngineError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

void emit(const Output& o, const std::string& text, std::ostream& out)
{
    if (o.path)
        write_file(*o.path, text);
    else
        out << text;
}

SpecFile load(const std::string& path)
{
    return parse_spec(read_file(path), path);
}

} // namespace

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text)
{
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
            throw UsageError("invalid dimension range \"" + text + "\" (expected A..B)");
        return static_cast<std::size_t>(std::stoul(s));
    };
    const auto dots = text.find("..");
    const std::size_t lo = number(text.substr(0, dots));
    const std::size_t hi = dots == std::string::npos ? lo : number(text.substr(dots + 2));
    if (lo < 1 || lo > hi)
        throw UsageError("invalid dimension range \"" + text + "\"");
    return {lo, hi};
}

Format parse_format(const std::string& text)
{
    if (text == "json")
        return Format::Json;
    if (text == "text")
        return Format::Text;
    throw UsageError("unknown format \"" + text + "\" (expected json or text)");
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const SpecFile file = load(args.spec);
        std::optional<Rational> lambda = file.lambda;
        if (args.lambda)
            lambda = Rational::parse(*args.lambda);
        if (!lambda)
            throw UsageError("no Einstein constant: pass --lambda or set \"lambda\" in the spec file");

        VerifyResult r{file.spec, *lambda, true, 0, false, std::nullopt, Series(1, 0)};
        if (!args.degree) {
            if (!file.spec.is_numeric())
                throw UsageError("exact verification needs numeric coefficients");
            r.certificate = certify_exact({file.spec, *lambda});
            r.pass = r.certificate->pass;
        } else {
            r.exact = false;
            r.degree = *args.degree;
            const Series p = build_potential(file.spec, file.spec.degree());
            r.residual = ma_log_residual(p, CoefPoly(*lambda), *args.degree);
            r.pass = r.residual.is_zero();
        }
        emit(args.output, render(r, args.output.format), out);
        return r.pass ? kExitPass : kExitFail;
    });
}

int cmd_constraints(const ConstraintsArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const SpecFile file = load(args.spec);
        if (file.spec.is_numeric())
            throw UsageError("the spec has no symbolic coefficients to constrain");
        const unsigned degree = args.degree.value_or(file.spec.degree() + 1);
        std::optional<Rational> lambda = file.lambda;
        if (args.lambda)
            lambda = Rational::parse(*args.lambda);
        const ConstraintSystem sys = lambda ? extract_constraints(file.spec, degree, CoefPoly(*lambda))
                                            : extract_constraints(file.spec, degree);
        emit(args.output, render(sys, args.output.format), out);
        return kExitPass;
    });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const ClassificationReport report = sweep(args.options);
        emit(args.output, render(report, args.output.format), out);
        if (args.output.path)
            out << sweep_summary(report);
        if (report.count(SolveStatus::Unresolved) > 0)
            err << "warning: " << report.count(SolveStatus::Unresolved) << " supports are UNRESOLVED\n";
        const bool clean = report.count(SolveStatus::Unresolved) == 0 && report.unknown_count() == 0;
        return clean ? kExitPass : kExitFail;
    });
}

int cmd_induced(const InducedArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const PotentialFile pot = parse_potential(read_file(args.potential), args.degree, args.potential);
        const InducedResult r{pot.description, projective_induction_check(pot.phi, args.degree)};
        emit(args.output, render(r, args.output.format), out);
        return r.report.verdict == InductionVerdict::InducedUpToDegree ? kExitPass : kExitFail;
    });
}

int cmd_normalize(const NormalizeArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const PotentialFile pot = parse_potential(read_file(args.potential), args.degree, args.potential);
        const NormalizedPotential norm = bochner_normalize(pot.phi);
        const NormalizeResult r{pot.description, args.degree, norm.scaling, norm.series};
        emit(args.output, render(r, args.output.format), out);
        return kExitPass;
    });
}

int cmd_oracle_check(const OracleArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const SpecFile file = load(args.spec);
        const auto zspace = oracle::rotation_project_lossless(oracle::zspace_det_numerator(file.spec));
        const Series xspace = metric_numerator_det(build_potential(file.spec, file.spec.degree()));

        OracleResult r{file.spec, false, 0, std::nullopt, Rational(), Rational()};
        std::map<MultiIndex, Rational> xs;
        for (const auto& [m, c] : xspace.terms())
            xs.emplace(m, c.constant());
        r.terms = xs.size();
        r.equal = xs == zspace;
        if (!r.equal) {
            std::set<MultiIndex> keys;
            for (const auto& [m, c] : xs)
                keys.insert(m);
            for (const auto& [m, c] : zspace)
                keys.insert(m);
            for (const auto& m : keys) {
                const Rational a = xs.count(m) ? xs.at(m) : Rational();
                const Rational b = zspace.count(m) ? zspace.at(m) : Rational();
                if (a != b) {
                    r.witness = m;
                    r.xspace = a;
                    r.zspace = b;
                    break;
                }
            }
        }
        emit(args.output, render(r, args.output.format), out);
        return r.equal ? kExitPass : kExitFail;
    });
}

} // namespace kemetric::cli
