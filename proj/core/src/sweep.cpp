#include "kemetric/sweep.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "kemetric/constraints.hpp"
#include "kemetric/errors.hpp"
#include "kemetric/metric.hpp"

namespace kemetric
{

namespace
{

std::string render_branch(const SolverState& st, const SymbolTable& names)
{
    std::string out;
    for (const auto& [id, expr] : st.substitution) {
        if (!out.empty())
            out += ", ";
        out += names.name(id) + " = " + expr.to_string(names);
    }
    for (const auto& c : st.carried) {
        if (!out.empty())
            out += ", ";
        out += c.to_string(names) + " = 0";
    }
    return out;
}

struct Driver
{
    const PotentialSpec& spec;
    unsigned max_degree;
    SymbolTable names;
    SpecOutcome out;

    void reject(const SolverState& st, std::string equation, std::string reason)
    {
        out.infeasible.push_back({render_branch(st, names), std::move(equation), std::move(reason)});
    }

    void finalize(const SolverState& st)
    {
        std::map<UnknownId, CoefPoly> values;
        std::optional<Rational> lambda;
        for (const auto& [id, expr] : st.substitution) {
            const auto v = expr.as_constant();
            if (!v)
                throw EngineError("solved branch with a non-constant value");
            if (id == kEinsteinConstant)
                lambda = *v;
            else
                values.emplace(id, *v);
        }
        if (!lambda)
            throw EngineError("solved branch without an Einstein constant");
        const PotentialSpec numeric = spec.substitute(values);
        numeric.require_induced();
        const long n = static_cast<long>(numeric.dimension());
        const std::string lambda_eq = "lambda - " + lambda->to_string() + " = 0";
        if (lambda->sign() <= 0) {
            reject(st, lambda_eq, "Einstein constant must be positive");
            return;
        }
        if (*lambda > Rational(2 * (n + 1))) {
            reject(st, lambda_eq, "Einstein constant exceeds 2(n+1)");
            return;
        }
        Candidate c{numeric, *lambda, {}, {}, false, degree_bound_lambda(numeric)};
        try {
            c.certificate = certify_exact({numeric, *lambda});
        } catch (const DomainError& e) {
            out.unresolved.push_back({render_branch(st, names), {}, {}, std::string("certificate: ") + e.what()});
            return;
        }
        if (!c.certificate.pass) {
            reject(st, "[" + c.certificate.witness->to_string() + "] " + c.certificate.lhs_coefficient.to_string() +
                           " - " + c.certificate.rhs_coefficient.to_string() + " = 0",
                   "exact Monge-Ampere identity fails");
            return;
        }
        const Series p = build_potential(numeric, numeric.degree());
        c.closed_loop = ma_log_residual(p, CoefPoly(*lambda), max_degree + 2).is_zero();
        if (!c.closed_loop)
            throw EngineError("certified candidate fails the truncated residual check");
        c.tag = classify(numeric, *lambda);
        out.solutions.push_back(std::move(c));
    }

    void run()
    {
        std::vector<SolverState> open{SolverState{}};
        for (unsigned d = 1; d <= max_degree && !open.empty(); ++d) {
            std::vector<SolverState> next;
            for (const auto& st : open) {
                const auto it = st.substitution.find(kEinsteinConstant);
                const CoefPoly lambda =
                    it != st.substitution.end() ? it->second : CoefPoly::variable(kEinsteinConstant);
                const ConstraintSystem sys = extract_constraints(spec.substitute(st.substitution), d, lambda);
                for (auto& b : explore(sys, st)) {
                    switch (b.status) {
                    case SolveStatus::Solved:
                        finalize(b.state);
                        break;
                    case SolveStatus::Infeasible:
                        reject(b.state, b.witness->equation.to_string(names) + " = 0", b.witness->reason);
                        break;
                    case SolveStatus::Unresolved:
                        if (d < max_degree) {
                            next.push_back(std::move(b.state));
                        } else {
                            UnresolvedBranch u{render_branch(b.state, names), {}, {}, b.note};
                            for (const auto& r : b.remnant)
                                u.remnant.push_back(r.to_string(names) + " = 0");
                            for (UnknownId id : b.free)
                                u.free.push_back(names.name(id));
                            out.unresolved.push_back(std::move(u));
                        }
                        break;
                    }
                }
            }
            open = std::move(next);
        }
        if (!out.unresolved.empty())
            out.status = SolveStatus::Unresolved;
        else if (!out.solutions.empty())
            out.status = SolveStatus::Solved;
        else
            out.status = SolveStatus::Infeasible;
    }
};

} // namespace

SpecOutcome solve_spec(const PotentialSpec& symbolic, unsigned max_degree)
{
    if (max_degree < 1)
        throw UsageError("solve degree must be at least 1");
    Driver drv{symbolic, max_degree, symbolic.symbols(), {}};
    if (!drv.names.contains(kEinsteinConstant))
        drv.names.add(Unknown::einstein_constant());
    drv.out.n = symbolic.dimension();
    drv.out.k = symbolic.codimension();
    drv.out.support = symbolic.monomials();
    drv.run();
    return std::move(drv.out);
}

unsigned effective_degree(const SweepOptions& options)
{
    return options.degree != 0 ? options.degree : options.deg_cap + 2;
}

std::size_t ClassificationReport::count(SolveStatus s) const
{
    std::size_t c = 0;
    for (const auto& e : entries)
        c += (!e.shortcut && e.status == s) ? 1 : 0;
    return c;
}

std::size_t ClassificationReport::shortcut_count() const
{
    std::size_t c = 0;
    for (const auto& e : entries)
        c += e.shortcut ? 1 : 0;
    return c;
}

std::size_t ClassificationReport::unknown_count() const
{
    std::size_t c = 0;
    for (const auto& e : entries)
        for (const auto& s : e.solutions)
            c += s.tag.kind == ModelKind::Unknown ? 1 : 0;
    return c;
}

std::set<std::string> ClassificationReport::model_spaces() const
{
    std::set<std::string> out;
    for (const auto& e : entries)
        for (const auto& s : e.solutions)
            if (s.tag.kind != ModelKind::Unknown)
                out.insert(s.tag.to_string());
    return out;
}

std::string ClassificationReport::summary() const
{
    return std::to_string(model_spaces().size()) + " distinct model spaces, " + std::to_string(unknown_count()) +
           " UNKNOWN, " + std::to_string(count(SolveStatus::Unresolved)) + " UNRESOLVED";
}

ClassificationReport sweep(const SweepOptions& options)
{
    if (options.dim_lo < 1 || options.dim_lo > options.dim_hi)
        throw UsageError("invalid dimension range");
    if (options.dim_hi > 8)
        throw UsageError("dimensions above 8 are not supported");
    if (options.deg_cap < 2)
        throw UsageError("degree cap must be at least 2");

    ClassificationReport report;
    report.options = options;
    report.degree = effective_degree(options);

    // Tasks in canonical order; shortcut entries are complete already.
    std::vector<SpecOutcome> results;
    std::vector<std::optional<PotentialSpec>> tasks;
    for (std::size_t n = options.dim_lo; n <= options.dim_hi; ++n) {
        for (std::size_t k = 0; k <= options.k_max; ++k) {
            if (options.shortcut && k >= 1 && n > 2 * k) {
                SpecOutcome s;
                s.n = n;
                s.k = k;
                s.shortcut = true;
                results.push_back(std::move(s));
                tasks.emplace_back();
                continue;
            }
            for (const auto& support : enumerate_supports_of_size(n, k, options.deg_cap)) {
                results.emplace_back();
                tasks.emplace_back(symbolic_spec(n, support));
            }
        }
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            if (!tasks[i])
                continue;
            try {
                results[i] = solve_spec(*tasks[i], report.degree);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    report.entries = std::move(results);
    return report;
}

} // namespace kemetric
