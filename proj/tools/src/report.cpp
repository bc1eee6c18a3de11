#include "kemetric_cli/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace kemetric::cli
{

using ordered_json = nlohmann::ordered_json;

namespace
{

std::string dump(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

ordered_json header(const char* command)
{
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    return j;
}

std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

ordered_json spec_json(const PotentialSpec& spec)
{
    ordered_json j;
    j["n"] = spec.dimension();
    ordered_json monos = ordered_json::array();
    for (const auto& t : spec.support()) {
        ordered_json m;
        m["exponents"] = t.exponents.exponents();
        if (const auto c = t.coefficient.as_constant())
            m["coef"] = c->to_string();
        else
            m["coef"] = ordered_json{{"expr", t.coefficient.to_string(spec.symbols())}};
        monos.push_back(std::move(m));
    }
    j["monomials"] = std::move(monos);
    return j;
}

std::string support_to_string(const Support& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? ", " : "") + s[i].to_string();
    return out + "}";
}

std::string identity(const Certificate& c)
{
    return "det(M)^" + c.half_lambda_den.get_str() + " = P^" + std::to_string(c.potential_exponent);
}

ordered_json certificate_json(const Certificate& c)
{
    ordered_json j;
    j["result"] = c.pass ? "PASS" : "FAIL";
    j["identity"] = identity(c);
    j["degree"] = c.degree;
    j["lhs_hash"] = c.lhs_hash;
    j["rhs_hash"] = c.rhs_hash;
    if (c.witness) {
        j["witness"] = ordered_json{{"monomial", c.witness->to_string()},
                                    {"lhs", c.lhs_coefficient.to_string()},
                                    {"rhs", c.rhs_coefficient.to_string()}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

ordered_json series_terms(const Series& s)
{
    ordered_json arr = ordered_json::array();
    for (const auto& [m, c] : s.terms())
        arr.push_back(ordered_json{{"monomial", m.to_string()}, {"coef", c.to_string()}});
    return arr;
}

const char* status_label(const SpecOutcome& e)
{
    return e.shortcut ? "SKIPPED" : to_string(e.status);
}

} // namespace

std::string potential_to_string(const PotentialSpec& spec)
{
    std::string out = "1";
    for (std::size_t a = 0; a < spec.dimension(); ++a)
        out += " + x" + std::to_string(a + 1);
    for (const auto& t : spec.support()) {
        if (const auto c = t.coefficient.as_constant()) {
            const bool neg = c->sign() < 0;
            const Rational mag = c->abs();
            out += neg ? " - " : " + ";
            out += (mag == Rational(1) ? "" : mag.to_string() + "*") + t.exponents.to_string();
        } else {
            out += " + (" + t.coefficient.to_string(spec.symbols()) + ")*" + t.exponents.to_string();
        }
    }
    return out;
}

std::string render(const VerifyResult& r, Format f)
{
    if (f == Format::Json) {
        ordered_json j = header("verify");
        j["spec"] = spec_json(r.spec);
        j["potential"] = potential_to_string(r.spec);
        j["lambda"] = r.lambda.to_string();
        j["lambda_lower_bound"] = degree_bound_lambda(r.spec).to_string();
        j["mode"] = r.exact ? "exact" : "degree";
        if (r.exact) {
            j["result"] = r.pass ? "PASS" : "FAIL";
            j["certificate"] = certificate_json(*r.certificate);
        } else {
            j["degree"] = r.degree;
            j["result"] = r.pass ? "PASS" : "FAIL";
            j["residual"] = series_terms(r.residual);
        }
        return dump(j);
    }
    std::ostringstream os;
    os << pad("potential", 12) << "P = " << potential_to_string(r.spec) << "\n";
    os << pad("lambda", 12) << r.lambda.to_string() << "\n";
    os << pad("bound", 12) << "lambda >= " << degree_bound_lambda(r.spec).to_string() << "\n";
    if (r.exact) {
        const Certificate& c = *r.certificate;
        os << pad("mode", 12) << "exact\n";
        os << pad("identity", 12) << identity(c) << " (degree " << c.degree << ")\n";
        os << pad("hashes", 12) << c.lhs_hash << " " << c.rhs_hash << "\n";
        if (c.witness)
            os << pad("witness", 12) << "[" << c.witness->to_string() << "] " << c.lhs_coefficient.to_string()
               << " != " << c.rhs_coefficient.to_string() << "\n";
    } else {
        os << pad("mode", 12) << "degree " << r.degree << "\n";
        std::size_t shown = 0;
        for (const auto& [m, c] : r.residual.terms()) {
            if (shown++ == 10) {
                os << pad("residual", 12) << "... (" << r.residual.terms().size() << " nonzero terms)\n";
                break;
            }
            os << pad("residual", 12) << "[" << m.to_string() << "] " << c.to_string() << "\n";
        }
    }
    os << pad("result", 12) << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render(const ConstraintSystem& sys, Format f)
{
    if (f == Format::Json) {
        ordered_json j = header("constraints");
        j["n"] = sys.dimension;
        j["degree"] = sys.degree;
        ordered_json unknowns = ordered_json::array();
        for (const auto& u : sys.unknowns)
            unknowns.push_back(u.name);
        j["unknowns"] = std::move(unknowns);
        ordered_json positive = ordered_json::array();
        for (UnknownId id : sys.positive)
            positive.push_back(sys.symbols.name(id));
        j["positive"] = std::move(positive);
        ordered_json eqs = ordered_json::array();
        for (const auto& e : sys.equations)
            eqs.push_back(ordered_json{{"monomial", e.monomial.to_string()}, {"lhs", e.lhs.to_string(sys.symbols)}});
        j["equations"] = std::move(eqs);
        return dump(j);
    }
    std::ostringstream os;
    os << "# n=" << sys.dimension << " degree=" << sys.degree << " equations=" << sys.equations.size() << "\n";
    std::size_t width = 0;
    for (const auto& e : sys.equations)
        width = std::max(width, e.monomial.to_string().size() + 2);
    for (const auto& e : sys.equations)
        os << pad("[" + e.monomial.to_string() + "]", width) << e.lhs.to_string(sys.symbols) << " = 0\n";
    return os.str();
}

std::string sweep_summary(const ClassificationReport& r)
{
    std::ostringstream os;
    os << "SOLVED " << r.count(SolveStatus::Solved) << ", INFEASIBLE " << r.count(SolveStatus::Infeasible)
       << ", UNRESOLVED " << r.count(SolveStatus::Unresolved) << ", SKIPPED " << r.shortcut_count() << " (n > 2k)\n";
    os << r.summary() << "\n";
    return os.str();
}

std::string render(const ClassificationReport& r, Format f)
{
    const SweepOptions& o = r.options;
    const std::string scope = "supports of at most " + std::to_string(o.k_max) + " monomials with 2 <= |m| <= " +
                              std::to_string(o.deg_cap) + "; nothing is claimed beyond this cap";
    if (f == Format::Json) {
        ordered_json j = header("sweep");
        j["options"] = ordered_json{{"dims", std::to_string(o.dim_lo) + ".." + std::to_string(o.dim_hi)},
                                    {"max_codim", o.k_max},
                                    {"deg_cap", o.deg_cap},
                                    {"degree", r.degree},
                                    {"shortcut", o.shortcut}};
        j["scope"] = scope;
        ordered_json entries = ordered_json::array();
        for (const auto& e : r.entries) {
            ordered_json je;
            je["n"] = e.n;
            je["k"] = e.k;
            je["status"] = status_label(e);
            if (e.shortcut) {
                je["reason"] = "n > 2k: no support of this size admits a solution, only the unit model remains";
                entries.push_back(std::move(je));
                continue;
            }
            ordered_json support = ordered_json::array();
            for (const auto& m : e.support)
                support.push_back(m.to_string());
            je["support"] = std::move(support);
            ordered_json sols = ordered_json::array();
            for (const auto& s : e.solutions) {
                ordered_json js;
                js["potential"] = potential_to_string(s.spec);
                js["spec"] = spec_json(s.spec);
                js["lambda"] = s.lambda.to_string();
                js["model"] = s.tag.to_string();
                if (!s.tag.detail().empty())
                    js["blocks"] = s.tag.detail();
                js["lambda_lower_bound"] = s.degree_bound.to_string();
                js["closed_loop"] = s.closed_loop;
                js["certificate"] = certificate_json(s.certificate);
                sols.push_back(std::move(js));
            }
            je["solutions"] = std::move(sols);
            ordered_json inf = ordered_json::array();
            for (const auto& b : e.infeasible)
                inf.push_back(ordered_json{{"branch", b.branch}, {"witness", b.equation}, {"reason", b.reason}});
            je["infeasible"] = std::move(inf);
            ordered_json unr = ordered_json::array();
            for (const auto& u : e.unresolved)
                unr.push_back(ordered_json{
                    {"branch", u.branch}, {"remnant", u.remnant}, {"free", u.free}, {"note", u.note}});
            je["unresolved"] = std::move(unr);
            entries.push_back(std::move(je));
        }
        j["entries"] = std::move(entries);
        ordered_json models = ordered_json::array();
        for (const auto& m : r.model_spaces())
            models.push_back(m);
        j["summary"] = ordered_json{{"solved", r.count(SolveStatus::Solved)},
                                    {"infeasible", r.count(SolveStatus::Infeasible)},
                                    {"unresolved", r.count(SolveStatus::Unresolved)},
                                    {"skipped", r.shortcut_count()},
                                    {"unknown", r.unknown_count()},
                                    {"model_spaces", std::move(models)},
                                    {"line", r.summary()}};
        return dump(j);
    }

    std::ostringstream os;
    os << "# sweep dims " << o.dim_lo << ".." << o.dim_hi << ", max codim " << o.k_max << ", deg cap " << o.deg_cap
       << ", degree " << r.degree << "\n";
    os << "# scope: " << scope << "\n";
    os << pad("n", 3) << pad("k", 3) << pad("status", 11) << pad("support", 36) << pad("lambda", 8)
       << pad("model", 16) << "certificate / witness\n";
    for (const auto& e : r.entries) {
        const std::string lead = pad(std::to_string(e.n), 3) + pad(std::to_string(e.k), 3) + pad(status_label(e), 11);
        if (e.shortcut) {
            os << lead << pad("-", 36) << pad("-", 8) << pad("-", 16) << "n > 2k\n";
            continue;
        }
        const std::string support = support_to_string(e.support);
        for (const auto& s : e.solutions)
            os << lead << pad(support, 36) << pad(s.lambda.to_string(), 8) << pad(s.tag.to_string(), 16)
               << (s.certificate.pass ? "PASS " : "FAIL ") << identity(s.certificate) << "\n";
        for (const auto& u : e.unresolved)
            os << lead << pad(support, 36) << pad("-", 8) << pad("-", 16) << u.note << " [" << u.branch << "]\n";
        if (e.solutions.empty() && e.unresolved.empty()) {
            const std::string w = e.infeasible.empty() ? "-" : e.infeasible.front().equation;
            os << lead << pad(support, 36) << pad("-", 8) << pad("-", 16) << w << "\n";
        }
    }
    os << sweep_summary(r);
    return os.str();
}

std::string render(const InducedResult& r, Format f)
{
    const InductionReport& rep = r.report;
    if (f == Format::Json) {
        ordered_json j = header("induced");
        j["source"] = r.source;
        j["degree"] = rep.degree;
        j["verdict"] = to_string(rep.verdict);
        j["codimension"] = rep.codimension;
        j["witness"] = rep.witness ? ordered_json(rep.witness->to_string()) : ordered_json(nullptr);
        ordered_json coeffs = ordered_json::array();
        for (const auto& [m, c] : rep.coefficients)
            coeffs.push_back(ordered_json{{"monomial", m.to_string()}, {"coef", c.to_string()},
                                          {"sign", c.sign() > 0 ? "+" : "-"}});
        j["coefficients"] = std::move(coeffs);
        return dump(j);
    }
    std::ostringstream os;
    os << pad("source", 12) << r.source << "\n";
    os << pad("degree", 12) << rep.degree << "\n";
    for (const auto& [m, c] : rep.coefficients)
        os << pad("coef", 12) << pad("[" + m.to_string() + "]", 16) << (c.sign() > 0 ? "+ " : "- ") << c.abs().to_string()
           << "\n";
    os << pad("codimension", 12) << rep.codimension << "\n";
    if (rep.witness)
        os << pad("witness", 12) << rep.witness->to_string() << "\n";
    os << pad("verdict", 12) << to_string(rep.verdict) << "\n";
    return os.str();
}

std::string render(const NormalizeResult& r, Format f)
{
    if (f == Format::Json) {
        ordered_json j = header("normalize");
        j["source"] = r.source;
        j["degree"] = r.degree;
        ordered_json scaling = ordered_json::array();
        for (const auto& s : r.scaling)
            scaling.push_back(s.to_string());
        j["scaling"] = std::move(scaling);
        j["terms"] = series_terms(r.normalized);
        return dump(j);
    }
    std::ostringstream os;
    os << pad("source", 12) << r.source << "\n";
    for (std::size_t a = 0; a < r.scaling.size(); ++a)
        os << pad("scale", 12) << "x" << a + 1 << " -> " << r.scaling[a].to_string() << "*x" << a + 1 << "\n";
    for (const auto& [m, c] : r.normalized.terms())
        os << pad("term", 12) << pad("[" + m.to_string() + "]", 16) << c.to_string() << "\n";
    return os.str();
}

std::string render(const OracleResult& r, Format f)
{
    if (f == Format::Json) {
        ordered_json j = header("oracle-check");
        j["spec"] = spec_json(r.spec);
        j["potential"] = potential_to_string(r.spec);
        j["result"] = r.equal ? "EQUAL" : "DIFFERENT";
        j["terms"] = r.terms;
        if (r.witness)
            j["witness"] = ordered_json{
                {"monomial", r.witness->to_string()}, {"xspace", r.xspace.to_string()}, {"zspace", r.zspace.to_string()}};
        else
            j["witness"] = nullptr;
        return dump(j);
    }
    std::ostringstream os;
    os << pad("potential", 12) << "P = " << potential_to_string(r.spec) << "\n";
    os << pad("terms", 12) << r.terms << "\n";
    if (r.witness)
        os << pad("witness", 12) << "[" << r.witness->to_string() << "] x-space " << r.xspace.to_string()
           << ", z-space " << r.zspace.to_string() << "\n";
    os << pad("result", 12) << (r.equal ? "EQUAL" : "DIFFERENT") << "\n";
    return os.str();
}

} // namespace kemetric::cli
