#include "kemetric_cli/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kemetric/errors.hpp"

namespace kemetric::cli
{

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace
{

class Reader
{
public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& pointer, const std::string& why) const
    {
        throw ParseError(origin_ + ": " + (pointer.empty() ? "/" : pointer) + ": " + why);
    }

    json parse(std::string_view text) const
    {
        try {
            return json::parse(text.begin(), text.end());
        } catch (const json::parse_error& e) {
            std::size_t line = 1;
            std::size_t col = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
                if (text[i] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            std::string what = e.what();
            const auto cut = what.find("syntax error");
            throw ParseError(origin_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                             (cut == std::string::npos ? what : what.substr(cut)));
        }
    }

    const json& field(const json& obj, const std::string& pointer, const char* key) const
    {
        if (!obj.is_object())
            fail(pointer, "expected an object");
        const auto it = obj.find(key);
        if (it == obj.end())
            fail(pointer + "/" + key, "missing field");
        return *it;
    }

    std::size_t dimension(const json& root) const
    {
        const json& n = field(root, "", "n");
        if (!n.is_number_unsigned() || n.get<std::size_t>() == 0)
            fail("/n", "expected a positive integer");
        return n.get<std::size_t>();
    }

    Rational rational(const json& v, const std::string& pointer) const
    {
        if (!v.is_string())
            fail(pointer, "expected a rational string \"p\" or \"p/q\"");
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            fail(pointer, e.what());
        }
    }

    MultiIndex exponents(const json& v, const std::string& pointer, std::size_t n) const
    {
        if (!v.is_array())
            fail(pointer, "expected an array of nonnegative integers");
        if (v.size() != n)
            fail(pointer, "expected " + std::to_string(n) + " exponents, got " + std::to_string(v.size()));
        std::vector<unsigned> e;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number_unsigned() || v[i].get<std::uint64_t>() > 1000)
                fail(pointer + "/" + std::to_string(i), "expected an exponent in 0..1000");
            e.push_back(v[i].get<unsigned>());
        }
        return MultiIndex(std::span<const unsigned>(e));
    }

private:
    std::string origin_;
};

} // namespace

SpecFile parse_spec(std::string_view text, const std::string& origin)
{
    const Reader r(origin);
    const json root = r.parse(text);
    const std::size_t n = r.dimension(root);
    const json& monos = r.field(root, "", "monomials");
    if (!monos.is_array())
        r.fail("/monomials", "expected an array");

    std::vector<SupportTerm> support;
    SymbolTable symbols;
    std::set<MultiIndex> seen;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        const std::string at = "/monomials/" + std::to_string(i);
        const MultiIndex m = r.exponents(r.field(monos[i], at, "exponents"), at + "/exponents", n);
        if (m.degree() < 2)
            r.fail(at + "/exponents", "support monomials need total degree >= 2");
        if (!seen.insert(m).second)
            r.fail(at + "/exponents", "duplicate monomial " + m.to_string());
        const json& coef = r.field(monos[i], at, "coef");
        if (coef.is_object()) {
            const json& sym = r.field(coef, at + "/coef", "sym");
            if (!sym.is_string() || sym.get<std::string>().empty())
                r.fail(at + "/coef/sym", "expected a non-empty name");
            const std::string name = sym.get<std::string>();
            if (name == "lambda" || symbols.lookup(name))
                r.fail(at + "/coef/sym", "name \"" + name + "\" is reserved or already used");
            const Unknown u = Unknown::support_coefficient(m, name);
            symbols.add(u);
            support.push_back({m, CoefPoly::variable(u.id)});
        } else {
            const Rational c = r.rational(coef, at + "/coef");
            if (c.is_zero())
                r.fail(at + "/coef", "coefficient must be nonzero");
            support.push_back({m, CoefPoly(c)});
        }
    }

    SpecFile out{PotentialSpec(n, std::move(support), std::move(symbols)), std::nullopt};
    if (const auto it = root.find("lambda"); it != root.end())
        out.lambda = r.rational(*it, "/lambda");
    return out;
}

std::string emit_spec(const SpecFile& file)
{
    ordered_json root;
    root["n"] = file.spec.dimension();
    ordered_json monos = ordered_json::array();
    for (const auto& t : file.spec.support()) {
        ordered_json m;
        m["exponents"] = t.exponents.exponents();
        if (const auto c = t.coefficient.as_constant()) {
            m["coef"] = c->to_string();
        } else {
            const auto ids = t.coefficient.unknowns();
            if (ids.size() != 1 || t.coefficient != CoefPoly::variable(ids.front()))
                throw UsageError("only numbers and plain unknowns can be written to a spec file");
            m["coef"] = ordered_json{{"sym", file.spec.symbols().name(ids.front())}};
        }
        monos.push_back(std::move(m));
    }
    root["monomials"] = std::move(monos);
    if (file.lambda)
        root["lambda"] = file.lambda->to_string();
    return root.dump(2) + "\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw ParseError(path + ": read failed");
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ParseError(path + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out)
        throw ParseError(path + ": write failed");
}

PotentialFile parse_potential(std::string_view text, unsigned truncation, const std::string& origin)
{
    const Reader r(origin);
    const json root = r.parse(text);
    const auto pot = root.is_object() ? root.find("potential") : root.end();
    if (pot == root.end()) {
        const SpecFile spec = parse_spec(text, origin);
        if (!spec.spec.is_numeric())
            r.fail("/monomials", "potential must be numeric");
        const Series p = build_potential(spec.spec, std::max(truncation, spec.spec.degree())).with_truncation(truncation);
        return {log1p(p - Series::constant(spec.spec.dimension(), truncation, CoefPoly(1))), "log P"};
    }

    const std::size_t n = r.dimension(root);
    const json& body = *pot;
    if (!body.is_object())
        r.fail("/potential", "expected an object");

    auto collect = [&](const char* key) {
        const json& list = r.field(body, "/potential", key);
        if (!list.is_array())
            r.fail(std::string("/potential/") + key, "expected an array");
        Series s(n, truncation);
        std::set<MultiIndex> seen;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string at = std::string("/potential/") + key + "/" + std::to_string(i);
            const MultiIndex m = r.exponents(r.field(list[i], at, "exponents"), at + "/exponents", n);
            if (!seen.insert(m).second)
                r.fail(at + "/exponents", "duplicate monomial " + m.to_string());
            if (m.is_zero())
                r.fail(at + "/exponents", "constant term must be omitted");
            s.add_term(m, CoefPoly(r.rational(r.field(list[i], at, "coef"), at + "/coef")));
        }
        return s;
    };

    if (body.contains("terms")) {
        if (body.contains("monomials") || body.contains("log_scale"))
            r.fail("/potential", "give either \"terms\" or \"log_scale\" with \"monomials\"");
        return {collect("terms"), "explicit series"};
    }
    const Rational scale = r.rational(r.field(body, "/potential", "log_scale"), "/potential/log_scale");
    const Series inner = collect("monomials");
    return {log1p(inner) * CoefPoly(scale), scale.to_string() + " * log(1 + u)"};
}

} // namespace kemetric::cli
