#include "kemetric/classify.hpp"

#include <algorithm>
#include <numeric>

#include "kemetric/errors.hpp"

namespace kemetric
{

std::string ModelTag::to_string() const
{
    switch (kind) {
    case ModelKind::CPnUnit:
        return "CPn_unit";
    case ModelKind::CPnScaled:
        return "CPn_scaled(" + std::to_string(q) + ")";
    case ModelKind::ProductOfLines:
        return "ProductOfLines";
    case ModelKind::Unknown:
        return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::string ModelTag::detail() const
{
    if (kind != ModelKind::ProductOfLines)
        return {};
    std::string out;
    for (const auto& b : blocks) {
        std::string inner = "1";
        for (std::size_t v : b.variables)
            inner += "+x" + std::to_string(v + 1) + (b.q > 1 ? "/" + std::to_string(b.q) : "");
        out += "(" + inner + ")";
        if (b.q > 1)
            out += "^" + std::to_string(b.q);
    }
    return out;
}

namespace
{

// (1 + sum_{v in vars} x_v / q)^q as an exact polynomial.
Series scaled_model(std::size_t n, const std::vector<std::size_t>& vars, unsigned q)
{
    const unsigned d = std::max(q, 1u);
    Series base = Series::constant(n, d, CoefPoly(1));
    const Rational inv(1L, static_cast<long>(q));
    for (std::size_t v : vars)
        base += Series::variable(n, d, v) * CoefPoly(inv);
    return pow(base, q);
}

// P with every variable outside `block` set to zero.
Series restrict_to(const Series& p, const std::vector<std::size_t>& block)
{
    Series out(p.dimension(), p.truncation());
    for (const auto& [m, c] : p.terms()) {
        bool inside = true;
        for (std::size_t v = 0; v < m.size() && inside; ++v)
            inside = m[v] == 0 || std::find(block.begin(), block.end(), v) != block.end();
        if (inside)
            out.add_term(m, c);
    }
    return out;
}

// Set partitions of {0..n-1} into at least two blocks, via restricted
// growth strings in lexicographic order.
std::vector<std::vector<std::vector<std::size_t>>> proper_partitions(std::size_t n)
{
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::size_t> a(n, 0);
    for (;;) {
        const std::size_t blocks = n == 0 ? 0 : *std::max_element(a.begin(), a.end()) + 1;
        if (blocks >= 2) {
            std::vector<std::vector<std::size_t>> part(blocks);
            for (std::size_t v = 0; v < n; ++v)
                part[a[v]].push_back(v);
            out.push_back(std::move(part));
        }
        // next restricted growth string
        std::size_t i = n;
        while (i-- > 1) {
            const std::size_t bound = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i)) + 1;
            if (a[i] < bound) {
                ++a[i];
                std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
                break;
            }
        }
        if (i == 0 || n <= 1)
            break;
    }
    return out;
}

} // namespace

ModelTag match_model(const PotentialSpec& spec)
{
    spec.require_induced();
    const std::size_t n = spec.dimension();
    const unsigned d = spec.degree();
    const Series p = build_potential(spec, d);

    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);

    ModelTag tag;
    if (spec.support().empty()) {
        tag.kind = ModelKind::CPnUnit;
        return tag;
    }
    if (p == scaled_model(n, all, d)) {
        tag.kind = ModelKind::CPnScaled;
        tag.q = d;
        return tag;
    }

    for (const auto& part : proper_partitions(n)) {
        Series product = Series::constant(n, d, CoefPoly(1));
        std::vector<ModelBlock> found;
        bool ok = true;
        for (const auto& b : part) {
            const Series pb = restrict_to(p, b);
            const unsigned q = std::max(1u, pb.max_degree());
            if (pb != scaled_model(n, b, q).with_truncation(d)) {
                ok = false;
                break;
            }
            product = product * pb;
            found.push_back({b, q});
        }
        if (ok && product == p) {
            tag.kind = ModelKind::ProductOfLines;
            tag.blocks = std::move(found);
            return tag;
        }
    }
    return tag;
}

ModelTag classify(const PotentialSpec& spec, const Rational& lambda)
{
    if (lambda.sign() <= 0)
        throw DomainError("Einstein constant must be positive");
    const ModelTag tag = match_model(spec);
    const long n = static_cast<long>(spec.dimension());
    const Rational half = lambda / Rational(2);
    const Integer p = half.numerator();
    const Integer q = half.denominator();

    auto disagree = [&](const std::string& why) {
        return EngineError("classification of lambda = " + lambda.to_string() + " as " + tag.to_string() +
                           " disagrees with the rational Einstein constant: " + why);
    };

    if (p > n + 1)
        throw disagree("p exceeds n + 1");
    switch (tag.kind) {
    case ModelKind::CPnUnit:
        if (half != Rational(n + 1))
            throw disagree("expected lambda = 2(n+1)");
        break;
    case ModelKind::CPnScaled:
        if (half != Rational(n + 1, static_cast<long>(tag.q)))
            throw disagree("expected lambda/2 = (n+1)/q");
        break;
    case ModelKind::ProductOfLines:
        for (const auto& b : tag.blocks)
            if (half != Rational(static_cast<long>(b.variables.size()) + 1, static_cast<long>(b.q)))
                throw disagree("block constants differ from lambda/2");
        break;
    case ModelKind::Unknown:
        break;
    }
    const bool projective = tag.kind == ModelKind::CPnUnit || tag.kind == ModelKind::CPnScaled;
    if (p == n + 1 && !projective)
        throw disagree("p = n + 1 forces a projective model");
    if (n == 2 && p == 2 && tag.kind != ModelKind::ProductOfLines)
        throw disagree("n = p = 2 forces the product of lines");
    return tag;
}

} // namespace kemetric
