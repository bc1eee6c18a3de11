#include "kemetric/certify.hpp"

#include <cstdint>
#include <cstdio>

#include "kemetric/errors.hpp"
#include "kemetric/metric.hpp"

namespace kemetric
{

std::string polynomial_hash(const Series& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& text) {
        for (unsigned char c : text) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& [m, c] : s.terms()) {
        feed(m.to_string());
        feed(":");
        feed(c.to_string());
        feed(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Certificate certify_exact(const EinsteinCandidate& candidate)
{
    const PotentialSpec& spec = candidate.spec;
    if (!spec.is_numeric())
        throw UsageError("certify_exact requires numeric support coefficients");
    if (candidate.lambda.sign() <= 0)
        throw DomainError("certify_exact requires lambda > 0, got " + candidate.lambda.to_string());

    const Rational half = candidate.lambda * Rational(1, 2);
    Certificate cert;
    cert.half_lambda_num = half.numerator();
    cert.half_lambda_den = half.denominator();
    const Integer n(static_cast<unsigned long>(spec.dimension()));
    const Integer exponent = 2 * n * cert.half_lambda_den - cert.half_lambda_num;
    if (exponent < 0)
        throw DomainError("lambda/2 = " + half.to_string() + " exceeds 2n; no polynomial identity exists");
    if (!exponent.fits_uint_p() || !cert.half_lambda_den.fits_uint_p() || exponent > 4096 ||
        cert.half_lambda_den > 4096)
        throw DomainError("lambda = " + candidate.lambda.to_string() + " is too large to certify");
    cert.potential_exponent = static_cast<unsigned>(exponent.get_ui());
    const auto q = static_cast<unsigned>(cert.half_lambda_den.get_ui());

    const unsigned numerator_degree = static_cast<unsigned>(spec.dimension()) * (2 * spec.degree() - 1);
    const unsigned long lhs_degree = static_cast<unsigned long>(q) * numerator_degree;
    const unsigned long rhs_degree = static_cast<unsigned long>(cert.potential_exponent) * spec.degree();
    if (std::max(lhs_degree, rhs_degree) > kMaxCertificateDegree)
        throw DomainError("lambda = " + candidate.lambda.to_string() + " needs an expansion beyond degree " +
                          std::to_string(kMaxCertificateDegree));
    cert.degree = static_cast<unsigned>(std::max(lhs_degree, rhs_degree));

    const Series p = build_potential(spec, spec.degree());
    const Series numerator = metric_numerator_det(p);

    const Series lhs = pow(numerator.with_truncation(cert.degree), q);
    const Series rhs = pow(p.with_truncation(cert.degree), cert.potential_exponent);
    cert.lhs_hash = polynomial_hash(lhs);
    cert.rhs_hash = polynomial_hash(rhs);
    cert.pass = lhs == rhs;
    if (!cert.pass) {
        const Series delta = lhs - rhs;
        const MultiIndex& first = delta.terms().begin()->first;
        cert.witness = first;
        cert.lhs_coefficient = lhs.coefficient(first).constant();
        cert.rhs_coefficient = rhs.coefficient(first).constant();
    }
    return cert;
}

} // namespace kemetric
