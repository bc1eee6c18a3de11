#include "kemetric/rational.hpp"

#include <ostream>

#include "kemetric/errors.hpp"

namespace kemetric
{

namespace
{

bool is_digit_run(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const mpq_class& q) : q_(q)
{
    if (q_.get_den() == 0)
        throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digit_run(num) || !is_digit_run(den))
        throw ParseError("not an exact rational \"" + std::string(text) + "\" (expected p or p/q)");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    if (negative)
        n = -n;
    return Rational(n, d);
}

Rational Rational::abs() const
{
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

std::string Rational::to_string() const { return q_.get_str(10); }

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b)
{
    if (a.q_.get_den() == 1 && b.q_.get_den() == 1 && q_.get_den() == 1) {
        mpz_addmul(q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
        return;
    }
    q_ += a.q_ * b.q_;
}

Rational Rational::operator-() const
{
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational pow(const Rational& base, unsigned exponent)
{
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace kemetric
