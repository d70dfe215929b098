#include "grm/field.hpp"

#include <stdexcept>

namespace grm {

Field Field::prime(std::uint64_t p)
{
    if (p < 2)
        throw std::invalid_argument("field characteristic must be prime");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument(std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::from_int(long v) const
{
    Scalar x(v);
    normalize(x);
    return x;
}

Scalar Field::from_rational(const mpq_class& q) const
{
    Scalar x(q);
    normalize(x);
    return x;
}

void Field::reduce_mod(Scalar& x) const
{
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = x.get_num() % p;
    mpz_class den = x.get_den() % p;
    if (den == 0)
        throw std::domain_error("denominator divisible by the characteristic");
    if (den != 1) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num *= inv;
        num %= p;
    }
    if (num < 0)
        num += p;
    x = num;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    Scalar r = a + b;
    normalize(r);
    return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    Scalar r = a - b;
    normalize(r);
    return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    Scalar r = a * b;
    normalize(r);
    return r;
}

Scalar Field::neg(const Scalar& a) const
{
    Scalar r = -a;
    normalize(r);
    return r;
}

Scalar Field::inv(const Scalar& a) const
{
    if (is_zero(a))
        throw std::domain_error("inverse of zero");
    Scalar r = 1 / a;
    normalize(r);
    return r;
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

} // namespace grm
