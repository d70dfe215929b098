#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace grm {

using Scalar = mpq_class;

/// Coefficient field: the rationals, or a prime field F_p with elements stored as residues in [0, p).
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }
    /// Throws std::invalid_argument when p is not prime.
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    Scalar from_int(long v) const;
    Scalar from_rational(const mpq_class& q) const;

    void normalize(Scalar& x) const
    {
        if (p_ != 0)
            reduce_mod(x);
    }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    /// Throws std::domain_error on zero.
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

    bool operator==(const Field&) const = default;
    std::string to_string() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    void reduce_mod(Scalar& x) const;

    std::uint64_t p_ = 0;
};

} // namespace grm
