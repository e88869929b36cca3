#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace affs {

/// Element of an exact field: either an arbitrary-precision rational or a
/// residue modulo a prime p (selected at construction time).
///
/// Rational values mix freely with F_p values: a rational whose denominator is
/// prime to p is mapped into F_p. Mixing two different moduli throws
/// std::domain_error.
class FieldScalar {
public:
    FieldScalar() = default;

    template <std::integral I>
    FieldScalar(I value) : q_(static_cast<long>(value)) {}

    FieldScalar(long num, long den);
    explicit FieldScalar(mpq_class q);

    /// Residue of `value` in F_p. p must be a prime >= 5.
    static FieldScalar mod_p(long value, std::uint32_t p);

    /// Parses "a" or "a/b" (decimal, arbitrary length).
    static FieldScalar parse(const std::string& text);

    /// 0 for rational mode, otherwise the prime.
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const;

    /// Rational value. In F_p mode this is the canonical residue in [0, p).
    const mpq_class& value() const { return q_; }
    std::string numerator_string() const;
    std::string denominator_string() const;

    FieldScalar inverse() const;

    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& rhs);
    FieldScalar& operator-=(const FieldScalar& rhs);
    FieldScalar& operator*=(const FieldScalar& rhs);
    FieldScalar& operator/=(const FieldScalar& rhs);

    friend FieldScalar operator+(FieldScalar lhs, const FieldScalar& rhs) { return lhs += rhs; }
    friend FieldScalar operator-(FieldScalar lhs, const FieldScalar& rhs) { return lhs -= rhs; }
    friend FieldScalar operator*(FieldScalar lhs, const FieldScalar& rhs) { return lhs *= rhs; }
    friend FieldScalar operator/(FieldScalar lhs, const FieldScalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b);

    std::string to_string() const;

private:
    void reduce();
    void adopt_modulus(const FieldScalar& other);

    mpq_class q_;
    std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& x);

}  // namespace affs
