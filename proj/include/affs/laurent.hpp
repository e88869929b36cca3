#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "affs/field.hpp"

namespace affs {

/// t-adic order of a Laurent polynomial: an integer, or +infinity for zero.
class Valuation {
public:
    constexpr Valuation() = default;  // +infinity
    constexpr explicit Valuation(int value) : finite_(true), value_(value) {}

    static constexpr Valuation infinity() { return Valuation(); }

    constexpr bool is_infinite() const { return !finite_; }
    /// Throws std::logic_error on +infinity.
    int value() const;

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }
    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }

private:
    bool finite_ = false;
    int value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Sparse Laurent polynomial in t over FieldScalar. No stored coefficient is
/// zero; the zero polynomial has no terms.
class LaurentPoly {
public:
    using Terms = std::map<int, FieldScalar>;

    LaurentPoly() = default;
    LaurentPoly(const FieldScalar& c);  // NOLINT: constants promote implicitly
    template <std::integral I>
    LaurentPoly(I c) : LaurentPoly(FieldScalar(c)) {}

    /// c * t^exponent
    static LaurentPoly monomial(const FieldScalar& c, int exponent);
    /// t^exponent
    static LaurentPoly t(int exponent = 1) { return monomial(FieldScalar(1), exponent); }

    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// No negative exponents (an element of k[t]).
    bool is_polynomial() const;
    /// No positive exponents (an element of k[t^-1]).
    bool is_polynomial_in_inverse() const;
    /// A single nonzero term c * t^k: the units of k[t, t^-1].
    bool is_unit() const { return terms_.size() == 1; }

    Valuation ord() const;
    /// Largest exponent; throws on zero.
    int degree() const;
    FieldScalar coeff(int exponent) const;
    FieldScalar leading_coeff() const;

    /// this * t^k
    LaurentPoly shifted(int k) const;
    /// Keeps only terms with exponent in [lo, hi].
    LaurentPoly truncated(int lo, int hi) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const FieldScalar& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(int exponent, const FieldScalar& c);
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline Valuation ord(const LaurentPoly& p) { return p.ord(); }

struct PolyDivision {
    LaurentPoly quotient;
    LaurentPoly remainder;
};

/// Euclidean division in k[t]. Both arguments must be polynomials, divisor
/// nonzero. remainder is zero or has degree < degree(divisor).
PolyDivision divmod(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Division that must be exact in k[t, t^-1] after shifting; throws
/// std::domain_error when it is not.
LaurentPoly exact_quotient(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Monic greatest common divisor in k[t] (zero if both are zero).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Dense n x n matrix over LaurentPoly, row-major, 0-based indices.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    explicit LaurentMatrix(std::size_t n) : n_(n), cells_(n * n) {}

    static LaurentMatrix identity(std::size_t n);
    static LaurentMatrix diagonal(const std::vector<LaurentPoly>& entries);

    std::size_t size() const { return n_; }

    LaurentPoly& operator()(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }
    const LaurentPoly& operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }

    bool is_constant() const;
    bool is_polynomial() const;
    /// Evaluation at t = 0 of a polynomial matrix (coefficient of t^0).
    LaurentMatrix constant_part() const;
    LaurentMatrix transposed() const;
    /// Every entry multiplied by t^k.
    LaurentMatrix shifted(int k) const;
    /// Least order over all entries; +infinity for the zero matrix.
    Valuation min_order() const;

    LaurentMatrix& operator+=(const LaurentMatrix& rhs);
    LaurentMatrix& operator-=(const LaurentMatrix& rhs);
    LaurentMatrix& operator*=(const LaurentPoly& c);

    friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
    friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(const LaurentPoly& c, LaurentMatrix m) { return m *= c; }
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) = default;

    std::string to_string() const;

private:
    void require_same_size(const LaurentMatrix& other) const;

    std::size_t n_ = 0;
    std::vector<LaurentPoly> cells_;
};

std::ostream& operator<<(std::ostream& os, const LaurentMatrix& m);

/// Exact determinant: fraction-free Bareiss elimination over k[t] after each
/// row is shifted into k[t], then the shifts are undone.
LaurentPoly det(const LaurentMatrix& m);

/// Inverse over k[t, t^-1]. Throws NotAUnit unless det(m) is a single term.
LaurentMatrix invert(const LaurentMatrix& m);

/// Rank of a constant matrix (all entries in k).
std::size_t constant_rank(const LaurentMatrix& m);

enum class BorelMembership { Neither, InBplus, InBminus, InBoth };

/// B+ = matrices over k[t], constant nonzero determinant, upper triangular
/// at t = 0. B- is the same with t^-1 in place of t.
BorelMembership borel_membership(const LaurentMatrix& m);

inline bool in_b_plus(const LaurentMatrix& m) {
    auto c = borel_membership(m);
    return c == BorelMembership::InBplus || c == BorelMembership::InBoth;
}

inline bool in_b_minus(const LaurentMatrix& m) {
    auto c = borel_membership(m);
    return c == BorelMembership::InBminus || c == BorelMembership::InBoth;
}

std::string to_string(BorelMembership c);

}  // namespace affs
