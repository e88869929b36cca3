#include "affs/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "affs/errors.hpp"

namespace affs {

int Valuation::value() const {
    if (!finite_) throw std::logic_error("Valuation: +infinity has no integer value");
    return value_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
    if (v.is_infinite()) return os << "+inf";
    return os << v.value();
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const FieldScalar& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const FieldScalar& c, int exponent) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(exponent, c);
    return p;
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

bool LaurentPoly::is_polynomial_in_inverse() const { return terms_.empty() || terms_.rbegin()->first <= 0; }

Valuation LaurentPoly::ord() const {
    if (terms_.empty()) return Valuation::infinity();
    return Valuation(terms_.begin()->first);
}

int LaurentPoly::degree() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: degree of zero");
    return terms_.rbegin()->first;
}

FieldScalar LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? FieldScalar() : it->second;
}

FieldScalar LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("LaurentPoly: leading coefficient of zero");
    return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    if (k == 0) return *this;
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::truncated(int lo, int hi) const {
    LaurentPoly r;
    for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it)
        r.terms_.emplace_hint(r.terms_.end(), it->first, it->second);
    return r;
}

void LaurentPoly::add_term(int exponent, const FieldScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const FieldScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string coef = c.value().get_str();
        bool negative = !coef.empty() && coef[0] == '-';
        if (negative) coef.erase(0, 1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit_coef = coef == "1";
        if (e == 0) {
            os << coef;
            continue;
        }
        if (!unit_coef) os << coef << '*';
        os << 't';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

PolyDivision divmod(const LaurentPoly& dividend, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("divmod: division by zero");
    if (!dividend.is_polynomial() || !divisor.is_polynomial())
        throw std::domain_error("divmod: arguments must lie in k[t]");
    PolyDivision out;
    out.remainder = dividend;
    const int db = divisor.degree();
    const FieldScalar lc_inv = divisor.leading_coeff().inverse();
    while (!out.remainder.is_zero() && out.remainder.degree() >= db) {
        const int shift = out.remainder.degree() - db;
        const FieldScalar c = out.remainder.leading_coeff() * lc_inv;
        LaurentPoly step = LaurentPoly::monomial(c, shift);
        out.quotient += step;
        out.remainder -= step * divisor;
    }
    return out;
}

LaurentPoly exact_quotient(const LaurentPoly& dividend, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("exact_quotient: division by zero");
    if (dividend.is_zero()) return {};
    const int oa = dividend.ord().value();
    const int ob = divisor.ord().value();
    PolyDivision d = divmod(dividend.shifted(-oa), divisor.shifted(-ob));
    if (!d.remainder.is_zero()) throw std::domain_error("exact_quotient: division is not exact");
    return d.quotient.shifted(oa - ob);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a;
    LaurentPoly y = b;
    while (!y.is_zero()) {
        LaurentPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    x *= x.leading_coeff().inverse();
    return x;
}

// -------------------------------------------------------------- LaurentMatrix

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
    LaurentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
    return m;
}

LaurentMatrix LaurentMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
    LaurentMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

bool LaurentMatrix::is_constant() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const LaurentPoly& p) { return p.is_constant(); });
}

bool LaurentMatrix::is_polynomial() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const LaurentPoly& p) { return p.is_polynomial(); });
}

LaurentMatrix LaurentMatrix::constant_part() const {
    LaurentMatrix r(n_);
    for (std::size_t k = 0; k < cells_.size(); ++k) r.cells_[k] = LaurentPoly(cells_[k].coeff(0));
    return r;
}

LaurentMatrix LaurentMatrix::transposed() const {
    LaurentMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

LaurentMatrix LaurentMatrix::shifted(int k) const {
    LaurentMatrix r(n_);
    for (std::size_t i = 0; i < cells_.size(); ++i) r.cells_[i] = cells_[i].shifted(k);
    return r;
}

Valuation LaurentMatrix::min_order() const {
    Valuation v = Valuation::infinity();
    for (const auto& p : cells_) v = std::min(v, p.ord());
    return v;
}

void LaurentMatrix::require_same_size(const LaurentMatrix& other) const {
    if (n_ != other.n_) throw SizeMismatch("matrix dimensions differ");
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& rhs) {
    require_same_size(rhs);
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += rhs.cells_[i];
    return *this;
}

LaurentMatrix& LaurentMatrix::operator-=(const LaurentMatrix& rhs) {
    require_same_size(rhs);
    for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] -= rhs.cells_[i];
    return *this;
}

LaurentMatrix& LaurentMatrix::operator*=(const LaurentPoly& c) {
    for (auto& p : cells_) p = p * c;
    return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    a.require_same_size(b);
    const std::size_t n = a.n_;
    LaurentMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const LaurentPoly& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const LaurentPoly& y = b(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    return r;
}

std::string LaurentMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentMatrix& m) { return os << m.to_string(); }

// ------------------------------------------------------------ linear algebra

namespace {

// Bareiss elimination on a polynomial matrix, in place. Returns the
// determinant (zero when singular).
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return LaurentPoly(1);
    LaurentPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t r = k; r < n; ++r) {
            if (a[r][k].is_zero()) continue;
            if (pivot == n || a[r][k].term_count() < a[pivot][k].term_count() ||
                (a[r][k].term_count() == a[pivot][k].term_count() && a[r][k].degree() < a[pivot][k].degree()))
                pivot = r;
        }
        if (pivot == n) return {};
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = k == 0 ? std::move(v) : exact_quotient(v, prev);
            }
            a[i][k] = LaurentPoly();
        }
        prev = a[k][k];
    }
    LaurentPoly d = a[n - 1][n - 1];
    return negate ? -d : d;
}

}  // namespace

LaurentPoly det(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
    int total_shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Valuation row_ord = Valuation::infinity();
        for (std::size_t j = 0; j < n; ++j) row_ord = std::min(row_ord, m(i, j).ord());
        if (row_ord.is_infinite()) return {};
        const int s = -row_ord.value();
        total_shift += s;
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).shifted(s);
    }
    return bareiss_det(a).shifted(-total_shift);
}

LaurentMatrix invert(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    const LaurentPoly d = det(m);
    if (!d.is_unit()) throw NotAUnit("determinant " + d.to_string() + " is not a unit of k[t, t^-1]");
    const auto [exp, coef] = *d.terms().begin();
    const LaurentPoly d_inv = LaurentPoly::monomial(coef.inverse(), -exp);
    LaurentMatrix inv(n);
    if (n == 1) {
        inv(0, 0) = d_inv;
        return inv;
    }
    LaurentMatrix minor(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            LaurentPoly cof = det(minor) * d_inv;
            inv(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return inv;
}

std::size_t constant_rank(const LaurentMatrix& m) {
    if (!m.is_constant()) throw std::domain_error("constant_rank: matrix has non-constant entries");
    const std::size_t n = m.size();
    std::vector<std::vector<FieldScalar>> a(n, std::vector<FieldScalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).coeff(0);
    // Fraction-free elimination: every division below is exact.
    std::size_t rank = 0;
    FieldScalar prev(1);
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = rank; r < n; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == n) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            for (std::size_t c = col + 1; c < n; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = FieldScalar();
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

BorelMembership borel_membership(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    const LaurentPoly d = det(m);
    if (d.is_zero() || !d.is_constant()) return BorelMembership::Neither;

    auto lower_constant_terms_vanish = [&] {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!m(i, j).coeff(0).is_zero()) return false;
        return true;
    };
    const bool triangular = lower_constant_terms_vanish();
    bool plus = triangular;
    bool minus = triangular;
    for (std::size_t i = 0; i < n && (plus || minus); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            plus = plus && m(i, j).is_polynomial();
            minus = minus && m(i, j).is_polynomial_in_inverse();
        }
    if (plus && minus) return BorelMembership::InBoth;
    if (plus) return BorelMembership::InBplus;
    if (minus) return BorelMembership::InBminus;
    return BorelMembership::Neither;
}

std::string to_string(BorelMembership c) {
    switch (c) {
        case BorelMembership::InBplus: return "InBplus";
        case BorelMembership::InBminus: return "InBminus";
        case BorelMembership::InBoth: return "InBoth";
        case BorelMembership::Neither: break;
    }
    return "Neither";
}

}  // namespace affs
