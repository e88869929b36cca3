#include "affs/field.hpp"

#include <ostream>
#include <stdexcept>

namespace affs {

namespace {

bool is_small_prime(std::uint32_t p) {
    if (p < 5) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

FieldScalar::FieldScalar(long num, long den) {
    if (den == 0) throw std::domain_error("FieldScalar: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

FieldScalar::FieldScalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

FieldScalar FieldScalar::mod_p(long value, std::uint32_t p) {
    if (!is_small_prime(p)) throw std::domain_error("FieldScalar: modulus must be a prime >= 5");
    FieldScalar x(value);
    x.p_ = p;
    x.reduce();
    return x;
}

FieldScalar FieldScalar::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("FieldScalar: cannot parse '" + text + "'");
    if (sgn(q.get_den()) == 0) throw std::domain_error("FieldScalar: zero denominator");
    q.canonicalize();
    return FieldScalar(std::move(q));
}

bool FieldScalar::is_one() const { return q_ == 1; }

std::string FieldScalar::numerator_string() const { return q_.get_num().get_str(); }
std::string FieldScalar::denominator_string() const { return q_.get_den().get_str(); }

void FieldScalar::reduce() {
    if (p_ == 0) return;
    mpz_class p(p_);
    mpz_class num = q_.get_num() % p;
    mpz_class den = q_.get_den() % p;
    if (den == 0) throw std::domain_error("FieldScalar: denominator divisible by the modulus");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    if (r < 0) r += p;
    q_ = mpq_class(r);
}

void FieldScalar::adopt_modulus(const FieldScalar& other) {
    if (other.p_ == p_ || other.p_ == 0) return;
    if (p_ != 0) throw std::domain_error("FieldScalar: mixing different prime fields");
    p_ = other.p_;
    reduce();
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw std::domain_error("FieldScalar: inverse of zero");
    FieldScalar r;
    r.q_ = 1 / q_;
    r.p_ = p_;
    r.reduce();
    return r;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar r = *this;
    r.q_ = -r.q_;
    r.reduce();
    return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
    adopt_modulus(rhs);
    if (rhs.p_ == p_) {
        q_ += rhs.q_;
    } else {
        FieldScalar r = rhs;
        r.adopt_modulus(*this);
        q_ += r.q_;
    }
    reduce();
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) { return *this += -rhs; }

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) {
    adopt_modulus(rhs);
    if (rhs.p_ == p_) {
        q_ *= rhs.q_;
    } else {
        FieldScalar r = rhs;
        r.adopt_modulus(*this);
        q_ *= r.q_;
    }
    reduce();
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const FieldScalar& a, const FieldScalar& b) {
    if (a.p_ == b.p_) return a.q_ == b.q_;
    FieldScalar x = a;
    FieldScalar y = b;
    x.adopt_modulus(y);
    y.adopt_modulus(x);
    return x.q_ == y.q_;
}

std::string FieldScalar::to_string() const {
    std::string s = q_.get_str();
    if (p_ != 0) s += " (mod " + std::to_string(p_) + ")";
    return s;
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.to_string(); }

}  // namespace affs
