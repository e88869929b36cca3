#include "affs/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "affs/errors.hpp"

namespace affs {

namespace {

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

void partitions_rec(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

std::string Partition::to_string() const { return "(" + join(parts_) + ")"; }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition conjugate(const Partition& mu) {
    std::vector<int> out;
    const int top = mu.length() ? mu[1] : 0;
    for (int i = 1; i <= top; ++i) {
        int count = 0;
        for (int part : mu.parts())
            if (part >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size())
        throw SizeMismatch("partitions of " + std::to_string(mu.size()) + " and " + std::to_string(nu.size()));
    int a = 0;
    int b = 0;
    for (int i = 1; i <= std::max(mu.length(), nu.length()); ++i) {
        a += mu[i];
        b += nu[i];
        if (a > b) return false;
    }
    return true;
}

Partition jordan_type(const LaurentMatrix& x) {
    if (!x.is_constant()) throw NotNilpotent("matrix has non-constant entries");
    const std::size_t n = x.size();
    std::vector<long> ranks{static_cast<long>(n)};
    LaurentMatrix power = LaurentMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * x;
        ranks.push_back(static_cast<long>(constant_rank(power)));
    }
    if (ranks.back() != 0) throw NotNilpotent("X^n has rank " + std::to_string(ranks.back()));
    // rank(X^{i-1}) - rank(X^i) counts blocks of size >= i.
    std::vector<int> at_least;
    for (std::size_t i = 1; i <= n; ++i) {
        const long d = ranks[i - 1] - ranks[i];
        if (d > 0) at_least.push_back(static_cast<int>(d));
    }
    return conjugate(Partition(std::move(at_least)));
}

LaurentMatrix jordan_nilpotent(const Partition& mu) {
    LaurentMatrix x(static_cast<std::size_t>(mu.size()));
    std::size_t start = 0;
    for (int part : mu.parts()) {
        for (int k = 0; k + 1 < part; ++k) x(start + static_cast<std::size_t>(k), start + static_cast<std::size_t>(k) + 1) = 1;
        start += static_cast<std::size_t>(part);
    }
    return x;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("composition must have at least one part");
    d_.push_back(0);
    for (int p : parts_) {
        if (p <= 0) throw InvalidInput("composition parts must be positive");
        d_.push_back(d_.back() + p);
    }
}

Composition Composition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse composition part '" + item + "'");
        }
        if (used != item.size()) throw InvalidInput("cannot parse composition part '" + item + "'");
        parts.push_back(value);
    }
    return Composition(std::move(parts));
}

Composition Composition::from_d_sequence(const std::vector<int>& d) {
    if (d.size() < 2 || d.front() != 0) throw InvalidInput("d-sequence must start at 0 and have at least two entries");
    std::vector<int> parts;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (d[i] <= d[i - 1]) throw InvalidInput("d-sequence must be strictly increasing");
        parts.push_back(d[i] - d[i - 1]);
    }
    return Composition(std::move(parts));
}

int Composition::block_of(int c) const {
    for (int i = 1; i <= r(); ++i)
        if (c <= d(i)) return i;
    throw BadIndices("coordinate " + std::to_string(c) + " exceeds n");
}

Partition Composition::nu() const { return conjugate(Partition::from_unsorted(parts_)); }

long Composition::sum_of_squares() const {
    long s = 0;
    for (int p : parts_) s += static_cast<long>(p) * p;
    return s;
}

long Composition::dim_G_P() const { return (static_cast<long>(n()) * n() - sum_of_squares()) / 2; }

std::string Composition::to_string() const { return "(" + join(parts_) + ")"; }

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n <= 0) return out;
    const unsigned long total = 1UL << (n - 1);
    for (unsigned long mask = 0; mask < total; ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int b = 0; b < n - 1; ++b) {
            if (mask & (1UL << b)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace affs
