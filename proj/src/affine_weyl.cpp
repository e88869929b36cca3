#include "affs/affine_weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "affs/errors.hpp"

namespace affs {

namespace {

// Representative of v modulo n in 1..n.
long residue(long v, long n) { return ((v - 1) % n + n) % n + 1; }

void require_same_period(const AffinePermutation& u, const AffinePermutation& v) {
    if (u.period() != v.period())
        throw PeriodMismatch("periods " + std::to_string(u.period()) + " and " + std::to_string(v.period()));
}

}  // namespace

// -------------------------------------------------------- AffinePermutation

AffinePermutation::AffinePermutation(std::vector<long> window) : window_(std::move(window)) {
    const long n = static_cast<long>(window_.size());
    if (n == 0) throw InvalidInput("window must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    long drift = 0;
    for (long i = 1; i <= n; ++i) {
        const long w = window_[static_cast<std::size_t>(i - 1)];
        const long r = residue(w, n);
        if (seen[static_cast<std::size_t>(r - 1)]) throw InvalidInput("window residues are not distinct mod n");
        seen[static_cast<std::size_t>(r - 1)] = true;
        drift += w - i;
    }
    if (drift != 0) throw InvalidInput("window does not satisfy sum(w(i) - i) = 0");
}

AffinePermutation AffinePermutation::identity(int n) {
    std::vector<long> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1L);
    return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::from_permutation(const std::vector<int>& one_line) {
    return AffinePermutation(std::vector<long>(one_line.begin(), one_line.end()));
}

long AffinePermutation::operator()(long i) const {
    const long n = period();
    const long r = residue(i, n);
    return window_[static_cast<std::size_t>(r - 1)] + (i - r);
}

AffinePermutation AffinePermutation::inverse() const {
    const long n = period();
    std::vector<long> inv(window_.size());
    for (long i = 1; i <= n; ++i) {
        const long v = window_[static_cast<std::size_t>(i - 1)];
        const long r = residue(v, n);
        inv[static_cast<std::size_t>(r - 1)] = i - (v - r);
    }
    return AffinePermutation(std::move(inv));
}

int AffinePermutation::sigma(int i) const {
    return static_cast<int>(residue(window_.at(static_cast<std::size_t>(i - 1)), period()));
}

long AffinePermutation::shift(int i) const {
    const long v = window_.at(static_cast<std::size_t>(i - 1));
    return (sigma(i) - v) / period();
}

bool AffinePermutation::is_identity() const {
    for (std::size_t i = 0; i < window_.size(); ++i)
        if (window_[i] != static_cast<long>(i + 1)) return false;
    return true;
}

bool AffinePermutation::is_finite() const {
    const long n = period();
    return std::all_of(window_.begin(), window_.end(), [n](long v) { return v >= 1 && v <= n; });
}

LaurentMatrix AffinePermutation::to_matrix() const {
    const int n = period();
    LaurentMatrix m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        m(static_cast<std::size_t>(sigma(i) - 1), static_cast<std::size_t>(i - 1)) =
            LaurentPoly::t(static_cast<int>(shift(i)));
    return m;
}

LaurentMatrix AffinePermutation::signed_lift() const {
    LaurentMatrix m = to_matrix();
    // det of a permutation matrix is the sign of the permutation.
    const int n = period();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(i - 1)] = sigma(i) - 1;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    if (inversions % 2 == 1) {
        auto& entry = m(static_cast<std::size_t>(perm[0]), 0);
        entry = -entry;
    }
    return m;
}

std::string AffinePermutation::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const AffinePermutation& w) { return os << w.to_string(); }

std::size_t AffinePermutationHash::operator()(const AffinePermutation& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (long v : w.window()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

AffinePermutation from_matrix(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw NotMonomialPermutation("empty matrix");
    std::vector<long> window(n);
    std::vector<bool> row_used(n, false);
    long exponent_sum = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t row = n;
        for (std::size_t r = 0; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            if (row != n) throw NotMonomialPermutation("column " + std::to_string(col + 1) + " has two nonzero entries");
            row = r;
        }
        if (row == n) throw NotMonomialPermutation("column " + std::to_string(col + 1) + " is zero");
        if (row_used[row]) throw NotMonomialPermutation("row " + std::to_string(row + 1) + " has two nonzero entries");
        row_used[row] = true;
        const LaurentPoly& entry = m(row, col);
        if (!entry.is_unit()) throw NotMonomialPermutation("entry is not a single power of t: " + entry.to_string());
        const long c = entry.ord().value();
        exponent_sum += c;
        window[col] = static_cast<long>(row + 1) - c * static_cast<long>(n);
    }
    if (exponent_sum != 0) throw NotMonomialPermutation("ord(det) = " + std::to_string(exponent_sum) + ", expected 0");
    return AffinePermutation(std::move(window));
}

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
    require_same_period(u, v);
    std::vector<long> w(v.window().size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = u(v.window()[i]);
    return AffinePermutation(std::move(w));
}

AffinePermutation simple_reflection(int n, int i) {
    if (n < 2 || i < 0 || i >= n) throw BadIndices("simple reflection index " + std::to_string(i) + " for n = " + std::to_string(n));
    return i == 0 ? reflection(n, 0, 1) : reflection(n, i, i + 1);
}

AffinePermutation reflection(int n, long a, long b) {
    if (n < 2) throw BadIndices("period must be at least 2");
    if (residue(a, n) == residue(b, n)) throw BadIndices("a and b coincide modulo n");
    std::vector<long> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1L);
    // a + kn -> b + kn and b + kn -> a + kn.
    auto assign = [&](long from, long to) {
        const long r = residue(from, n);
        w[static_cast<std::size_t>(r - 1)] = to + (r - from);
    };
    assign(a, b);
    assign(b, a);
    return AffinePermutation(std::move(w));
}

long length(const AffinePermutation& w) {
    const int n = w.period();
    long total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const long f = w.sigma(i) > w.sigma(j) ? 1 : 0;
            total += std::labs(w.shift(i) - w.shift(j) - f);
        }
    return total;
}

long length_oracle(const AffinePermutation& w) {
    const long n = w.period();
    long spread = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) spread = std::max(spread, std::labs(w.shift(i) - w.shift(j)));
    const long horizon = n * (2 + spread);
    long count = 0;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= i + horizon; ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

bool is_right_descent(const AffinePermutation& w, int i) { return w(i) > w(i + 1); }

bool is_left_descent(const AffinePermutation& w, int i) {
    const AffinePermutation inv = w.inverse();
    return inv(i) > inv(i + 1);
}

AffinePermutation times_simple(const AffinePermutation& w, int i) {
    return compose(w, simple_reflection(w.period(), i));
}

AffinePermutation simple_times(int i, const AffinePermutation& w) {
    return compose(simple_reflection(w.period(), i), w);
}

std::vector<int> reduced_word(const AffinePermutation& w) {
    std::vector<int> word;
    AffinePermutation x = w;
    const int n = w.period();
    while (!x.is_identity()) {
        int i = 0;
        while (i < n && !is_right_descent(x, i)) ++i;
        if (i == n) throw std::logic_error("reduced_word: no descent found");
        word.push_back(i);
        x = times_simple(x, i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

// --------------------------------------------------------------------- roots

RootIdx RootIdx::canonical(int n, long i, long j) {
    if (residue(i, n) == residue(j, n)) throw BadIndices("root coordinates coincide modulo n");
    const long r = residue(i, n);
    return RootIdx{r, j + (r - i)};
}

std::ostream& operator<<(std::ostream& os, const RootIdx& r) { return os << '(' << r.i << ',' << r.j << ')'; }

RootIdx act_on_root(const AffinePermutation& w, const RootIdx& alpha) {
    return RootIdx::canonical(w.period(), w(alpha.i), w(alpha.j));
}

// ---------------------------------------------------------------- parabolics

ParabolicSubset::ParabolicSubset(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (int i : indices_)
        if (i < 0 || i >= n) throw BadIndices("simple root index " + std::to_string(i) + " outside [0, n)");
}

ParabolicSubset ParabolicSubset::finite(int n) {
    std::vector<int> idx;
    for (int i = 1; i < n; ++i) idx.push_back(i);
    return ParabolicSubset(n, std::move(idx));
}

ParabolicSubset ParabolicSubset::from_block_ends(int n, const std::vector<int>& ends) {
    std::vector<int> idx;
    for (int i = 1; i < n; ++i)
        if (std::find(ends.begin(), ends.end(), i) == ends.end()) idx.push_back(i);
    return ParabolicSubset(n, std::move(idx));
}

bool ParabolicSubset::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

AffinePermutation min_coset_rep(const AffinePermutation& w, const ParabolicSubset& j, Side side) {
    if (j.period() != w.period()) throw PeriodMismatch("parabolic subset and element have different periods");
    AffinePermutation x = w;
    bool shortened = true;
    while (shortened) {
        shortened = false;
        for (int i : j.indices()) {
            if (side == Side::Right ? is_right_descent(x, i) : is_left_descent(x, i)) {
                x = side == Side::Right ? times_simple(x, i) : simple_times(i, x);
                shortened = true;
                break;
            }
        }
    }
    return x;
}

AffinePermutation spherical_orbit(const AffinePermutation& w) {
    const int n = w.period();
    const ParabolicSubset finite = ParabolicSubset::finite(n);
    AffinePermutation u = w;
    while (true) {
        const AffinePermutation next = min_coset_rep(min_coset_rep(u, finite, Side::Left), finite, Side::Right);
        if (next == u) break;
        u = next;
    }
    std::vector<int> longest(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) longest[static_cast<std::size_t>(i)] = n - i;
    return min_coset_rep(AffinePermutation::from_permutation(longest) * u, finite, Side::Right);
}

// -------------------------------------------------------------- translations

TranslationDecomposition decompose_translation(const AffinePermutation& w) {
    const int n = w.period();
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::vector<long> q(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        sigma[static_cast<std::size_t>(i - 1)] = w.sigma(i);
        q[static_cast<std::size_t>(i - 1)] = w.shift(i);
    }
    return {AffinePermutation::from_permutation(sigma), std::move(q)};
}

AffinePermutation translation(const std::vector<long>& q) {
    const long n = static_cast<long>(q.size());
    std::vector<long> w(q.size());
    for (long i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = i - q[static_cast<std::size_t>(i - 1)] * n;
    return AffinePermutation(std::move(w));
}

long pairing(const RootIdx& alpha, const std::vector<long>& q) {
    const long n = static_cast<long>(q.size());
    return q.at(static_cast<std::size_t>(residue(alpha.j, n) - 1)) - q.at(static_cast<std::size_t>(residue(alpha.i, n) - 1));
}

bool translation_action_holds(const std::vector<long>& q) {
    const int n = static_cast<int>(q.size());
    const AffinePermutation tau = translation(q);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            const RootIdx alpha{a, b};
            const RootIdx expected = RootIdx::canonical(n, a, b - pairing(alpha, q) * n);
            if (act_on_root(tau, alpha) != expected) return false;
        }
    return true;
}

// -------------------------------------------------------------------- Bruhat

std::size_t BruhatOracle::PairHash::operator()(
    const std::pair<AffinePermutation, AffinePermutation>& p) const noexcept {
    AffinePermutationHash h;
    return h(p.first) * 1000003ULL ^ h(p.second);
}

bool BruhatOracle::leq(const AffinePermutation& v0, const AffinePermutation& w0) {
    require_same_period(v0, w0);
    if (cache_.size() > 2'000'000) cache_.clear();
    const int n = w0.period();
    std::vector<std::pair<AffinePermutation, AffinePermutation>> visited;
    AffinePermutation v = v0;
    AffinePermutation w = w0;
    bool result = false;
    while (true) {
        if (auto it = cache_.find({v, w}); it != cache_.end()) {
            result = it->second;
            break;
        }
        visited.emplace_back(v, w);
        if (v.is_identity()) {
            result = true;
            break;
        }
        if (length(v) > length(w)) {
            result = false;
            break;
        }
        // w != e here since l(v) > 0.
        const AffinePermutation w_inv = w.inverse();
        int s = 0;
        while (s < n && !(w_inv(s) > w_inv(s + 1))) ++s;
        w = simple_times(s, w);
        if (is_left_descent(v, s)) v = simple_times(s, v);
    }
    for (auto& key : visited) cache_.emplace(std::move(key), result);
    return result;
}

bool bruhat_leq(const AffinePermutation& v, const AffinePermutation& w) {
    thread_local BruhatOracle oracle;
    return oracle.leq(v, w);
}

std::unordered_set<AffinePermutation, AffinePermutationHash> subword_interval(const AffinePermutation& w) {
    const std::vector<int> word = reduced_word(w);
    const int n = w.period();
    std::unordered_set<AffinePermutation, AffinePermutationHash> out{AffinePermutation::identity(n)};
    for (int letter : word) {
        std::vector<AffinePermutation> grown;
        for (const auto& x : out) grown.push_back(times_simple(x, letter));
        out.insert(grown.begin(), grown.end());
    }
    return out;
}

QuadMinimum quad_minimum(const AffinePermutation& w, int a, int b) {
    const int n = w.period();
    if (!(1 <= a && a < b && b <= n)) throw BadIndices("quad_minimum needs 1 <= a < b <= n");
    QuadMinimum out;
    const int sa = w.sigma(a);
    const int sb = w.sigma(b);
    out.s_right = reflection(n, a, b);
    out.s_left = reflection(n, std::min(sa, sb), std::max(sa, sb));
    const AffinePermutation lw = out.s_left * w;
    const AffinePermutation wr = w * out.s_right;
    const AffinePermutation lwr = lw * out.s_right;
    const long ca = w.shift(a);
    const long cb = w.shift(b);
    if (ca == cb) {
        out.which_case = 1;
        out.minimum = sa < sb ? w : lw;
        const AffinePermutation& other = sa < sb ? lw : w;
        out.chain = {out.minimum, other};
        out.verified = lw == wr && bruhat_less(out.minimum, other);
    } else {
        out.which_case = 2;
        if (sa > sb)
            out.minimum = ca < cb ? lwr : w;
        else
            out.minimum = ca < cb ? wr : lw;
        const AffinePermutation& u = out.minimum;
        const AffinePermutation lu = out.s_left * u;
        const AffinePermutation ur = u * out.s_right;
        const AffinePermutation lur = lu * out.s_right;
        out.chain = {u, lu, lur, ur};
        out.verified = lw != wr && bruhat_less(u, lu) && bruhat_less(lu, lur) && bruhat_less(u, ur) &&
                       bruhat_less(ur, lur);
    }
    return out;
}

std::vector<AffinePermutation> length_ball(int n, int max_length) {
    std::vector<AffinePermutation> out;
    std::unordered_set<AffinePermutation, AffinePermutationHash> seen;
    std::deque<std::pair<AffinePermutation, int>> queue;
    queue.emplace_back(AffinePermutation::identity(n), 0);
    seen.insert(queue.front().first);
    if (n == 1) return {queue.front().first};
    while (!queue.empty()) {
        auto [w, d] = queue.front();
        queue.pop_front();
        out.push_back(w);
        if (d == max_length) continue;
        for (int i = 0; i < n; ++i) {
            AffinePermutation x = times_simple(w, i);
            if (seen.insert(x).second) queue.emplace_back(std::move(x), d + 1);
        }
    }
    return out;
}

}  // namespace affs
