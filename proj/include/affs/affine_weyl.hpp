#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "affs/laurent.hpp"

namespace affs {

/// Element of the affine Weyl group of type A(n-1)^, stored by its window
/// (w(1), ..., w(n)). The bijection of Z is recovered by w(i + n) = w(i) + n.
///
/// The affine permutation matrix of w is sum_i t^{c_i} E_{sigma(i), i} where
/// w(i) = sigma(i) - c_i * n. Composition of windows agrees with matrix
/// multiplication: (u * v)(i) = u(v(i)).
class AffinePermutation {
public:
    AffinePermutation() = default;
    /// Throws InvalidInput unless residues are distinct mod n and
    /// sum(w(i) - i) == 0.
    explicit AffinePermutation(std::vector<long> window);

    static AffinePermutation identity(int n);
    /// Finite permutation from one-line notation with values 1..n.
    static AffinePermutation from_permutation(const std::vector<int>& one_line);

    int period() const { return static_cast<int>(window_.size()); }
    const std::vector<long>& window() const { return window_; }

    /// Periodic extension, valid for every integer.
    long operator()(long i) const;

    AffinePermutation inverse() const;

    /// sigma(i) in 1..n for i in 1..n (the finite permutation of the matrix).
    int sigma(int i) const;
    /// c_i, the exponent of t in column i of the matrix.
    long shift(int i) const;

    bool is_identity() const;
    /// All shifts zero: an element of the finite Weyl group.
    bool is_finite() const;

    /// Affine permutation matrix with every nonzero coefficient equal to 1.
    LaurentMatrix to_matrix() const;
    /// Same matrix with one coefficient negated when needed so det == 1.
    LaurentMatrix signed_lift() const;

    std::string to_string() const;

    friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
    friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

private:
    std::vector<long> window_;
};

std::ostream& operator<<(std::ostream& os, const AffinePermutation& w);

struct AffinePermutationHash {
    std::size_t operator()(const AffinePermutation& w) const noexcept;
};

/// Reads the window off a monomial matrix over powers of t, ignoring
/// coefficients. Throws NotMonomialPermutation on any shape violation or
/// when ord(det) != 0.
AffinePermutation from_matrix(const LaurentMatrix& m);

/// u after v. Throws PeriodMismatch.
AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v);
inline AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v) { return compose(u, v); }

/// s_i for 0 <= i < n.
AffinePermutation simple_reflection(int n, int i);

/// Reflection in the root (a, b): swaps a + kn with b + kn for every k.
/// (a, b) = (1, 2), ..., (n-1, n) give s_1, ..., s_{n-1}; (0, 1) gives s_0.
/// Throws BadIndices when a == b (mod n).
AffinePermutation reflection(int n, long a, long b);

/// Coxeter length by the closed formula sum_{i<j} |c_i - c_j - f(i, j)|,
/// f(i, j) = 1 iff sigma(i) > sigma(j).
long length(const AffinePermutation& w);

/// Coxeter length by counting inversions (i, j), 1 <= i <= n, i < j,
/// w(i) > w(j), over a window large enough to contain all of them.
long length_oracle(const AffinePermutation& w);

bool is_right_descent(const AffinePermutation& w, int i);
bool is_left_descent(const AffinePermutation& w, int i);
AffinePermutation times_simple(const AffinePermutation& w, int i);  // w * s_i
AffinePermutation simple_times(int i, const AffinePermutation& w);  // s_i * w

/// One reduced word: w = s_{word[0]} s_{word[1]} ... s_{word[k-1]}.
std::vector<int> reduced_word(const AffinePermutation& w);

/// Root (i, j), i != j mod n, modulo (i, j) ~ (i + kn, j + kn). Canonical
/// representative has 1 <= i <= n. Positive iff i < j.
struct RootIdx {
    long i = 1;
    long j = 2;

    static RootIdx canonical(int n, long i, long j);
    bool positive() const { return i < j; }
    friend bool operator==(const RootIdx&, const RootIdx&) = default;
    friend auto operator<=>(const RootIdx&, const RootIdx&) = default;
};

std::ostream& operator<<(std::ostream& os, const RootIdx& r);

/// w(i, j) = (w(i), w(j)), canonicalized.
RootIdx act_on_root(const AffinePermutation& w, const RootIdx& alpha);

/// Subset J of the simple reflection indices {0, ..., n-1}.
class ParabolicSubset {
public:
    ParabolicSubset() = default;
    /// Throws BadIndices for indices outside [0, n).
    ParabolicSubset(int n, std::vector<int> indices);

    /// S_0 = {1, ..., n-1}: the finite Weyl group.
    static ParabolicSubset finite(int n);
    /// S_0 minus {alpha_{d_1}, ..., alpha_{d_{r-1}}} for 0 = d_0 < ... < d_r = n.
    static ParabolicSubset from_block_ends(int n, const std::vector<int>& ends);

    int period() const { return n_; }
    const std::vector<int>& indices() const { return indices_; }
    bool contains(int i) const;

    friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

private:
    int n_ = 0;
    std::vector<int> indices_;
};

enum class Side { Left, Right };

/// Minimal representative of w W_J (Right) or W_J w (Left), found by
/// stripping descents in J, scanning J in increasing order.
AffinePermutation min_coset_rep(const AffinePermutation& w, const ParabolicSubset& j, Side side);

/// Longest element of W^{S_0} lying in the double coset W w W (W the
/// finite Weyl group): the index of the L+G-orbit of w L+G.
AffinePermutation spherical_orbit(const AffinePermutation& w);

struct TranslationDecomposition {
    AffinePermutation sigma;  // finite part
    std::vector<long> q;      // coweight, sum zero; tau_q = diag(t^{q_i})
};

/// w = sigma * tau_q in matrix form.
TranslationDecomposition decompose_translation(const AffinePermutation& w);

/// tau_q, the diagonal matrix diag(t^{q_1}, ..., t^{q_n}). Sum of q must be zero.
AffinePermutation translation(const std::vector<long>& q);

/// alpha(q) for alpha = (a, b): q_b - q_a.
long pairing(const RootIdx& alpha, const std::vector<long>& q);

/// Checks tau_q(alpha) = alpha - alpha(q) delta for every finite root.
bool translation_action_holds(const std::vector<long>& q);

/// Bruhat order via the lifting property: take s with s w < w; then
/// v <= w iff min(v, s v) <= s w. Results are memoized per instance.
class BruhatOracle {
public:
    bool leq(const AffinePermutation& v, const AffinePermutation& w);
    std::size_t cache_size() const { return cache_.size(); }
    void clear() { cache_.clear(); }

private:
    struct PairHash {
        std::size_t operator()(const std::pair<AffinePermutation, AffinePermutation>& p) const noexcept;
    };
    std::unordered_map<std::pair<AffinePermutation, AffinePermutation>, bool, PairHash> cache_;
};

/// Uses a thread-local BruhatOracle. Throws PeriodMismatch.
bool bruhat_leq(const AffinePermutation& v, const AffinePermutation& w);
inline bool bruhat_less(const AffinePermutation& v, const AffinePermutation& w) { return v != w && bruhat_leq(v, w); }

/// Lower interval [e, w] as the set of products of subwords of one reduced
/// word of w. Exponential in length(w); a reference for bruhat_leq.
std::unordered_set<AffinePermutation, AffinePermutationHash> subword_interval(const AffinePermutation& w);

/// Four-element comparison around w for the pair of reflections
/// s_r = s_(a,b) acting on the right and s_l = s_(sigma(a), sigma(b)) acting
/// on the left.
struct QuadMinimum {
    int which_case = 1;  // 1 when ord(t_a) == ord(t_b), else 2
    AffinePermutation s_left;
    AffinePermutation s_right;
    AffinePermutation minimum;
    /// Case 1: {u, other}. Case 2: u, s_l u, s_l u s_r, u s_r.
    /// In case 2 the minimum is s_l w s_r or w when sigma(a) > sigma(b), and
    /// w s_r or s_l w otherwise (first choice when ord(t_a) < ord(t_b)).
    std::vector<AffinePermutation> chain;
    /// Every stated relation confirmed by the Bruhat order.
    bool verified = false;
};

/// Throws BadIndices unless 1 <= a < b <= n.
QuadMinimum quad_minimum(const AffinePermutation& w, int a, int b);

/// All elements of length <= max_length, in breadth-first order.
std::vector<AffinePermutation> length_ball(int n, int max_length);

}  // namespace affs
