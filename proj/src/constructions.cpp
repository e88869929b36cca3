#include "affs/constructions.hpp"

#include <algorithm>

#include "affs/errors.hpp"

namespace affs {

namespace {

std::size_t at(int one_based) { return static_cast<std::size_t>(one_based - 1); }

void add_to(LaurentMatrix& m, int row, int col, const LaurentPoly& p) { m(at(row), at(col)) += p; }

int finite_sign(const AffinePermutation& w) {
    int inversions = 0;
    for (int i = 1; i <= w.period(); ++i)
        for (int j = i + 1; j <= w.period(); ++j)
            if (w.sigma(i) > w.sigma(j)) ++inversions;
    return inversions % 2 ? -1 : 1;
}

bool preserves_blocks(const AffinePermutation& w, const Composition& lambda) {
    for (int i = 1; i <= w.period(); ++i)
        if (w(i) < 1 || w(i) > w.period() || lambda.block_of(static_cast<int>(w(i))) != lambda.block_of(i)) return false;
    return true;
}

}  // namespace

ParabolicSubset parabolic_of(const Composition& lambda) {
    const auto& d = lambda.d_sequence();
    return ParabolicSubset::from_block_ends(lambda.n(), std::vector<int>(d.begin() + 1, d.end() - 1));
}

LaurentMatrix column_unit(const TableauData& t, int column, int a, int b) {
    LaurentMatrix m(static_cast<std::size_t>(t.n()));
    m(at(t.f(column, a)), at(t.f(column, b))) = 1;
    return m;
}

KappaBundle kappa(const Composition& lambda) {
    KappaBundle out;
    out.lambda = lambda;
    out.tableau = build_tableau(lambda);
    const TableauData& t = out.tableau;
    const long n = lambda.n();
    const int s = t.s;

    std::vector<long> window(static_cast<std::size_t>(n));
    std::vector<long> sigma(static_cast<std::size_t>(n));
    out.q.assign(static_cast<std::size_t>(n), -1);
    for (int i = 1; i <= s; ++i) {
        window[at(t.l[at(i)])] = i - static_cast<long>(t.nu[i] - 1) * n;
        sigma[at(t.l[at(i)])] = i;
        out.q[at(i)] = t.nu[i] - 1;
    }
    for (int i = 1; i <= static_cast<int>(t.m.size()); ++i) {
        window[at(t.m[at(i)])] = i + s + n;
        sigma[at(t.m[at(i)])] = i + s;
    }
    out.kappa = AffinePermutation(std::move(window));
    out.sigma = AffinePermutation(std::move(sigma));
    out.tau_q = translation(out.q);

    if (out.tau_q * out.sigma != out.kappa) throw IdentityFailed("kappa != tau_q sigma for " + lambda.to_string());
    if (min_coset_rep(out.kappa, ParabolicSubset::finite(lambda.n()), Side::Right) != out.tau_q)
        throw IdentityFailed("tau_q is not the minimal representative of kappa W for " + lambda.to_string());
    return out;
}

LaurentMatrix richardson_Z(const TableauData& t) {
    LaurentMatrix z(static_cast<std::size_t>(t.n()));
    for (int c = 1; c <= t.s; ++c)
        for (int j = 1; j < t.nu[c]; ++j) add_to(z, t.f(c, j), t.f(c, j + 1), 1);
    return z;
}

LaurentMatrix richardson_Z(const Composition& lambda) { return richardson_Z(build_tableau(lambda)); }

LaurentMatrix varpi_lift(const TableauData& t) {
    LaurentMatrix m(static_cast<std::size_t>(t.n()));
    for (int c = 1; c <= t.s; ++c) {
        const int h = t.nu[c];
        add_to(m, t.f(c, h), t.f(c, 1), LaurentPoly::t(h - 1));
        for (int j = 2; j <= h; ++j) add_to(m, t.f(c, j - 1), t.f(c, j), -LaurentPoly::t(-1));
    }
    return m;
}

LaurentMatrix witness_b(const TableauData& t) {
    LaurentMatrix m(static_cast<std::size_t>(t.n()));
    for (int c = 1; c <= t.s; ++c)
        for (int j = 1; j <= t.nu[c]; ++j)
            for (int k = j; k <= t.nu[c]; ++k) add_to(m, t.f(c, k), t.f(c, j), LaurentPoly::t(k - j));
    return m;
}

LaurentMatrix witness_c(const TableauData& t, CMatrixIndex index) {
    LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(t.n()));
    for (int c = 1; c <= t.s; ++c)
        for (int j = 2; j <= t.nu[c]; ++j) {
            const int row = index == CMatrixIndex::Corrected ? j : j - 1;
            add_to(m, t.f(c, row), t.f(c, 1), LaurentPoly::t(j - 1));
        }
    return m;
}

bool varpi_identity_holds(const TableauData& t, CMatrixIndex index) {
    const auto n = static_cast<std::size_t>(t.n());
    const LaurentMatrix middle = LaurentMatrix::identity(n) - LaurentPoly::t(-1) * richardson_Z(t);
    return witness_b(t) * middle * witness_c(t, index) == varpi_lift(t);
}

VarpiWitness varpi_witness(const Composition& lambda) {
    const TableauData t = build_tableau(lambda);
    VarpiWitness out{AffinePermutation{}, varpi_lift(t), witness_b(t), witness_c(t)};
    if (!varpi_identity_holds(t, CMatrixIndex::Corrected))
        throw IdentityFailed("b (1 - t^-1 Z) c differs from the lift for " + lambda.to_string());
    if (!in_b_plus(out.b) || !in_b_plus(out.c))
        throw IdentityFailed("witness outside the Iwahori subgroup for " + lambda.to_string());
    out.varpi = from_matrix(out.varpi_lift);
    return out;
}

AffinePermutation varpi_w_g(const TableauData& t, WeylOrientation orientation) {
    std::vector<long> window(static_cast<std::size_t>(t.n()));
    for (int i = 1; i <= t.s; ++i) window[at(i)] = t.f(i, t.nu[i]);
    for (int i = 1; i <= static_cast<int>(t.tmap.size()); ++i) window[at(i + t.s)] = t.iota.at(t.tmap[at(i)]);
    AffinePermutation w(std::move(window));
    return orientation == WeylOrientation::Working ? w : w.inverse();
}

AffinePermutation varpi_w_p(const TableauData& t, WeylOrientation orientation) {
    std::vector<long> window(static_cast<std::size_t>(t.n()));
    for (int i = 1; i <= t.s; ++i) window[at(t.f(i, 1))] = t.l[at(i)];
    for (std::size_t i = 0; i < t.tmap.size(); ++i) window[at(t.tmap[i])] = t.m[i];
    AffinePermutation w(std::move(window));
    return orientation == WeylOrientation::Working ? w : w.inverse();
}

VarpiDecomposition decompose_varpi(const Composition& lambda) {
    const KappaBundle kb = kappa(lambda);
    const TableauData& t = kb.tableau;
    VarpiDecomposition out{varpi_w_g(t), varpi_w_p(t)};
    if (!out.w_g.is_finite()) throw IdentityFailed("w_g is not in W");
    if (!preserves_blocks(out.w_p, lambda)) throw IdentityFailed("w_p is not in W_P");
    if (out.w_g * kb.kappa * out.w_p != from_matrix(varpi_lift(t)))
        throw IdentityFailed("varpi != w_g kappa w_p for " + lambda.to_string());
    return out;
}

long kappa_length_formula(const TableauData& t) {
    long extra = 0;
    for (int k = 1; k <= t.lambda.r(); ++k)
        for (int kp = 1; kp < k; ++kp)
            extra += static_cast<long>(t.rows[at(k)].size()) * static_cast<long>(t.blue[at(kp)].size());
    return 2 * t.lambda.dim_G_P() + extra;
}

KappaReport check_kappa(const Composition& lambda) {
    const KappaBundle kb = kappa(lambda);
    const ParabolicSubset sp = parabolic_of(lambda);
    const int n = lambda.n();
    KappaReport rep;

    rep.in_W_hat_P = std::none_of(sp.indices().begin(), sp.indices().end(),
                                  [&](int i) { return is_right_descent(kb.kappa, i); });

    const AffinePermutation base = min_coset_rep(kb.kappa, sp, Side::Right);
    rep.left_stable = true;
    for (int i = 1; i < n; ++i) {
        if (is_left_descent(kb.kappa, i)) continue;
        if (min_coset_rep(simple_times(i, kb.kappa), sp, Side::Right) != base) rep.left_stable = false;
    }

    rep.length_kappa = length(kb.kappa);
    rep.length_formula = kappa_length_formula(kb.tableau);
    rep.is_compactification = rep.length_kappa == 2 * lambda.dim_G_P();
    // With a single block P = G and both sides vanish; the equivalence
    // concerns proper parabolics.
    rep.compactification_iff_maximal =
        lambda.r() == 1 ? (rep.is_compactification && rep.length_kappa == 0)
                        : rep.is_compactification == (lambda.r() == 2);
    return rep;
}

std::set<RootIdx> conormal_directions(const AffinePermutation& w, const ParabolicSubset& j) {
    const int n = w.period();
    std::set<RootIdx> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            bool in_levi = true;
            for (int k = a; k < b; ++k) in_levi = in_levi && j.contains(k);
            if (in_levi) continue;
            if (act_on_root(w, RootIdx{a, b}).positive()) out.insert(RootIdx{a, b});
        }
    return out;
}

AffinePermutation longest_min_rep(const Composition& lambda) {
    const int n = lambda.n();
    std::vector<long> window(static_cast<std::size_t>(n));
    for (int i = 1; i <= lambda.r(); ++i)
        for (int c = 1; c <= lambda.lambda(i); ++c) window[at(lambda.d(i - 1) + c)] = n - lambda.d(i) + c;
    return AffinePermutation(std::move(window));
}

AffinePermutation divisor_v(int n, int k) {
    if (k < 1 || k >= n) throw BadIndices("divisor reflection index " + std::to_string(k));
    std::vector<long> window(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        long shift = 0;
        if (j == k) shift = -1;
        if (j == k + 1) shift = 1;
        window[at(n + 1 - j)] = j - shift * n;
    }
    return AffinePermutation(std::move(window));
}

DivisorBundle divisor_data(const Composition& lambda, int i) {
    const int r = lambda.r();
    if (i < 1 || i >= r)
        throw BadDivisorIndex("index " + std::to_string(i) + " outside [1, " + std::to_string(r - 1) + "]");
    const int n = lambda.n();
    const ParabolicSubset sp = parabolic_of(lambda);

    DivisorBundle out;
    out.i = i;
    out.k = n - lambda.d(i);
    out.w = simple_times(out.k, longest_min_rep(lambda));
    out.sign = finite_sign(out.w);
    out.lift = out.w.to_matrix();
    out.lift(at(n - lambda.d(i)), at(lambda.d(i - 1) + 1)) = out.sign;
    out.gamma = RootIdx{lambda.d(i - 1) + 1, lambda.d(i + 1)};
    out.v_k = divisor_v(n, out.k);
    out.v_k_min = min_coset_rep(out.v_k, sp, Side::Right);

    if (det(out.lift) != LaurentPoly(1)) throw IdentityFailed("det of the lift is not 1");
    if (conormal_directions(out.w, sp) != std::set<RootIdx>{out.gamma})
        throw IdentityFailed("conormal directions differ from {gamma} for " + lambda.to_string());
    if (length(out.v_k_min) != lambda.dim_G_P())
        throw IdentityFailed("length of the minimal v_k differs from dim G/P for " + lambda.to_string());
    return out;
}

DivisorReduction divisor_reduction(const Composition& lambda, const DivisorBundle& d, const FieldScalar& a) {
    if (a.is_zero()) throw InvalidInput("a must be nonzero");
    const auto n = static_cast<std::size_t>(lambda.n());
    const FieldScalar e(d.sign);
    const int k = d.k;
    const int top = lambda.d(d.i - 1) + 1;
    const int bottom = lambda.d(d.i + 1);

    DivisorReduction out;
    out.b2 = LaurentMatrix::identity(n);
    out.b2(at(k + 1), at(k)) = LaurentPoly::monomial(e / a, 1);
    out.b3 = LaurentMatrix::identity(n);
    out.b3(at(bottom), at(top)) = LaurentPoly::monomial(FieldScalar(1) / a, 1);
    out.b1 = LaurentMatrix::identity(n);
    out.b1(at(k), at(k)) = e / a;
    out.b1(at(k + 1), at(k + 1)) = e * a;

    LaurentMatrix unipotent = LaurentMatrix::identity(n);
    unipotent(at(top), at(bottom)) = LaurentPoly::monomial(-a, -1);
    out.reduced = out.b1 * out.b2 * d.lift * unipotent * out.b3;
    return out;
}

}  // namespace affs
