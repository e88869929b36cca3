#include "affs/cells.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "affs/errors.hpp"

namespace affs {

namespace {

LaurentVector column(const LaurentMatrix& m, std::size_t c) {
    LaurentVector v(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) v[r] = m(r, c);
    return v;
}

std::vector<LaurentVector> columns(const LaurentMatrix& m) {
    std::vector<LaurentVector> out;
    for (std::size_t c = 0; c < m.size(); ++c) out.push_back(column(m, c));
    return out;
}

LaurentVector mat_vec(const LaurentMatrix& m, const LaurentVector& v) {
    LaurentVector out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    return out;
}

void axpy(LaurentVector& y, const LaurentPoly& a, const LaurentVector& x) {
    for (std::size_t r = 0; r < y.size(); ++r)
        if (!x[r].is_zero()) y[r] -= a * x[r];
}

bool is_zero(const LaurentVector& v) {
    return std::all_of(v.begin(), v.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

Valuation min_order(const std::vector<LaurentVector>& vs) {
    Valuation best;
    for (const auto& v : vs)
        for (const auto& p : v) best = std::min(best, p.ord());
    return best;
}

std::vector<LaurentVector> shifted(std::vector<LaurentVector> vs, int k) {
    for (auto& v : vs)
        for (auto& p : v) p = p.shifted(k);
    return vs;
}

/// Solves H x = v over k[t] for an upper triangular H with nonzero diagonal.
bool solvable(const LaurentMatrix& h, const LaurentVector& v) {
    const std::size_t n = h.size();
    LaurentVector x(n);
    for (std::size_t k = n; k-- > 0;) {
        LaurentPoly rhs = v[k];
        for (std::size_t c = k + 1; c < n; ++c)
            if (!h(k, c).is_zero() && !x[c].is_zero()) rhs -= h(k, c) * x[c];
        auto [quot, rem] = divmod(rhs, h(k, k));
        if (!rem.is_zero()) return false;
        x[k] = std::move(quot);
    }
    return true;
}

/// u_k = t^-q e_r for k = qn + r, 1 <= r <= n.
LaurentVector chain_vector(std::size_t n, long k) {
    const long nn = static_cast<long>(n);
    const long r = ((k - 1) % nn + nn) % nn + 1;
    const long q = (k - r) / nn;
    LaurentVector v(n);
    v[static_cast<std::size_t>(r - 1)] = LaurentPoly::t(static_cast<int>(-q));
    return v;
}

/// Basis u_{i-n+1}, ..., u_i of Lambda_i.
std::vector<LaurentVector> chain_basis(std::size_t n, long i) {
    std::vector<LaurentVector> out;
    for (long k = i - static_cast<long>(n) + 1; k <= i; ++k) out.push_back(chain_vector(n, k));
    return out;
}

void require_constant_unimodular(const LaurentMatrix& g) {
    if (!g.is_constant()) throw NotUnimodular("g has non-constant entries");
    if (det(g) != LaurentPoly(1)) throw NotUnimodular("det g = " + det(g).to_string());
}

}  // namespace

LaurentMatrix hermite_form(std::size_t n, std::vector<LaurentVector> generators) {
    std::vector<LaurentVector> active;
    for (auto& g : generators) {
        if (g.size() != n) throw SizeMismatch("generator length differs from n");
        if (!std::all_of(g.begin(), g.end(), [](const LaurentPoly& p) { return p.is_polynomial(); }))
            throw InvalidInput("hermite_form needs polynomial generators");
        if (!is_zero(g)) active.push_back(std::move(g));
    }
    std::vector<LaurentVector> pivots(n);
    for (std::size_t r = n; r-- > 0;) {
        while (true) {
            std::size_t best = active.size();
            std::size_t count = 0;
            for (std::size_t c = 0; c < active.size(); ++c) {
                if (active[c][r].is_zero()) continue;
                ++count;
                if (best == active.size() || active[c][r].degree() < active[best][r].degree()) best = c;
            }
            if (count == 0) throw NotALattice("generators are rank deficient");
            if (count == 1) {
                pivots[r] = std::move(active[best]);
                active.erase(active.begin() + static_cast<long>(best));
                break;
            }
            for (std::size_t c = 0; c < active.size(); ++c) {
                if (c == best || active[c][r].is_zero()) continue;
                const LaurentPoly q = divmod(active[c][r], active[best][r]).quotient;
                axpy(active[c], q, active[best]);
            }
        }
        const FieldScalar lead = pivots[r][r].leading_coeff().inverse();
        for (auto& p : pivots[r]) p *= lead;
    }
    for (std::size_t r = n; r-- > 0;)
        for (std::size_t c = r + 1; c < n; ++c) {
            if (pivots[c][r].is_zero()) continue;
            const LaurentPoly q = divmod(pivots[c][r], pivots[r][r]).quotient;
            if (!q.is_zero()) axpy(pivots[c], q, pivots[r]);
        }
    LaurentMatrix h(n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) h(r, c) = std::move(pivots[c][r]);
    return h;
}

Lattice::Lattice(const LaurentMatrix& basis) { *this = from_generators(basis.size(), columns(basis)); }

Lattice Lattice::from_generators(std::size_t n, std::vector<LaurentVector> generators) {
    const Valuation low = min_order(generators);
    if (low.is_infinite()) throw NotALattice("no nonzero generators");
    const int shift = -low.value();
    LaurentMatrix h = hermite_form(n, shifted(std::move(generators), shift));
    for (std::size_t i = 0; i < n; ++i)
        if (!h(i, i).is_unit()) throw NotALattice("pivot " + h(i, i).to_string() + " is not a power of t");
    Lattice l;
    l.basis_ = h.shifted(-shift);
    return l;
}

Lattice Lattice::standard(std::size_t n) { return Lattice(LaurentMatrix::identity(n)); }

std::vector<LaurentVector> Lattice::basis_columns() const { return columns(basis_); }

long Lattice::vdim() const {
    long total = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) total += basis_(i, i).ord().value();
    return -total;
}

bool Lattice::contains(const LaurentVector& v) const {
    if (v.size() != dimension()) throw SizeMismatch("vector length differs from lattice dimension");
    if (is_zero(v)) return true;
    const Valuation low = std::min(basis_.min_order(), min_order({v}));
    const int shift = std::max(0, -low.value());
    LaurentVector w = v;
    for (auto& p : w) p = p.shifted(shift);
    return solvable(basis_.shifted(shift), w);
}

bool Lattice::contains(const Lattice& other) const {
    for (const auto& v : other.basis_columns())
        if (!contains(v)) return false;
    return true;
}

Lattice Lattice::scaled(int k) const {
    Lattice l;
    l.basis_ = basis_.shifted(k);
    return l;
}

Lattice operator+(const Lattice& a, const Lattice& b) {
    auto gens = a.basis_columns();
    for (auto& v : b.basis_columns()) gens.push_back(std::move(v));
    return Lattice::from_generators(a.dimension(), std::move(gens));
}

Lattice operator*(const LaurentMatrix& g, const Lattice& l) { return Lattice(g * l.basis()); }

long quotient_dim(const Lattice& outer, const Lattice& inner) {
    const LaurentMatrix q = invert(outer.basis()) * inner.basis();
    if (!q.is_polynomial()) throw NotContained("inner lattice is not contained in outer");
    return det(q).ord().value();
}

FlagCheck AffineFlag::check() const {
    FlagCheck out;
    const int r = shape.r();
    if (static_cast<int>(lattices.size()) != r + 1) return out;
    out.chain = true;
    out.step_dims = true;
    for (int i = 1; i <= r; ++i) {
        const auto& outer = lattices[static_cast<std::size_t>(i)];
        const auto& inner = lattices[static_cast<std::size_t>(i - 1)];
        if (!outer.contains(inner)) {
            out.chain = false;
            out.step_dims = false;
            continue;
        }
        if (quotient_dim(outer, inner) != shape.lambda(i)) out.step_dims = false;
    }
    out.t_closure = lattices.back().scaled(1) == lattices.front();
    out.vdim_zero = lattices.front().vdim() == 0;
    return out;
}

bool in_nilradical(const LaurentMatrix& x, const Composition& lambda) {
    if (!x.is_constant() || static_cast<int>(x.size()) != lambda.n()) return false;
    for (int r = 1; r <= lambda.n(); ++r)
        for (int c = 1; c <= lambda.n(); ++c)
            if (!x(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)).is_zero() &&
                lambda.block_of(r) >= lambda.block_of(c))
                return false;
    return true;
}

PhiResult phi_P(const LaurentMatrix& g, const LaurentMatrix& x, const Composition& lambda) {
    if (static_cast<int>(g.size()) != lambda.n()) throw SizeMismatch("g does not match lambda");
    require_constant_unimodular(g);
    if (!in_nilradical(x, lambda)) throw NotInNilradical("X does not map V_i into V_{i-1}");
    const auto n = static_cast<std::size_t>(lambda.n());
    PhiResult out;
    out.point = g * (LaurentMatrix::identity(n) - LaurentPoly::t(-1) * x);
    out.flag.shape = lambda;
    for (int i = 0; i <= lambda.r(); ++i) {
        LaurentMatrix step = out.point;
        for (std::size_t c = 0; c < static_cast<std::size_t>(lambda.d(i)); ++c)
            for (std::size_t r = 0; r < n; ++r) step(r, c) = step(r, c).shifted(-1);
        out.flag.lattices.emplace_back(step);
    }
    if (!out.flag.check().ok()) throw IdentityFailed("phi_P flag violates an affine flag invariant");
    return out;
}

PsiResult psi(const LaurentMatrix& x) {
    if (!x.is_constant()) throw NotNilpotent("X has non-constant entries");
    LaurentMatrix power = LaurentMatrix::identity(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) power = power * x;
    if (power != LaurentMatrix(x.size())) throw NotNilpotent("X^n != 0");
    PsiResult out;
    out.point = LaurentMatrix::identity(x.size()) - LaurentPoly::t(-1) * x;
    out.lattice = Lattice(out.point);
    return out;
}

AffinePermutation iwahori_cell(const LaurentMatrix& m) {
    const LaurentPoly d = det(m);
    if (!d.is_unit() || d.ord().value() != 0) throw NotUnimodular("det M = " + d.to_string());
    const std::size_t n = m.size();
    const long nn = static_cast<long>(n);
    std::vector<long> window(n);
    for (long j = 1; j <= nn; ++j) {
        std::vector<LaurentVector> below;
        for (const auto& v : chain_basis(n, j - 1)) below.push_back(mat_vec(m, v));
        const LaurentVector target = mat_vec(m, chain_vector(n, j));

        long i = std::numeric_limits<long>::min();
        for (std::size_t r = 0; r < n; ++r)
            if (!target[r].is_zero())
                i = std::max(i, static_cast<long>(r + 1) - static_cast<long>(target[r].ord().value()) * nn);
        while (true) {
            auto gens = below;
            for (auto& v : chain_basis(n, i - 1)) gens.push_back(std::move(v));
            if (!Lattice::from_generators(n, std::move(gens)).contains(target)) break;
            --i;
        }
        window[static_cast<std::size_t>(j - 1)] = i;
    }
    return AffinePermutation(std::move(window));
}

AffinePermutation parabolic_cell(const LaurentMatrix& m, const ParabolicSubset& j) {
    return min_coset_rep(iwahori_cell(m), j, Side::Right);
}

std::vector<Lattice> mv_embed(const LaurentMatrix& x, const LaurentMatrix& g, const Composition& lambda) {
    if (!x.is_constant()) throw NotNilpotent("X has non-constant entries");
    if (!g.is_constant() || det(g).is_zero()) throw NotUnimodular("flag basis must be constant and invertible");
    if (!in_nilradical(invert(g) * x * g, lambda)) throw NotInNilradical("X F_i is not inside F_{i-1}");
    const auto n = static_cast<std::size_t>(lambda.n());
    const LaurentMatrix point = LaurentMatrix::identity(n) - LaurentPoly::t(-1) * x;
    std::vector<Lattice> out;
    for (int i = 0; i <= lambda.r(); ++i) {
        auto gens = columns(point);
        for (std::size_t c = 0; c < static_cast<std::size_t>(lambda.d(i)); ++c) {
            LaurentVector v = column(g, c);
            for (auto& p : v) p = p.shifted(-1);
            gens.push_back(std::move(v));
        }
        out.push_back(Lattice::from_generators(n, std::move(gens)));
    }
    return out;
}

AffineFlag beta(const std::vector<Lattice>& mv_flag, const Composition& lambda) {
    if (lambda.r() != 2) throw NotMaximalParabolic("beta needs exactly two blocks, got " + std::to_string(lambda.r()));
    if (mv_flag.size() < 2) throw InvalidInput("beta needs L_0 and L_1");
    return AffineFlag{{mv_flag[0], mv_flag[1], mv_flag[0].scaled(-1)}, lambda};
}

}  // namespace affs
