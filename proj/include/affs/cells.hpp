#pragma once

#include <vector>

#include "affs/affine_weyl.hpp"
#include "affs/laurent.hpp"
#include "affs/partitions.hpp"

namespace affs {

using LaurentVector = std::vector<LaurentPoly>;

/// Column echelon form over k[t] of a polynomial generating set: upper
/// triangular, monic pivots, entries right of a pivot reduced modulo it.
/// Throws NotALattice when the generators do not have full rank.
LaurentMatrix hermite_form(std::size_t n, std::vector<LaurentVector> generators);

/// A k[t]-submodule of V[t, t^-1] of full rank, sandwiched between two
/// t-power multiples of V[t]. Stored by its canonical basis
/// t^-N * hermite_form(t^N * generators), which does not depend on N.
class Lattice {
public:
    Lattice() = default;
    /// Column span of basis. Throws NotALattice unless det(basis) is a
    /// single nonzero term.
    explicit Lattice(const LaurentMatrix& basis);

    /// Throws NotALattice when the span is not a lattice.
    static Lattice from_generators(std::size_t n, std::vector<LaurentVector> generators);
    /// V[t]
    static Lattice standard(std::size_t n);

    std::size_t dimension() const { return basis_.size(); }
    const LaurentMatrix& basis() const { return basis_; }
    std::vector<LaurentVector> basis_columns() const;

    /// dim(L / L cap E) - dim(E / L cap E) = -ord det(basis).
    long vdim() const;

    bool contains(const LaurentVector& v) const;
    bool contains(const Lattice& other) const;

    /// t^k L
    Lattice scaled(int k) const;

    friend Lattice operator+(const Lattice& a, const Lattice& b);
    /// g L for an invertible Laurent matrix g.
    friend Lattice operator*(const LaurentMatrix& g, const Lattice& l);
    friend bool operator==(const Lattice& a, const Lattice& b) = default;

private:
    LaurentMatrix basis_;
};

/// dim(outer / inner). Throws NotContained unless inner is a sublattice.
long quotient_dim(const Lattice& outer, const Lattice& inner);

struct FlagCheck {
    bool chain = false;         // L_0 in L_1 in ... in L_r
    bool t_closure = false;     // t L_r == L_0
    bool step_dims = false;     // dim L_i / L_{i-1} == lambda_i
    bool vdim_zero = false;     // vdim(L_0) == 0
    bool ok() const { return chain && t_closure && step_dims && vdim_zero; }
};

struct AffineFlag {
    std::vector<Lattice> lattices;  // L_0, ..., L_r
    Composition shape;

    FlagCheck check() const;
    friend bool operator==(const AffineFlag&, const AffineFlag&) = default;
};

/// X V_i in V_{i-1} for the standard flag V_i = span(e_1, ..., e_{d_i}).
bool in_nilradical(const LaurentMatrix& x, const Composition& lambda);

struct PhiResult {
    LaurentMatrix point;  // g (1 - t^-1 X)
    AffineFlag flag;      // L_i = point * D_i * V[t], D_i = diag(t^-1 on the first d_i coordinates)
};

/// Throws NotUnimodular unless g is constant with det 1, NotInNilradical
/// unless X is a constant element of the nilradical, IdentityFailed if the
/// resulting flag violates an invariant.
PhiResult phi_P(const LaurentMatrix& g, const LaurentMatrix& x, const Composition& lambda);

struct PsiResult {
    LaurentMatrix point;  // 1 - t^-1 X
    Lattice lattice;
};

/// Throws NotNilpotent.
PsiResult psi(const LaurentMatrix& x);

/// w(j) = min { i : M u_j in Lambda_i + M Lambda_{j-1} } over the periodic
/// chain Lambda_i = span { u_k : k <= i }, u_{qn+r} = t^-q e_r. M lies in
/// Iwahori w Iwahori for the upper-triangular-mod-t Iwahori subgroup.
/// Throws NotUnimodular unless det M is a single term of order 0.
AffinePermutation iwahori_cell(const LaurentMatrix& m);

AffinePermutation parabolic_cell(const LaurentMatrix& m, const ParabolicSubset& j);

/// L_i = (1 - t^-1 X) V[t] + t^-1 F_i for 0 <= i <= r, where F_i is spanned
/// by the first d_i columns of the constant invertible matrix g. Throws
/// NotInNilradical unless X F_i is in F_{i-1}, NotNilpotent for non-constant X.
std::vector<Lattice> mv_embed(const LaurentMatrix& x, const LaurentMatrix& g, const Composition& lambda);

/// (L_0 in L_1 in t^-1 V[t]) to (L_0 in L_1 in t^-1 L_0). Throws
/// NotMaximalParabolic unless lambda has exactly two parts.
AffineFlag beta(const std::vector<Lattice>& mv_flag, const Composition& lambda);

}  // namespace affs
