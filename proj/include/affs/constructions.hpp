#pragma once

#include <set>
#include <utility>
#include <vector>

#include "affs/affine_weyl.hpp"
#include "affs/laurent.hpp"
#include "affs/partitions.hpp"
#include "affs/tableau.hpp"

namespace affs {

/// S_0 minus {alpha_{d_1}, ..., alpha_{d_{r-1}}}.
ParabolicSubset parabolic_of(const Composition& lambda);

/// F^c_{a,b} = E_{f^c_a, f^c_b} as a 0/1 constant matrix.
LaurentMatrix column_unit(const TableauData& t, int column, int a, int b);

struct KappaBundle {
    Composition lambda;
    TableauData tableau;
    AffinePermutation kappa;
    AffinePermutation tau_q;
    AffinePermutation sigma;  // finite part, kappa = tau_q * sigma
    std::vector<long> q;
};

/// kappa = sum t^{nu_i - 1} E_{i, l(i)} + sum t^{-1} E_{i+s, m(i)}.
/// Throws IdentityFailed if a bundle invariant does not hold.
KappaBundle kappa(const Composition& lambda);

/// Z = sum_c sum_j F^c_{j, j+1}.
LaurentMatrix richardson_Z(const Composition& lambda);
LaurentMatrix richardson_Z(const TableauData& t);

enum class CMatrixIndex {
    Corrected,  // sum_{j>=2} t^{j-1} F^c_{j,1}
    AsPrinted,  // sum_{j>=2} t^{j-1} F^c_{j-1,1}
};

struct VarpiWitness {
    AffinePermutation varpi;
    LaurentMatrix varpi_lift;
    LaurentMatrix b;
    LaurentMatrix c;
};

LaurentMatrix varpi_lift(const TableauData& t);
LaurentMatrix witness_b(const TableauData& t);
LaurentMatrix witness_c(const TableauData& t, CMatrixIndex index = CMatrixIndex::Corrected);

/// b (1 - t^-1 Z) c == lift with b, c in the Iwahori subgroup. Throws
/// IdentityFailed otherwise.
VarpiWitness varpi_witness(const Composition& lambda);

/// True iff b (1 - t^-1 Z) c reproduces the lift with the chosen c.
bool varpi_identity_holds(const TableauData& t, CMatrixIndex index);

/// Working: w_g = sum E_{f^i_{nu_i}, i} + sum E_{iota(t(i)), i+s} and
/// w_p = sum E_{l(i), f^i_1} + sum E_{m(i), t(i)}.
/// Transposed: the inverses, w_g = sum E_{i, f^i_{nu_i}} + ... and
/// w_p = sum E_{f^i_1, l(i)} + sum E_{t(i), m(i)}.
enum class WeylOrientation { Working, Transposed };

struct VarpiDecomposition {
    AffinePermutation w_g;
    AffinePermutation w_p;
};

AffinePermutation varpi_w_g(const TableauData& t, WeylOrientation orientation = WeylOrientation::Working);
AffinePermutation varpi_w_p(const TableauData& t, WeylOrientation orientation = WeylOrientation::Working);

/// varpi = w_g * kappa * w_p with w_g in W and w_p in W_P. Throws
/// IdentityFailed otherwise.
VarpiDecomposition decompose_varpi(const Composition& lambda);

struct KappaReport {
    bool in_W_hat_P = false;
    bool left_stable = false;
    long length_kappa = 0;
    long length_formula = 0;
    bool is_compactification = false;  // length(kappa) == 2 dim G/P
    bool compactification_iff_maximal = false;

    bool all_ok() const {
        return in_W_hat_P && left_stable && length_kappa == length_formula && compactification_iff_maximal;
    }
};

/// 2 dim G/P + sum_{k' < k} #Row(k) #Blue(k').
long kappa_length_formula(const TableauData& t);

KappaReport check_kappa(const Composition& lambda);

/// Positive finite roots alpha outside Delta_J with w(alpha) > 0.
std::set<RootIdx> conormal_directions(const AffinePermutation& w, const ParabolicSubset& j);

/// Longest minimal representative: w0^P(d_{i-1} + c) = n - d_i + c.
AffinePermutation longest_min_rep(const Composition& lambda);

struct DivisorBundle {
    int i = 1;
    int k = 1;  // n - d_i
    AffinePermutation w;  // s_k w0^P
    int sign = 1;         // e = sign of w
    LaurentMatrix lift;   // permutation matrix of w with e at (n - d_i, d_{i-1} + 1)
    RootIdx gamma;        // (d_{i-1} + 1, d_{i+1})
    AffinePermutation v_k;
    AffinePermutation v_k_min;
};

/// v_k = sum a_j E_{j, n+1-j}, a_k = t^-1, a_{k+1} = t, 1 otherwise.
AffinePermutation divisor_v(int n, int k);

/// Throws BadDivisorIndex unless 1 <= i < r, IdentityFailed if a claimed
/// property fails.
DivisorBundle divisor_data(const Composition& lambda, int i);

struct DivisorReduction {
    LaurentMatrix b1, b2, b3;
    LaurentMatrix reduced;  // b1 b2 lift (1 - a t^-1 E_gamma) b3
};

/// Applies the explicit Iwahori witnesses to lift (1 - a t^-1 E_gamma).
DivisorReduction divisor_reduction(const Composition& lambda, const DivisorBundle& d, const FieldScalar& a);

}  // namespace affs
