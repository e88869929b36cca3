#pragma once

#include <cstdint>
#include <random>

#include "affs/affine_weyl.hpp"
#include "affs/field.hpp"
#include "affs/laurent.hpp"
#include "affs/partitions.hpp"

namespace affs {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);
/// Uniform in [lo, hi] minus {0}.
FieldScalar nonzero_scalar(Rng& rng, long lo = -3, long hi = 3);

/// Element of the Iwahori subgroup with det 1: a product of diagonal
/// factors of det 1, constant upper unipotents and t-multiples below the
/// diagonal.
LaurentMatrix random_iwahori(std::size_t n, Rng& rng);
/// Constant matrix of det 1 (product of elementary matrices).
LaurentMatrix random_sl(std::size_t n, Rng& rng);
/// Constant upper triangular matrix of det 1.
LaurentMatrix random_borel(std::size_t n, Rng& rng);
/// Constant block upper triangular matrix of det 1 for the blocks of lambda.
LaurentMatrix random_parabolic(const Composition& lambda, Rng& rng);
/// Constant element of the nilradical, entries in [-2, 2].
LaurentMatrix random_nilradical(const Composition& lambda, Rng& rng);

/// Random element with |c_i| <= max_shift: uniform finite part, shifts
/// drawn uniformly and rejected until they sum to zero.
AffinePermutation random_affine_permutation(int n, long max_shift, Rng& rng);

}  // namespace affs
