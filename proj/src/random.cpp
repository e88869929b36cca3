#include "affs/random.hpp"

#include <algorithm>

namespace affs {

namespace {

LaurentMatrix random_det_one_diagonal(std::size_t n, Rng& rng) {
    LaurentMatrix d = LaurentMatrix::identity(n);
    FieldScalar product(1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const FieldScalar c = nonzero_scalar(rng, -2, 2);
        d(i, i) = c;
        product *= c;
    }
    d(n - 1, n - 1) = product.inverse();
    return d;
}

LaurentMatrix elementary(std::size_t n, std::size_t r, std::size_t c, const LaurentPoly& p) {
    LaurentMatrix e = LaurentMatrix::identity(n);
    e(r, c) = p;
    return e;
}

}  // namespace

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

FieldScalar nonzero_scalar(Rng& rng, long lo, long hi) {
    while (true) {
        const long v = uniform_int(rng, lo, hi);
        if (v != 0) return FieldScalar(v);
    }
}

LaurentMatrix random_iwahori(std::size_t n, Rng& rng) {
    LaurentMatrix m = random_det_one_diagonal(n, rng);
    if (n < 2) return m;
    const long factors = 2 * static_cast<long>(n);
    for (long k = 0; k < factors; ++k) {
        const auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
        auto c = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
        if (c >= r) ++c;
        LaurentPoly p = LaurentPoly::monomial(FieldScalar(uniform_int(rng, -2, 2)), 1) +
                        LaurentPoly::monomial(FieldScalar(uniform_int(rng, -1, 1)), 2);
        if (r < c) p += FieldScalar(uniform_int(rng, -2, 2));
        m = m * elementary(n, r, c, p);
    }
    return m;
}

LaurentMatrix random_sl(std::size_t n, Rng& rng) {
    LaurentMatrix m = random_det_one_diagonal(n, rng);
    if (n < 2) return m;
    const long factors = 3 * static_cast<long>(n);
    for (long k = 0; k < factors; ++k) {
        const auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
        auto c = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
        if (c >= r) ++c;
        m = m * elementary(n, r, c, FieldScalar(uniform_int(rng, -2, 2)));
    }
    return m;
}

LaurentMatrix random_borel(std::size_t n, Rng& rng) {
    LaurentMatrix m = random_det_one_diagonal(n, rng);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) m(r, c) = FieldScalar(uniform_int(rng, -2, 2));
    return m;
}

LaurentMatrix random_parabolic(const Composition& lambda, Rng& rng) {
    const auto n = static_cast<std::size_t>(lambda.n());
    LaurentMatrix m = random_det_one_diagonal(n, rng);
    const long factors = 3 * static_cast<long>(n);
    for (long k = 0; k < factors && n > 1; ++k) {
        const auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
        const auto c = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
        if (r == c || lambda.block_of(static_cast<int>(r + 1)) > lambda.block_of(static_cast<int>(c + 1))) continue;
        m = m * elementary(n, r, c, FieldScalar(uniform_int(rng, -2, 2)));
    }
    return m;
}

LaurentMatrix random_nilradical(const Composition& lambda, Rng& rng) {
    const auto n = static_cast<std::size_t>(lambda.n());
    LaurentMatrix x(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (lambda.block_of(static_cast<int>(r + 1)) < lambda.block_of(static_cast<int>(c + 1)))
                x(r, c) = FieldScalar(uniform_int(rng, -2, 2));
    return x;
}

AffinePermutation random_affine_permutation(int n, long max_shift, Rng& rng) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<long> c(static_cast<std::size_t>(n));
    while (true) {
        long sum = 0;
        for (int i = 0; i + 1 < n; ++i) sum += c[static_cast<std::size_t>(i)] = uniform_int(rng, -max_shift, max_shift);
        if (std::labs(sum) <= max_shift) {
            c.back() = -sum;
            break;
        }
    }
    std::vector<long> window(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        window[static_cast<std::size_t>(i)] = sigma[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)] * n;
    return AffinePermutation(std::move(window));
}

}  // namespace affs
