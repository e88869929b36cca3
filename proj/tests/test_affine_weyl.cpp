#include <doctest.h>

#include "affs/errors.hpp"
#include "affs/random.hpp"
#include "oracles.hpp"

using namespace affs;

TEST_CASE("windows are validated") {
    CHECK_NOTHROW(AffinePermutation({0, 3}));
    CHECK_THROWS_AS(AffinePermutation({1, 3}), InvalidInput);  // residues collide
    CHECK_THROWS_AS(AffinePermutation({2, 3}), InvalidInput);  // sum condition
    const AffinePermutation w({-1, 4});
    CHECK(w(3) == 1);
    CHECK(w(0) == 2);
    CHECK(w.sigma(1) == 1);
    CHECK(w.shift(1) == 1);
    CHECK(w.shift(2) == -1);
}

TEST_CASE("simple reflections and reflections") {
    for (int n = 2; n <= 6; ++n) {
        const auto s0 = simple_reflection(n, 0);
        CHECK(s0.window().front() == 0);
        CHECK(s0.window().back() == n + 1);
        CHECK(s0 == reflection(n, 0, 1));
        for (int i = 1; i < n; ++i) CHECK(simple_reflection(n, i) == reflection(n, i, i + 1));
        for (int i = 0; i < n; ++i) CHECK(length(simple_reflection(n, i)) == 1);
    }
    CHECK(reflection(3, 1, 3).window() == std::vector<long>{3, 2, 1});
    CHECK_THROWS_AS(reflection(3, 1, 4), BadIndices);
}

TEST_CASE("matrix and window views") {
    const AffinePermutation w({-1, 4});
    const auto m = w.to_matrix();
    CHECK(m(0, 0) == LaurentPoly::t(1));
    CHECK(m(1, 1) == LaurentPoly::t(-1));
    CHECK(from_matrix(m) == w);
    CHECK(ord(det(w.signed_lift())) == Valuation(0));
    CHECK(det(w.signed_lift()) == LaurentPoly(1));

    LaurentMatrix bad(2);
    bad(0, 0) = LaurentPoly::t(1);
    bad(1, 1) = 1;
    CHECK_THROWS_AS(from_matrix(bad), NotMonomialPermutation);
    LaurentMatrix two(2);
    two(0, 0) = 1;
    two(1, 0) = 1;
    two(1, 1) = 1;
    CHECK_THROWS_AS(from_matrix(two), NotMonomialPermutation);

    Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 1, 6));
        const auto u = random_affine_permutation(n, 3, rng);
        const auto v = random_affine_permutation(n, 3, rng);
        CHECK(oracle::window_of(u.to_matrix()) == u.window());
        CHECK(from_matrix(u.to_matrix() * v.to_matrix()) == u * v);
        CHECK((u * v).window() == oracle::compose(u.window(), v.window()));
        CHECK((u * u.inverse()).is_identity());
        CHECK(det(u.signed_lift()) == LaurentPoly(1));
    }
    CHECK_THROWS_AS(compose(AffinePermutation::identity(2), AffinePermutation::identity(3)), PeriodMismatch);
}

TEST_CASE("length against inversion counting") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : length_ball(n, 5)) {
            CHECK(length(w) == oracle::inversions(w.window()));
            CHECK(length(w) == length_oracle(w));
            CHECK(static_cast<long>(reduced_word(w).size()) == length(w));
        }
    Rng rng(4);
    for (int k = 0; k < 300; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 2, 7));
        const auto w = random_affine_permutation(n, 5, rng);
        CHECK(length(w) == oracle::inversions(w.window()));
        CHECK(length(w) == length(w.inverse()));
    }
}

TEST_CASE("length balls have the affine Poincare series") {
    // Bott: (1 + q) / (1 - q) for n = 2 and (1 + q + q^2) / (1 - q)^2 for n = 3.
    const auto ball = length_ball(2, 6);
    std::vector<int> counts(7, 0);
    for (const auto& w : ball) ++counts[static_cast<std::size_t>(length(w))];
    CHECK(counts == std::vector<int>{1, 2, 2, 2, 2, 2, 2});
    const auto ball3 = length_ball(3, 3);
    std::vector<int> c3(4, 0);
    for (const auto& w : ball3) ++c3[static_cast<std::size_t>(length(w))];
    CHECK(c3 == std::vector<int>{1, 3, 6, 9});
}

TEST_CASE("reduced words multiply back") {
    Rng rng(8);
    for (int k = 0; k < 100; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 2, 5));
        const auto w = random_affine_permutation(n, 3, rng);
        auto x = AffinePermutation::identity(n);
        for (int s : reduced_word(w)) x = times_simple(x, s);
        CHECK(x == w);
        CHECK(simple_times(0, w) == simple_reflection(n, 0) * w);
    }
}

TEST_CASE("roots") {
    CHECK(RootIdx::canonical(3, 4, 2) == RootIdx{1, -1});
    CHECK(!RootIdx::canonical(3, 4, 2).positive());
    const AffinePermutation w({-1, 4});
    CHECK(act_on_root(w, RootIdx{1, 2}) == RootIdx{1, 6});
    Rng rng(2);
    for (int k = 0; k < 200; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 2, 5));
        const auto u = random_affine_permutation(n, 3, rng);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                const RootIdx alpha{a, b};
                CHECK(act_on_root(u, alpha).positive() == (length(u * reflection(n, a, b)) > length(u)));
                const auto v = random_affine_permutation(n, 2, rng);
                CHECK(act_on_root(u * v, alpha) == act_on_root(u, act_on_root(v, alpha)));
            }
    }
}

TEST_CASE("translations") {
    const auto tau = translation({1, -1});
    CHECK(tau.window() == std::vector<long>{-1, 4});
    CHECK(length(tau) == 2);
    CHECK(pairing(RootIdx{1, 2}, {1, -1}) == -2);
    CHECK(pairing(RootIdx{1, 2}, {-1, 1}) == 2);
    CHECK(act_on_root(translation({-1, 1}), RootIdx{1, 2}) == RootIdx{1, -2});
    CHECK(length(translation({-1, 1}) * simple_reflection(2, 1)) == 1);
    CHECK_THROWS(translation({1, 0}));
    Rng rng(13);
    for (int k = 0; k < 100; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 2, 6));
        const auto w = random_affine_permutation(n, 4, rng);
        const auto d = decompose_translation(w);
        CHECK(d.sigma.is_finite());
        CHECK(d.sigma * translation(d.q) == w);
        CHECK(translation_action_holds(d.q));
    }
}

TEST_CASE("Bruhat order against subword enumeration") {
    for (int n = 2; n <= 3; ++n) {
        const auto ball = length_ball(n, 4);
        for (const auto& w : ball) {
            const auto interval = oracle::lower_interval(w.window());
            for (const auto& v : ball) CHECK(bruhat_leq(v, w) == (interval.count(v.window()) > 0));
            CHECK(subword_interval(w).size() == interval.size());
        }
    }
    BruhatOracle oracle_cache;
    const auto s0 = simple_reflection(3, 0);
    CHECK(oracle_cache.leq(AffinePermutation::identity(3), s0));
    CHECK(!oracle_cache.leq(s0, AffinePermutation::identity(3)));
    CHECK(oracle_cache.cache_size() > 0);
    CHECK_THROWS_AS(bruhat_leq(s0, AffinePermutation::identity(2)), PeriodMismatch);
}

TEST_CASE("minimal coset representatives") {
    const auto s0 = ParabolicSubset::finite(3);
    CHECK(s0.indices() == std::vector<int>{1, 2});
    CHECK(ParabolicSubset::from_block_ends(5, {0, 2, 5}).indices() == std::vector<int>{1, 3, 4});
    CHECK_THROWS_AS(ParabolicSubset(3, {3}), BadIndices);
    const auto w0 = AffinePermutation::from_permutation({3, 2, 1});
    CHECK(min_coset_rep(w0, s0, Side::Right).is_identity());
    Rng rng(17);
    for (int k = 0; k < 100; ++k) {
        const int n = static_cast<int>(uniform_int(rng, 2, 5));
        const auto w = random_affine_permutation(n, 3, rng);
        const auto j = ParabolicSubset::finite(n);
        const auto u = min_coset_rep(w, j, Side::Right);
        CHECK(length(u) <= length(w));
        CHECK((u.inverse() * w).is_finite());
        for (int i = 1; i < n; ++i) CHECK(length(times_simple(u, i)) > length(u));
        const auto l = min_coset_rep(w, j, Side::Left);
        CHECK((w * l.inverse()).is_finite());
        for (int i = 1; i < n; ++i) CHECK(length(simple_times(i, l)) > length(l));
    }
}

TEST_CASE("spherical orbit picks the longest element of W^{S_0} in W w W") {
    const int n = 3;
    const auto tau = translation({1, 0, -1});
    const auto orbit = spherical_orbit(tau);
    const auto fin = ParabolicSubset::finite(n);
    CHECK(min_coset_rep(orbit, fin, Side::Right) == orbit);
    const auto w0 = AffinePermutation::from_permutation({3, 2, 1});
    for (const auto& x : {AffinePermutation::identity(n), simple_reflection(n, 1), w0})
        for (const auto& y : {AffinePermutation::identity(n), simple_reflection(n, 2), w0})
            CHECK(spherical_orbit(x * tau * y) == orbit);
}

TEST_CASE("four-element minimum") {
    // ord(t_a) == ord(t_b)
    const auto w = AffinePermutation::from_permutation({2, 1, 3});
    const auto q1 = quad_minimum(w, 1, 2);
    CHECK(q1.which_case == 1);
    CHECK(q1.minimum.is_identity());
    CHECK(q1.verified);

    // sigma(a) > sigma(b): the printed rule applies
    const AffinePermutation v({0, 1, 5});
    const auto q2 = quad_minimum(v, 1, 2);
    CHECK(q2.which_case == 2);
    CHECK(q2.minimum == v);
    CHECK(q2.verified);

    // sigma(a) < sigma(b): the printed rule would pick w, which is not minimal
    const AffinePermutation x({-3, 6});
    const auto q3 = quad_minimum(x, 1, 2);
    CHECK(q3.which_case == 2);
    CHECK(q3.minimum == AffinePermutation({-2, 5}));
    CHECK(length(q3.minimum) == 3);
    CHECK(length(x) == 4);
    CHECK(q3.verified);

    CHECK_THROWS_AS(quad_minimum(x, 2, 1), BadIndices);

    for (int n = 2; n <= 4; ++n)
        for (const auto& u : length_ball(n, 5))
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    const auto q = quad_minimum(u, a, b);
                    CHECK(q.verified);
                    const auto lu = q.s_left * u;
                    for (const auto& y : {u, lu, u * q.s_right, lu * q.s_right}) CHECK(bruhat_leq(q.minimum, y));
                }
}
