#include <doctest.h>

#include "affs/cells.hpp"
#include "affs/constructions.hpp"
#include "affs/errors.hpp"
#include "affs/random.hpp"

using namespace affs;

namespace {

LaurentMatrix one_minus(const LaurentMatrix& x) {
    return LaurentMatrix::identity(x.size()) - LaurentPoly::t(-1) * x;
}

LaurentVector vec(std::initializer_list<LaurentPoly> v) { return LaurentVector(v); }

}  // namespace

TEST_CASE("Hermite form") {
    const LaurentPoly t = LaurentPoly::t(1);
    const auto h = hermite_form(2, {vec({t, 1}), vec({1, 0})});
    CHECK(h == LaurentMatrix::identity(2));
    const auto h2 = hermite_form(2, {vec({t * t, 0}), vec({3, t})});
    for (std::size_t c = 0; c < 2; ++c) {
        CHECK(h2(c, c).leading_coeff() == FieldScalar(1));
        for (std::size_t r = c + 1; r < 2; ++r) CHECK(h2(r, c).is_zero());
    }
    CHECK(det(h2) == t * t * t);
    CHECK_THROWS_AS(hermite_form(2, {vec({1, 1}), vec({2, 2})}), NotALattice);
}

TEST_CASE("lattices") {
    const auto e = Lattice::standard(3);
    CHECK(e.vdim() == 0);
    CHECK(e.scaled(1).vdim() == -3);
    CHECK(e.scaled(-2).vdim() == 6);
    CHECK(e.contains(e.scaled(1)));
    CHECK(!e.scaled(1).contains(e));
    CHECK(quotient_dim(e, e.scaled(2)) == 6);
    CHECK_THROWS_AS(quotient_dim(e.scaled(1), e), NotContained);
    CHECK(e + e.scaled(-1) == e.scaled(-1));
    LaurentMatrix g = LaurentMatrix::identity(3);
    g(0, 0) = LaurentPoly::t(-1);
    g(1, 1) = LaurentPoly::t(1);
    const auto l = g * e;
    CHECK(l.vdim() == 0);
    CHECK(!e.contains(l));
    CHECK(quotient_dim(e + l, e) == 1);
    CHECK(e.contains(vec({LaurentPoly::t(2), 0, 1})));
    CHECK(!e.contains(vec({LaurentPoly::t(-1), 0, 0})));
    CHECK(Lattice(g) == l);
    LaurentMatrix singular(2);
    singular(0, 0) = 1;
    singular(0, 1) = 1;
    CHECK_THROWS_AS(Lattice{singular}, NotALattice);
}

TEST_CASE("cell orientation is pinned by s_0 and 1 - t^-1 Z") {
    for (int n = 2; n <= 5; ++n) {
        const auto s0 = simple_reflection(n, 0);
        CHECK(iwahori_cell(s0.signed_lift()) == s0);
    }
    const auto lambda = Composition::parse("1,1");
    CHECK(iwahori_cell(one_minus(richardson_Z(lambda))) == varpi_witness(lambda).varpi);
}

TEST_CASE("Iwahori cells of monomial matrices and Iwahori double cosets") {
    Rng rng(31);
    for (int k = 0; k < 40; ++k) {
        const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 4));
        const auto w = random_affine_permutation(static_cast<int>(n), 2, rng);
        CHECK(iwahori_cell(w.signed_lift()) == w);
        const auto m = random_iwahori(n, rng) * w.signed_lift() * random_iwahori(n, rng);
        CHECK(iwahori_cell(m) == w);
        const auto j = ParabolicSubset::finite(static_cast<int>(n));
        CHECK(parabolic_cell(m, j) == min_coset_rep(w, j, Side::Right));
    }
    LaurentMatrix bad = LaurentMatrix::identity(2);
    bad(0, 0) = LaurentPoly::t(1) + 1;
    CHECK_THROWS_AS(iwahori_cell(bad), NotUnimodular);
}

TEST_CASE("phi_P builds affine flags") {
    Rng rng(41);
    for (const char* text : {"1,1", "2,1", "1,2,1", "3,2"}) {
        const auto lambda = Composition::parse(text);
        const auto n = static_cast<std::size_t>(lambda.n());
        const auto kb = kappa(lambda);
        for (int k = 0; k < 5; ++k) {
            const auto g = random_sl(n, rng);
            const auto x = random_nilradical(lambda, rng);
            const auto ph = phi_P(g, x, lambda);
            CHECK(ph.point == g * one_minus(x));
            CHECK(ph.flag.lattices.size() == static_cast<std::size_t>(lambda.r()) + 1);
            const auto fc = ph.flag.check();
            CHECK(fc.chain);
            CHECK(fc.t_closure);
            CHECK(fc.step_dims);
            CHECK(fc.vdim_zero);
            CHECK(bruhat_leq(parabolic_cell(ph.point, parabolic_of(lambda)), kb.kappa));
        }
    }
    const auto lambda = Composition::parse("1,1");
    LaurentMatrix lower(2);
    lower(1, 0) = 1;
    CHECK_THROWS_AS(phi_P(LaurentMatrix::identity(2), lower, lambda), NotInNilradical);
    LaurentMatrix scaled = LaurentMatrix::identity(2);
    scaled(0, 0) = 2;
    CHECK_THROWS_AS(phi_P(scaled, LaurentMatrix(2), lambda), NotUnimodular);
}

TEST_CASE("psi and the spherical orbit") {
    const Partition mu({2, 1});
    const auto x = jordan_nilpotent(mu);
    const auto ps = psi(x);
    CHECK(ps.point == one_minus(x));
    CHECK(ps.lattice == Lattice(one_minus(x)));
    CHECK(ps.lattice.vdim() == 0);
    const auto kb = kappa(Composition::parse("2,1"));
    CHECK(spherical_orbit(iwahori_cell(ps.point)) == kb.tau_q);
    CHECK_THROWS_AS(psi(LaurentMatrix::identity(2)), NotNilpotent);
}

TEST_CASE("beta recovers phi_P for maximal parabolics") {
    Rng rng(51);
    for (const char* text : {"1,1", "2,1", "1,3", "2,2"}) {
        const auto lambda = Composition::parse(text);
        const auto n = static_cast<std::size_t>(lambda.n());
        for (int k = 0; k < 4; ++k) {
            const auto g = random_sl(n, rng);
            const auto x = random_nilradical(lambda, rng);
            const auto mv = mv_embed(g * x * invert(g), g, lambda);
            CHECK(beta(mv, lambda) == phi_P(g, x, lambda).flag);
        }
    }
    const auto l3 = Composition::parse("1,1,1");
    CHECK_THROWS_AS(beta(mv_embed(richardson_Z(l3), LaurentMatrix::identity(3), l3), l3), NotMaximalParabolic);
}
