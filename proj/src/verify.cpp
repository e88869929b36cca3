#include "affs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "affs/cells.hpp"
#include "affs/constructions.hpp"
#include "affs/errors.hpp"

namespace affs {

namespace {

constexpr std::size_t kWitnessCap = 25;

json lambda_json(const Composition& lambda) { return composition_to_json(lambda); }

bool is_monomial(const LaurentMatrix& m) {
    try {
        from_matrix(m);
        return true;
    } catch (const NotMonomialPermutation&) {
        return false;
    }
}

LaurentMatrix point_minus_nilpotent(const LaurentMatrix& x) {
    return LaurentMatrix::identity(x.size()) - LaurentPoly::t(-1) * x;
}

std::vector<ParabolicSubset> proper_subsets(int n) {
    std::vector<ParabolicSubset> out;
    for (unsigned mask = 0; mask + 1 < (1U << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i)) idx.push_back(i);
        out.emplace_back(n, std::move(idx));
    }
    return out;
}

bool word_inside(const AffinePermutation& w, const ParabolicSubset& j) {
    const auto word = reduced_word(w);
    return std::all_of(word.begin(), word.end(), [&](int s) { return j.contains(s); });
}

LaurentMatrix random_small_matrix(std::size_t n, Rng& rng) {
    LaurentMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const long terms = uniform_int(rng, 0, 2);
            for (long k = 0; k < terms; ++k)
                m(r, c) += LaurentPoly::monomial(FieldScalar(uniform_int(rng, -3, 3)), static_cast<int>(uniform_int(rng, -2, 2)));
        }
    return m;
}

LaurentPoly random_poly(Rng& rng) {
    LaurentPoly p;
    const long terms = uniform_int(rng, 1, 3);
    for (long k = 0; k < terms; ++k)
        p += LaurentPoly::monomial(nonzero_scalar(rng), static_cast<int>(uniform_int(rng, -3, 3)));
    return p;
}

}  // namespace

// ------------------------------------------------------------------ report

bool VerificationReport::ok() const { return total_failed() == 0 && missing_operations.empty(); }

long VerificationReport::total_failed() const {
    long f = 0;
    for (const auto& p : propositions) f += p.failed;
    return f;
}

json VerificationReport::to_json(bool include_timing) const {
    json props = json::array();
    for (const auto& p : propositions) props.push_back({{"name", p.name}, {"passed", p.passed}, {"failed", p.failed}});
    json out = {{"schema", 1},
                {"suite", suite},
                {"nmax", nmax},
                {"seed", seed},
                {"ok", ok()},
                {"propositions", std::move(props)},
                {"witnesses", witnesses},
                {"operations", std::vector<std::string>(operations.begin(), operations.end())},
                {"missing_operations", missing_operations}};
    if (include_timing) out["seconds"] = seconds;
    return out;
}

std::string VerificationReport::to_text(bool include_timing) const {
    std::ostringstream os;
    os << "suite " << suite << "  nmax " << nmax << "  seed " << seed << '\n';
    std::size_t width = 0;
    for (const auto& p : propositions) width = std::max(width, p.name.size());
    for (const auto& p : propositions) {
        os << "  " << (p.failed ? "FAIL " : "ok   ") << p.name << std::string(width - p.name.size() + 2, ' ')
           << p.passed << " passed, " << p.failed << " failed\n";
    }
    for (const auto& w : witnesses) os << "  witness " << w.dump() << '\n';
    if (!missing_operations.empty()) {
        os << "  operations not exercised:";
        for (const auto& op : missing_operations) os << ' ' << op;
        os << '\n';
    }
    os << "operations exercised: " << operations.size() << '\n';
    if (include_timing) os << "seconds: " << seconds << '\n';
    os << (ok() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lengths", "bruhat", "kappa", "varpi", "divisors", "embeddings", "all"};
    return names;
}

const std::vector<std::string>& covered_operation_names() {
    static const std::vector<std::string> names{
        "ord",          "det",           "invert",        "borel_membership",   "from_matrix",   "compose",
        "length",       "length_oracle", "bruhat_leq",    "min_coset_rep",      "decompose_translation",
        "reflection",   "act_on_root",   "quad_minimum",  "conjugate",          "dominance_leq", "jordan_type",
        "build",        "kappa",         "richardson_Z",  "varpi_witness",      "decompose_varpi",
        "check_kappa",  "conormal_directions",            "divisor_data",       "vdim",          "quotient_dim",
        "phi_P",        "psi",           "iwahori_cell",  "parabolic_cell",     "mv_embed",      "beta"};
    return names;
}

// ----------------------------------------------------------------- harness

Harness::Harness(std::string suite, int nmax, std::uint64_t seed) : rng_(seed) {
    report_.suite = std::move(suite);
    report_.nmax = nmax;
    report_.seed = seed;
}

PropositionTally& Harness::tally(const std::string& proposition) {
    auto it = index_.find(proposition);
    if (it == index_.end()) {
        it = index_.emplace(proposition, report_.propositions.size()).first;
        report_.propositions.push_back(PropositionTally{proposition, 0, 0});
    }
    return report_.propositions[it->second];
}

void Harness::record(const std::string& proposition, bool ok, const std::function<json()>& witness) {
    PropositionTally& t = tally(proposition);
    if (ok) {
        ++t.passed;
        return;
    }
    ++t.failed;
    if (static_cast<std::size_t>(t.failed) <= kWitnessCap) {
        json w = witness();
        w["check"] = proposition;
        report_.witnesses.push_back(std::move(w));
    }
}

void Harness::guarded(const std::string& proposition, const json& context, const std::function<bool()>& check) {
    bool ok = false;
    std::string error;
    try {
        ok = check();
    } catch (const std::exception& e) {
        error = e.what();
    }
    record(proposition, ok, [&] {
        json w = context;
        if (!error.empty()) w["error"] = error;
        return w;
    });
}

// ------------------------------------------------------------------ suites

void suite_lengths(Harness& h) {
    const int top = std::min(h.nmax(), 4);
    for (int n = 2; n <= top; ++n) {
        for (const auto& w : length_ball(n, 6)) {
            const json ctx = window_to_json(w);
            h.guarded("length formula equals inversion count", ctx, [&] { return length(w) == length_oracle(w); });
            h.guarded("right multiplication by s_i changes length by one", ctx, [&] {
                for (int i = 0; i < n; ++i)
                    if (std::labs(length(times_simple(w, i)) - length(w)) != 1) return false;
                return true;
            });
            h.guarded("w(alpha) > 0 iff w s_alpha > w", ctx, [&] {
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b) {
                        const bool positive = act_on_root(w, RootIdx{a, b}).positive();
                        if (positive != (length(w * reflection(n, a, b)) > length(w))) return false;
                    }
                return true;
            });
            h.guarded("window and matrix views agree", ctx, [&] {
                const auto m = w.to_matrix();
                return from_matrix(m) == w && from_matrix(m * simple_reflection(n, 0).to_matrix()) == w * simple_reflection(n, 0);
            });
            h.guarded("finite part times translation", ctx, [&] {
                const auto d = decompose_translation(w);
                return d.sigma.is_finite() && d.sigma * translation(d.q) == w;
            });
        }
    }
    h.cover("length");
    h.cover("length_oracle");
    h.cover("act_on_root");
    h.cover("from_matrix");
    h.cover("compose");
    h.cover("decompose_translation");

    const int rand_lo = h.nmax() >= 5 ? 5 : 2;
    const int rand_hi = std::min(std::max(h.nmax(), 2), 6);
    for (int n = rand_lo; n <= rand_hi; ++n)
        for (int k = 0; k < 200; ++k) {
            const auto w = random_affine_permutation(n, 4, h.rng());
            h.guarded("length formula equals inversion count", window_to_json(w),
                      [&] { return length(w) == length_oracle(w); });
        }

    for (int n = 2; n <= std::min(h.nmax(), 3); ++n) {
        const auto subsets = proper_subsets(n);
        for (const auto& w : length_ball(n, 5))
            for (const auto& j : subsets) {
                json ctx = window_to_json(w);
                ctx["J"] = j.indices();
                h.guarded("minimal coset representative splits the length", ctx, [&] {
                    const auto right = min_coset_rep(w, j, Side::Right);
                    const auto rest = right.inverse() * w;
                    const auto left = min_coset_rep(w, j, Side::Left);
                    const auto lrest = w * left.inverse();
                    for (int s : j.indices())
                        if (is_right_descent(right, s) || is_left_descent(left, s)) return false;
                    return length(w) == length(right) + length(rest) && word_inside(rest, j) &&
                           length(w) == length(left) + length(lrest) && word_inside(lrest, j);
                });
            }
    }
    h.cover("min_coset_rep");

    for (int n = 2; n <= std::max(2, std::min(h.nmax(), 6)); ++n) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                h.guarded("reflection matches its matrix", json{{"n", n}, {"a", a}, {"b", b}}, [&] {
                    LaurentMatrix m = LaurentMatrix::identity(static_cast<std::size_t>(n));
                    m(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(a - 1)) = 0;
                    m(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(b - 1)) = 0;
                    m(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = 1;
                    m(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) = 1;
                    const auto s = reflection(n, a, b);
                    return from_matrix(m) == s && (s * s).is_identity();
                });
            }
        h.guarded("s_0 is the affine reflection", json{{"n", n}}, [&] {
            const auto s0 = simple_reflection(n, 0);
            return s0(1) == 0 && s0(n) == n + 1 && (s0 * s0).is_identity() && length(s0) == 1;
        });
        for (int k = 0; k < 10; ++k) {
            std::vector<long> q(static_cast<std::size_t>(n));
            long sum = 0;
            for (int i = 0; i + 1 < n; ++i) sum += q[static_cast<std::size_t>(i)] = uniform_int(h.rng(), -3, 3);
            q.back() = -sum;
            h.guarded("translations act by alpha - alpha(q) delta", json{{"q", q}}, [&] {
                if (!translation_action_holds(q)) return false;
                const auto tau = translation(q);
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b) {
                        const RootIdx alpha{a, b};
                        if (act_on_root(tau, alpha).positive() != (pairing(alpha, q) <= 0)) return false;
                    }
                return true;
            });
        }
    }
    h.cover("reflection");
}

void suite_bruhat(Harness& h) {
    for (int n = 2; n <= std::min(h.nmax(), 3); ++n) {
        const auto ball = length_ball(n, 5);
        for (const auto& w : ball) {
            const auto interval = subword_interval(w);
            for (const auto& v : ball) {
                h.guarded("Bruhat order agrees with subwords",
                          json{{"v", window_to_json(v)}, {"w", window_to_json(w)}},
                          [&] { return bruhat_leq(v, w) == (interval.count(v) > 0); });
            }
        }
    }
    h.cover("bruhat_leq");

    for (int n = 2; n <= std::min(h.nmax(), 4); ++n) {
        for (const auto& w : length_ball(n, 5))
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    h.guarded("four-element set has a unique minimum",
                              json{{"w", window_to_json(w)}, {"a", a}, {"b", b}}, [&] {
                                  const auto q = quad_minimum(w, a, b);
                                  const int expected_case = w.shift(a) == w.shift(b) ? 1 : 2;
                                  if (!q.verified || q.which_case != expected_case) return false;
                                  const auto lw = q.s_left * w;
                                  for (const auto& x : {w, lw, w * q.s_right, lw * q.s_right})
                                      if (!bruhat_leq(q.minimum, x)) return false;
                                  return true;
                              });
                }
    }
    h.cover("quad_minimum");
}

void suite_kappa(Harness& h) {
    const int nmax = h.nmax();
    for (int n = 1; n <= nmax; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& mu : parts)
            h.guarded("conjugation is an involution", partition_to_json(mu), [&] { return conjugate(conjugate(mu)) == mu; });
        h.guarded("dominance is a partial order", json{{"n", n}}, [&] {
            for (const auto& a : parts)
                for (const auto& b : parts) {
                    if (!dominance_leq(a, a)) return false;
                    if (a != b && dominance_leq(a, b) && dominance_leq(b, a)) return false;
                    if (!dominance_leq(a, b)) continue;
                    for (const auto& c : parts)
                        if (dominance_leq(b, c) && !dominance_leq(a, c)) return false;
                }
            return true;
        });
        if (n <= 5) {
            for (const auto& mu : parts) {
                const auto x = jordan_nilpotent(mu);
                h.guarded("Jordan type is conjugation invariant", partition_to_json(mu), [&] {
                    if (jordan_type(x) != mu) return false;
                    for (int k = 0; k < 5; ++k) {
                        const auto g = random_sl(static_cast<std::size_t>(n), h.rng());
                        if (jordan_type(g * x * invert(g)) != mu) return false;
                    }
                    return true;
                });
            }
        }
    }
    h.cover("conjugate");
    h.cover("dominance_leq");
    h.cover("jordan_type");

    for (int n = 1; n <= nmax; ++n)
        for (const auto& lambda : compositions_of(n)) {
            const json ctx = {{"lambda", lambda_json(lambda)}};
            h.guarded("tableau invariants", ctx, [&] {
                const auto t = build_tableau(lambda);
                std::vector<int> heights;
                for (const auto& col : t.columns) heights.push_back(static_cast<int>(col.size()));
                std::sort(heights.begin(), heights.end(), std::greater<>());
                std::vector<int> colored;
                for (int i = 0; i < lambda.r(); ++i) {
                    colored.insert(colored.end(), t.red[static_cast<std::size_t>(i)].begin(), t.red[static_cast<std::size_t>(i)].end());
                    colored.insert(colored.end(), t.blue[static_cast<std::size_t>(i)].begin(), t.blue[static_cast<std::size_t>(i)].end());
                }
                std::sort(colored.begin(), colored.end());
                std::vector<int> all(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
                return Partition(heights) == t.nu && colored == all && t.S1.size() + t.S2.size() == all.size();
            });
            h.guarded("kappa is tau_q sigma with tau_q minimal", ctx, [&] {
                const auto kb = kappa(lambda);
                return length(kb.tau_q) == 2 * lambda.dim_G_P() &&
                       min_coset_rep(kb.kappa, ParabolicSubset::finite(n), Side::Right) == kb.tau_q;
            });
            h.guarded("kappa report", ctx, [&] { return check_kappa(lambda).all_ok(); });
            h.guarded("Z has Jordan type nu and lies in the nilradical", ctx, [&] {
                const auto z = richardson_Z(lambda);
                return jordan_type(z) == lambda.nu() && in_nilradical(z, lambda);
            });
            h.guarded("varpi = w_g kappa w_p", ctx, [&] {
                decompose_varpi(lambda);
                return true;
            });
        }
    h.cover("build");
    h.cover("kappa");
    h.cover("check_kappa");
    h.cover("richardson_Z");
    h.cover("decompose_varpi");
}

void suite_varpi(Harness& h) {
    for (int n = 1; n <= h.nmax(); ++n)
        for (const auto& lambda : compositions_of(n)) {
            const json ctx = {{"lambda", lambda_json(lambda)}};
            h.guarded("b (1 - t^-1 Z) c equals the varpi lift", ctx, [&] {
                const auto vw = varpi_witness(lambda);
                return in_b_plus(vw.b) && in_b_plus(vw.c);
            });
            h.guarded("det(1 - t^-1 Z) = 1", ctx,
                      [&] { return det(point_minus_nilpotent(richardson_Z(lambda))) == LaurentPoly(1); });
            if (n <= 5)
                h.guarded("1 - t^-1 Z lies in the cell of varpi", ctx, [&] {
                    return iwahori_cell(point_minus_nilpotent(richardson_Z(lambda))) == varpi_witness(lambda).varpi;
                });
        }
    h.cover("varpi_witness");
    h.cover("iwahori_cell");

    for (int k = 0; k < 20; ++k) {
        const auto a = random_small_matrix(4, h.rng());
        const auto b = random_small_matrix(4, h.rng());
        h.guarded("det is multiplicative", json{{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}},
                  [&] { return det(a * b) == det(a) * det(b); });
        const auto p = random_poly(h.rng());
        const auto q = random_poly(h.rng());
        h.guarded("ord is additive", json{{"p", p.to_string()}, {"q", q.to_string()}},
                  [&] { return ord(p * q) == ord(p) + ord(q); });
        const std::size_t n = static_cast<std::size_t>(uniform_int(h.rng(), 2, 5));
        const auto m = random_iwahori(n, h.rng()) * random_affine_permutation(static_cast<int>(n), 2, h.rng()).signed_lift() *
                       random_iwahori(n, h.rng());
        h.guarded("inverse of a unit matrix", json{{"m", matrix_to_json(m)}}, [&] {
            const auto inv = invert(m);
            const auto id = LaurentMatrix::identity(n);
            return m * inv == id && inv * m == id && invert(inv) == m;
        });
    }
    for (int n = 2; n <= std::min(h.nmax(), 6); ++n)
        for (const auto& mu : partitions_of(n)) {
            const auto x = jordan_nilpotent(mu);
            h.guarded("inverse of 1 - t^-1 N is a finite series", partition_to_json(mu), [&] {
                LaurentMatrix series = LaurentMatrix::identity(static_cast<std::size_t>(n));
                LaurentMatrix term = series;
                for (int k = 1; k < n; ++k) {
                    term = LaurentPoly::t(-1) * (term * x);
                    series += term;
                }
                return invert(point_minus_nilpotent(x)) == series;
            });
        }
    h.guarded("Iwahori membership examples", json::object(), [] {
        LaurentMatrix lower(2);
        lower(0, 0) = 1;
        lower(1, 1) = 1;
        lower(1, 0) = LaurentPoly::t(1);
        LaurentMatrix constant_lower = lower;
        constant_lower(1, 0) = 1;
        return borel_membership(LaurentMatrix::identity(2)) == BorelMembership::InBoth &&
               borel_membership(lower) == BorelMembership::InBplus &&
               borel_membership(constant_lower) == BorelMembership::Neither;
    });
    h.cover("det");
    h.cover("ord");
    h.cover("invert");
    h.cover("borel_membership");
}

void suite_divisors(Harness& h) {
    for (int n = 2; n <= std::min(h.nmax(), 6); ++n)
        for (const auto& lambda : compositions_of(n)) {
            if (lambda.r() < 2) continue;
            const auto kb = kappa(lambda);
            const auto sp = parabolic_of(lambda);
            for (int i = 1; i < lambda.r(); ++i) {
                const json ctx = {{"lambda", lambda_json(lambda)}, {"i", i}};
                DivisorBundle d;
                h.guarded("divisor data", ctx, [&] {
                    d = divisor_data(lambda, i);
                    return true;
                });
                if (d.v_k_min.period() == 0) continue;
                h.guarded("conormal directions are {gamma}", ctx,
                          [&] { return conormal_directions(d.w, sp) == std::set<RootIdx>{d.gamma}; });
                h.guarded("length of v_k minimal is dim G/P", ctx,
                          [&] { return length(d.v_k_min) == lambda.dim_G_P(); });
                h.guarded("v_k minimal lies below kappa", ctx, [&] { return bruhat_leq(d.v_k_min, kb.kappa); });
                for (int k = 0; k < 10; ++k) {
                    const auto b = random_borel(static_cast<std::size_t>(n), h.rng());
                    const FieldScalar a = nonzero_scalar(h.rng());
                    json sample = ctx;
                    sample["sample"] = k;
                    h.guarded("phi_P(b lift, a E_gamma) lies in the cell of v_k", sample, [&] {
                        LaurentMatrix x(static_cast<std::size_t>(n));
                        x(static_cast<std::size_t>(d.gamma.i - 1), static_cast<std::size_t>(d.gamma.j - 1)) = a;
                        const auto ph = phi_P(b * d.lift, x, lambda);
                        return ph.flag.check().ok() && parabolic_cell(ph.point, sp) == d.v_k_min;
                    });
                    h.guarded("explicit Iwahori witnesses reduce the point to v_k", sample, [&] {
                        const auto red = divisor_reduction(lambda, d, a);
                        LaurentMatrix x(static_cast<std::size_t>(n));
                        x(static_cast<std::size_t>(d.gamma.i - 1), static_cast<std::size_t>(d.gamma.j - 1)) = a;
                        const auto point = phi_P(d.lift, x, lambda).point;
                        return in_b_plus(red.b1) && in_b_plus(red.b2) && in_b_plus(red.b3) &&
                               red.b1 * red.b2 * point * red.b3 == red.reduced && is_monomial(red.reduced) &&
                               from_matrix(red.reduced) == d.v_k_min;
                    });
                }
            }
            h.guarded("divisor index is validated", json{{"lambda", lambda_json(lambda)}}, [&] {
                try {
                    divisor_data(lambda, lambda.r());
                } catch (const BadDivisorIndex&) {
                    return true;
                }
                return false;
            });
        }
    h.cover("divisor_data");
    h.cover("conormal_directions");
    h.cover("phi_P");
    h.cover("parabolic_cell");
}

void suite_embeddings(Harness& h) {
    const int top = std::min(h.nmax(), 5);
    for (int n = 1; n <= top; ++n) {
        const auto nn = static_cast<std::size_t>(n);
        h.guarded("virtual dimension of the standard lattice", json{{"n", n}}, [&] {
            const auto e = Lattice::standard(nn);
            const auto te = e.scaled(1);
            return e.vdim() == 0 && te.vdim() == -n && quotient_dim(e, te) == n && quotient_dim(e, e) == 0;
        });
        for (const auto& lambda : compositions_of(n)) {
            const json ctx = {{"lambda", lambda_json(lambda)}};
            const auto kb = kappa(lambda);
            const auto sp = parabolic_of(lambda);
            const auto z = richardson_Z(kb.tableau);

            h.guarded("phi_P(a, Z) lies in the cell of kappa", ctx, [&] {
                const auto a = decompose_varpi(lambda).w_g.inverse().signed_lift();
                const auto ph = phi_P(a, z, lambda);
                return ph.flag.check().ok() && parabolic_cell(ph.point, sp) == kb.kappa;
            });
            h.guarded("L_0 of phi_P(1, Z) is (1 - t^-1 Z) V[t]", ctx, [&] {
                const auto ph = phi_P(LaurentMatrix::identity(nn), z, lambda);
                return ph.flag.lattices.front() == Lattice(point_minus_nilpotent(z)) && ph.flag.lattices.front().vdim() == 0;
            });
            for (int k = 0; k < 50; ++k) {
                const auto g = random_sl(nn, h.rng());
                const auto x = random_nilradical(lambda, h.rng());
                json sample = ctx;
                sample["g"] = matrix_to_json(g);
                sample["X"] = matrix_to_json(x);
                PhiResult ph;
                h.guarded("phi_P flag invariants", sample, [&] {
                    ph = phi_P(g, x, lambda);
                    return ph.flag.check().ok();
                });
                if (ph.point.size() == 0) continue;
                h.guarded("image of phi_P lies below kappa", sample,
                          [&] { return bruhat_leq(parabolic_cell(ph.point, sp), kb.kappa); });
                if (k < 3) {
                    const auto p = random_parabolic(lambda, h.rng());
                    h.guarded("phi_P is P-equivariant", sample, [&] {
                        return phi_P(g * p, invert(p) * x * p, lambda).flag == ph.flag;
                    });
                }
            }
            for (const auto& m : {kb.kappa.signed_lift(), varpi_lift(kb.tableau)}) {
                const auto w = iwahori_cell(m);
                for (int k = 0; k < 20; ++k) {
                    const auto b1 = random_iwahori(nn, h.rng());
                    const auto b2 = random_iwahori(nn, h.rng());
                    h.guarded("Iwahori cell is invariant under both sides", ctx,
                              [&] { return iwahori_cell(b1 * m * b2) == w; });
                }
            }
            h.guarded("psi(Z) lies in the L+G-orbit of tau_q", ctx, [&] {
                const auto ps = psi(z);
                const auto w = iwahori_cell(ps.point);
                return spherical_orbit(w) == kb.tau_q && bruhat_leq(parabolic_cell(ps.point, ParabolicSubset::finite(n)), kb.tau_q);
            });
            if (lambda.r() == 2) {
                for (int k = 0; k < 20; ++k) {
                    const auto g = random_sl(nn, h.rng());
                    const auto x = random_nilradical(lambda, h.rng());
                    h.guarded("beta of the lattice embedding of g X g^-1 is phi_P", ctx, [&] {
                        const auto mv = mv_embed(g * x * invert(g), g, lambda);
                        return beta(mv, lambda) == phi_P(g, x, lambda).flag;
                    });
                }
            } else {
                h.guarded("beta needs a maximal parabolic", ctx, [&] {
                    try {
                        beta(mv_embed(z, LaurentMatrix::identity(nn), lambda), lambda);
                    } catch (const NotMaximalParabolic&) {
                        return true;
                    }
                    return false;
                });
            }
        }
        for (const auto& mu : partitions_of(n)) {
            const auto x = jordan_nilpotent(mu);
            const auto orbit = spherical_orbit(iwahori_cell(psi(x).point));
            for (int k = 0; k < 10; ++k) {
                const auto g = random_sl(nn, h.rng());
                h.guarded("psi orbit depends only on the Jordan type", partition_to_json(mu), [&] {
                    const auto conj = g * x * invert(g);
                    const auto ps = psi(conj);
                    return spherical_orbit(iwahori_cell(ps.point)) == orbit && ps.lattice == g * psi(x).lattice;
                });
            }
        }
    }
    h.cover("psi");
    h.cover("mv_embed");
    h.cover("beta");
    h.cover("vdim");
    h.cover("quotient_dim");
    h.cover("phi_P");
    h.cover("iwahori_cell");
    h.cover("parabolic_cell");
}

VerificationReport run_suite(const std::string& suite, int nmax, std::uint64_t seed) {
    if (nmax < 1) throw InvalidInput("nmax must be at least 1");
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw InvalidInput("unknown suite '" + suite + "'");
    const auto start = std::chrono::steady_clock::now();
    Harness h(suite, nmax, seed);
    const std::vector<std::pair<std::string, void (*)(Harness&)>> table{
        {"lengths", suite_lengths}, {"bruhat", suite_bruhat},         {"kappa", suite_kappa},
        {"varpi", suite_varpi},     {"divisors", suite_divisors}, {"embeddings", suite_embeddings}};
    for (const auto& [name, fn] : table)
        if (suite == "all" || suite == name) fn(h);
    VerificationReport report = std::move(h.report());
    if (suite == "all")
        for (const auto& op : covered_operation_names())
            if (!report.operations.count(op)) report.missing_operations.push_back(op);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace affs
