#include <doctest.h>

#include <numeric>

#include "affs/errors.hpp"
#include "affs/partitions.hpp"
#include "affs/random.hpp"

using namespace affs;

namespace {

// Transpose of the Young diagram by counting boxes directly.
std::vector<int> transpose_by_boxes(const std::vector<int>& rows) {
    std::vector<int> cols;
    for (int c = 1;; ++c) {
        int h = 0;
        for (int r : rows) h += r >= c;
        if (h == 0) break;
        cols.push_back(h);
    }
    return cols;
}

long partition_count(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
    return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidInput);
    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
    const Partition p({4, 2, 2, 1});
    CHECK(p.size() == 9);
    CHECK(p.length() == 4);
    CHECK(p[2] == 2);
}

TEST_CASE("conjugate partitions") {
    CHECK(conjugate(Partition({4, 2, 2, 1})) == Partition({4, 3, 1, 1}));
    CHECK(conjugate(Partition({1})) == Partition({1}));
    for (int n = 1; n <= 9; ++n) {
        const auto all = partitions_of(n);
        CHECK(static_cast<long>(all.size()) == partition_count(n));
        for (const auto& mu : all) {
            CHECK(conjugate(mu).parts() == transpose_by_boxes(mu.parts()));
            CHECK(conjugate(conjugate(mu)) == mu);
            // sum nu_i^2 = sum (2i - 1) nu'_i
            long lhs = 0, rhs = 0;
            for (int v : mu.parts()) lhs += static_cast<long>(v) * v;
            const auto c = conjugate(mu).parts();
            for (std::size_t i = 0; i < c.size(); ++i) rhs += static_cast<long>(2 * i + 1) * c[i];
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK(!dominance_leq(Partition({3, 1}), Partition({2, 2})));
    CHECK(dominance_leq(Partition({1, 1, 1, 1}), Partition({4})));
    CHECK(!dominance_leq(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK(!dominance_leq(Partition({4, 1, 1}), Partition({3, 3})));
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), SizeMismatch);
    for (int n = 1; n <= 7; ++n) {
        const auto all = partitions_of(n);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
    }
}

TEST_CASE("Jordan type from ranks of powers") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(jordan_type(jordan_nilpotent(mu)) == mu);
    Rng rng(1);
    const Partition mu({3, 2, 1});
    const auto x = jordan_nilpotent(mu);
    for (int k = 0; k < 10; ++k) {
        const auto g = random_sl(6, rng);
        CHECK(jordan_type(g * x * invert(g)) == mu);
    }
    CHECK_THROWS_AS(jordan_type(LaurentMatrix::identity(2)), NotNilpotent);
}

TEST_CASE("compositions") {
    const auto c = Composition::parse("1,4,4,2,6");
    CHECK(c.n() == 17);
    CHECK(c.r() == 5);
    CHECK(c.d_sequence() == std::vector<int>{0, 1, 5, 9, 11, 17});
    CHECK(c.block_of(10) == 4);
    CHECK(c.nu() == Partition({5, 4, 3, 3, 1, 1}));
    CHECK(c.dim_G_P() == (17 * 17 - (1 + 16 + 16 + 4 + 36)) / 2);
    CHECK(Composition::from_d_sequence({0, 1, 5, 9, 11, 17}) == c);
    CHECK_THROWS_AS(Composition::parse("1,,2"), InvalidInput);
    CHECK_THROWS_AS(Composition::parse("1,-2"), InvalidInput);
    CHECK_THROWS_AS(Composition::parse(""), InvalidInput);
    CHECK_THROWS_AS(Composition::from_d_sequence({0, 2, 2}), InvalidInput);
    for (int n = 1; n <= 10; ++n) {
        const auto all = compositions_of(n);
        CHECK(all.size() == (std::size_t{1} << (n - 1)));
        for (const auto& l : all) CHECK(std::accumulate(l.parts().begin(), l.parts().end(), 0) == n);
    }
}
