#include <doctest.h>

#include "affs/tableau.hpp"

using namespace affs;

TEST_CASE("worked example with lambda = (1,4,4,2,6)") {
    const auto t = build_tableau(Composition::parse("1,4,4,2,6"));
    CHECK(t.s == 6);
    CHECK(t.nu == Partition({5, 4, 3, 3, 1, 1}));
    CHECK(t.rows[2] == std::vector<int>{6, 7, 8, 9});
    CHECK(t.f(1, 4) == 10);
    CHECK(t.f(4, 3) == 15);
    CHECK(t.f(6, 1) == 17);
    CHECK(t.f(2, 4) == 13);
    CHECK(t.f(1, 2) == 2);
    CHECK(t.f(3, 3) == 14);  // F^3_{3,3} = E_{14,14}
    CHECK(t.S1 == std::vector<int>{1, 3, 4, 5, 16, 17});
    CHECK(t.l == std::vector<int>{1, 2, 3, 4, 12, 13});
    CHECK(t.m == std::vector<int>{14, 15, 16, 17, 10, 11, 6, 7, 8, 9, 5});
    CHECK(t.coordinate(15) == std::pair<int, int>{4, 3});
    CHECK(t.in_S1(16));
    CHECK(!t.in_S1(15));
    CHECK(t.row_of(12) == 5);
}

TEST_CASE("tableau invariants over all small compositions") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : compositions_of(n)) {
            const auto t = build_tableau(lambda);
            CHECK(static_cast<int>(t.S1.size()) == t.s);
            CHECK(static_cast<int>(t.l.size()) == t.s);
            CHECK(static_cast<int>(t.m.size()) == n - t.s);
            CHECK(t.tmap.size() == t.m.size());
            CHECK(t.nu == lambda.nu());
            for (std::size_t i = 0; i < t.m.size(); ++i) {
                CHECK(t.row_of(t.tmap[i]) == t.row_of(t.m[i]));
                CHECK(!t.in_S1(t.tmap[i]));
            }
            for (int c = 1; c <= t.s; ++c)
                for (int j = 1; j <= static_cast<int>(t.columns[static_cast<std::size_t>(c - 1)].size()); ++j) {
                    CHECK(t.coordinate(t.f(c, j)) == std::pair<int, int>{c, j});
                    if (j > 1) CHECK(t.iota.at(t.f(c, j)) == t.f(c, j - 1));
                }
            for (int i = 1; i <= lambda.r(); ++i) {
                const auto& red = t.red[static_cast<std::size_t>(i - 1)];
                const auto& blue = t.blue[static_cast<std::size_t>(i - 1)];
                CHECK(red.size() + blue.size() == static_cast<std::size_t>(lambda.lambda(i)));
            }
        }
}
