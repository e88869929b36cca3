#include "affs/tableau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "affs/errors.hpp"

namespace affs {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("tableau invariant failed: ") + what);
}

void check_invariants(const TableauData& t) {
    const int n = t.n();
    std::set<int> all;
    for (int i = 1; i <= t.lambda.r(); ++i) {
        const auto& row = t.rows[static_cast<std::size_t>(i - 1)];
        require(static_cast<int>(row.size()) == t.lambda.lambda(i), "row size");
        all.insert(row.begin(), row.end());
    }
    require(static_cast<int>(all.size()) == n && *all.begin() == 1 && *all.rbegin() == n, "rows partition 1..n");

    std::set<int> seen;
    for (int c = 1; c <= t.s; ++c) {
        require(static_cast<int>(t.columns[static_cast<std::size_t>(c - 1)].size()) == t.nu[c], "column height");
        for (int e : t.columns[static_cast<std::size_t>(c - 1)]) require(seen.insert(e).second, "f is injective");
    }
    require(static_cast<int>(seen.size()) == n, "f covers 1..n");

    for (int i = 1; i <= t.lambda.r(); ++i) {
        const auto& red = t.red[static_cast<std::size_t>(i - 1)];
        const auto& blue = t.blue[static_cast<std::size_t>(i - 1)];
        const auto& row = t.rows[static_cast<std::size_t>(i - 1)];
        const auto s1_count = std::count_if(row.begin(), row.end(), [&](int e) { return t.in_S1(e); });
        require(static_cast<long>(red.size()) == s1_count, "#Red(i) = #S1(i)");
        require(static_cast<long>(blue.size()) == static_cast<long>(row.size()) - s1_count, "#Blue(i) = #S2(i)");
        if (!red.empty() && !blue.empty()) require(red.back() < blue.front(), "Red(i) precedes Blue(i)");
    }

    require(std::is_sorted(t.l.begin(), t.l.end()) &&
                std::adjacent_find(t.l.begin(), t.l.end()) == t.l.end(),
            "l strictly increasing");
    require(static_cast<int>(t.l.size()) == t.s, "#l = s");
    require(t.m.size() == t.tmap.size() && t.m.size() == t.S2.size(), "m and t have #S2 entries");
    for (std::size_t i = 0; i < t.m.size(); ++i) require(t.row_of(t.m[i]) == t.row_of(t.tmap[i]), "t(i) and m(i) share a row");
    std::set<int> images;
    for (const auto& [from, to] : t.iota) images.insert(to);
    require(images.size() == t.iota.size(), "iota injective");
}

}  // namespace

int TableauData::f(int column, int depth) const {
    if (column < 1 || column > s) throw BadIndices("column " + std::to_string(column));
    const auto& col = columns[static_cast<std::size_t>(column - 1)];
    if (depth < 1 || depth > static_cast<int>(col.size())) throw BadIndices("depth " + std::to_string(depth));
    return col[static_cast<std::size_t>(depth - 1)];
}

std::pair<int, int> TableauData::coordinate(int entry) const {
    const int i = lambda.block_of(entry);
    const int c = entry - lambda.d(i - 1);
    int depth = 0;
    for (int k = 1; k <= i; ++k)
        if (lambda.lambda(k) >= c) ++depth;
    return {c, depth};
}

TableauData build_tableau(const Composition& lambda) {
    TableauData t;
    t.lambda = lambda;
    t.nu = lambda.nu();
    t.s = t.nu.length();
    const int r = lambda.r();

    for (int i = 1; i <= r; ++i) {
        std::vector<int> row;
        for (int e = lambda.d(i - 1) + 1; e <= lambda.d(i); ++e) row.push_back(e);
        t.rows.push_back(std::move(row));
    }

    t.columns.resize(static_cast<std::size_t>(t.s));
    for (int i = 1; i <= r; ++i)
        for (int c = 1; c <= lambda.lambda(i); ++c) t.columns[static_cast<std::size_t>(c - 1)].push_back(lambda.d(i - 1) + c);

    for (int e = 1; e <= lambda.n(); ++e) (t.in_S1(e) ? t.S1 : t.S2).push_back(e);

    int longest_above = 0;
    for (int i = 1; i <= r; ++i) {
        std::vector<int> red;
        std::vector<int> blue;
        for (int e : t.rows[static_cast<std::size_t>(i - 1)])
            (e <= lambda.d(i) - longest_above ? red : blue).push_back(e);
        longest_above = std::max(longest_above, lambda.lambda(i));
        t.l.insert(t.l.end(), red.begin(), red.end());
        t.red.push_back(std::move(red));
        t.blue.push_back(std::move(blue));
    }

    for (int i = r; i >= 1; --i) {
        const auto& blue = t.blue[static_cast<std::size_t>(i - 1)];
        t.m.insert(t.m.end(), blue.begin(), blue.end());
        std::vector<int> s2_row;
        for (int e : t.rows[static_cast<std::size_t>(i - 1)])
            if (!t.in_S1(e)) s2_row.push_back(e);
        t.tmap.insert(t.tmap.end(), s2_row.begin(), s2_row.end());
    }

    for (int e : t.S2) {
        const auto [c, j] = t.coordinate(e);
        t.iota[e] = t.f(c, j - 1);
    }

    check_invariants(t);
    return t;
}

}  // namespace affs
