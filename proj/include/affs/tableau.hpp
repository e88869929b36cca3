#pragma once

#include <map>
#include <utility>
#include <vector>

#include "affs/partitions.hpp"

namespace affs {

/// Left-justified diagram with row i holding the entries d_{i-1}+1, ..., d_i.
/// Column c lists, top to bottom, the entries d_{i-1}+c of the rows with
/// lambda_i >= c; its j-th entry is f^c_j. All indices are 1-based.
struct TableauData {
    Composition lambda;
    Partition nu;
    int s = 0;  // number of columns = max lambda_i

    std::vector<std::vector<int>> rows;     // rows[i-1] = Row(i)
    std::vector<std::vector<int>> columns;  // columns[c-1][j-1] = f^c_j

    std::vector<int> S1;  // first entries of the columns, increasing
    std::vector<int> S2;  // the remaining entries, increasing
    std::vector<std::vector<int>> red;   // red[i-1] = Red(i)
    std::vector<std::vector<int>> blue;  // blue[i-1] = Blue(i)

    std::vector<int> l;     // Red entries, increasing; l[i-1] = l(i)
    std::vector<int> m;     // Blue entries, rows bottom to top, each left to right
    std::vector<int> tmap;  // tmap[i-1] = t(i), an S2 entry in the row of m(i)
    std::map<int, int> iota;  // f^c_j -> f^c_{j-1} on S2

    int n() const { return lambda.n(); }
    int f(int column, int depth) const;
    /// (column, depth) of an entry.
    std::pair<int, int> coordinate(int entry) const;
    int row_of(int entry) const { return lambda.block_of(entry); }
    bool in_S1(int entry) const { return coordinate(entry).second == 1; }
};

/// Builds every field and checks the structural invariants, throwing
/// std::logic_error if any fails.
TableauData build_tableau(const Composition& lambda);

}  // namespace affs
