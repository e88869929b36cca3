#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "affs/laurent.hpp"

namespace affs {

/// Weakly decreasing list of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless entries are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Sorts decreasingly and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-based; zero beyond the length.
    int operator[](int i) const;

    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

Partition conjugate(const Partition& mu);

/// Prefix-sum comparison. Throws SizeMismatch when |mu| != |nu|.
bool dominance_leq(const Partition& mu, const Partition& nu);

/// Jordan type of a constant nilpotent matrix from the ranks of its powers.
/// Throws NotNilpotent for non-constant or non-nilpotent input.
Partition jordan_type(const LaurentMatrix& x);

/// Nilpotent matrix in Jordan form with blocks of the sizes in mu.
LaurentMatrix jordan_nilpotent(const Partition& mu);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// lambda = (lambda_1, ..., lambda_r) with sum n and d_i = lambda_1 + ... + lambda_i.
class Composition {
public:
    Composition() = default;
    /// Throws InvalidInput on empty input or nonpositive parts.
    explicit Composition(std::vector<int> parts);

    /// "1,4,4,2,6"
    static Composition parse(const std::string& text);
    /// From the d-sequence 0 = d_0 < d_1 < ... < d_r = n.
    static Composition from_d_sequence(const std::vector<int>& d);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return d_.back(); }
    int r() const { return static_cast<int>(parts_.size()); }
    /// 1-based part.
    int lambda(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
    /// d_i for 0 <= i <= r.
    int d(int i) const { return d_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& d_sequence() const { return d_; }

    /// Block (1..r) containing the coordinate c in 1..n.
    int block_of(int c) const;

    /// Conjugate of lambda sorted decreasingly.
    Partition nu() const;
    long sum_of_squares() const;
    /// (n^2 - sum lambda_i^2) / 2
    long dim_G_P() const;

    std::string to_string() const;
    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> d_;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

/// All 2^(n-1) compositions of n.
std::vector<Composition> compositions_of(int n);

}  // namespace affs
