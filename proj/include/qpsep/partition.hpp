#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qpsep {

/// Ordered bipartition of the qubit indices 1..n into two non-empty,
/// disjoint sets. Storage is canonical (qubit 1 lives in left()); when the
/// partition was written with qubit 1 on the second side, swapped() is true
/// and first()/second() return the sides in the written orientation. The
/// written orientation decides which output tensor factor each side maps to,
/// so it is preserved rather than discarded.
class Partition {
public:
    /// Builds from the two sides as written. Sides are sorted; throws
    /// Overlap / Incomplete / IndexOutOfRange / EmptySide when the pair is
    /// not a bipartition of 1..n.
    static Partition create(int n, std::vector<int> first_side,
                            std::vector<int> second_side);

    int n() const { return n_; }
    const std::vector<int>& left() const { return left_; }
    const std::vector<int>& right() const { return right_; }
    bool swapped() const { return swapped_; }

    /// The (r) side as written.
    const std::vector<int>& first() const { return swapped_ ? right_ : left_; }
    /// The (s) side as written.
    const std::vector<int>& second() const { return swapped_ ? left_ : right_; }

    bool operator==(const Partition& other) const = default;

private:
    Partition() = default;

    int n_ = 0;
    std::vector<int> left_;   // ascending, contains 1
    std::vector<int> right_;  // ascending
    bool swapped_ = false;
};

/// Parses "AC|BD" (A=1, B=2, ...) or "1,3|2,4" against qubit count n.
/// Whitespace is forbidden. Letter syntax requires n <= 26.
Partition parse_partition(std::string_view text, int n);

/// Letter syntax in the written orientation; inverse of parse_partition.
std::string format_partition(const Partition& p);

/// All 2^(n-1) - 1 canonical partitions (qubit 1 on the left), ordered by
/// |left| ascending then lexicographic.
std::vector<Partition> enumerate_partitions(int n);

/// A refinement of each partition side into a "same bit" set (prime) and a
/// "flipped bit" set (double prime). r sets refine parent.first(), s sets
/// refine parent.second(). Canonical form keeps the minimum of each side in
/// the prime set, which removes the double counting among equivalent
/// refinements.
struct SubSplit {
    Partition parent;
    std::vector<int> r_prime;
    std::vector<int> r_dprime;
    std::vector<int> s_prime;
    std::vector<int> s_dprime;

    bool operator==(const SubSplit& other) const = default;
};

/// The 2^(n-2) canonical refinements of p, in pinned order: a binary counter
/// over the free (non-minimal) elements, first() side in the high bits,
/// elements in ascending order from high bit to low, 0 = prime, 1 = double
/// prime.
std::vector<SubSplit> enumerate_canonical_splits(const Partition& p);

/// E.g. "[(AC),()]||[(B),(D)]"; for debugging and split-list tests.
std::string format_split(const SubSplit& split);

} // namespace qpsep
