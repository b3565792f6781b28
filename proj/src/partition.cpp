#include "qpsep/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

#include "qpsep/errors.hpp"

namespace qpsep {

namespace {

void check_side_indices(const std::vector<int>& side, int n) {
    for (int idx : side) {
        if (idx < 1 || idx > n) {
            throw IndexOutOfRange("qubit index " + std::to_string(idx) +
                                  " outside 1.." + std::to_string(n));
        }
    }
}

std::vector<int> parse_side(std::string_view side, int n,
                            std::size_t column_offset) {
    if (side.empty()) {
        throw EmptySide("partition side is empty");
    }
    std::vector<int> indices;
    const bool letters = std::isupper(static_cast<unsigned char>(side[0])) != 0;
    if (letters) {
        if (n > 26) {
            throw BadSyntax("letter syntax supports at most 26 qubits");
        }
        for (char ch : side) {
            if (!std::isupper(static_cast<unsigned char>(ch))) {
                throw BadSyntax("expected uppercase letter in partition side");
            }
            indices.push_back(ch - 'A' + 1);
        }
    } else {
        std::size_t pos = 0;
        while (pos <= side.size()) {
            const std::size_t comma = std::min(side.find(',', pos), side.size());
            const std::string_view token = side.substr(pos, comma - pos);
            if (token.empty()) {
                throw BadSyntax("empty number in partition side");
            }
            unsigned value = 0;
            const auto [ptr, ec] =
                std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size()) {
                throw BadSyntax("bad number in partition side at column " +
                                std::to_string(column_offset + pos + 1));
            }
            indices.push_back(static_cast<int>(value));
            pos = comma + 1;
        }
    }
    check_side_indices(indices, n);
    return indices;
}

std::string side_letters(const std::vector<int>& side) {
    std::string out;
    for (int idx : side) {
        out.push_back(static_cast<char>('A' + idx - 1));
    }
    return out;
}

std::string set_letters(const std::vector<int>& set) {
    return set.empty() ? std::string("()")
                       : "(" + side_letters(set) + ")";
}

} // namespace

Partition Partition::create(int n, std::vector<int> first_side,
                            std::vector<int> second_side) {
    if (n < 2) {
        throw NOutOfRange("partition requires at least 2 qubits");
    }
    if (first_side.empty() || second_side.empty()) {
        throw EmptySide("partition side is empty");
    }
    check_side_indices(first_side, n);
    check_side_indices(second_side, n);
    std::sort(first_side.begin(), first_side.end());
    std::sort(second_side.begin(), second_side.end());

    std::vector<int> all;
    all.reserve(first_side.size() + second_side.size());
    all.insert(all.end(), first_side.begin(), first_side.end());
    all.insert(all.end(), second_side.begin(), second_side.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw Overlap("partition sides share a qubit index");
    }
    if (static_cast<int>(all.size()) != n) {
        throw Incomplete("partition does not cover every qubit 1.." +
                         std::to_string(n));
    }

    Partition p;
    p.n_ = n;
    p.swapped_ = first_side.front() != 1;
    if (p.swapped_) {
        p.left_ = std::move(second_side);
        p.right_ = std::move(first_side);
    } else {
        p.left_ = std::move(first_side);
        p.right_ = std::move(second_side);
    }
    return p;
}

Partition parse_partition(std::string_view text, int n) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            throw BadSyntax("whitespace is not allowed in a partition string");
        }
    }
    const std::size_t bar = text.find('|');
    if (bar == std::string_view::npos) {
        throw BadSyntax("partition string needs exactly one '|'");
    }
    if (text.find('|', bar + 1) != std::string_view::npos) {
        throw BadSyntax("partition string needs exactly one '|'");
    }
    auto first_side = parse_side(text.substr(0, bar), n, 0);
    auto second_side = parse_side(text.substr(bar + 1), n, bar + 1);
    return Partition::create(n, std::move(first_side), std::move(second_side));
}

std::string format_partition(const Partition& p) {
    return side_letters(p.first()) + "|" + side_letters(p.second());
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 2 || n > 10) {
        throw NOutOfRange("partition enumeration supports 2..10 qubits");
    }
    // Subsets of {2..n} joined with {1}, grouped by size then lexicographic.
    std::vector<std::vector<int>> lefts;
    const int rest = n - 1;
    for (unsigned mask = 0; mask < (1u << rest); ++mask) {
        std::vector<int> left{1};
        for (int b = 0; b < rest; ++b) {
            if (mask & (1u << b)) {
                left.push_back(b + 2);
            }
        }
        if (static_cast<int>(left.size()) < n) {
            lefts.push_back(std::move(left));
        }
    }
    std::sort(lefts.begin(), lefts.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) {
                      return a.size() < b.size();
                  }
                  return a < b;
              });

    std::vector<Partition> out;
    out.reserve(lefts.size());
    for (auto& left : lefts) {
        std::vector<int> right;
        for (int q = 1; q <= n; ++q) {
            if (!std::binary_search(left.begin(), left.end(), q)) {
                right.push_back(q);
            }
        }
        out.push_back(Partition::create(n, std::move(left), std::move(right)));
    }
    return out;
}

std::vector<SubSplit> enumerate_canonical_splits(const Partition& p) {
    const std::vector<int>& r_side = p.first();
    const std::vector<int>& s_side = p.second();
    // Minimum of each side is pinned to the prime set; everything else is
    // free to land in either set.
    std::vector<int> r_free(r_side.begin() + 1, r_side.end());
    std::vector<int> s_free(s_side.begin() + 1, s_side.end());
    const int a = static_cast<int>(r_free.size());
    const int b = static_cast<int>(s_free.size());

    std::vector<SubSplit> splits;
    splits.reserve(1u << (a + b));
    for (unsigned cl = 0; cl < (1u << a); ++cl) {
        for (unsigned cr = 0; cr < (1u << b); ++cr) {
            SubSplit split{p, {}, {}, {}, {}};
            split.r_prime.push_back(r_side.front());
            for (int t = 0; t < a; ++t) {
                const bool flipped = (cl >> (a - 1 - t)) & 1u;
                (flipped ? split.r_dprime : split.r_prime).push_back(r_free[t]);
            }
            split.s_prime.push_back(s_side.front());
            for (int t = 0; t < b; ++t) {
                const bool flipped = (cr >> (b - 1 - t)) & 1u;
                (flipped ? split.s_dprime : split.s_prime).push_back(s_free[t]);
            }
            splits.push_back(std::move(split));
        }
    }
    return splits;
}

std::string format_split(const SubSplit& split) {
    return "[" + set_letters(split.r_prime) + "," + set_letters(split.r_dprime) +
           "]||[" + set_letters(split.s_prime) + "," +
           set_letters(split.s_dprime) + "]";
}

} // namespace qpsep
