#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qpsep/errors.hpp"
#include "qpsep/partition.hpp"
#include "qpsep/reduction.hpp"

using namespace qpsep;

namespace {

std::vector<std::string> split_strings(const Partition& p) {
    std::vector<std::string> out;
    for (const SubSplit& s : enumerate_canonical_splits(p)) {
        out.push_back(format_split(s));
    }
    return out;
}

} // namespace

TEST_CASE("parse_partition accepts both syntaxes") {
    SUBCASE("letters") {
        const Partition p = parse_partition("A|BC", 3);
        CHECK(p.left() == std::vector<int>{1});
        CHECK(p.right() == std::vector<int>{2, 3});
        CHECK_FALSE(p.swapped());
    }

    SUBCASE("interleaved letters") {
        const Partition p = parse_partition("AC|BD", 4);
        CHECK(p.left() == std::vector<int>{1, 3});
        CHECK(p.right() == std::vector<int>{2, 4});
    }

    SUBCASE("numeric") {
        const Partition p = parse_partition("1,3|2,4", 4);
        CHECK(p.left() == std::vector<int>{1, 3});
        CHECK(p.right() == std::vector<int>{2, 4});
    }

    SUBCASE("orientation is kept, storage is canonical") {
        const Partition p = parse_partition("B|AC", 3);
        CHECK(p.swapped());
        CHECK(p.left() == std::vector<int>{1, 3});
        CHECK(p.right() == std::vector<int>{2});
        CHECK(p.first() == std::vector<int>{2});
        CHECK(p.second() == std::vector<int>{1, 3});
        CHECK(format_partition(p) == "B|AC");
    }

    SUBCASE("unsorted sides are sorted") {
        const Partition p = parse_partition("CA|B", 3);
        CHECK(p.left() == std::vector<int>{1, 3});
        CHECK(format_partition(p) == "AC|B");
    }
}

TEST_CASE("parse_partition rejects malformed input") {
    CHECK_THROWS_AS(parse_partition("ABC", 3), BadSyntax);
    CHECK_THROWS_AS(parse_partition("A|B|C", 3), BadSyntax);
    CHECK_THROWS_AS(parse_partition("A |BC", 3), BadSyntax);
    CHECK_THROWS_AS(parse_partition("A,2|3", 3), BadSyntax);
    CHECK_THROWS_AS(parse_partition("1,,2|3", 3), BadSyntax);
    CHECK_THROWS_AS(parse_partition("a|bc", 3), BadSyntax);
    CHECK_THROWS_AS(parse_partition("A|", 3), EmptySide);
    CHECK_THROWS_AS(parse_partition("|A", 3), EmptySide);
    CHECK_THROWS_AS(parse_partition("AD|BC", 3), IndexOutOfRange);
    CHECK_THROWS_AS(parse_partition("0|1,2", 2), IndexOutOfRange);
    CHECK_THROWS_AS(parse_partition("AA|B", 2), Overlap);
    CHECK_THROWS_AS(parse_partition("AB|BC", 3), Overlap);
    CHECK_THROWS_AS(parse_partition("A|B", 3), Incomplete);
}

TEST_CASE("enumerate_partitions") {
    SUBCASE("counts") {
        CHECK(enumerate_partitions(2).size() == 1);
        CHECK(enumerate_partitions(3).size() == 3);
        CHECK(enumerate_partitions(4).size() == 7);
        CHECK(enumerate_partitions(6).size() == 31);
    }

    SUBCASE("pinned order for three qubits") {
        const auto parts = enumerate_partitions(3);
        REQUIRE(parts.size() == 3);
        CHECK(format_partition(parts[0]) == "A|BC");
        CHECK(format_partition(parts[1]) == "AB|C");
        CHECK(format_partition(parts[2]) == "AC|B");
    }

    SUBCASE("two qubits") {
        const auto parts = enumerate_partitions(2);
        CHECK(format_partition(parts[0]) == "A|B");
    }

    SUBCASE("bounds") {
        CHECK_THROWS_AS(enumerate_partitions(1), NOutOfRange);
        CHECK_THROWS_AS(enumerate_partitions(11), NOutOfRange);
    }

    SUBCASE("round trip through the string grammar") {
        for (int n = 2; n <= 8; ++n) {
            for (const Partition& p : enumerate_partitions(n)) {
                CHECK(parse_partition(format_partition(p), n) == p);
            }
        }
    }
}

TEST_CASE("canonical split term lists") {
    SUBCASE("one against two") {
        CHECK(split_strings(parse_partition("A|BC", 3)) ==
              std::vector<std::string>{
                  "[(A),()]||[(BC),()]",
                  "[(A),()]||[(B),(C)]",
              });
    }

    SUBCASE("one against three, swapped orientation") {
        CHECK(split_strings(parse_partition("B|ACD", 4)) ==
              std::vector<std::string>{
                  "[(B),()]||[(ACD),()]",
                  "[(B),()]||[(AC),(D)]",
                  "[(B),()]||[(AD),(C)]",
                  "[(B),()]||[(A),(CD)]",
              });
    }

    SUBCASE("two against two") {
        CHECK(split_strings(parse_partition("AC|BD", 4)) ==
              std::vector<std::string>{
                  "[(AC),()]||[(BD),()]",
                  "[(AC),()]||[(B),(D)]",
                  "[(A),(C)]||[(BD),()]",
                  "[(A),(C)]||[(B),(D)]",
              });
    }

    SUBCASE("two against three") {
        CHECK(split_strings(parse_partition("AC|BDE", 5)) ==
              std::vector<std::string>{
                  "[(AC),()]||[(BDE),()]",
                  "[(AC),()]||[(BD),(E)]",
                  "[(AC),()]||[(BE),(D)]",
                  "[(AC),()]||[(B),(DE)]",
                  "[(A),(C)]||[(BDE),()]",
                  "[(A),(C)]||[(BD),(E)]",
                  "[(A),(C)]||[(BE),(D)]",
                  "[(A),(C)]||[(B),(DE)]",
              });
    }
}

TEST_CASE("split enumeration properties") {
    for (int n = 2; n <= 8; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
            const auto splits = enumerate_canonical_splits(p);
            CHECK(splits.size() == (std::size_t{1} << (n - 2)));

            std::set<std::string> distinct;
            for (const SubSplit& s : splits) {
                distinct.insert(format_split(s));

                // Prime sets hold the side minima; the union of the prime
                // and double-prime sets restores each side.
                REQUIRE_FALSE(s.r_prime.empty());
                REQUIRE_FALSE(s.s_prime.empty());
                CHECK(s.r_prime.front() == p.first().front());
                CHECK(s.s_prime.front() == p.second().front());

                std::vector<int> r_all = s.r_prime;
                r_all.insert(r_all.end(), s.r_dprime.begin(), s.r_dprime.end());
                std::sort(r_all.begin(), r_all.end());
                CHECK(r_all == p.first());

                std::vector<int> s_all = s.s_prime;
                s_all.insert(s_all.end(), s.s_dprime.begin(), s.s_dprime.end());
                std::sort(s_all.begin(), s_all.end());
                CHECK(s_all == p.second());
            }
            CHECK(distinct.size() == splits.size());
        }
    }
}

TEST_CASE("index vectors tile the basis exactly once") {
    for (int n = 2; n <= 8; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
            std::set<std::size_t> seen;
            for (const SubSplit& s : enumerate_canonical_splits(p)) {
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        const auto [it, inserted] = seen.insert(basis_index(s, i, j));
                        CHECK(inserted);
                    }
                }
            }
            CHECK(seen.size() == (std::size_t{1} << n));
        }
    }
}
