#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "specht/combinatorics.hpp"
#include "specht/rational.hpp"

using namespace specht;

namespace {

// Independent enumeration: count weakly decreasing positive sequences summing
// to n with parts bounded by cap.
int brute_partition_count(int n, int cap) {
    if (n == 0) return 1;
    int total = 0;
    for (int first = std::min(n, cap); first >= 1; --first) {
        total += brute_partition_count(n - first, first);
    }
    return total;
}

// Independent enumeration of standard tableaux: place every permutation of
// 1..n into the shape row-major and keep the fillings with increasing rows
// and columns.
int brute_standard_tableau_count(const Partition& shape) {
    const int n = shape.n();
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    int count = 0;
    do {
        bool ok = true;
        std::size_t pos = 0;
        std::vector<std::vector<int>> rows;
        for (int r = 0; r < shape.length() && ok; ++r) {
            std::vector<int> row;
            for (int c = 0; c < shape.part(r) && ok; ++c) {
                int v = values[pos++];
                if (c > 0 && row.back() >= v) ok = false;
                if (r > 0 && rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v) ok = false;
                row.push_back(v);
            }
            rows.push_back(std::move(row));
        }
        if (ok) ++count;
    } while (std::next_permutation(values.begin(), values.end()));
    return count;
}

StandardTableau tableau(std::vector<int> shape, std::vector<std::vector<int>> rows) {
    return StandardTableau(Partition(std::move(shape)), std::move(rows));
}

} // namespace

TEST_CASE("partitions of 4 in reverse-lexicographic order") {
    auto p = partitions(4);
    REQUIRE(p.size() == 5);
    CHECK(p[0].parts() == std::vector<int>{4});
    CHECK(p[1].parts() == std::vector<int>{3, 1});
    CHECK(p[2].parts() == std::vector<int>{2, 2});
    CHECK(p[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(p[4].parts() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partitions corner cases") {
    CHECK(partitions(1).size() == 1);
    CHECK(partitions(1)[0].parts() == std::vector<int>{1});
    CHECK_THROWS_AS(partitions(0), std::invalid_argument);
    CHECK_THROWS_AS(partitions(-3), std::invalid_argument);
}

TEST_CASE("partitions of 8 match the brute-force count") {
    CHECK(static_cast<int>(partitions(8).size()) == brute_partition_count(8, 8));
    CHECK(partitions(8).size() == 22);
}

TEST_CASE("partitions are unique and valid for n up to 9") {
    for (int n = 1; n <= 9; ++n) {
        auto ps = partitions(n);
        std::set<std::vector<int>> seen;
        for (const auto& p : ps) {
            CHECK(p.n() == n);
            CHECK(seen.insert(p.parts()).second);
        }
        CHECK(static_cast<int>(ps.size()) == brute_partition_count(n, n));
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({4})).parts() == std::vector<int>{1, 1, 1, 1});
    CHECK(conjugate(Partition({2, 2})).parts() == std::vector<int>{2, 2});
    CHECK(conjugate(Partition({3, 2, 2, 1})).parts() == std::vector<int>{4, 3, 1});
    for (const auto& p : partitions(8)) {
        CHECK(conjugate(conjugate(p)) == p);
    }
}

TEST_CASE("standard tableaux of shape [2,2,1] match the displayed set") {
    auto ts = standard_tableaux(Partition({2, 2, 1}));
    REQUIRE(ts.size() == 5);
    std::set<std::vector<std::vector<int>>> expected{
        {{1, 4}, {2, 5}, {3}}, {{1, 3}, {2, 5}, {4}}, {{1, 2}, {3, 5}, {4}},
        {{1, 3}, {2, 4}, {5}}, {{1, 2}, {3, 4}, {5}},
    };
    std::set<std::vector<std::vector<int>>> got;
    for (const auto& t : ts) got.insert(t.rows());
    CHECK(got == expected);
}

TEST_CASE("standard tableaux order and degenerate cases") {
    auto row = standard_tableaux(Partition({5}));
    REQUIRE(row.size() == 1);
    CHECK(row[0].rows() == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});

    auto two = standard_tableaux(Partition({2, 1}));
    REQUIRE(two.size() == 2);
    // Column-word order puts [[1,3],[2]] (word 2,1,3) before [[1,2],[3]] (word 3,1,2).
    CHECK(two[0].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(two[1].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("standard tableaux have no duplicates and satisfy the invariants") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& shape : partitions(n)) {
            auto ts = standard_tableaux(shape);
            std::set<std::vector<std::vector<int>>> seen;
            for (const auto& t : ts) {
                CHECK(seen.insert(t.rows()).second);
                // Re-validate through the checking constructor.
                CHECK_NOTHROW(StandardTableau(t.shape(), t.rows()));
            }
        }
    }
}

TEST_CASE("hook length formula") {
    CHECK(hook_length_count(Partition({4, 3, 2, 1})) == 768);
    CHECK(hook_length_count(Partition({6})) == 1);
    CHECK(hook_length_count(Partition({2, 2, 1})) == 5);
}

TEST_CASE("hook length count equals enumeration for all shapes up to n=7") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& shape : partitions(n)) {
            CHECK(hook_length_count(shape) == standard_tableaux(shape).size());
            if (n <= 6) {
                CHECK(static_cast<int>(hook_length_count(shape)) == brute_standard_tableau_count(shape));
            }
        }
    }
}

TEST_CASE("sum of squared hook counts is n! for n up to 8") {
    const std::uint64_t expected[] = {1, 2, 6, 24, 120, 720, 5040, 40320};
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t total = 0;
        for (const auto& shape : partitions(n)) {
            std::uint64_t f = hook_length_count(shape);
            total += f * f;
        }
        CHECK(total == expected[n - 1]);
    }
}

TEST_CASE("index word of the worked five-cell example") {
    auto s = tableau({3, 2}, {{1, 2, 4}, {3, 5}});
    auto w = index_word(s);
    std::vector<std::pair<int, int>> expected{{3, 1}, {1, 0}, {5, 2}, {2, 0}, {4, 1}};
    CHECK(w == expected);
}

TEST_CASE("index word degenerate shapes") {
    auto row = tableau({4}, {{1, 2, 3, 4}});
    for (const auto& [entry, idx] : index_word(row)) CHECK(idx == 0);

    auto column = tableau({1, 1, 1, 1}, {{1}, {2}, {3}, {4}});
    auto w = index_word(column);
    std::vector<std::pair<int, int>> expected{{4, 3}, {3, 2}, {2, 1}, {1, 0}};
    CHECK(w == expected);
}

TEST_CASE("index tableau") {
    auto s = tableau({3, 2}, {{1, 2, 4}, {3, 5}});
    auto is = index_tableau(s);
    CHECK(is.rows == std::vector<std::vector<int>>{{0, 0, 1}, {1, 2}});

    auto row = tableau({4}, {{1, 2, 3, 4}});
    CHECK(index_tableau(row).rows == std::vector<std::vector<int>>{{0, 0, 0, 0}});

    auto s22 = tableau({2, 2}, {{1, 3}, {2, 4}});
    auto is22 = index_tableau(s22);
    CHECK(is22.rows == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(is22.entry_sum() == 4);
}

TEST_CASE("cocharge") {
    CHECK(cocharge(tableau({4}, {{1, 2, 3, 4}})) == 0);
    CHECK(cocharge(tableau({1, 1, 1, 1}, {{1}, {2}, {3}, {4}})) == 6);
    CHECK(cocharge(tableau({2, 2}, {{1, 2}, {3, 4}})) == 2);
}

TEST_CASE("monomial of a tableau pair") {
    auto s = tableau({3, 2}, {{1, 2, 4}, {3, 5}});
    auto t = tableau({3, 2}, {{1, 3, 5}, {2, 4}});
    CHECK(monomial(s, t) == ExponentVector{0, 1, 0, 2, 1});

    auto row = tableau({3}, {{1, 2, 3}});
    CHECK(monomial(row, row) == ExponentVector{0, 0, 0});

    auto col = tableau({1, 1, 1}, {{1}, {2}, {3}});
    CHECK(monomial(col, col) == ExponentVector{0, 1, 2});

    CHECK_THROWS_AS(monomial(row, col), std::invalid_argument);
}

TEST_CASE("cocharge equals index sums and monomial degrees for sizes up to 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& shape : partitions(n)) {
            auto ts = standard_tableaux(shape);
            for (const auto& s : ts) {
                const int cc = cocharge(s);
                CHECK(cc == index_tableau(s).entry_sum());
                auto deg = [](const ExponentVector& e) {
                    return std::accumulate(e.begin(), e.end(), 0);
                };
                CHECK(deg(monomial(s, ts.front())) == cc);
                CHECK(deg(monomial(s, ts.back())) == cc);
            }
        }
    }
}

TEST_CASE("serialization strings") {
    CHECK(Partition({4, 3, 1}).to_string() == "[4, 3, 1]");
    CHECK(tableau({3, 2}, {{1, 2, 4}, {3, 5}}).to_string() == "[[1, 2, 4], [3, 5]]");
}

TEST_CASE("tableau validation rejects bad fillings") {
    CHECK_THROWS_AS(tableau({2, 2}, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(tableau({2, 2}, {{2, 1}, {3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(tableau({2, 2}, {{1, 4}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(tableau({2, 1}, {{1, 2, 3}}), std::invalid_argument);
}
