#include <doctest.h>

#include <random>

#include "specht/characters.hpp"
#include "specht/rep_matrices.hpp"

using namespace specht;

namespace {

Rational trace(const RationalMatrix& m) {
    Rational t(0);
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

} // namespace

TEST_CASE("trivial and sign shapes give 1x1 matrices") {
    for (int n : {2, 3, 5}) {
        IrrepMatrixFactory trivial(Partition(std::vector<int>{n}));
        IrrepMatrixFactory sign(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        for (int k = 1; k < n; ++k) {
            CHECK(trivial.adjacent_matrix(k).at(0, 0) == 1);
            CHECK(sign.adjacent_matrix(k).at(0, 0) == -1);
        }
    }
}

TEST_CASE("adjacent matrix of [2,1] at k=1") {
    IrrepMatrixFactory factory(Partition({2, 1}));
    REQUIRE(factory.dimension() == 2);
    auto m = factory.adjacent_matrix(1);
    CHECK(trace(m) == 0);
    Rational det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    CHECK(det == -1);
    CHECK_THROWS_AS(factory.adjacent_matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(factory.adjacent_matrix(3), std::invalid_argument);
}

TEST_CASE("adjacent matrices are involutions") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& lambda : partitions(n)) {
            IrrepMatrixFactory factory(lambda);
            auto id = RationalMatrix::identity(factory.dimension());
            for (int k = 1; k < n; ++k) {
                const auto& a = factory.adjacent_matrix(k);
                CHECK(a * a == id);
            }
        }
    }
}

TEST_CASE("braid relations") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& lambda : partitions(n)) {
            IrrepMatrixFactory factory(lambda);
            for (int k = 1; k + 1 < n; ++k) {
                const auto& a = factory.adjacent_matrix(k);
                const auto& b = factory.adjacent_matrix(k + 1);
                CHECK(a * b * a == b * a * b);
            }
        }
    }
}

TEST_CASE("rep matrix of the identity and specific traces") {
    IrrepMatrixFactory f21(Partition({2, 1}));
    CHECK(f21.rep_matrix(Permutation::identity(3)) == RationalMatrix::identity(2));
    CHECK(trace(f21.rep_matrix(parse_permutation("(1,2,3)", 3))) == -1);

    IrrepMatrixFactory f22(Partition({2, 2}));
    CHECK(trace(f22.rep_matrix(parse_permutation("(1,2)(3,4)", 4))) == 2);
    CHECK_THROWS_AS(f22.rep_matrix(Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("homomorphism property on random pairs") {
    std::mt19937 rng(41);
    for (int n = 3; n <= 6; ++n) {
        for (const auto& lambda : partitions(n)) {
            IrrepMatrixFactory factory(lambda);
            for (int trial = 0; trial < 6; ++trial) {
                auto a = random_permutation(rng, n);
                auto b = random_permutation(rng, n);
                CHECK(factory.rep_matrix(compose(a, b)) ==
                      factory.rep_matrix(a) * factory.rep_matrix(b));
            }
        }
    }
}

TEST_CASE("trace equals the Murnaghan-Nakayama character") {
    std::mt19937 rng(43);
    for (int n = 2; n <= 6; ++n) {
        for (const auto& lambda : partitions(n)) {
            IrrepMatrixFactory factory(lambda);
            for (int trial = 0; trial < 8; ++trial) {
                auto sigma = random_permutation(rng, n);
                CHECK(trace(factory.rep_matrix(sigma)) ==
                      Rational(static_cast<long>(mn_character(lambda, cycle_type(sigma)))));
            }
        }
    }
}

TEST_CASE("bubble sort word reconstructs the permutation") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        auto sigma = random_permutation(rng, 7);
        auto word = bubble_sort_word(sigma);
        auto rebuilt = Permutation::identity(7);
        for (int k : word) {
            auto adj = parse_permutation("(" + std::to_string(k) + "," + std::to_string(k + 1) + ")", 7);
            rebuilt = compose(adj, rebuilt);
        }
        CHECK(rebuilt == sigma);
    }
}
