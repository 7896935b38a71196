#include <doctest.h>

#include <map>

#include "specht/errors.hpp"
#include "specht/linalg.hpp"
#include "specht/specht_poly.hpp"

using namespace specht;

namespace {

StandardTableau tableau(std::vector<int> shape, std::vector<std::vector<int>> rows) {
    return StandardTableau(Partition(std::move(shape)), std::move(rows));
}

SparsePolynomial poly(int nvars, std::vector<std::pair<std::vector<int>, long>> terms) {
    SparsePolynomial p(nvars);
    for (auto& [e, c] : terms) p.add_term(e, make_rational(c));
    return p;
}

// Coefficient matrix of a polynomial family over the union of its monomials.
RationalMatrix coefficient_matrix(const std::vector<SparsePolynomial>& polys) {
    std::map<ExponentVector, int, TermOrder> index;
    for (const auto& p : polys) {
        for (const auto& [e, c] : p.terms()) index.emplace(e, 0);
    }
    int next = 0;
    for (auto& [e, i] : index) i = next++;
    RationalMatrix m(static_cast<int>(polys.size()), next);
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const auto& [e, c] : polys[r].terms()) m.at(static_cast<int>(r), index.at(e)) = c;
    }
    return m;
}

} // namespace

TEST_CASE("polynomial printing follows the canonical term order") {
    auto p = poly(3, {{{1, 0, 0}, -2}, {{0, 0, 1}, 2}});
    CHECK(p.to_string() == "2*x3 - 2*x1");
    CHECK(SparsePolynomial(3).to_string() == "0");
    CHECK(SparsePolynomial::constant(2, make_rational(5)).to_string() == "5");
    auto q = poly(3, {{{0, 1, 1}, 1}, {{1, 1, 0}, -1}});
    CHECK(q.to_string() == "x2*x3 - x1*x2");
}

TEST_CASE("polynomial arithmetic drops zero terms") {
    auto a = poly(2, {{{1, 0}, 1}});
    auto b = poly(2, {{{1, 0}, -1}, {{0, 1}, 2}});
    auto sum = a + b;
    CHECK(sum.term_count() == 1);
    CHECK(sum.coefficient({0, 1}) == 2);
    auto product = a * b;
    CHECK(product.coefficient({2, 0}) == -1);
    CHECK(product.coefficient({1, 1}) == 2);
}

TEST_CASE("permute_variables") {
    auto x1 = SparsePolynomial::variable(3, 1);
    CHECK(permute_variables(x1, Permutation::identity(3)) == x1);
    CHECK(permute_variables(x1, parse_permutation("(1,2)", 3)) == SparsePolynomial::variable(3, 2));

    // Vandermonde alternates under a transposition.
    auto vdm = higher_specht(tableau({1, 1, 1}, {{1}, {2}, {3}}), tableau({1, 1, 1}, {{1}, {2}, {3}}));
    auto flipped = permute_variables(vdm, parse_permutation("(1,2)", 3));
    auto negated = vdm;
    negated.scale(make_rational(-1));
    CHECK(flipped == negated);

    CHECK_THROWS_AS(permute_variables(x1, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("young symmetrizer group sizes") {
    auto t = tableau({3, 2}, {{1, 2, 4}, {3, 5}});
    auto sym = young_symmetrizer(t);
    CHECK(sym.row_group.size() == 12);   // 3! * 2!
    CHECK(sym.column_group.size() == 4); // 2! * 2! * 1!
}

TEST_CASE("apply_symmetrizer worked examples") {
    auto row3 = tableau({3}, {{1, 2, 3}});
    CHECK(apply_symmetrizer(row3, {0, 0, 0}) == SparsePolynomial::constant(3, make_rational(6)));

    auto col3 = tableau({1, 1, 1}, {{1}, {2}, {3}});
    auto vdm = apply_symmetrizer(col3, {0, 1, 2});
    CHECK(vdm == poly(3, {{{0, 1, 2}, 1}, {{1, 0, 2}, -1}, {{0, 2, 1}, -1},
                          {{2, 0, 1}, 1}, {{1, 2, 0}, 1}, {{2, 1, 0}, -1}}));

    auto hook = tableau({2, 1}, {{1, 2}, {3}});
    CHECK(apply_symmetrizer(hook, {0, 0, 1}) == poly(3, {{{0, 0, 1}, 2}, {{1, 0, 0}, -2}}));
}

TEST_CASE("higher Specht golden table for three variables") {
    auto row = tableau({3}, {{1, 2, 3}});
    auto h13 = tableau({2, 1}, {{1, 3}, {2}});
    auto h12 = tableau({2, 1}, {{1, 2}, {3}});
    auto col = tableau({1, 1, 1}, {{1}, {2}, {3}});

    CHECK(higher_specht(row, row) == SparsePolynomial::constant(3, make_rational(6)));
    CHECK(higher_specht(h12, h12) == poly(3, {{{0, 0, 1}, 2}, {{1, 0, 0}, -2}}));
    CHECK(higher_specht(h12, h13) == poly(3, {{{0, 1, 0}, 2}, {{1, 0, 0}, -2}}));
    CHECK(higher_specht(h13, h12) == poly(3, {{{0, 1, 1}, 1}, {{1, 1, 0}, -1}}));
    CHECK(higher_specht(h13, h13) == poly(3, {{{0, 1, 1}, 1}, {{1, 0, 1}, -1}}));
    CHECK(higher_specht(col, col) ==
          poly(3, {{{0, 1, 2}, 1}, {{1, 0, 2}, -1}, {{0, 2, 1}, -1},
                   {{2, 0, 1}, 1}, {{1, 2, 0}, 1}, {{2, 1, 0}, -1}}));

    CHECK_THROWS_AS(higher_specht(row, col), std::invalid_argument);
}

TEST_CASE("higher Specht polynomials are homogeneous of degree cocharge(S)") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions(n)) {
            auto ts = standard_tableaux(lambda);
            for (const auto& s : ts) {
                for (const auto& t : ts) {
                    auto f = higher_specht(s, t);
                    CHECK_FALSE(f.is_zero());
                    CHECK(f.is_homogeneous());
                    CHECK(f.total_degree() == cocharge(s));
                }
            }
        }
    }
}

TEST_CASE("the n! higher Specht polynomials are linearly independent up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<SparsePolynomial> family;
        for (const auto& lambda : partitions(n)) {
            auto ts = standard_tableaux(lambda);
            for (const auto& s : ts) {
                for (const auto& t : ts) family.push_back(higher_specht(s, t));
            }
        }
        std::uint64_t nf = 1;
        for (int k = 2; k <= n; ++k) nf *= static_cast<std::uint64_t>(k);
        REQUIRE(family.size() == nf);
        CHECK(rref(coefficient_matrix(family)).rank == static_cast<int>(nf));
    }
}

TEST_CASE("adjacent transpositions stabilize each (shape, S) span") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& lambda : partitions(n)) {
            auto ts = standard_tableaux(lambda);
            for (const auto& s : ts) {
                std::vector<SparsePolynomial> block;
                for (const auto& t : ts) block.push_back(higher_specht(s, t));
                auto base_rank = rref(coefficient_matrix(block)).rank;
                REQUIRE(base_rank == static_cast<int>(block.size()));
                for (int k = 1; k < n; ++k) {
                    auto adj = parse_permutation("(" + std::to_string(k) + "," + std::to_string(k + 1) + ")", n);
                    std::vector<SparsePolynomial> extended = block;
                    for (const auto& t : ts) {
                        extended.push_back(permute_variables(higher_specht(s, t), adj));
                    }
                    // No rank growth: every image lies in the block span.
                    CHECK(rref(coefficient_matrix(extended)).rank == base_rank);
                }
            }
        }
    }
}
