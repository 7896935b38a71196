#include <doctest.h>

#include <json.hpp>
#include <map>
#include <set>

#include "specht/engine.hpp"
#include "specht/errors.hpp"
#include "specht/specht_poly.hpp"

using namespace specht;

namespace {

PermutationGroup klein_group() {
    return PermutationGroup(4, {parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1,4)(2,3)", 4)});
}

EngineOptions expand_verify(int workers = 1) {
    EngineOptions opts;
    opts.expand = true;
    opts.verify = true;
    opts.workers = workers;
    return opts;
}

} // namespace

TEST_CASE("abstract fixed basis dimensions") {
    auto g = klein_group();
    auto fixed22 = abstract_fixed_basis(g, Partition({2, 2}));
    CHECK(fixed22.ambient_dim() == 2);
    CHECK(fixed22.dim() == 2); // full space: both generator matrices are the identity

    auto fixed4 = abstract_fixed_basis(g, Partition({4}));
    CHECK(fixed4.dim() == 1);

    auto s4 = symmetric_group(4);
    CHECK(abstract_fixed_basis(s4, Partition({4})).dim() == 1);
    CHECK(abstract_fixed_basis(s4, Partition({2, 2})).dim() == 0);
}

TEST_CASE("full symmetric group has exactly the constant invariant") {
    for (int n : {2, 3, 4}) {
        auto result = secondary_invariants(symmetric_group(n), expand_verify());
        REQUIRE(result.invariants.size() == 1);
        const auto& inv = result.invariants.front();
        CHECK(inv.shape == Partition(std::vector<int>{n}));
        CHECK(inv.degree == 0);
        REQUIRE(inv.expanded.has_value());
        CHECK(inv.expanded->total_degree() == 0);
    }
}

TEST_CASE("Klein group invariants: count, degrees, invariance, independence") {
    auto result = secondary_invariants(klein_group(), expand_verify());
    REQUIRE(result.invariants.size() == 6);
    CHECK(result.report.total_expected == 6);
    CHECK(result.report.total_found == 6);

    std::multiset<int> degrees;
    for (const auto& inv : result.invariants) {
        degrees.insert(inv.degree);
        REQUIRE(inv.expanded.has_value());
        CHECK(inv.expanded->is_homogeneous());
        CHECK(inv.expanded->total_degree() == inv.degree);
        CHECK(verify_invariance(*inv.expanded, klein_group()));
        CHECK_FALSE(inv.combination.empty());
        for (const auto& [t, c] : inv.combination) CHECK(sgn(c) != 0);
    }
    CHECK(degrees == std::multiset<int>{0, 2, 2, 4, 4, 6});
}

TEST_CASE("degree census equals the secondary degree numerator") {
    std::vector<PermutationGroup> groups;
    groups.push_back(klein_group());
    groups.emplace_back(3, std::vector<Permutation>{parse_permutation("(1,2,3)", 3)});
    groups.emplace_back(4, std::vector<Permutation>{parse_permutation("(1,2,3,4)", 4)});
    for (const auto& g : groups) {
        auto result = secondary_invariants(g, expand_verify());
        std::map<int, long> census;
        for (const auto& inv : result.invariants) ++census[inv.degree];
        auto numerator = secondary_degree_numerator(g);
        for (int d = 0; d <= numerator.order(); ++d) {
            CHECK(numerator.coefficient(d) == Rational(census.count(d) ? census[d] : 0));
        }
    }
}

TEST_CASE("per-lambda report matches the multiplicity table") {
    auto g = klein_group();
    auto result = secondary_invariants(g, EngineOptions{});
    auto table = multiplicity_table(g);
    REQUIRE(result.report.per_lambda.size() == 3);
    for (const auto& rec : result.report.per_lambda) {
        CHECK(rec.rank == table.at(rec.shape));
        CHECK(rec.ambient_dim == hook_length_count(rec.shape));
    }
}

TEST_CASE("abstract mode emits combinations without expansion") {
    auto result = secondary_invariants(klein_group(), EngineOptions{});
    REQUIRE(result.invariants.size() == 6);
    for (const auto& inv : result.invariants) CHECK_FALSE(inv.expanded.has_value());
    CHECK_FALSE(result.expanded_attached);
}

TEST_CASE("trace text matches the documented line patterns") {
    auto result = secondary_invariants(klein_group(), EngineOptions{});
    CHECK(engine_trace_text(result) ==
          "[4]  ambient dimension -->  1\n"
          "rank in S_n repr :  1\n"
          "[2, 2]  ambient dimension -->  2\n"
          "rank in S_n repr :  2\n"
          "[1, 1, 1, 1]  ambient dimension -->  1\n"
          "rank in S_n repr :  1\n"
          "total :  6\n"
          "n! / |G| :  6\n");
}

TEST_CASE("result JSON parses and carries the documented schema") {
    auto result = secondary_invariants(klein_group(), expand_verify());
    auto parsed = nlohmann::json::parse(engine_result_json(result));
    CHECK(parsed["degree"] == 4);
    CHECK(parsed["group_order"] == 4);
    CHECK(parsed["total_expected"] == 6);
    CHECK(parsed["generators"].size() == 2);
    CHECK(parsed["per_lambda"].size() == 3);
    CHECK(parsed["per_lambda"][0]["partition"] == nlohmann::json::array({4}));
    CHECK(parsed["per_lambda"][0].contains("ambient_dim"));
    CHECK(parsed["per_lambda"][0].contains("rank"));
    CHECK_FALSE(parsed["per_lambda"][0].contains("elapsed_ms")); // timing off by default
    REQUIRE(parsed["invariants"].size() == 6);
    for (const auto& inv : parsed["invariants"]) {
        CHECK(inv.contains("shape"));
        CHECK(inv.contains("S"));
        CHECK(inv.contains("degree"));
        CHECK(inv.contains("combination"));
        CHECK(inv["combination"].size() >= 1);
        CHECK(inv["combination"][0].contains("T"));
        CHECK(inv["combination"][0].contains("coeff"));
        CHECK(inv.contains("expanded"));
    }
    auto timed = nlohmann::json::parse(engine_result_json(result, true));
    CHECK(timed.contains("elapsed_ms"));
}

TEST_CASE("serialized output is identical for 1 and 4 workers") {
    auto r1 = secondary_invariants(klein_group(), expand_verify(1));
    auto r4 = secondary_invariants(klein_group(), expand_verify(4));
    CHECK(engine_result_json(r1) == engine_result_json(r4));

    PermutationGroup s3s3(6, {parse_permutation("(1,2)", 6), parse_permutation("(1,2,3)", 6),
                              parse_permutation("(4,5)", 6), parse_permutation("(4,5,6)", 6)});
    auto a = secondary_invariants(s3s3, expand_verify(1));
    auto b = secondary_invariants(s3s3, expand_verify(8));
    CHECK(engine_result_json(a) == engine_result_json(b));
}

TEST_CASE("verify_invariance") {
    auto g = klein_group();
    CHECK(verify_invariance(SparsePolynomial::constant(4, make_rational(7)), g));

    PermutationGroup swap2(2, {parse_permutation("(1,2)", 2)});
    CHECK_FALSE(verify_invariance(SparsePolynomial::variable(2, 1), swap2));

    SparsePolynomial p(4);
    p.add_term({1, 1, 0, 0}, make_rational(1));
    p.add_term({0, 0, 1, 1}, make_rational(1));
    p.add_term({1, 0, 0, 1}, make_rational(1));
    p.add_term({0, 1, 1, 0}, make_rational(1));
    CHECK(verify_invariance(p, g));
}

TEST_CASE("seminormal-direct coordinates are not invariant in general") {
    // Measured behavior: the direct reuse of seminormal coordinates happens to
    // produce invariants for the Klein group but fails for S2 <= S3, so the
    // fast mode must abort under verification for the latter.
    EngineOptions direct;
    direct.expand = true;
    direct.verify = true;
    direct.strategy = TranslationStrategy::seminormal_direct;

    CHECK_NOTHROW(secondary_invariants(klein_group(), direct));

    PermutationGroup s2(3, {parse_permutation("(1,2)", 3)});
    CHECK_THROWS_AS(secondary_invariants(s2, direct), consistency_error);

    // Expanding through the fast path forces the check even without --verify.
    EngineOptions unverified = direct;
    unverified.verify = false;
    CHECK_THROWS_AS(secondary_invariants(s2, unverified), consistency_error);

    // The concrete default translates the same group correctly.
    auto fixed = secondary_invariants(s2, expand_verify());
    CHECK(fixed.invariants.size() == 3);
}

TEST_CASE("translate_to_specht_basis returns the trivial combination for [n]") {
    auto g = klein_group();
    Partition shape({4});
    auto fixed = abstract_fixed_basis(g, shape);
    auto s = standard_tableaux(shape).front();
    auto tr = translate_to_specht_basis(g, fixed, shape, s, TranslationStrategy::concrete);
    REQUIRE(tr.combinations.rows() == 1);
    CHECK(tr.combinations.at(0, 0) == 1);
}

TEST_CASE("expanded invariants within one block are linearly independent") {
    auto result = secondary_invariants(klein_group(), expand_verify());
    for (const auto& block : result.blocks) {
        for (const auto& basis : block.bases) {
            CHECK(rref(basis).rank == basis.rows());
        }
    }
}
