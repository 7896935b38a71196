#include "specht/multiplicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "specht/errors.hpp"

namespace specht {

std::int64_t MultiplicityTable::at(const Partition& lambda) const {
    for (const auto& [p, m] : entries) {
        if (p == lambda) return m;
    }
    throw std::invalid_argument("multiplicity table has no entry for " + lambda.to_string());
}

std::int64_t trivial_multiplicity(const PermutationGroup& g, const Partition& lambda,
                                  const CharacterTable& table) {
    if (lambda.n() != g.degree()) {
        throw std::invalid_argument("trivial_multiplicity: |lambda| must equal the group degree");
    }
    Integer sum = 0;
    for (const auto& cls : g.conjugacy_classes()) {
        Integer value = table.at(lambda, cls.cycle_type);
        sum += Integer(static_cast<unsigned long>(cls.size)) * value;
    }
    Integer order(static_cast<unsigned long>(g.order()));
    if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t())) {
        throw consistency_error("trivial multiplicity for " + lambda.to_string() +
                                " is not an integer: " + sum.get_str() + "/" + order.get_str());
    }
    Integer m = sum / order;
    if (m < 0) {
        throw consistency_error("trivial multiplicity for " + lambda.to_string() +
                                " is negative: " + m.get_str());
    }
    return static_cast<std::int64_t>(mpz_get_si(m.get_mpz_t()));
}

std::int64_t trivial_multiplicity(const PermutationGroup& g, const Partition& lambda) {
    return trivial_multiplicity(g, lambda, *character_table(g.degree()));
}

MultiplicityTable multiplicity_table(const PermutationGroup& g, const CharacterTable& table) {
    MultiplicityTable out;
    out.degree = g.degree();
    out.group_order = g.order();
    for (const auto& lambda : partitions(g.degree())) {
        out.entries.emplace_back(lambda, trivial_multiplicity(g, lambda, table));
    }
    return out;
}

MultiplicityTable multiplicity_table(const PermutationGroup& g) {
    return multiplicity_table(g, *character_table(g.degree()));
}

UnivariateSeries appearance_polynomial(const Partition& lambda) {
    UnivariateSeries phi = UnivariateSeries::zero_polynomial();
    for (const auto& t : standard_tableaux(lambda)) {
        phi += UnivariateSeries::monomial(cocharge(t));
    }
    return phi;
}

std::uint64_t expected_secondary_count(const PermutationGroup& g) {
    Integer total = factorial(static_cast<unsigned>(g.degree()));
    Integer order(static_cast<unsigned long>(g.order()));
    if (!mpz_divisible_p(total.get_mpz_t(), order.get_mpz_t())) {
        throw consistency_error("group order does not divide n!");
    }
    return to_uint64(total / order, "n!/|G|");
}

UnivariateSeries secondary_degree_numerator(const PermutationGroup& g, const CharacterTable& table,
                                            ConventionBridge bridge) {
    UnivariateSeries numerator = UnivariateSeries::zero_polynomial();
    for (const auto& lambda : partitions(g.degree())) {
        const std::int64_t m = trivial_multiplicity(g, lambda, table);
        if (m == 0) continue;
        const Partition paired =
            bridge == ConventionBridge::identity ? lambda : conjugate(lambda);
        UnivariateSeries phi = appearance_polynomial(paired);
        phi.scale(Rational(static_cast<long>(m)));
        numerator += phi;
    }
    for (const auto& c : numerator.coefficients()) {
        if (sgn(c) < 0) {
            throw consistency_error("secondary degree numerator has a negative coefficient");
        }
    }
    const Rational at_one = numerator.value_at_one();
    if (at_one != Rational(static_cast<long>(expected_secondary_count(g)))) {
        throw consistency_error("secondary degree numerator value at z=1 is " +
                                to_string(at_one) + ", expected n!/|G| = " +
                                std::to_string(expected_secondary_count(g)));
    }
    return numerator;
}

UnivariateSeries secondary_degree_numerator(const PermutationGroup& g) {
    return secondary_degree_numerator(g, *character_table(g.degree()));
}

UnivariateSeries molien_series(const PermutationGroup& g, int order) {
    std::vector<Rational> zero(static_cast<std::size_t>(order) + 1, Rational(0));
    UnivariateSeries total = UnivariateSeries::truncated(zero, order);
    for (const auto& cls : g.conjugacy_classes()) {
        std::vector<Rational> one(static_cast<std::size_t>(order) + 1, Rational(0));
        one[0] = Rational(static_cast<long>(cls.size));
        UnivariateSeries term = UnivariateSeries::truncated(std::move(one), order);
        for (int len : cls.cycle_type.parts()) term.divide_one_minus_pow(len);
        total += term;
    }
    total.scale(make_rational(1, static_cast<long>(g.order())));
    return total;
}

std::string hilbert_report_json(const HilbertReport& report) {
    std::string out = "{\"order\":" + std::to_string(report.order) +
                      ",\"match\":" + (report.match ? "true" : "false");
    if (report.first_mismatch_degree) {
        out += ",\"first_mismatch_degree\":" + std::to_string(*report.first_mismatch_degree);
    }
    auto coeffs = [](const UnivariateSeries& s) {
        std::string list = "[";
        for (std::size_t i = 0; i < s.coefficients().size(); ++i) {
            if (i) list += ',';
            list += '"' + s.coefficients()[i].get_str() + '"';
        }
        return list + "]";
    };
    out += ",\"lhs\":" + coeffs(report.lhs) + ",\"rhs\":" + coeffs(report.rhs) + "}";
    return out;
}

HilbertReport hilbert_consistency(const PermutationGroup& g, int order, ConventionBridge bridge) {
    HilbertReport report;
    report.order = order;
    UnivariateSeries lhs =
        secondary_degree_numerator(g, *character_table(g.degree()), bridge).truncate_to(order);
    for (int i = 1; i <= g.degree(); ++i) lhs.divide_one_minus_pow(i);
    report.lhs = std::move(lhs);
    report.rhs = molien_series(g, order);
    report.match = true;
    for (int d = 0; d <= order; ++d) {
        if (report.lhs.coefficient(d) != report.rhs.coefficient(d)) {
            report.match = false;
            report.first_mismatch_degree = d;
            break;
        }
    }
    return report;
}

} // namespace specht
