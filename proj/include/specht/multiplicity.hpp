#ifndef SPECHT_MULTIPLICITY_HPP
#define SPECHT_MULTIPLICITY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specht/characters.hpp"
#include "specht/combinatorics.hpp"
#include "specht/permgroup.hpp"
#include "specht/series.hpp"

namespace specht {

// Multiplicity of the G-trivial representation inside each S_n irreducible.
struct MultiplicityTable {
    int degree = 0;
    std::uint64_t group_order = 0;
    std::vector<std::pair<Partition, std::int64_t>> entries; // canonical partition order

    std::int64_t at(const Partition& lambda) const;
};

// Pairing of the appearance polynomials with the multiplicity map. The
// standard character convention makes the identity pairing the one consistent
// with the Molien series; the conjugate pairing is kept selectable so the
// oracle can arbitrate.
enum class ConventionBridge { identity, conjugate };

// (1/|G|) sum over classes of |C| * chi^lambda(cycle type); exact integer by
// construction, consistency_error otherwise.
std::int64_t trivial_multiplicity(const PermutationGroup& g, const Partition& lambda,
                                  const CharacterTable& table);
std::int64_t trivial_multiplicity(const PermutationGroup& g, const Partition& lambda);

MultiplicityTable multiplicity_table(const PermutationGroup& g, const CharacterTable& table);
MultiplicityTable multiplicity_table(const PermutationGroup& g);

// phi(lambda, z) = sum over standard tableaux of z^cocharge; phi(lambda, 1) = f^lambda.
UnivariateSeries appearance_polynomial(const Partition& lambda);

// Numerator of the Hilbert series over the coinvariant denominator:
// sum_lambda m_lambda * phi(bridge(lambda), z). Nonnegative coefficients and
// value n!/|G| at z = 1 are enforced.
UnivariateSeries secondary_degree_numerator(const PermutationGroup& g, const CharacterTable& table,
                                            ConventionBridge bridge = ConventionBridge::identity);
UnivariateSeries secondary_degree_numerator(const PermutationGroup& g);

// Hilbert series of the invariant ring, truncated: (1/|G|) sum over classes of
// |C| * prod over cycle lengths of 1/(1 - z^len).
UnivariateSeries molien_series(const PermutationGroup& g, int order);

struct HilbertReport {
    int order = 0;
    bool match = false;
    std::optional<int> first_mismatch_degree;
    UnivariateSeries lhs; // numerator / prod (1 - z^i), truncated
    UnivariateSeries rhs; // Molien series, truncated
};

// Checks numerator / prod_{i=1..n} (1 - z^i) == molien_series(g, order).
HilbertReport hilbert_consistency(const PermutationGroup& g, int order,
                                  ConventionBridge bridge = ConventionBridge::identity);

// {"order":..,"match":..,"first_mismatch_degree":..?,"lhs":[..],"rhs":[..]}
std::string hilbert_report_json(const HilbertReport& report);

// n! / |G| as an exact integer.
std::uint64_t expected_secondary_count(const PermutationGroup& g);

} // namespace specht

#endif
