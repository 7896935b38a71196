#ifndef SPECHT_ENGINE_HPP
#define SPECHT_ENGINE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "specht/characters.hpp"
#include "specht/combinatorics.hpp"
#include "specht/linalg.hpp"
#include "specht/multiplicity.hpp"
#include "specht/permgroup.hpp"
#include "specht/polynomial.hpp"
#include "specht/rep_matrices.hpp"

namespace specht {

// How abstract fixed vectors become coefficients over the higher Specht
// polynomials {F_T^S}.
//
// concrete (default when expanding): builds the matrices of each generator
// acting on span{F_T^S} by exact expansion and solves for the fixed space of
// those matrices; invariance holds by construction.
//
// seminormal_direct: reuses the seminormal fixed-space coordinates unchanged.
// The two bases are isomorphic modules but nothing guarantees they carry the
// same matrices, so this mode is only trusted when the invariance check passes.
enum class TranslationStrategy { concrete, seminormal_direct };

struct EngineOptions {
    bool expand = false;  // attach expanded polynomials
    bool verify = false;  // exact generator-fixedness check; implies expand
    std::optional<TranslationStrategy> strategy; // default: concrete iff expanding
    int workers = 1;
    bool materialize = true; // build the flat SecondaryInvariant list
    CharacterTableOptions chartable;

    TranslationStrategy resolved_strategy() const {
        if (strategy) return *strategy;
        return (expand || verify) ? TranslationStrategy::concrete
                                  : TranslationStrategy::seminormal_direct;
    }
    bool needs_expansion() const { return expand || verify; }
};

// One G-invariant: the combination sum_T coeff_T * F_T^S inside the (shape, S)
// block; degree = cocharge(S).
struct SecondaryInvariant {
    Partition shape;
    StandardTableau degree_tableau; // S
    std::vector<std::pair<StandardTableau, Rational>> combination; // nonzero coeffs only
    int degree = 0;
    std::optional<SparsePolynomial> expanded;
};

struct LambdaRecord {
    Partition shape;
    std::uint64_t ambient_dim = 0; // f^lambda
    int rank = 0;                  // dim of the G-fixed subspace
    std::int64_t elapsed_ms = 0;
};

// Per-shape payload: the invariant combinations as matrix rows over the
// canonical tableaux order. Concrete translation yields one basis per S;
// the seminormal route yields a single basis shared by every S.
struct LambdaBlock {
    Partition shape;
    std::vector<StandardTableau> tableaux;
    bool per_tableau_bases = false;
    std::vector<RationalMatrix> bases; // size tableaux.size() or 1
    // expanded[s_index][basis_row], filled only when expansion is on
    std::vector<std::vector<SparsePolynomial>> expanded;
};

struct EngineReport {
    int degree = 0;
    std::vector<std::string> generator_strings;
    std::uint64_t group_order = 0;
    std::uint64_t total_expected = 0; // n!/|G|
    std::uint64_t total_found = 0;
    std::vector<LambdaRecord> per_lambda; // shapes with m_lambda > 0, canonical order
    std::int64_t elapsed_ms_total = 0;
};

struct EngineResult {
    EngineReport report;
    std::vector<LambdaBlock> blocks; // canonical order
    std::vector<SecondaryInvariant> invariants; // empty unless materialized
    bool expanded_attached = false;
};

// Fixed space of the generator matrices in the seminormal model; dimension is
// checked against the character-theoretic multiplicity.
Subspace abstract_fixed_basis(const PermutationGroup& g, const Partition& lambda,
                              const IrrepMatrixFactory& factory, const CharacterTable& table);
Subspace abstract_fixed_basis(const PermutationGroup& g, const Partition& lambda);

struct TranslationResult {
    RationalMatrix combinations;              // rank x f, rows are coefficient vectors
    std::vector<SparsePolynomial> specht_basis; // F_T^S, canonical T order (concrete only)
};

// Coefficients over {F_T^S} for the given block; `fixed` supplies the
// seminormal fixed space (used directly or for cross-checking, per strategy).
TranslationResult translate_to_specht_basis(const PermutationGroup& g, const Subspace& fixed,
                                            const Partition& lambda, const StandardTableau& s,
                                            TranslationStrategy strategy);

// True iff every generator fixes p exactly.
bool verify_invariance(const SparsePolynomial& p, const PermutationGroup& g);

EngineResult secondary_invariants(const PermutationGroup& g, const EngineOptions& options = {});

// Paper-style text trace: per-shape dimension/rank lines plus the totals.
std::string engine_trace_text(const EngineResult& result);

// Deterministic JSON serialization; timing fields only when include_timing.
void write_engine_result_json(std::ostream& out, const EngineResult& result, bool include_timing);
std::string engine_result_json(const EngineResult& result, bool include_timing = false);

} // namespace specht

#endif
