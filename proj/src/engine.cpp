#include "specht/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "specht/errors.hpp"
#include "specht/specht_poly.hpp"

namespace specht {

namespace {

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::vector<SparsePolynomial> expand_rows(const RationalMatrix& rows,
                                          const std::vector<SparsePolynomial>& basis_polys,
                                          int nvars) {
    std::vector<SparsePolynomial> out;
    out.reserve(static_cast<std::size_t>(rows.rows()));
    for (int i = 0; i < rows.rows(); ++i) {
        SparsePolynomial p(nvars);
        for (int j = 0; j < rows.cols(); ++j) {
            const Rational& c = rows.at(i, j);
            if (sgn(c) == 0) continue;
            SparsePolynomial scaled = basis_polys[static_cast<std::size_t>(j)];
            scaled.scale(c);
            p += scaled;
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

Subspace abstract_fixed_basis(const PermutationGroup& g, const Partition& lambda,
                              const IrrepMatrixFactory& factory, const CharacterTable& table) {
    std::vector<RationalMatrix> mats;
    mats.reserve(g.generators().size());
    for (const auto& gen : g.generators()) mats.push_back(factory.rep_matrix(gen));
    Subspace fixed = fixed_space(mats, factory.dimension());
    const std::int64_t expected = trivial_multiplicity(g, lambda, table);
    if (fixed.dim() != expected) {
        throw consistency_error("fixed space of " + lambda.to_string() + " has dimension " +
                                std::to_string(fixed.dim()) +
                                " but the character scalar product predicts " +
                                std::to_string(expected));
    }
    return fixed;
}

Subspace abstract_fixed_basis(const PermutationGroup& g, const Partition& lambda) {
    IrrepMatrixFactory factory(lambda);
    return abstract_fixed_basis(g, lambda, factory, *character_table(g.degree()));
}

TranslationResult translate_to_specht_basis(const PermutationGroup& g, const Subspace& fixed,
                                            const Partition& lambda, const StandardTableau& s,
                                            TranslationStrategy strategy) {
    if (strategy == TranslationStrategy::seminormal_direct) {
        return {fixed.basis(), {}};
    }

    const std::vector<StandardTableau> tableaux = standard_tableaux(lambda);
    const int f = static_cast<int>(tableaux.size());
    std::vector<SparsePolynomial> polys;
    polys.reserve(static_cast<std::size_t>(f));
    for (const auto& t : tableaux) polys.push_back(higher_specht(s, t));

    std::map<ExponentVector, int, TermOrder> mono_index;
    for (const auto& p : polys) {
        for (const auto& [e, c] : p.terms()) mono_index.emplace(e, 0);
    }
    int next = 0;
    for (auto& [e, idx] : mono_index) idx = next++;
    const int rows = next;

    const int r = static_cast<int>(g.generators().size());
    // [ B | g_1.B | g_2.B | ... ]: one elimination solves every generator.
    RationalMatrix aug(rows, f + r * f);
    for (int j = 0; j < f; ++j) {
        for (const auto& [e, c] : polys[static_cast<std::size_t>(j)].terms()) {
            aug.at(mono_index.at(e), j) = c;
        }
    }
    for (int gi = 0; gi < r; ++gi) {
        const Permutation& gen = g.generators()[static_cast<std::size_t>(gi)];
        for (int j = 0; j < f; ++j) {
            SparsePolynomial moved = permute_variables(polys[static_cast<std::size_t>(j)], gen);
            for (const auto& [e, c] : moved.terms()) {
                auto it = mono_index.find(e);
                if (it == mono_index.end()) {
                    throw consistency_error(
                        "generator image of a higher Specht polynomial escapes its block: shape " +
                        lambda.to_string() + ", S=" + s.to_string());
                }
                aug.at(it->second, f + gi * f + j) = c;
            }
        }
    }

    RrefResult solved = rref(std::move(aug));
    if (solved.rank != f) {
        for (int c : solved.pivot_columns) {
            if (c >= f) {
                throw consistency_error(
                    "generator image of a higher Specht polynomial is not in the block span: shape " +
                    lambda.to_string() + ", S=" + s.to_string());
            }
        }
        throw consistency_error("higher Specht polynomials of shape " + lambda.to_string() +
                                " are linearly dependent for S=" + s.to_string());
    }

    std::vector<RationalMatrix> concrete;
    concrete.reserve(static_cast<std::size_t>(r));
    for (int gi = 0; gi < r; ++gi) {
        RationalMatrix m(f, f);
        for (int i = 0; i < f; ++i) {
            for (int j = 0; j < f; ++j) m.at(i, j) = solved.matrix.at(i, f + gi * f + j);
        }
        concrete.push_back(std::move(m));
    }
    Subspace block_fixed = fixed_space(concrete, f);
    if (block_fixed.dim() != fixed.dim()) {
        throw consistency_error("concrete fixed space of shape " + lambda.to_string() + ", S=" +
                                s.to_string() + " has dimension " + std::to_string(block_fixed.dim()) +
                                " but the seminormal fixed space has dimension " +
                                std::to_string(fixed.dim()));
    }
    return {block_fixed.basis(), std::move(polys)};
}

bool verify_invariance(const SparsePolynomial& p, const PermutationGroup& g) {
    for (const auto& gen : g.generators()) {
        if (permute_variables(p, gen) != p) return false;
    }
    return true;
}

EngineResult secondary_invariants(const PermutationGroup& g, const EngineOptions& options) {
    const std::int64_t t_start = now_ms();
    const int n = g.degree();
    auto table = character_table(n, options.chartable);
    const MultiplicityTable mult = multiplicity_table(g, *table);

    EngineResult result;
    result.report.degree = n;
    for (const auto& gen : g.generators()) {
        result.report.generator_strings.push_back(gen.to_cycle_string());
    }
    result.report.group_order = g.order();
    result.report.total_expected = expected_secondary_count(g);
    result.expanded_attached = options.needs_expansion();

    struct Job {
        Partition lambda;
        std::int64_t m = 0;
        std::uint64_t f = 0;
    };
    std::vector<Job> jobs;
    for (const auto& [lambda, m] : mult.entries) {
        if (m > 0) jobs.push_back({lambda, m, hook_length_count(lambda)});
    }

    const TranslationStrategy strategy = options.resolved_strategy();
    std::vector<LambdaBlock> blocks(jobs.size());
    std::vector<LambdaRecord> records(jobs.size());
    std::vector<std::exception_ptr> failures(jobs.size());

    // Largest shapes first so a big job never trails on an otherwise idle pool.
    std::vector<std::size_t> schedule(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) schedule[i] = i;
    std::stable_sort(schedule.begin(), schedule.end(),
                     [&](std::size_t a, std::size_t b) { return jobs[a].f > jobs[b].f; });

    auto run_job = [&](std::size_t ji) {
        const Job& job = jobs[ji];
        const std::int64_t t0 = now_ms();
        IrrepMatrixFactory factory(job.lambda);
        Subspace fixed = abstract_fixed_basis(g, job.lambda, factory, *table);

        LambdaBlock block;
        block.shape = job.lambda;
        block.tableaux = factory.basis();
        if (strategy == TranslationStrategy::concrete) {
            block.per_tableau_bases = true;
            for (const auto& s : block.tableaux) {
                TranslationResult tr = translate_to_specht_basis(g, fixed, job.lambda, s, strategy);
                if (options.needs_expansion()) {
                    block.expanded.push_back(expand_rows(tr.combinations, tr.specht_basis, n));
                }
                block.bases.push_back(std::move(tr.combinations));
            }
        } else {
            block.per_tableau_bases = false;
            block.bases.push_back(fixed.basis());
            if (options.needs_expansion()) {
                for (const auto& s : block.tableaux) {
                    std::vector<SparsePolynomial> basis_polys;
                    basis_polys.reserve(block.tableaux.size());
                    for (const auto& t : block.tableaux) basis_polys.push_back(higher_specht(s, t));
                    block.expanded.push_back(expand_rows(fixed.basis(), basis_polys, n));
                }
            }
        }
        // The seminormal-direct fast path is only trusted when every expansion
        // passes the invariance check, so expanding forces verification there.
        const bool must_verify =
            options.verify || (strategy == TranslationStrategy::seminormal_direct &&
                               options.needs_expansion());
        if (must_verify) {
            for (std::size_t si = 0; si < block.expanded.size(); ++si) {
                for (const auto& p : block.expanded[si]) {
                    for (const auto& gen : g.generators()) {
                        if (permute_variables(p, gen) != p) {
                            throw consistency_error(
                                "expanded invariant is not generator-fixed: shape " +
                                job.lambda.to_string() + ", S=" +
                                block.tableaux[si].to_string() + ", generator " +
                                gen.to_cycle_string());
                        }
                    }
                }
            }
        }

        records[ji].shape = job.lambda;
        records[ji].ambient_dim = job.f;
        records[ji].rank = fixed.dim();
        records[ji].elapsed_ms = now_ms() - t0;
        blocks[ji] = std::move(block);
    };

    const int workers = std::max(1, options.workers);
    if (workers == 1 || jobs.size() <= 1) {
        for (std::size_t i : schedule) {
            try {
                run_job(i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            while (true) {
                const std::size_t slot = cursor.fetch_add(1);
                if (slot >= schedule.size()) return;
                const std::size_t ji = schedule[slot];
                try {
                    run_job(ji);
                } catch (...) {
                    failures[ji] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), jobs.size());
        pool.reserve(count);
        for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    std::uint64_t total = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        total += static_cast<std::uint64_t>(records[i].rank) * jobs[i].f;
        result.report.per_lambda.push_back(records[i]);
        result.blocks.push_back(std::move(blocks[i]));
    }
    result.report.total_found = total;
    if (total != result.report.total_expected) {
        throw consistency_error("secondary invariant count " + std::to_string(total) +
                                " differs from n!/|G| = " +
                                std::to_string(result.report.total_expected));
    }

    if (options.materialize) {
        for (const auto& block : result.blocks) {
            for (std::size_t si = 0; si < block.tableaux.size(); ++si) {
                const StandardTableau& s = block.tableaux[si];
                const RationalMatrix& basis = block.per_tableau_bases ? block.bases[si] : block.bases[0];
                const int deg = cocharge(s);
                for (int row = 0; row < basis.rows(); ++row) {
                    SecondaryInvariant inv;
                    inv.shape = block.shape;
                    inv.degree_tableau = s;
                    inv.degree = deg;
                    for (int j = 0; j < basis.cols(); ++j) {
                        const Rational& c = basis.at(row, j);
                        if (sgn(c) != 0) inv.combination.emplace_back(block.tableaux[static_cast<std::size_t>(j)], c);
                    }
                    if (!block.expanded.empty()) {
                        inv.expanded = block.expanded[si][static_cast<std::size_t>(row)];
                    }
                    result.invariants.push_back(std::move(inv));
                }
            }
        }
    }

    result.report.elapsed_ms_total = now_ms() - t_start;
    return result;
}

std::string engine_trace_text(const EngineResult& result) {
    std::ostringstream out;
    for (const auto& rec : result.report.per_lambda) {
        out << rec.shape.to_string() << "  ambient dimension -->  " << rec.ambient_dim << "\n";
        out << "rank in S_n repr :  " << rec.rank << "\n";
    }
    out << "total :  " << result.report.total_found << "\n";
    out << "n! / |G| :  " << result.report.total_expected << "\n";
    return out.str();
}

namespace {

void write_json_string(std::ostream& out, const std::string& s) {
    out << '"';
    for (char c : s) {
        switch (c) {
            case '"': out << "\\\""; break;
            case '\\': out << "\\\\"; break;
            case '\n': out << "\\n"; break;
            default: out << c;
        }
    }
    out << '"';
}

void write_parts(std::ostream& out, const Partition& p) {
    out << '[';
    for (int i = 0; i < p.length(); ++i) {
        if (i) out << ',';
        out << p.part(i);
    }
    out << ']';
}

void write_tableau(std::ostream& out, const StandardTableau& t) {
    out << '[';
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) out << ',';
        out << '[';
        const auto& row = t.rows()[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << row[c];
        }
        out << ']';
    }
    out << ']';
}

void write_polynomial(std::ostream& out, const SparsePolynomial& p) {
    out << '[';
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << ',';
        first = false;
        out << "{\"coeff\":";
        write_json_string(out, c.get_str());
        out << ",\"exponents\":[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ',';
            out << e[i];
        }
        out << "]}";
    }
    out << ']';
}

} // namespace

void write_engine_result_json(std::ostream& out, const EngineResult& result, bool include_timing) {
    const auto& rep = result.report;
    out << "{\"degree\":" << rep.degree << ",\"generators\":[";
    for (std::size_t i = 0; i < rep.generator_strings.size(); ++i) {
        if (i) out << ',';
        write_json_string(out, rep.generator_strings[i]);
    }
    out << "],\"group_order\":" << rep.group_order << ",\"total_expected\":" << rep.total_expected
        << ",\"total_found\":" << rep.total_found;
    if (include_timing) out << ",\"elapsed_ms\":" << rep.elapsed_ms_total;
    out << ",\"per_lambda\":[";
    for (std::size_t i = 0; i < rep.per_lambda.size(); ++i) {
        const auto& rec = rep.per_lambda[i];
        if (i) out << ',';
        out << "{\"partition\":";
        write_parts(out, rec.shape);
        out << ",\"ambient_dim\":" << rec.ambient_dim << ",\"rank\":" << rec.rank;
        if (include_timing) out << ",\"elapsed_ms\":" << rec.elapsed_ms;
        out << '}';
    }
    out << "],\"invariants\":[";
    bool first_inv = true;
    for (const auto& block : result.blocks) {
        for (std::size_t si = 0; si < block.tableaux.size(); ++si) {
            const RationalMatrix& basis = block.per_tableau_bases ? block.bases[si] : block.bases[0];
            const int deg = cocharge(block.tableaux[si]);
            for (int row = 0; row < basis.rows(); ++row) {
                if (!first_inv) out << ',';
                first_inv = false;
                out << "{\"shape\":";
                write_parts(out, block.shape);
                out << ",\"S\":";
                write_tableau(out, block.tableaux[si]);
                out << ",\"degree\":" << deg << ",\"combination\":[";
                bool first_term = true;
                for (int j = 0; j < basis.cols(); ++j) {
                    const Rational& c = basis.at(row, j);
                    if (sgn(c) == 0) continue;
                    if (!first_term) out << ',';
                    first_term = false;
                    out << "{\"T\":";
                    write_tableau(out, block.tableaux[static_cast<std::size_t>(j)]);
                    out << ",\"coeff\":";
                    write_json_string(out, c.get_str());
                    out << '}';
                }
                out << ']';
                if (!block.expanded.empty()) {
                    out << ",\"expanded\":";
                    write_polynomial(out, block.expanded[si][static_cast<std::size_t>(row)]);
                }
                out << '}';
            }
        }
    }
    out << "]}";
}

std::string engine_result_json(const EngineResult& result, bool include_timing) {
    std::ostringstream out;
    write_engine_result_json(out, result, include_timing);
    return out.str();
}

} // namespace specht
