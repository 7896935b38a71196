#include "specht/specht_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "specht/errors.hpp"

namespace specht {

namespace {

// All permutations of {1..n} preserving each block of `blocks` setwise.
std::vector<Permutation> block_stabilizer(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> out{Permutation::identity(n)};
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Permutation> extended;
        std::vector<int> arrangement = sorted;
        do {
            std::vector<int> images(static_cast<std::size_t>(n));
            for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = k;
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                images[static_cast<std::size_t>(sorted[i] - 1)] = arrangement[i];
            }
            Permutation block_perm{std::move(images)};
            for (const auto& base : out) extended.push_back(compose(block_perm, base));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        out = std::move(extended);
    }
    return out;
}

} // namespace

int permutation_sign(const Permutation& p) {
    const Partition type = cycle_type(p);
    return (p.degree() - type.length()) % 2 == 0 ? 1 : -1;
}

YoungSymmetrizer young_symmetrizer(const StandardTableau& t) {
    const int n = t.size();
    YoungSymmetrizer sym;
    sym.tableau = t;
    sym.row_group = block_stabilizer(n, t.rows());

    std::vector<std::vector<int>> columns;
    const int ncols = t.rows().empty() ? 0 : static_cast<int>(t.rows()[0].size());
    for (int c = 0; c < ncols; ++c) {
        std::vector<int> col;
        for (const auto& row : t.rows()) {
            if (c < static_cast<int>(row.size())) col.push_back(row[static_cast<std::size_t>(c)]);
        }
        columns.push_back(std::move(col));
    }
    sym.column_group = block_stabilizer(n, columns);
    return sym;
}

SparsePolynomial apply_symmetrizer(const StandardTableau& t, const ExponentVector& m) {
    const int n = t.size();
    if (static_cast<int>(m.size()) != n) {
        throw std::invalid_argument("apply_symmetrizer: exponent length must equal |shape|");
    }
    const YoungSymmetrizer sym = young_symmetrizer(t);
    SparsePolynomial out(n);
    ExponentVector moved(static_cast<std::size_t>(n));
    for (const auto& tau : sym.column_group) {
        const Rational coeff(permutation_sign(tau));
        for (const auto& sigma : sym.row_group) {
            // The summand is tau o sigma: the row element acts first.
            const Permutation g = compose(tau, sigma);
            for (int k = 1; k <= n; ++k) {
                moved[static_cast<std::size_t>(g(k) - 1)] = m[static_cast<std::size_t>(k - 1)];
            }
            out.add_term(moved, coeff);
        }
    }
    return out;
}

SparsePolynomial higher_specht(const StandardTableau& s, const StandardTableau& t) {
    if (s.shape() != t.shape()) {
        throw std::invalid_argument("higher_specht: tableaux must share a shape");
    }
    SparsePolynomial f = apply_symmetrizer(t, monomial(s, t));
    if (f.is_zero()) {
        throw consistency_error("higher Specht polynomial vanished for S=" + s.to_string() +
                                ", T=" + t.to_string());
    }
    return f;
}

} // namespace specht
