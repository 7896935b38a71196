#ifndef SPECHT_SPECHT_POLY_HPP
#define SPECHT_SPECHT_POLY_HPP

#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/permgroup.hpp"
#include "specht/polynomial.hpp"

namespace specht {

// Row and column stabilizers of a tableau, materialized as permutation lists.
struct YoungSymmetrizer {
    StandardTableau tableau;
    std::vector<Permutation> row_group;    // R(T), |R| = prod lambda_i!
    std::vector<Permutation> column_group; // C(T), |C| = prod lambda'_j!
};

YoungSymmetrizer young_symmetrizer(const StandardTableau& t);

int permutation_sign(const Permutation& p);

// eps_T applied to the monomial x^m: sum over sigma in R(T), tau in C(T) of
// sign(tau) * (tau o sigma) . x^m, fully expanded.
SparsePolynomial apply_symmetrizer(const StandardTableau& t, const ExponentVector& m);

// F_T^S = eps_T(x_T^{i(S)}): homogeneous of degree cocharge(S), never zero.
SparsePolynomial higher_specht(const StandardTableau& s, const StandardTableau& t);

} // namespace specht

#endif
