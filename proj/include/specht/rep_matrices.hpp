#ifndef SPECHT_REP_MATRICES_HPP
#define SPECHT_REP_MATRICES_HPP

#include <map>
#include <mutex>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/linalg.hpp"
#include "specht/permgroup.hpp"

namespace specht {

// Young's seminormal model of the S_n irreducible indexed by lambda, on the
// canonical standard-tableaux basis. Matrices act on column coordinate
// vectors: rep_matrix(a o b) = rep_matrix(a) * rep_matrix(b).
class IrrepMatrixFactory {
public:
    explicit IrrepMatrixFactory(Partition lambda);

    IrrepMatrixFactory(const IrrepMatrixFactory& other);
    IrrepMatrixFactory& operator=(const IrrepMatrixFactory& other);

    const Partition& shape() const { return lambda_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<StandardTableau>& basis() const { return basis_; }

    // Matrix of the adjacent transposition (k, k+1), 1 <= k <= n-1. Cached.
    const RationalMatrix& adjacent_matrix(int k) const;

    // Matrix of an arbitrary permutation of degree n, via a bubble-sort
    // factorization into adjacent transpositions.
    RationalMatrix rep_matrix(const Permutation& sigma) const;

private:
    Partition lambda_;
    std::vector<StandardTableau> basis_;
    std::map<StandardTableau, int> basis_index_;

    mutable std::mutex cache_mutex_;
    mutable std::map<int, RationalMatrix> adjacent_cache_;
};

// Adjacent-transposition word w with sigma = s_{w[last]} o ... o s_{w[0]}.
std::vector<int> bubble_sort_word(const Permutation& sigma);

} // namespace specht

#endif
