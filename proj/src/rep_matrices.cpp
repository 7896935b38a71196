#include "specht/rep_matrices.hpp"

#include <stdexcept>

#include "specht/errors.hpp"

namespace specht {

IrrepMatrixFactory::IrrepMatrixFactory(Partition lambda)
    : lambda_(std::move(lambda)), basis_(standard_tableaux(lambda_)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        basis_index_.emplace(basis_[i], static_cast<int>(i));
    }
}

IrrepMatrixFactory::IrrepMatrixFactory(const IrrepMatrixFactory& other)
    : lambda_(other.lambda_), basis_(other.basis_), basis_index_(other.basis_index_) {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    adjacent_cache_ = other.adjacent_cache_;
}

IrrepMatrixFactory& IrrepMatrixFactory::operator=(const IrrepMatrixFactory& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(cache_mutex_, other.cache_mutex_);
    lambda_ = other.lambda_;
    basis_ = other.basis_;
    basis_index_ = other.basis_index_;
    adjacent_cache_ = other.adjacent_cache_;
    return *this;
}

const RationalMatrix& IrrepMatrixFactory::adjacent_matrix(int k) const {
    const int n = lambda_.n();
    if (k < 1 || k >= n) {
        throw std::invalid_argument("adjacent_matrix: k must satisfy 1 <= k <= n-1");
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = adjacent_cache_.find(k); it != adjacent_cache_.end()) return it->second;

    const int f = dimension();
    RationalMatrix m(f, f);
    for (int j = 0; j < f; ++j) {
        const StandardTableau& t = basis_[static_cast<std::size_t>(j)];
        auto [rk, ck] = t.position_of(k);
        auto [rk1, ck1] = t.position_of(k + 1);
        const int d = (ck1 - rk1) - (ck - rk); // axial distance from k to k+1
        m.at(j, j) = make_rational(1, d);
        if (d == 1 || d == -1) continue; // same row / same column: diagonal action
        // Swapping k and k+1 stays standard exactly when they share neither
        // row nor column.
        std::vector<std::vector<int>> rows = t.rows();
        rows[static_cast<std::size_t>(rk)][static_cast<std::size_t>(ck)] = k + 1;
        rows[static_cast<std::size_t>(rk1)][static_cast<std::size_t>(ck1)] = k;
        StandardTableau swapped(t.shape(), std::move(rows));
        const int jj = basis_index_.at(swapped);
        // Pair convention: the tableau with d > 0 couples with 1 - 1/d^2, its
        // partner with 1; the 2x2 block then squares to the identity.
        if (d > 0) {
            m.at(jj, j) = 1 - make_rational(1, static_cast<long>(d) * d);
        } else {
            m.at(jj, j) = 1;
        }
    }
    auto [it, inserted] = adjacent_cache_.emplace(k, std::move(m));
    return it->second;
}

std::vector<int> bubble_sort_word(const Permutation& sigma) {
    std::vector<int> v = sigma.images();
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
        }
    }
    return word;
}

RationalMatrix IrrepMatrixFactory::rep_matrix(const Permutation& sigma) const {
    if (sigma.degree() != lambda_.n()) {
        throw std::invalid_argument("rep_matrix: permutation degree does not match |lambda|");
    }
    // sigma = s_{w[last]} o ... o s_{w[0]}, so new factors multiply on the left.
    RationalMatrix acc = RationalMatrix::identity(dimension());
    for (int k : bubble_sort_word(sigma)) acc = adjacent_matrix(k) * acc;
    return acc;
}

} // namespace specht
