#include "specht/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace specht {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalVector RationalMatrix::row(int i) const {
    RationalVector out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(j)] = at(i, j);
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    Rational tmp;
    for (int i = 0; i < rows_; ++i) {
        for (int t = 0; t < cols_; ++t) {
            const Rational& a = at(i, t);
            if (sgn(a) == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs.at(t, j);
                if (sgn(b) == 0) continue;
                tmp = a * b;
                out.at(i, j) += tmp;
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix difference: dimension mismatch");
    }
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - rhs.data_[k];
    return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw std::invalid_argument("matrix apply: dimension mismatch");
    }
    RationalVector out(static_cast<std::size_t>(rows_), Rational(0));
    Rational tmp;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const Rational& a = at(i, j);
            if (sgn(a) == 0) continue;
            tmp = a * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] += tmp;
        }
    }
    return out;
}

RrefResult rref(RationalMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<int> pivot_cols;
    int pivot_row = 0;
    Rational factor, tmp;
    for (int c = 0; c < cols && pivot_row < rows; ++c) {
        // Smallest-bit-size nonzero pivot keeps intermediate entries small.
        int best = -1;
        std::size_t best_size = 0;
        for (int r = pivot_row; r < rows; ++r) {
            const Rational& v = m.at(r, c);
            if (sgn(v) == 0) continue;
            std::size_t size = bit_size(v);
            if (best < 0 || size < best_size) {
                best = r;
                best_size = size;
            }
        }
        if (best < 0) continue;
        if (best != pivot_row) {
            for (int j = c; j < cols; ++j) std::swap(m.at(best, j), m.at(pivot_row, j));
        }
        const Rational pivot = m.at(pivot_row, c);
        for (int r = pivot_row + 1; r < rows; ++r) {
            if (sgn(m.at(r, c)) == 0) continue;
            factor = m.at(r, c) / pivot;
            m.at(r, c) = 0;
            for (int j = c + 1; j < cols; ++j) {
                const Rational& p = m.at(pivot_row, j);
                if (sgn(p) == 0) continue;
                tmp = factor * p;
                m.at(r, j) -= tmp;
            }
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }
    const int rank = static_cast<int>(pivot_cols.size());
    // Normalize pivots to 1, then clear above.
    for (int i = 0; i < rank; ++i) {
        const int c = pivot_cols[static_cast<std::size_t>(i)];
        const Rational pivot = m.at(i, c);
        if (pivot != 1) {
            m.at(i, c) = 1;
            for (int j = c + 1; j < cols; ++j) {
                if (sgn(m.at(i, j)) != 0) m.at(i, j) /= pivot;
            }
        }
    }
    for (int i = rank - 1; i >= 0; --i) {
        const int c = pivot_cols[static_cast<std::size_t>(i)];
        for (int r = 0; r < i; ++r) {
            if (sgn(m.at(r, c)) == 0) continue;
            factor = m.at(r, c);
            m.at(r, c) = 0;
            for (int j = c + 1; j < cols; ++j) {
                const Rational& p = m.at(i, j);
                if (sgn(p) == 0) continue;
                tmp = factor * p;
                m.at(r, j) -= tmp;
            }
        }
    }
    // Zero out any numerically dead rows below the rank (already zero by
    // construction, but keep the shape canonical).
    RationalMatrix canonical(rows, cols);
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < cols; ++j) canonical.at(i, j) = m.at(i, j);
    }
    return {std::move(canonical), std::move(pivot_cols), rank};
}

namespace {

// Nullspace basis rows without the final canonicalization pass.
RationalMatrix nullspace_raw(const RationalMatrix& m) {
    RrefResult r = rref(m);
    const int cols = m.cols();
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : r.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    }
    RationalMatrix basis(static_cast<int>(free_cols.size()), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis.at(static_cast<int>(k), f) = 1;
        for (int i = 0; i < r.rank; ++i) {
            const Rational& v = r.matrix.at(i, f);
            if (sgn(v) != 0) basis.at(static_cast<int>(k), r.pivot_columns[static_cast<std::size_t>(i)]) = -v;
        }
    }
    return basis;
}

} // namespace

Subspace::Subspace(int ambient_dim, RationalMatrix spanning) : ambient_dim_(ambient_dim) {
    if (spanning.cols() != ambient_dim) {
        throw std::invalid_argument("subspace: spanning rows must live in the ambient space");
    }
    RrefResult r = rref(std::move(spanning));
    RationalMatrix basis(r.rank, ambient_dim);
    for (int i = 0; i < r.rank; ++i) {
        for (int j = 0; j < ambient_dim; ++j) basis.at(i, j) = r.matrix.at(i, j);
    }
    basis_ = std::move(basis);
}

Subspace Subspace::full(int ambient_dim) { return Subspace(ambient_dim, RationalMatrix::identity(ambient_dim)); }

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, RationalMatrix(0, ambient_dim)); }

bool Subspace::contains(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_) {
        throw std::invalid_argument("subspace membership: dimension mismatch");
    }
    RationalVector rem = v;
    Rational tmp;
    for (int i = 0; i < basis_.rows(); ++i) {
        int lead = -1;
        for (int j = 0; j < ambient_dim_; ++j) {
            if (sgn(basis_.at(i, j)) != 0) {
                lead = j;
                break;
            }
        }
        if (lead < 0) continue;
        const Rational coeff = rem[static_cast<std::size_t>(lead)];
        if (sgn(coeff) == 0) continue;
        for (int j = lead; j < ambient_dim_; ++j) {
            const Rational& b = basis_.at(i, j);
            if (sgn(b) == 0) continue;
            tmp = coeff * b;
            rem[static_cast<std::size_t>(j)] -= tmp;
        }
    }
    for (const Rational& x : rem) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Subspace nullspace(const RationalMatrix& m) { return Subspace(m.cols(), nullspace_raw(m)); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("intersect: ambient dimensions differ");
    }
    const int n = a.ambient_dim();
    const int da = a.dim();
    const int db = b.dim();
    if (da == 0 || db == 0) return Subspace::zero(n);
    // x in A and B iff x = A^T u = B^T w; solve [A^T | -B^T] (u;w) = 0.
    RationalMatrix stacked(n, da + db);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < da; ++i) stacked.at(j, i) = a.basis().at(i, j);
        for (int i = 0; i < db; ++i) stacked.at(j, da + i) = -b.basis().at(i, j);
    }
    RationalMatrix kernel = nullspace_raw(stacked);
    RationalMatrix spanning(kernel.rows(), n);
    Rational tmp;
    for (int k = 0; k < kernel.rows(); ++k) {
        for (int i = 0; i < da; ++i) {
            const Rational& u = kernel.at(k, i);
            if (sgn(u) == 0) continue;
            for (int j = 0; j < n; ++j) {
                const Rational& av = a.basis().at(i, j);
                if (sgn(av) == 0) continue;
                tmp = u * av;
                spanning.at(k, j) += tmp;
            }
        }
    }
    return Subspace(n, std::move(spanning));
}

Subspace fixed_space(std::span<const RationalMatrix> mats, int ambient_dim) {
    for (const auto& m : mats) {
        if (m.rows() != m.cols() || m.rows() != ambient_dim) {
            throw std::invalid_argument("fixed_space: matrices must be square of the ambient dimension");
        }
    }
    if (mats.empty()) return Subspace::full(ambient_dim);

    // Iterative restriction: keep a (not yet canonical) basis of the space
    // fixed so far and restrict the next constraint to it.
    RationalMatrix basis; // rows = current basis vectors
    bool first = true;
    Rational tmp;
    for (const auto& m : mats) {
        if (first) {
            RationalMatrix constraint(ambient_dim, ambient_dim);
            for (int i = 0; i < ambient_dim; ++i) {
                for (int j = 0; j < ambient_dim; ++j) constraint.at(i, j) = m.at(i, j);
                constraint.at(i, i) -= 1;
            }
            basis = nullspace_raw(constraint);
            first = false;
        } else {
            const int d = basis.rows();
            if (d == 0) break;
            // (M - I) applied to each current basis vector, one column per vector.
            RationalMatrix restricted(ambient_dim, d);
            for (int i = 0; i < ambient_dim; ++i) {
                for (int t = 0; t < ambient_dim; ++t) {
                    const Rational& a = m.at(i, t);
                    if (sgn(a) == 0) continue;
                    for (int k = 0; k < d; ++k) {
                        const Rational& b = basis.at(k, t);
                        if (sgn(b) == 0) continue;
                        tmp = a * b;
                        restricted.at(i, k) += tmp;
                    }
                }
                for (int k = 0; k < d; ++k) restricted.at(i, k) -= basis.at(k, i);
            }
            RationalMatrix kernel = nullspace_raw(restricted); // coords in current basis
            RationalMatrix next(kernel.rows(), ambient_dim);
            for (int k = 0; k < kernel.rows(); ++k) {
                for (int t = 0; t < d; ++t) {
                    const Rational& u = kernel.at(k, t);
                    if (sgn(u) == 0) continue;
                    for (int j = 0; j < ambient_dim; ++j) {
                        const Rational& b = basis.at(t, j);
                        if (sgn(b) == 0) continue;
                        tmp = u * b;
                        next.at(k, j) += tmp;
                    }
                }
            }
            basis = std::move(next);
        }
        if (basis.rows() == 0) return Subspace::zero(ambient_dim);
    }
    return Subspace(ambient_dim, std::move(basis));
}

} // namespace specht
