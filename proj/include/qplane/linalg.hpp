#pragma once

// Exact nullspace computation over Gaussian rationals.

#include "qplane/scalar.hpp"

#include <map>
#include <vector>

namespace qplane {

using DenseVector = std::vector<Scalar>;

/// Columns of a linear map with rows addressed by arbitrary ordered keys.
/// Each added column is the image of one unknown.
template <class Key>
class ColumnSystem {
public:
    void add_column(const std::map<Key, Scalar>& image) {
        std::map<std::size_t, Scalar> col;
        for (const auto& [key, c] : image) {
            if (c.is_zero()) continue;
            auto [it, inserted] = rows_.try_emplace(key, rows_.size());
            col[it->second] += c;
        }
        cols_.push_back(std::move(col));
    }

    std::size_t unknowns() const { return cols_.size(); }
    std::size_t equations() const { return rows_.size(); }

    /// Basis of { v : sum_j v_j column_j = 0 }, in reduced form: each basis
    /// vector has a 1 in one free position and 0 in the other free positions.
    std::vector<DenseVector> nullspace() const {
        const std::size_t n = cols_.size();
        const std::size_t m = rows_.size();
        std::vector<DenseVector> a(m, DenseVector(n));
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [i, c] : cols_[j]) a[i][j] = c;

        std::vector<std::size_t> pivot_cols;
        std::size_t r = 0;
        for (std::size_t c = 0; c < n && r < m; ++c) {
            std::size_t p = r;
            while (p < m && a[p][c].is_zero()) ++p;
            if (p == m) continue;
            std::swap(a[p], a[r]);
            Scalar inv = Scalar(1) / a[r][c];
            for (std::size_t k = c; k < n; ++k)
                if (!a[r][k].is_zero()) a[r][k] *= inv;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == r || a[i][c].is_zero()) continue;
                Scalar f = a[i][c];
                for (std::size_t k = c; k < n; ++k)
                    if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
            }
            pivot_cols.push_back(c);
            ++r;
        }

        std::vector<bool> is_pivot(n, false);
        for (auto c : pivot_cols) is_pivot[c] = true;
        std::vector<DenseVector> basis;
        for (std::size_t f = 0; f < n; ++f) {
            if (is_pivot[f]) continue;
            DenseVector v(n);
            v[f] = Scalar(1);
            for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::map<Key, std::size_t> rows_;
    std::vector<std::map<std::size_t, Scalar>> cols_;
};

}  // namespace qplane
