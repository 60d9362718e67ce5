/*
   Copyright 2026 The cm3 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace cm3 {

// Dense exact matrix over the coefficient field; just enough Gaussian
// elimination for degreewise arguments (ranks, kernels, one solution).
template <class K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const K& zero)
        : rows_(rows), cols_(cols), d_(rows * cols, zero) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    K& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    // returns pivot column per row-echelon row
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            size_t p = row;
            while (p < rows_ && FieldOps<K>::is_zero(at(p, col))) ++p;
            if (p == rows_) continue;
            if (p != row)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
            K inv = invert(at(row, col));
            for (size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == row || FieldOps<K>::is_zero(at(i, col))) continue;
                K f = at(i, col);
                for (size_t j = col; j < cols_; ++j)
                    at(i, j) = at(i, j) - f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // basis of the right kernel
    std::vector<std::vector<K>> kernel(const K& zero, const K& one) const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_, zero);
            v[free] = one;
            for (size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -m.at(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // one solution of A x = b with free variables set to zero
    std::optional<std::vector<K>> solve(const std::vector<K>& b, const K& zero) const {
        Matrix m(rows_, cols_ + 1, zero);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
            m.at(i, cols_) = b[i];
        }
        auto pivots = m.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
        std::vector<K> x(cols_, zero);
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(r, cols_);
        return x;
    }

  private:
    static K invert(const K& a) {
        if constexpr (FieldOps<K>::is_rational) {
            return K(1) / a;
        } else {
            return a.inverse();
        }
    }

    size_t rows_ = 0, cols_ = 0;
    std::vector<K> d_;
};

}  // namespace cm3
