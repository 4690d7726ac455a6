#ifndef DCC_LINALG_HPP
#define DCC_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "dcc/f4.hpp"

namespace dcc {

// Row-major dense matrix over GF(4), just big enough for the rank and
// null-space computations the code machinery needs.
class F4Matrix {
  public:
    F4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F4& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    F4 at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // In-place reduced row echelon form; returns the pivot column of each
    // nonzero row, in row order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t sel = row;
            while (sel < rows_ && at(sel, col).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != row)
                for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
            const F4 scale = at(row, col).inverse();
            for (std::size_t c = 0; c < cols_; ++c) at(row, c) *= scale;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                const F4 factor = at(r, col);
                for (std::size_t c = 0; c < cols_; ++c) at(r, c) += factor * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        F4Matrix copy = *this;
        return copy.rref().size();
    }

    // Basis of {x : M x = 0}, one vector per free column.
    std::vector<std::vector<F4>> null_space() const {
        F4Matrix reduced = *this;
        const std::vector<std::size_t> pivots = reduced.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots) is_pivot[p] = true;

        std::vector<std::vector<F4>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<F4> vec(cols_, F4::zero());
            vec[free_col] = F4::one();
            for (std::size_t i = 0; i < pivots.size(); ++i)
                vec[pivots[i]] = reduced.at(i, free_col);  // -x = x in characteristic 2
            basis.push_back(std::move(vec));
        }
        return basis;
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<F4> data_;
};

}  // namespace dcc

#endif
