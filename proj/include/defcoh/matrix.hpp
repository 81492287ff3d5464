#pragma once

#include "defcoh/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace defcoh {

using RatVec = std::vector<Rational>;

// Dense matrix over the rationals. Weight slices in this project stay in the
// hundreds of rows/columns, so a dense representation is the simple choice.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVec>& rows);
    static RatMatrix from_columns(const std::vector<RatVec>& cols, std::size_t nrows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const RatMatrix& other) const;

    RatMatrix operator*(const RatMatrix& other) const;
    RatVec apply(const RatVec& v) const;
    RatMatrix hstack(const RatMatrix& right) const;
    RatMatrix column(std::size_t j) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Row echelon form produced by fraction-free (Bareiss) elimination with the
// canonical pivot rule: leftmost unfinished column, first nonzero row below
// the current one, no row scaling. Rows are pre-scaled to integers, so all
// intermediate entries stay integral and the output is deterministic.
struct Echelon {
    RatMatrix mat;
    std::vector<std::size_t> pivot_cols;  // one per pivot row, increasing
    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon echelon_form(const RatMatrix& m);

struct RankKernel {
    std::size_t rank = 0;
    std::vector<RatVec> kernel;  // canonical basis, one vector per free column
};

// rank + kernel dimension = cols; every kernel vector satisfies Mv = 0 exactly.
RankKernel rank_kernel(const RatMatrix& m);

std::size_t rank_of(const RatMatrix& m);

// Exact solve of Mx = b. Returns the canonical echelon solution (free
// variables set to zero) or nullopt when the system is inconsistent.
// Throws std::invalid_argument on a dimension mismatch.
std::optional<RatVec> solve_or_none(const RatMatrix& m, const RatVec& b);

bool is_zero_vec(const RatVec& v);
RatVec vec_sub(const RatVec& a, const RatVec& b);

}  // namespace defcoh
