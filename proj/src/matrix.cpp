#include "defcoh/matrix.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>

namespace defcoh {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(text);
            return Rational(n);
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den <= 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMatrix(0, 0);
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols, std::size_t nrows) {
    RatMatrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != nrows) throw std::invalid_argument("ragged columns");
        for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) == 0) continue;
                out.at(i, j) += a * other.at(k, j);
            }
        }
    return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    RatVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

RatMatrix RatMatrix::hstack(const RatMatrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
    RatMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
    }
    return out;
}

RatMatrix RatMatrix::column(std::size_t j) const {
    RatMatrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
    return out;
}

namespace {

// Multiplies every row by the lcm of its denominators. Leaves the row space
// and the kernel unchanged and makes Bareiss division exact.
void scale_rows_integral(RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m.at(i, j)));
        if (l != 1)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= Rational(l);
    }
}

}  // namespace

Echelon echelon_form(const RatMatrix& input) {
    Echelon e;
    e.mat = input;
    RatMatrix& m = e.mat;
    scale_rows_integral(m);

    Rational prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pivot, j));

        const Rational p = m.at(row, col);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            const Rational f = m.at(i, col);
            m.at(i, col) = 0;
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = (p * m.at(i, j) - f * m.at(row, j)) / prev;
        }
        prev = p;
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

namespace {

// Back-substitution through the echelon rows for a vector with the free
// coordinates already fixed. rhs, when present, is a column appended
// conceptually after cols(M) with values echeloned alongside.
RatVec back_substitute(const Echelon& e, RatVec v, const RatVec* rhs) {
    const RatMatrix& m = e.mat;
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
        const std::size_t pc = e.pivot_cols[r];
        Rational acc = rhs ? (*rhs)[r] : Rational(0);
        for (std::size_t j = pc + 1; j < m.cols(); ++j)
            if (m.at(r, j) != 0 && v[j] != 0) acc -= m.at(r, j) * v[j];
        v[pc] = acc / m.at(r, pc);
    }
    return v;
}

}  // namespace

RankKernel rank_kernel(const RatMatrix& m) {
    Echelon e = echelon_form(m);
    RankKernel out;
    out.rank = e.rank();

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t pc : e.pivot_cols) is_pivot[pc] = true;

    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols());
        v[f] = 1;
        out.kernel.push_back(back_substitute(e, std::move(v), nullptr));
    }
    return out;
}

std::size_t rank_of(const RatMatrix& m) { return echelon_form(m).rank(); }

std::optional<RatVec> solve_or_none(const RatMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_or_none: rhs length != rows");

    // Echelonize [M | b] but never pivot on the augmented column.
    RatMatrix aug = m.hstack(RatMatrix::from_columns({b}, b.size()));
    scale_rows_integral(aug);
    Rational prev = 1;
    std::size_t row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < m.cols() && row < aug.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < aug.rows() && aug.at(pivot, col) == 0) ++pivot;
        if (pivot == aug.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(row, j), aug.at(pivot, j));
        const Rational p = aug.at(row, col);
        for (std::size_t i = row + 1; i < aug.rows(); ++i) {
            const Rational f = aug.at(i, col);
            aug.at(i, col) = 0;
            for (std::size_t j = col + 1; j < aug.cols(); ++j)
                aug.at(i, j) = (p * aug.at(i, j) - f * aug.at(row, j)) / prev;
        }
        prev = p;
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < aug.rows(); ++i)
        if (aug.at(i, m.cols()) != 0) return std::nullopt;

    RatVec x(m.cols());  // free variables stay zero
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
        const std::size_t pc = pivot_cols[r];
        Rational acc = aug.at(r, m.cols());
        for (std::size_t j = pc + 1; j < m.cols(); ++j)
            if (aug.at(r, j) != 0 && x[j] != 0) acc -= aug.at(r, j) * x[j];
        x[pc] = acc / aug.at(r, pc);
    }
    return x;
}

bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub length mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace defcoh
