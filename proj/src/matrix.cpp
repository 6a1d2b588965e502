#include "shtk/matrix.hpp"

#include <algorithm>
#include <string>

#include "shtk/error.hpp"

namespace shtk {

Matrix Matrix::identity(std::size_t n, const Group& group)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = RingElement(group.identity());
    }
    return m;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const RingElement& x) { return x.is_zero(); });
}

std::size_t Matrix::nonzeros() const
{
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const RingElement& x) { return !x.is_zero(); }));
}

Matrix Matrix::operator-() const
{
    Matrix m = *this;
    for (auto& x : m.data_) {
        x = -x;
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error("dimension-mismatch", "matrix sum of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                              " and " + std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

void Matrix::append_rows(std::size_t n)
{
    rows_ += n;
    data_.resize(rows_ * cols_);
}

void Matrix::append_cols(std::size_t n)
{
    std::vector<RingElement> out((cols_ + n) * rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i * (cols_ + n) + j] = std::move(data_[i * cols_ + j]);
        }
    }
    cols_ += n;
    data_ = std::move(out);
}

void Matrix::erase_rows(std::vector<std::size_t> rows)
{
    std::vector<bool> drop(rows_, false);
    for (auto r : rows) {
        drop.at(r) = true;
    }
    std::vector<RingElement> out;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (drop[i]) {
            continue;
        }
        ++kept;
        for (std::size_t j = 0; j < cols_; ++j) {
            out.push_back(std::move(data_[i * cols_ + j]));
        }
    }
    rows_ = kept;
    data_ = std::move(out);
}

void Matrix::erase_cols(std::vector<std::size_t> cols)
{
    std::vector<bool> drop(cols_, false);
    for (auto c : cols) {
        drop.at(c) = true;
    }
    std::size_t kept_cols = cols_ - static_cast<std::size_t>(std::count(drop.begin(), drop.end(), true));
    std::vector<RingElement> out;
    out.reserve(rows_ * kept_cols);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!drop[j]) {
                out.push_back(std::move(data_[i * cols_ + j]));
            }
        }
    }
    cols_ = kept_cols;
    data_ = std::move(out);
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
{
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            m(i, j) = (*this)(rows[i], cols[j]);
        }
    }
    return m;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& block)
{
    for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) {
            (*this)(row0 + i, col0 + j) = block(i, j);
        }
    }
}

void Matrix::source_slide(std::size_t i, std::size_t j, const Group& group, const RingElement& lambda)
{
    if (lambda.is_zero()) {
        return;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        const RingElement& x = (*this)(r, j);
        if (!x.is_zero()) {
            (*this)(r, i) += mul(group, lambda, x);
        }
    }
}

void Matrix::target_slide(std::size_t i, std::size_t j, const Group& group, const RingElement& lambda)
{
    if (lambda.is_zero()) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        const RingElement& x = (*this)(i, c);
        if (!x.is_zero()) {
            (*this)(j, c) -= mul(group, x, lambda);
        }
    }
}

void Matrix::source_scale(std::size_t i, const Group& group, int sign, const GroupElement& g)
{
    for (std::size_t r = 0; r < rows_; ++r) {
        auto& x = (*this)(r, i);
        if (!x.is_zero()) {
            x = mul_unit_left(group, sign, g, x);
        }
    }
}

void Matrix::target_scale(std::size_t i, const Group& group, int sign, const GroupElement& g)
{
    // c_i = u^{-1} c_i' with u^{-1} = sign g^{-1}
    const GroupElement ginv = group.inverse(g);
    for (std::size_t c = 0; c < cols_; ++c) {
        auto& x = (*this)(i, c);
        if (!x.is_zero()) {
            x = mul_unit_right(group, x, sign, ginv);
        }
    }
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data.begin(), data.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix augment(const Matrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = augment(m(i, j));
        }
    }
    return out;
}

Matrix extend(const IntMatrix& m, const Group& group)
{
    Matrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            out(i, j) = RingElement::integer(m(i, j), group);
        }
    }
    return out;
}

}  // namespace shtk
