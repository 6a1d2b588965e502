#pragma once

#include <cstddef>
#include <vector>

#include "shtk/ring.hpp"

namespace shtk {

// Dense row-major matrix over Z[G]. Entry (i, j) is the coefficient of target
// basis element i in the image of source basis element j.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n, const Group& group);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    RingElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RingElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    std::size_t nonzeros() const;
    Matrix operator-() const;
    // Entrywise sum; throws Error("dimension-mismatch").
    Matrix& operator+=(const Matrix& other);
    bool operator==(const Matrix&) const = default;

    // Structural edits used by moves and block assembly.
    void append_rows(std::size_t n);
    void append_cols(std::size_t n);
    void erase_rows(std::vector<std::size_t> rows);
    void erase_cols(std::vector<std::size_t> cols);
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& block);

    // Basis change c_i <- c_i + lambda c_j in the source: column i += lambda * column j.
    void source_slide(std::size_t i, std::size_t j, const Group& group, const RingElement& lambda);
    // Basis change c_i <- c_i + lambda c_j in the target: row j -= row i * lambda.
    void target_slide(std::size_t i, std::size_t j, const Group& group, const RingElement& lambda);
    // Basis change c_i <- (sign g) c_i in the source / target.
    void source_scale(std::size_t i, const Group& group, int sign, const GroupElement& g);
    void target_scale(std::size_t i, const Group& group, int sign, const GroupElement& g);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RingElement> data_;
};

// Dense row-major integer matrix.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Integer& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;
};

// Entrywise augmentation.
IntMatrix augment(const Matrix& m);
// n -> n*e
Matrix extend(const IntMatrix& m, const Group& group);

}  // namespace shtk
