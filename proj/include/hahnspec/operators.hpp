#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hahnspec/sequences.hpp"

namespace hahnspec {

/// Row-major dense complex matrix; carrier for finite sections.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> data() const { return data_; }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Infinite Toeplitz band matrix: one constant coefficient per diagonal
/// offset (0 = main diagonal, -1 = first subdiagonal, +1 = first
/// superdiagonal). entry(n, k) is the coefficient at offset k - n.
///
/// The scalar shift is kept separately so that shifting by alpha and then by
/// -alpha restores the original coefficients exactly.
class BandedOperator {
public:
    /// Throws std::invalid_argument unless the map is nonempty with at least
    /// one nonzero coefficient, all entries finite.
    static BandedOperator from_diagonals(std::map<int, Complex> diagonals);

    /// Lower bidiagonal difference: main diagonal 1, subdiagonal -1.
    /// The canonical difference operator of this toolkit.
    static BandedOperator backward_difference();

    /// Upper bidiagonal difference: main diagonal 1, superdiagonal -1.
    /// Transpose of backward_difference(); realizes the adjoint.
    static BandedOperator forward_difference();

    /// this - alpha * I.
    BandedOperator shifted(Complex alpha) const;

    /// Offsets flipped (o -> -o), coefficients unchanged.
    BandedOperator transposed() const;

    /// Effective coefficient at the given offset, 0 if absent.
    Complex coefficient(int offset) const;

    Complex entry(std::size_t row, std::size_t col) const;

    /// Effective diagonal map (the main diagonal folds in the shift).
    std::map<int, Complex> diagonals() const;

    /// y_n = sum over offsets o of coefficient(o) * x_{n+o}; out-of-range
    /// indices read as zero, output length equals input length.
    TruncatedSequence apply(const TruncatedSequence& x) const;

    /// Leading n x n principal section. Throws EmptyInputError for n = 0.
    DenseMatrix truncate_dense(std::size_t n) const;

    bool operator==(const BandedOperator& other) const;

private:
    BandedOperator() = default;

    std::map<int, Complex> base_;
    Complex shift_{0.0, 0.0};
};

} // namespace hahnspec
