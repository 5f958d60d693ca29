#include "hahnspec/operators.hpp"

#include <stdexcept>
#include <utility>

namespace hahnspec {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

BandedOperator BandedOperator::from_diagonals(std::map<int, Complex> diagonals) {
    if (diagonals.empty()) {
        throw std::invalid_argument("banded operator needs at least one diagonal");
    }
    bool any_nonzero = false;
    for (const auto& [offset, coeff] : diagonals) {
        if (!is_finite(coeff)) {
            throw std::invalid_argument("banded operator coefficients must be finite");
        }
        any_nonzero = any_nonzero || coeff != Complex{0.0, 0.0};
    }
    if (!any_nonzero) {
        throw std::invalid_argument("banded operator needs a nonzero coefficient");
    }
    BandedOperator op;
    op.base_ = std::move(diagonals);
    return op;
}

BandedOperator BandedOperator::backward_difference() {
    return from_diagonals({{0, Complex{1.0, 0.0}}, {-1, Complex{-1.0, 0.0}}});
}

BandedOperator BandedOperator::forward_difference() {
    return from_diagonals({{0, Complex{1.0, 0.0}}, {+1, Complex{-1.0, 0.0}}});
}

BandedOperator BandedOperator::shifted(Complex alpha) const {
    BandedOperator op = *this;
    op.shift_ += alpha;
    return op;
}

BandedOperator BandedOperator::transposed() const {
    std::map<int, Complex> flipped;
    for (const auto& [offset, coeff] : diagonals()) {
        flipped[-offset] = coeff;
    }
    BandedOperator op;
    op.base_ = std::move(flipped);
    return op;
}

Complex BandedOperator::coefficient(int offset) const {
    Complex c{0.0, 0.0};
    if (auto it = base_.find(offset); it != base_.end()) {
        c = it->second;
    }
    if (offset == 0) {
        c -= shift_;
    }
    return c;
}

Complex BandedOperator::entry(std::size_t row, std::size_t col) const {
    const auto offset = static_cast<std::ptrdiff_t>(col) - static_cast<std::ptrdiff_t>(row);
    return coefficient(static_cast<int>(offset));
}

std::map<int, Complex> BandedOperator::diagonals() const {
    std::map<int, Complex> effective = base_;
    if (effective.count(0) != 0 || shift_ != Complex{0.0, 0.0}) {
        effective[0] = coefficient(0);
    }
    // A main diagonal that exists only through a net-zero shift is dropped so
    // that shift round trips compare equal to the original operator.
    if (auto it = effective.find(0);
        it != effective.end() && base_.count(0) == 0 && it->second == Complex{0.0, 0.0}) {
        effective.erase(it);
    }
    return effective;
}

TruncatedSequence BandedOperator::apply(const TruncatedSequence& x) const {
    const auto diag = diagonals();
    std::vector<Complex> out(x.size(), Complex{0.0, 0.0});
    for (std::size_t n = 0; n < x.size(); ++n) {
        Complex acc{0.0, 0.0};
        for (const auto& [offset, coeff] : diag) {
            acc += coeff * x.at_or_zero(static_cast<std::ptrdiff_t>(n) + offset);
        }
        out[n] = acc;
    }
    return TruncatedSequence(std::move(out));
}

DenseMatrix BandedOperator::truncate_dense(std::size_t n) const {
    if (n == 0) {
        throw EmptyInputError("truncate_dense: section size must be positive");
    }
    const auto diag = diagonals();
    DenseMatrix m(n, n);
    for (const auto& [offset, coeff] : diag) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto j = static_cast<std::ptrdiff_t>(i) + offset;
            if (j >= 0 && static_cast<std::size_t>(j) < n) {
                m.at(i, static_cast<std::size_t>(j)) = coeff;
            }
        }
    }
    return m;
}

bool BandedOperator::operator==(const BandedOperator& other) const {
    return diagonals() == other.diagonals();
}

} // namespace hahnspec
