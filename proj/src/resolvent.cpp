#include "hahnspec/resolvent.hpp"

#include <cmath>
#include <limits>

namespace hahnspec {

namespace {

Complex reciprocal_shift(Complex alpha) {
    const Complex w = Complex{1.0, 0.0} - alpha;
    if (w == Complex{0.0, 0.0}) {
        throw SingularShiftError();
    }
    return Complex{1.0, 0.0} / w;
}

} // namespace

Complex resolvent_entry(Complex alpha, std::size_t row, std::size_t col) {
    const Complex w = reciprocal_shift(alpha);
    if (col > row) {
        return {0.0, 0.0};
    }
    // w^(row - col + 1) by repeated multiplication; keeps columns bitwise
    // translation invariant and the section product residual at a few ulp.
    Complex p = w;
    for (std::size_t i = col; i < row; ++i) {
        p *= w;
    }
    return p;
}

DenseMatrix resolvent_truncation(Complex alpha, std::size_t n) {
    if (n == 0) {
        throw EmptyInputError("resolvent_truncation: section size must be positive");
    }
    const Complex w = reciprocal_shift(alpha);
    DenseMatrix m(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        Complex p = w;
        for (std::size_t row = col; row < n; ++row) {
            m.at(row, col) = p;
            p *= w;
        }
    }
    return m;
}

TruncatedSequence dense_solve_oracle(Complex alpha, const TruncatedSequence& y) {
    const Complex w = Complex{1.0, 0.0} - alpha;
    if (w == Complex{0.0, 0.0}) {
        throw SingularShiftError();
    }
    std::vector<Complex> x(y.size(), Complex{0.0, 0.0});
    Complex carry{0.0, 0.0};
    for (std::size_t n = 0; n < y.size(); ++n) {
        carry = (carry + y[n]) / w;
        x[n] = carry;
    }
    return TruncatedSequence(std::move(x));
}

ConvergenceVerdict norm_bound_series(Complex alpha, std::size_t n_terms,
                                     double divergence_threshold) {
    const double r = std::abs(Complex{1.0, 0.0} - alpha);
    if (r == 0.0) {
        throw SingularShiftError();
    }
    const double x = 1.0 / r;

    ConvergenceVerdict verdict;
    verdict.limit_ratio = x;
    verdict.kind = (x < 1.0) ? ConvergenceKind::Convergent : ConvergenceKind::Divergent;

    double partial = 0.0;
    double power = x; // x^n after the multiply below, starting at n = 2
    for (std::size_t n = 1; n <= n_terms; ++n) {
        power *= x; // x^{n+1}
        const double term = static_cast<double>(n) * power * (1.0 + x);
        if (!std::isfinite(term)) {
            partial = std::numeric_limits<double>::max();
            break;
        }
        partial += term;
        if (partial > divergence_threshold) {
            break;
        }
    }
    verdict.partial_value = partial;
    return verdict;
}

ColumnFunctionalValue hahn_column_functional(Complex alpha, std::size_t column,
                                             std::size_t n_rows,
                                             double divergence_threshold) {
    const Complex w = reciprocal_shift(alpha);
    (void)column; // every column of the Toeplitz resolvent carries the same gauge

    double partial = 0.0;
    Complex entry = w * w; // b_{k+1,k} = w^2 at the first weighted row
    for (std::size_t n = 1; n <= n_rows; ++n) {
        const Complex next = entry * w;
        const double term = static_cast<double>(n) * std::abs(entry - next);
        entry = next;
        if (!std::isfinite(term)) {
            return {std::numeric_limits<double>::max(), true};
        }
        partial += term;
        if (partial > divergence_threshold) {
            return {partial, true};
        }
    }
    return {partial, partial > divergence_threshold};
}

} // namespace hahnspec
