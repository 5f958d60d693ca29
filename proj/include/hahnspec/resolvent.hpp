#pragma once

#include <cstddef>

#include "hahnspec/operators.hpp"

namespace hahnspec {

/// Default number of terms for the norm-bound series.
inline constexpr std::size_t default_series_terms = 200;

enum class ConvergenceKind { Convergent, Divergent };

/// Ratio-test outcome for the weighted resolvent-entry series. The series
/// converges exactly when limit_ratio = 1/|1 - alpha| is below 1; on the
/// boundary the terms do not vanish, so it is classified Divergent.
struct ConvergenceVerdict {
    ConvergenceKind kind = ConvergenceKind::Divergent;
    double limit_ratio = 0.0;
    double partial_value = 0.0;
};

/// Inverse entry of the shifted difference operator:
/// b_{nk} = (1 - alpha)^{-(n - k + 1)} for k <= n, 0 above the diagonal.
/// Throws SingularShiftError when 1 - alpha = 0.
Complex resolvent_entry(Complex alpha, std::size_t row, std::size_t col);

/// Lower-triangular n x n section of the resolvent entries. The band of the
/// shifted operator points strictly downward, so the section product
/// (Delta - alpha I)_n * B_n reproduces the identity with no truncation
/// spill. Throws EmptyInputError for n = 0.
DenseMatrix resolvent_truncation(Complex alpha, std::size_t n);

/// Forward substitution for (Delta - alpha I) x = y on the truncation:
/// x_0 = y_0/(1-alpha), x_n = (x_{n-1} + y_n)/(1-alpha). Independent check
/// for the closed-form entries.
TruncatedSequence dense_solve_oracle(Complex alpha, const TruncatedSequence& y);

/// Partial sums of sum_n n (x^{n+1} + x^{n+2}) with x = 1/|1-alpha|, the
/// upper estimate for the (h:h) norm of the resolvent. Accumulation stops
/// once the partial sum passes the divergence threshold.
ConvergenceVerdict norm_bound_series(Complex alpha,
                                     std::size_t n_terms = default_series_terms,
                                     double divergence_threshold = default_divergence_threshold);

struct ColumnFunctionalValue {
    double value = 0.0;
    bool exceeded = false;
};

/// Weighted first-difference gauge of one resolvent column:
/// sum_{n=1..n_rows} n |b_{k+n,k} - b_{k+n+1,k}|, the per-column (h:h)
/// diagnostic. The Toeplitz band makes every column identical, so the value
/// does not depend on the column index. Accumulation stops once the partial
/// sum passes the divergence threshold.
ColumnFunctionalValue hahn_column_functional(Complex alpha, std::size_t column,
                                             std::size_t n_rows,
                                             double divergence_threshold = default_divergence_threshold);

} // namespace hahnspec
