#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hahnspec/errors.hpp"

namespace hahnspec {

using Complex = std::complex<double>;

/// Cutoff above which the sup-type gauges flag a value as divergent.
inline constexpr double default_divergence_threshold = 1e12;

bool is_finite(Complex z);

/// Validating factory for scalars that enter from external input (CLI, files).
/// Throws std::invalid_argument on NaN or infinite components.
Complex make_scalar(double re, double im = 0.0);

/// Finite prefix of an infinite complex sequence with an implicit zero tail.
///
/// Storage is 0-based; entry i stands for x_{i+1} in the 1-based summation
/// convention, so the weight of entry i in the weighted-difference norms is
/// i + 1 and the last forward difference is x_N - 0 = x_N.
class TruncatedSequence {
public:
    TruncatedSequence() = default;
    explicit TruncatedSequence(std::vector<Complex> values);
    TruncatedSequence(std::initializer_list<Complex> values);

    static TruncatedSequence zeros(std::size_t n);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    const Complex& operator[](std::size_t i) const { return values_[i]; }

    /// Zero-tail access: indices outside [0, size) read as 0.
    Complex at_or_zero(std::ptrdiff_t i) const;

    std::span<const Complex> values() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool operator==(const TruncatedSequence&) const = default;

private:
    std::vector<Complex> values_;
};

/// sum_k k|x_k - x_{k+1}| + sup_k |x_k|, zero tail. Empty input gives 0.
double hahn_norm(const TruncatedSequence& x);

/// sum_k k|x_k - x_{k+1}|, zero tail. Empty input gives 0.
double rao_norm(const TruncatedSequence& x);

/// sum_k |x_k|.
double l1_norm(const TruncatedSequence& x);

/// sup over 1 <= n <= N of (1/n)|sum_{k<=n} x_k|. Throws EmptyInputError on
/// an empty sequence (the prefix average is undefined).
double rho_inf_functional(const TruncatedSequence& x);

/// sup over 1 <= n <= N of (1/n) sum_{k<=n} |x_k|. Throws EmptyInputError.
double abs_cesaro_functional(const TruncatedSequence& x);

/// Functional value plus the divergence flag: truncated evaluations realize a
/// finiteness test as a threshold test.
struct GaugeValue {
    double value = 0.0;
    bool exceeded = false;
};

GaugeValue rho_inf_gauge(const TruncatedSequence& x,
                         double threshold = default_divergence_threshold);
GaugeValue abs_cesaro_gauge(const TruncatedSequence& x,
                            double threshold = default_divergence_threshold);

} // namespace hahnspec
