#include "hahnspec/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hahnspec {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Complex make_scalar(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw std::invalid_argument("complex scalar requires finite components");
    }
    return {re, im};
}

namespace {

void require_finite_entries(const std::vector<Complex>& values) {
    for (const Complex& z : values) {
        if (!is_finite(z)) {
            throw std::invalid_argument("sequence entries must be finite");
        }
    }
}

} // namespace

TruncatedSequence::TruncatedSequence(std::vector<Complex> values)
    : values_(std::move(values)) {
    require_finite_entries(values_);
}

TruncatedSequence::TruncatedSequence(std::initializer_list<Complex> values)
    : TruncatedSequence(std::vector<Complex>(values)) {}

TruncatedSequence TruncatedSequence::zeros(std::size_t n) {
    return TruncatedSequence(std::vector<Complex>(n, Complex{0.0, 0.0}));
}

Complex TruncatedSequence::at_or_zero(std::ptrdiff_t i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= values_.size()) {
        return {0.0, 0.0};
    }
    return values_[static_cast<std::size_t>(i)];
}

double rao_norm(const TruncatedSequence& x) {
    double sum = 0.0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex next = (i + 1 < n) ? x[i + 1] : Complex{0.0, 0.0};
        sum += static_cast<double>(i + 1) * std::abs(x[i] - next);
    }
    return sum;
}

double hahn_norm(const TruncatedSequence& x) {
    double sup = 0.0;
    for (const Complex& z : x) {
        sup = std::max(sup, std::abs(z));
    }
    return rao_norm(x) + sup;
}

double l1_norm(const TruncatedSequence& x) {
    double sum = 0.0;
    for (const Complex& z : x) {
        sum += std::abs(z);
    }
    return sum;
}

double rho_inf_functional(const TruncatedSequence& x) {
    if (x.empty()) {
        throw EmptyInputError("rho_inf_functional: empty sequence");
    }
    Complex prefix{0.0, 0.0};
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        prefix += x[i];
        best = std::max(best, std::abs(prefix) / static_cast<double>(i + 1));
    }
    return best;
}

double abs_cesaro_functional(const TruncatedSequence& x) {
    if (x.empty()) {
        throw EmptyInputError("abs_cesaro_functional: empty sequence");
    }
    double prefix = 0.0;
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        prefix += std::abs(x[i]);
        best = std::max(best, prefix / static_cast<double>(i + 1));
    }
    return best;
}

GaugeValue rho_inf_gauge(const TruncatedSequence& x, double threshold) {
    const double value = rho_inf_functional(x);
    return {value, value > threshold};
}

GaugeValue abs_cesaro_gauge(const TruncatedSequence& x, double threshold) {
    const double value = abs_cesaro_functional(x);
    return {value, value > threshold};
}

} // namespace hahnspec
