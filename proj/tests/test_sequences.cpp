#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "hahnspec/sequences.hpp"
#include "test_support.hpp"

using namespace hahnspec;

namespace {

// Independent long-double evaluation of the weighted-difference sum, used to
// pin the derived expectations before freezing them below.
long double weighted_difference_sum(const std::vector<Complex>& x) {
    long double sum = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Complex next = (i + 1 < x.size()) ? x[i + 1] : Complex{0.0, 0.0};
        sum += static_cast<long double>(i + 1) * std::abs(x[i] - next);
    }
    return sum;
}

std::vector<Complex> dyadic_decay(std::size_t n) {
    std::vector<Complex> values(n);
    double p = 1.0;
    for (auto& z : values) {
        p *= 0.5;
        z = Complex{p, 0.0};
    }
    return values;
}

} // namespace

TEST_CASE("hahn norm on empty, spike and dyadic inputs") {
    CHECK(hahn_norm(TruncatedSequence{}) == 0.0);

    const TruncatedSequence spike{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    CHECK(hahn_norm(spike) == 2.0); // weighted sum 1, sup 1

    // x_k = 2^-k: sum k|dx_k| = 1 (half of sum k 2^-k = 2), sup = 1/2.
    const auto values = dyadic_decay(60);
    const long double oracle = weighted_difference_sum(values) + 0.5L;
    CHECK(std::abs(static_cast<double>(oracle) - 1.5) < 1e-12);
    CHECK(hahn_norm(TruncatedSequence(values)) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("rao norm on empty, spike and dyadic inputs") {
    CHECK(rao_norm(TruncatedSequence{}) == 0.0);
    CHECK(rao_norm(TruncatedSequence{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}}) ==
          1.0);
    CHECK(rao_norm(TruncatedSequence(dyadic_decay(60))) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("l1 norm on empty, spike and dyadic inputs") {
    CHECK(l1_norm(TruncatedSequence{}) == 0.0);
    CHECK(l1_norm(TruncatedSequence{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}}) ==
          1.0);
    CHECK(l1_norm(TruncatedSequence(dyadic_decay(60))) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("prefix-average gauge of signed sums") {
    CHECK(rho_inf_functional(TruncatedSequence::zeros(3)) == 0.0);
    CHECK(rho_inf_functional(TruncatedSequence{Complex{1, 0}, Complex{1, 0}, Complex{1, 0},
                                               Complex{1, 0}}) == 1.0);
    // Prefix sums alternate 1, 0, 1, 0; the supremum sits at n = 1.
    CHECK(rho_inf_functional(TruncatedSequence{Complex{1, 0}, Complex{-1, 0}, Complex{1, 0},
                                               Complex{-1, 0}}) == 1.0);
    CHECK_THROWS_AS(rho_inf_functional(TruncatedSequence{}), EmptyInputError);
}

TEST_CASE("prefix-average gauge of absolute sums") {
    // x_k = 0.5^k is decreasing, so the best prefix average is the first term.
    std::vector<Complex> geometric(1000);
    double p = 1.0;
    for (auto& z : geometric) {
        p *= 0.5;
        z = Complex{p, 0.0};
    }
    CHECK(abs_cesaro_functional(TruncatedSequence(std::move(geometric))) == 0.5);

    CHECK(abs_cesaro_functional(TruncatedSequence{Complex{1, 0}, Complex{1, 0}, Complex{1, 0}}) ==
          1.0);

    // x_k = 2^k up to N = 30: the best prefix average is (2^31 - 2)/30.
    std::vector<Complex> doubling(30);
    double q = 1.0;
    for (auto& z : doubling) {
        q *= 2.0;
        z = Complex{q, 0.0};
    }
    const TruncatedSequence x(std::move(doubling));
    const double expected = (std::pow(2.0, 31) - 2.0) / 30.0;
    CHECK(abs_cesaro_functional(x) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(abs_cesaro_gauge(x, 1e6).exceeded);
    CHECK_FALSE(abs_cesaro_gauge(x).exceeded); // default cutoff 1e12 sits far above
    CHECK_THROWS_AS(abs_cesaro_functional(TruncatedSequence{}), EmptyInputError);
}

TEST_CASE("norm chain l1 <= rao <= hahn <= 2 rao on random support") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = testing::random_supported_sequence(rng, 1 + trial % 40);
        const double l1 = l1_norm(x);
        const double rao = rao_norm(x);
        const double hahn = hahn_norm(x);
        const double slack = 1e-10 * std::max(1.0, hahn);
        CHECK(l1 <= rao + slack);
        CHECK(rao <= hahn + slack);
        CHECK(hahn <= 2.0 * rao + slack);
    }
}

TEST_CASE("functionals are absolutely homogeneous and subadditive") {
    std::mt19937 rng(77);
    const auto evaluate = [](int which, const TruncatedSequence& x) {
        switch (which) {
            case 0: return hahn_norm(x);
            case 1: return rao_norm(x);
            case 2: return l1_norm(x);
            case 3: return rho_inf_functional(x);
            default: return abs_cesaro_functional(x);
        }
    };
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 25;
        const auto x = testing::random_sequence(rng, n);
        const auto y = testing::random_sequence(rng, n);
        const Complex c = testing::random_complex(rng, 2.0);

        std::vector<Complex> scaled(n), summed(n);
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i] = c * x[i];
            summed[i] = x[i] + y[i];
        }
        const TruncatedSequence cx(std::move(scaled));
        const TruncatedSequence xy(std::move(summed));

        for (int which = 0; which < 5; ++which) {
            const double fx = evaluate(which, x);
            const double fy = evaluate(which, y);
            const double scale = std::max({1.0, fx, fy});
            CHECK(std::abs(evaluate(which, cx) - std::abs(c) * fx) <=
                  1e-10 * scale * std::max(1.0, std::abs(c)));
            CHECK(evaluate(which, xy) <= fx + fy + 1e-10 * scale);
        }
    }
}

TEST_CASE("signed prefix gauge is dominated by the absolute one") {
    std::mt19937 rng(1312);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = testing::random_sequence(rng, 1 + trial % 30);
        CHECK(rho_inf_functional(x) <= abs_cesaro_functional(x) + 1e-12);
    }
}

TEST_CASE("zero padding never changes a functional") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 20;
        const auto x = testing::random_sequence(rng, n);
        std::vector<Complex> padded(x.begin(), x.end());
        padded.resize(n + 7, Complex{0.0, 0.0});
        const TruncatedSequence xp(std::move(padded));

        CHECK(hahn_norm(x) == hahn_norm(xp));
        CHECK(rao_norm(x) == rao_norm(xp));
        CHECK(l1_norm(x) == l1_norm(xp));
        CHECK(rho_inf_functional(x) == rho_inf_functional(xp));
        CHECK(abs_cesaro_functional(x) == abs_cesaro_functional(xp));
    }
}

TEST_CASE("sequence constructors reject non-finite entries") {
    CHECK_THROWS_AS((TruncatedSequence{Complex{std::nan(""), 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_scalar(std::numeric_limits<double>::infinity()), std::invalid_argument);
    CHECK(make_scalar(1.5, -2.0) == Complex{1.5, -2.0});
}
