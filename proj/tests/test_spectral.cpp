#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "hahnspec/scan.hpp"
#include "hahnspec/spectral_analysis.hpp"
#include "test_support.hpp"

using namespace hahnspec;

TEST_CASE("classifier on the four region representatives") {
    const auto outside = classify_point(Complex{3, 0});
    CHECK(outside.region == SpectralRegion::ResolventSet);
    CHECK(outside.goldberg == GoldbergState{RangeState::A, InverseState::Bounded});
    CHECK_FALSE(outside.in_ap);
    CHECK_FALSE(outside.in_delta);
    CHECK_FALSE(outside.in_co);
    CHECK_FALSE(outside.adjoint_eigen);

    const auto inside = classify_point(Complex{0.5, 0});
    CHECK(inside.region == SpectralRegion::ResidualSpectrum);
    CHECK(inside.goldberg == GoldbergState{RangeState::C, InverseState::Unbounded});
    CHECK(inside.in_ap);
    CHECK(inside.in_delta);
    CHECK(inside.in_co);
    CHECK(inside.adjoint_eigen);

    const auto boundary = classify_point(Complex{2, 0});
    CHECK(boundary.region == SpectralRegion::ContinuousSpectrum);
    CHECK(boundary.goldberg == GoldbergState{RangeState::B, InverseState::Unbounded});
    CHECK(boundary.in_ap);
    CHECK(boundary.in_delta);
    CHECK_FALSE(boundary.in_co);
    CHECK_FALSE(boundary.adjoint_eigen);

    // The singular shift point sits strictly inside the disk.
    CHECK(classify_point(Complex{1, 0}).region == SpectralRegion::ResidualSpectrum);
}

TEST_CASE("classification depends only on the distance to 1") {
    for (const double r : {0.3, 0.999999, 1.0, 1.000001, 2.5}) {
        const auto reference = classify_point(Complex{1.0 + r, 0.0});
        for (int i = 1; i < 12; ++i) {
            const double theta = 2.0 * M_PI * i / 12.0;
            const auto rotated = classify_point(Complex{1.0, 0.0} + std::polar(r, theta));
            CHECK(rotated.region == reference.region);
            CHECK(rotated.goldberg == reference.goldberg);
            CHECK(rotated.in_ap == reference.in_ap);
            CHECK(rotated.in_delta == reference.in_delta);
            CHECK(rotated.in_co == reference.in_co);
            CHECK(rotated.adjoint_eigen == reference.adjoint_eigen);
        }
    }
}

TEST_CASE("goldberg state table") {
    const GoldbergState a1{RangeState::A, InverseState::Bounded};
    const GoldbergState b1{RangeState::B, InverseState::Bounded};
    const GoldbergState c1{RangeState::C, InverseState::Bounded};
    const GoldbergState a2{RangeState::A, InverseState::Unbounded};
    const GoldbergState b2{RangeState::B, InverseState::Unbounded};
    const GoldbergState c2{RangeState::C, InverseState::Unbounded};
    const GoldbergState a3{RangeState::A, InverseState::Missing};
    const GoldbergState b3{RangeState::B, InverseState::Missing};
    const GoldbergState c3{RangeState::C, InverseState::Missing};

    CHECK(goldberg_membership(a1) == SpectrumMembership{true, false, false, false, false, false, false});
    CHECK(goldberg_membership(b1) == SpectrumMembership{true, false, false, false, false, false, false});
    CHECK(goldberg_membership(c1) == SpectrumMembership{false, false, false, true, false, true, true});
    CHECK(goldberg_membership(b2) == SpectrumMembership{false, false, true, false, true, true, false});
    CHECK(goldberg_membership(c2) == SpectrumMembership{false, false, false, true, true, true, true});
    CHECK(goldberg_membership(a3) == SpectrumMembership{false, true, false, false, true, false, false});
    CHECK(goldberg_membership(b3) == SpectrumMembership{false, true, false, false, true, true, false});
    CHECK(goldberg_membership(c3) == SpectrumMembership{false, true, false, false, true, true, true});
    CHECK_THROWS_AS(goldberg_membership(a2), ImpossibleStateError);

    CHECK(to_string(a1) == "A1");
    CHECK(to_string(c2) == "C2");
    CHECK(to_string(b3) == "B3");
}

TEST_CASE("classifier output is coherent with the state table") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 400; ++trial) {
        const Complex alpha = Complex{1.0, 0.0} + testing::random_complex(rng, 2.2);
        const auto pc = classify_point(alpha);
        REQUIRE(pc.goldberg.has_value());
        const auto membership = goldberg_membership(*pc.goldberg);
        CHECK(membership.resolvent == (pc.region == SpectralRegion::ResolventSet));
        CHECK(membership.point == (pc.region == SpectralRegion::PointSpectrum));
        CHECK(membership.continuous == (pc.region == SpectralRegion::ContinuousSpectrum));
        CHECK(membership.residual == (pc.region == SpectralRegion::ResidualSpectrum));
        CHECK(membership.approximate_point == pc.in_ap);
        CHECK(membership.defect == pc.in_delta);
        CHECK(membership.compression == pc.in_co);
    }
}

TEST_CASE("only states A1, B2 and C2 are ever emitted") {
    const auto grid = scan_grid_points(reference_scan_config());
    for (const Complex alpha : grid) {
        const auto pc = classify_point(alpha);
        REQUIRE(pc.goldberg.has_value());
        const std::string name = to_string(*pc.goldberg);
        CHECK((name == "A1" || name == "B2" || name == "C2"));
        CHECK(pc.region != SpectralRegion::PointSpectrum);
    }
}

TEST_CASE("the eigen recursion only has the trivial solution") {
    for (const Complex alpha : {Complex{0.5, 0}, Complex{1, 0}, Complex{2, 0}, Complex{-0.7, 1.3}}) {
        const auto result = eigen_recursion_solve(alpha, 40);
        CHECK(result.verdict == EigenVerdict::OnlyTrivial);
        CHECK(result.trace == TruncatedSequence::zeros(40));
    }
    CHECK(eigen_recursion_solve(Complex{0.5, 0}, 0).trace == TruncatedSequence{});

    for (const Complex alpha : scan_grid_points(reference_scan_config())) {
        const auto result = eigen_recursion_solve(alpha, 8);
        REQUIRE(result.verdict == EigenVerdict::OnlyTrivial);
        REQUIRE(result.trace == TruncatedSequence::zeros(8));
    }
}

TEST_CASE("adjoint eigenvector gauge across the three regimes") {
    const auto inside = adjoint_eigen_test(Complex{0.5, 0}, 1000, 1e12);
    CHECK(inside.verdict == DualMembershipVerdict::InsideDual);
    CHECK(inside.test_value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_FALSE(inside.exceeded_threshold);

    const auto outside = adjoint_eigen_test(Complex{3, 0}, 30, 1e6);
    CHECK(outside.verdict == DualMembershipVerdict::Divergent);
    CHECK(outside.test_value ==
          doctest::Approx((std::pow(2.0, 31) - 2.0) / 30.0).epsilon(1e-12));
    CHECK(outside.exceeded_threshold);

    const auto boundary = adjoint_eigen_test(Complex{0, 0}, 1000, 1e12);
    CHECK(boundary.verdict == DualMembershipVerdict::BoundaryCase);
    CHECK(boundary.test_value == 1.0); // finite despite the strict membership test
    CHECK_FALSE(boundary.exceeded_threshold);

    CHECK_THROWS_AS(adjoint_eigen_test(Complex{0.5, 0}, 0, 1e12), EmptyInputError);
}

TEST_CASE("adjoint gauge survives strongly divergent powers") {
    const auto extreme = adjoint_eigen_test(Complex{-2, 0}, 1000, 1e6);
    CHECK(extreme.verdict == DualMembershipVerdict::Divergent);
    CHECK(extreme.exceeded_threshold);
    CHECK(std::isfinite(extreme.test_value));
    CHECK(extreme.sequence.size() < 1000); // construction stops at the overflow guard
}

TEST_CASE("finite-section growth on the three regimes") {
    const std::array<std::size_t, 2> far{32, 64};
    const auto saturating = finite_section_growth(Complex{3, 0}, far);
    CHECK(saturating.classification == GrowthClass::Saturating);
    CHECK(saturating.values[0] == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(saturating.values[1] == doctest::Approx(1.5).epsilon(1e-6));

    const std::array<std::size_t, 2> near{16, 32};
    const auto growing = finite_section_growth(Complex{0.5, 0}, near);
    CHECK(growing.classification == GrowthClass::Growing);
    CHECK(growing.values[1] > 1000.0 * growing.values[0]);

    const auto boundary = finite_section_growth(Complex{2, 0}, far);
    CHECK(boundary.classification == GrowthClass::Growing);
    CHECK(boundary.last_ratio > 3.5);
    CHECK(boundary.last_ratio < 4.5);

    CHECK_THROWS_AS(finite_section_growth(Complex{1, 0}, far), SingularShiftError);
    CHECK_THROWS_AS(finite_section_growth(Complex{3, 0}, std::array<std::size_t, 0>{}),
                    EmptyInputError);
    CHECK_THROWS_AS(finite_section_growth(Complex{3, 0}, std::array<std::size_t, 2>{32, 32}),
                    std::invalid_argument);
}

TEST_CASE("growth classification agrees with the analytic classifier off the boundary band") {
    const std::array<std::size_t, 3> sizes{16, 32, 64};
    const auto grid = scan_grid_points(reference_scan_config());
    for (const Complex alpha : grid) {
        const double r = std::abs(Complex{1, 0} - alpha);
        if (std::abs(r - 1.0) <= 0.05 || r == 0.0) {
            continue; // boundary band excluded; alpha = 1 has no sections at all
        }
        const auto growth = finite_section_growth(alpha, sizes);
        const bool resolvent = classify_point(alpha).region == SpectralRegion::ResolventSet;
        CHECK((growth.classification == GrowthClass::Saturating) == resolvent);
    }
}

TEST_CASE("consistency suite on representatives and the reference grid") {
    const std::vector<Complex> single{Complex{3, 0}};
    CHECK(consistency_suite(single).violations.empty());

    const std::vector<Complex> representatives{Complex{0.5, 0}, Complex{2, 0}, Complex{1, 0},
                                               Complex{3, 0}};
    const auto rep_report = consistency_suite(representatives);
    CHECK(rep_report.violations.empty());
    CHECK(rep_report.total_checked == 4);

    const auto grid = scan_grid_points(reference_scan_config());
    const auto report = consistency_suite(grid);
    CHECK(report.violations.empty());
    CHECK(report.total_checked == grid.size());

    CHECK_THROWS_AS(consistency_suite(std::vector<Complex>{}), EmptyInputError);
}
