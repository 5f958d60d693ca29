#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hahnspec/resolvent.hpp"

namespace hahnspec {

/// Absolute tolerance for comparing |1 - alpha| against the unit circle.
inline constexpr double default_boundary_tolerance = 1e-9;

enum class SpectralRegion { ResolventSet, PointSpectrum, ContinuousSpectrum, ResidualSpectrum };

std::string to_string(SpectralRegion region);

/// Range condition of the shifted operator: A surjective, B dense but not
/// closed range, C range not dense.
enum class RangeState { A, B, C };

/// Inverse condition: 1 bounded, 2 exists but unbounded, 3 does not exist.
enum class InverseState { Bounded = 1, Unbounded = 2, Missing = 3 };

struct GoldbergState {
    RangeState range;
    InverseState inverse;

    friend bool operator==(const GoldbergState&, const GoldbergState&) = default;
};

std::string to_string(GoldbergState state);

/// Subspectra implied by one Goldberg state.
struct SpectrumMembership {
    bool resolvent = false;
    bool point = false;
    bool continuous = false;
    bool residual = false;
    bool approximate_point = false;
    bool defect = false;
    bool compression = false;

    friend bool operator==(const SpectrumMembership&, const SpectrumMembership&) = default;
};

/// State-table lookup. Throws ImpossibleStateError for A2, which the closed
/// graph theorem rules out on a Banach space.
SpectrumMembership goldberg_membership(GoldbergState state);

enum class GrowthClass { Saturating, Growing };

std::string to_string(GrowthClass cls);

/// Numeric evidence attached to a classification when a scan requests it.
struct PointDiagnostics {
    std::optional<double> resolvent_bound;     // norm-bound series partial sum
    std::optional<double> growth_ratio;        // last/previous column-gauge values
    std::optional<GrowthClass> growth_class;
    std::optional<double> adjoint_test_value;  // prefix-average gauge of the adjoint eigenvector

    friend bool operator==(const PointDiagnostics&, const PointDiagnostics&) = default;
};

/// Full spectral verdict at one point of the complex plane.
struct PointClassification {
    Complex alpha{0.0, 0.0};
    SpectralRegion region = SpectralRegion::ResolventSet;
    std::optional<GoldbergState> goldberg;
    bool in_ap = false;        // approximate point spectrum
    bool in_delta = false;     // defect spectrum
    bool in_co = false;        // compression spectrum
    bool adjoint_eigen = false;
    PointDiagnostics diagnostics;
    std::string note;          // e.g. "singular-shift" when numerics are unavailable
};

/// Analytic classifier. With r = |1 - alpha|:
///   r > 1: resolvent set, state A1, no subspectra flags;
///   r < 1: residual spectrum, state C2, all of ap/defect/compression, the
///          adjoint has an eigenvector;
///   r = 1 within tolerance: continuous spectrum, state B2, ap and defect
///          only.
PointClassification classify_point(Complex alpha,
                                   double boundary_tol = default_boundary_tolerance);

enum class EigenVerdict { OnlyTrivial };

struct EigenRecursionResult {
    EigenVerdict verdict = EigenVerdict::OnlyTrivial;
    TruncatedSequence trace;
};

/// Solves (Delta - alpha I)x = 0 row by row. The first row forces x_0 = 0
/// when alpha != 1 and the recursion x_n = x_{n-1}/(1-alpha) propagates the
/// zero; for alpha = 1 row n+1 reads -x_n + x_{n+1} = x_{n+1} and forces
/// x_n = 0. Either way only the trivial solution survives, so the point
/// spectrum is empty.
EigenRecursionResult eigen_recursion_solve(Complex alpha, std::size_t n);

enum class DualMembershipVerdict { InsideDual, Divergent, BoundaryCase };

std::string to_string(DualMembershipVerdict verdict);

struct AdjointEigenResult {
    TruncatedSequence sequence;  // (x_1 .. x_n), x_k = (1 - alpha)^k, x_0 = 1
    double test_value = 0.0;     // sup_m (1/m) sum_{k<=m} |x_k|
    DualMembershipVerdict verdict = DualMembershipVerdict::BoundaryCase;
    bool exceeded_threshold = false;
};

/// Builds the candidate adjoint eigenvector and evaluates the prefix-average
/// gauge that decides membership in the dual. r < 1 gives InsideDual, r > 1
/// Divergent; r = 1 yields the finite value 1 and is flagged BoundaryCase
/// rather than resolved either way.
AdjointEigenResult adjoint_eigen_test(Complex alpha, std::size_t n, double threshold,
                                      double boundary_tol = default_boundary_tolerance);

/// Absolute difference below which successive column-gauge values count as
/// saturated.
inline constexpr double default_saturation_tolerance = 1e-6;

/// Successive-value ratio at or above which the column gauge counts as
/// growing. On the reference lattice the convergent side stays below 2.3 and
/// the divergent side above 7, so 3 splits the classes with margin.
inline constexpr double default_growth_factor = 3.0;

struct GrowthReport {
    std::vector<std::size_t> sizes;
    std::vector<double> values;
    std::vector<bool> exceeded;
    GrowthClass classification = GrowthClass::Saturating;
    double last_ratio = 1.0;
};

/// Evaluates the column gauge at each section size and classifies the trend.
/// Sizes must be strictly increasing; throws EmptyInputError when empty and
/// SingularShiftError at alpha = 1.
GrowthReport finite_section_growth(Complex alpha, std::span<const std::size_t> sizes,
                                   std::size_t column = 0,
                                   double divergence_threshold = default_divergence_threshold,
                                   double saturation_tol = default_saturation_tolerance,
                                   double growth_factor = default_growth_factor);

struct ConsistencyViolation {
    Complex alpha{0.0, 0.0};
    std::string rule;
};

struct ConsistencyReport {
    std::vector<ConsistencyViolation> violations;
    std::size_t total_checked = 0;
};

/// Checks the classifier output on every grid point against the identities
/// that tie the subdivisions together: the disjoint partition of the
/// spectrum, residual = compression minus point, continuous = spectrum minus
/// (point and compression), adjoint eigenvalues versus compression, spectrum
/// = approximate point or adjoint eigenvalue, and the two inclusions
/// point <= ap, compression <= defect. Throws EmptyInputError on an empty
/// grid.
ConsistencyReport consistency_suite(std::span<const Complex> grid,
                                    double boundary_tol = default_boundary_tolerance);

} // namespace hahnspec
