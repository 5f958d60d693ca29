#include "hahnspec/spectral_analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hahnspec {

std::string to_string(SpectralRegion region) {
    switch (region) {
        case SpectralRegion::ResolventSet: return "resolvent";
        case SpectralRegion::PointSpectrum: return "point";
        case SpectralRegion::ContinuousSpectrum: return "continuous";
        case SpectralRegion::ResidualSpectrum: return "residual";
    }
    return "unknown";
}

std::string to_string(GoldbergState state) {
    std::string s;
    switch (state.range) {
        case RangeState::A: s += 'A'; break;
        case RangeState::B: s += 'B'; break;
        case RangeState::C: s += 'C'; break;
    }
    s += static_cast<char>('0' + static_cast<int>(state.inverse));
    return s;
}

std::string to_string(GrowthClass cls) {
    return cls == GrowthClass::Saturating ? "saturating" : "growing";
}

std::string to_string(DualMembershipVerdict verdict) {
    switch (verdict) {
        case DualMembershipVerdict::InsideDual: return "inside-dual";
        case DualMembershipVerdict::Divergent: return "divergent";
        case DualMembershipVerdict::BoundaryCase: return "boundary-case";
    }
    return "unknown";
}

SpectrumMembership goldberg_membership(GoldbergState state) {
    if (state.range == RangeState::A && state.inverse == InverseState::Unbounded) {
        throw ImpossibleStateError(
            "state A2 cannot occur for a bounded operator on a Banach space");
    }
    SpectrumMembership m;
    const bool surjective = state.range == RangeState::A;
    const bool dense_range = state.range != RangeState::C;

    if (state.inverse == InverseState::Bounded && dense_range) {
        // A1 and B1 are the regular points.
        m.resolvent = true;
        return m;
    }

    switch (state.inverse) {
        case InverseState::Bounded:
            m.residual = true; // C1
            break;
        case InverseState::Unbounded:
            m.approximate_point = true;
            if (dense_range) {
                m.continuous = true; // B2
            } else {
                m.residual = true; // C2
            }
            break;
        case InverseState::Missing:
            m.point = true;
            m.approximate_point = true;
            break;
    }
    if (!surjective) {
        m.defect = true;
    }
    if (!dense_range) {
        m.compression = true;
    }
    return m;
}

PointClassification classify_point(Complex alpha, double boundary_tol) {
    const double r = std::abs(Complex{1.0, 0.0} - alpha);

    PointClassification pc;
    pc.alpha = alpha;
    if (r > 1.0 + boundary_tol) {
        pc.region = SpectralRegion::ResolventSet;
        pc.goldberg = GoldbergState{RangeState::A, InverseState::Bounded};
    } else if (r < 1.0 - boundary_tol) {
        pc.region = SpectralRegion::ResidualSpectrum;
        pc.goldberg = GoldbergState{RangeState::C, InverseState::Unbounded};
        pc.in_ap = true;
        pc.in_delta = true;
        pc.in_co = true;
        pc.adjoint_eigen = true;
    } else {
        pc.region = SpectralRegion::ContinuousSpectrum;
        pc.goldberg = GoldbergState{RangeState::B, InverseState::Unbounded};
        pc.in_ap = true;
        pc.in_delta = true;
    }
    return pc;
}

EigenRecursionResult eigen_recursion_solve(Complex alpha, std::size_t n) {
    const Complex w = Complex{1.0, 0.0} - alpha;
    std::vector<Complex> x(n, Complex{0.0, 0.0});
    if (n > 0 && w != Complex{0.0, 0.0}) {
        x[0] = Complex{0.0, 0.0} / w; // row 0: (1 - alpha) x_0 = 0
        for (std::size_t k = 1; k < n; ++k) {
            x[k] = x[k - 1] / w;
        }
    }
    // For alpha = 1 row k+1 forces x_k = 0 directly; nothing to propagate.
    return {EigenVerdict::OnlyTrivial, TruncatedSequence(std::move(x))};
}

AdjointEigenResult adjoint_eigen_test(Complex alpha, std::size_t n, double threshold,
                                      double boundary_tol) {
    if (n == 0) {
        throw EmptyInputError("adjoint_eigen_test: need at least one term");
    }
    const Complex w = Complex{1.0, 0.0} - alpha;
    const double r = std::abs(w);

    // Stop extending once moduli pass this bound; the verdict is already
    // decided and further powers would overflow.
    constexpr double overflow_guard = 1e150;

    std::vector<Complex> seq;
    seq.reserve(n);
    Complex p{1.0, 0.0};
    double prefix = 0.0;
    double best = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        p *= w;
        seq.push_back(p);
        prefix += std::abs(p);
        best = std::max(best, prefix / static_cast<double>(k));
        if (std::abs(p) > overflow_guard) {
            break;
        }
    }

    AdjointEigenResult result;
    result.sequence = TruncatedSequence(std::move(seq));
    result.test_value = best;
    result.exceeded_threshold = best > threshold;
    if (r < 1.0 - boundary_tol) {
        result.verdict = DualMembershipVerdict::InsideDual;
    } else if (r > 1.0 + boundary_tol) {
        result.verdict = DualMembershipVerdict::Divergent;
    } else {
        result.verdict = DualMembershipVerdict::BoundaryCase;
    }
    return result;
}

GrowthReport finite_section_growth(Complex alpha, std::span<const std::size_t> sizes,
                                   std::size_t column, double divergence_threshold,
                                   double saturation_tol, double growth_factor) {
    if (sizes.empty()) {
        throw EmptyInputError("finite_section_growth: no section sizes");
    }
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1]) {
            throw std::invalid_argument("finite_section_growth: sizes must be strictly increasing");
        }
    }

    GrowthReport report;
    report.sizes.assign(sizes.begin(), sizes.end());
    for (const std::size_t size : sizes) {
        const auto gauge = hahn_column_functional(alpha, column, size, divergence_threshold);
        report.values.push_back(gauge.value);
        report.exceeded.push_back(gauge.exceeded);
    }

    bool growing = false;
    for (std::size_t i = 1; i < report.values.size(); ++i) {
        const double prev = report.values[i - 1];
        const double curr = report.values[i];
        if (report.exceeded[i - 1] || report.exceeded[i]) {
            growing = true;
            continue;
        }
        if (std::abs(curr - prev) < saturation_tol) {
            continue;
        }
        if (curr >= growth_factor * prev) {
            growing = true;
        }
    }
    report.classification = growing ? GrowthClass::Growing : GrowthClass::Saturating;

    if (report.values.size() >= 2) {
        const double prev = report.values[report.values.size() - 2];
        const double curr = report.values.back();
        report.last_ratio = (prev > 0.0) ? curr / prev : (curr > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    }
    return report;
}

ConsistencyReport consistency_suite(std::span<const Complex> grid, double boundary_tol) {
    if (grid.empty()) {
        throw EmptyInputError("consistency_suite: empty grid");
    }

    ConsistencyReport report;
    report.total_checked = grid.size();
    for (const Complex alpha : grid) {
        const PointClassification pc = classify_point(alpha, boundary_tol);
        const bool in_spectrum = pc.region != SpectralRegion::ResolventSet;
        const bool is_point = pc.region == SpectralRegion::PointSpectrum;
        const bool is_continuous = pc.region == SpectralRegion::ContinuousSpectrum;
        const bool is_residual = pc.region == SpectralRegion::ResidualSpectrum;

        auto violate = [&](const std::string& rule) {
            report.violations.push_back({alpha, rule});
        };

        // Disjoint partition: the resolvent set carries no subspectra flags.
        if (!in_spectrum != !(pc.in_ap || pc.in_delta || pc.in_co)) {
            violate("partition: resolvent point carries subspectrum flags");
        }
        if (is_residual != (pc.in_co && !is_point)) {
            violate("residual != compression minus point");
        }
        if (is_continuous != (in_spectrum && !is_point && !pc.in_co)) {
            violate("continuous != spectrum minus point and compression");
        }
        if (pc.adjoint_eigen != pc.in_co) {
            violate("adjoint eigenvalue flag != compression flag");
        }
        if (in_spectrum != (pc.in_ap || pc.adjoint_eigen)) {
            violate("spectrum != approximate point or adjoint eigenvalue");
        }
        if (is_point && !pc.in_ap) {
            violate("point spectrum not inside approximate point spectrum");
        }
        if (pc.in_co && !pc.in_delta) {
            violate("compression not inside defect spectrum");
        }
    }
    return report;
}

} // namespace hahnspec
