#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace simps {

struct CcdfPoint {
    double x;     // support value
    double p_gt;  // P(X > x)
    double p_ge;  // P(X >= x), useful where p_gt hits 0
};

// Empirical complementary CDF over the distinct sample values, ascending.
struct EmpiricalCcdf {
    std::vector<CcdfPoint> points;
    std::size_t sample_count = 0;

    // Points usable on log-log axes (p_gt > 0); the terminal zero point is
    // excluded.
    std::vector<CcdfPoint> positive_points() const;
};

// Requires a non-empty list of positive samples.
EmpiricalCcdf ccdf(std::vector<double> samples);

enum class TailModel { PowerLaw, Weibull };

struct TailFit {
    TailModel model = TailModel::PowerLaw;
    double exponent = 0.0;  // alpha for PowerLaw, shape k for Weibull
    double scale = 0.0;     // Weibull only
    double x_min = 0.0;
    double x_max = 0.0;
    double r2 = 0.0;  // goodness on the linearized coordinates
    std::size_t points_used = 0;
};

// Least squares on (ln x, ln P) over support in [x_min, x_max]; alpha is the
// negated slope. Needs at least 5 usable points in range.
TailFit fit_power_law(const EmpiricalCcdf& c, double x_min, double x_max);

// Least squares on (ln x, ln(-ln P)); the slope is the Weibull shape k and
// exp(-intercept/k) its scale. Points with P = 1 are unusable and skipped.
TailFit fit_weibull_tail(const EmpiricalCcdf& c, double x_min, double x_max);

// Heuristic tail-cutoff locator: decimates the support geometrically, fits
// the body exponent, and reports where the local log-log slope first stays
// below -(alpha + 1) for three consecutive segments. Empty when the curve
// never steepens that much. Needs at least 10 positive points.
std::optional<double> detect_cutoff(const EmpiricalCcdf& c);

// CSV `x_s,p_gt`, positive points only.
void write_ccdf_csv(const EmpiricalCcdf& c, std::ostream& out);

// Key-value lines: model, alpha_or_k, x_min, x_max, r2.
void write_fit_report(const TailFit& fit, std::ostream& out);

}  // namespace simps
