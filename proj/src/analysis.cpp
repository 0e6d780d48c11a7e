#include "simps/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <span>
#include <stdexcept>

#include "simps/format.hpp"

namespace simps {

std::vector<CcdfPoint> EmpiricalCcdf::positive_points() const {
    std::vector<CcdfPoint> out;
    for (const CcdfPoint& p : points)
        if (p.p_gt > 0.0) out.push_back(p);
    return out;
}

EmpiricalCcdf ccdf(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("ccdf: no samples");
    for (double s : samples)
        if (!(s > 0.0)) throw std::invalid_argument("ccdf: samples must be > 0");
    std::sort(samples.begin(), samples.end());

    EmpiricalCcdf out;
    out.sample_count = samples.size();
    const double n = static_cast<double>(samples.size());
    std::size_t i = 0;
    while (i < samples.size()) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        // i samples are < samples[i]; j are <= samples[i]
        out.points.push_back({samples[i], (n - j) / n, (n - i) / n});
        i = j;
    }
    return out;
}

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

// Ordinary least squares with R^2; SS_tot = 0 (all y equal) counts as a
// perfect fit only when the residuals are zero too.
LineFit ols(std::span<const double> xs, std::span<const double> ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("fit: degenerate x support");

    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (f.intercept + f.slope * xs[i]);
        ss_res += r * r;
    }
    f.r2 = syy == 0.0 ? (ss_res == 0.0 ? 1.0 : 0.0)
                      : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return f;
}

constexpr std::size_t kMinFitPoints = 5;

}  // namespace

TailFit fit_power_law(const EmpiricalCcdf& c, double x_min, double x_max) {
    std::vector<double> lx, lp;
    for (const CcdfPoint& p : c.points) {
        if (p.x < x_min || p.x > x_max || p.p_gt <= 0.0) continue;
        lx.push_back(std::log(p.x));
        lp.push_back(std::log(p.p_gt));
    }
    if (lx.size() < kMinFitPoints)
        throw std::runtime_error("fit: fewer than 5 ccdf points in range");

    const LineFit f = ols(lx, lp);
    TailFit out;
    out.model = TailModel::PowerLaw;
    out.exponent = -f.slope;
    out.x_min = x_min;
    out.x_max = x_max;
    out.r2 = f.r2;
    out.points_used = lx.size();
    return out;
}

TailFit fit_weibull_tail(const EmpiricalCcdf& c, double x_min, double x_max) {
    std::vector<double> lx, ll;
    for (const CcdfPoint& p : c.points) {
        if (p.x < x_min || p.x > x_max || p.p_gt <= 0.0 || p.p_gt >= 1.0) continue;
        lx.push_back(std::log(p.x));
        ll.push_back(std::log(-std::log(p.p_gt)));
    }
    if (lx.size() < kMinFitPoints)
        throw std::runtime_error("fit: fewer than 5 ccdf points in range");

    const LineFit f = ols(lx, ll);
    TailFit out;
    out.model = TailModel::Weibull;
    out.exponent = f.slope;
    out.scale = f.slope != 0.0 ? std::exp(-f.intercept / f.slope) : 0.0;
    out.x_min = x_min;
    out.x_max = x_max;
    out.r2 = f.r2;
    out.points_used = lx.size();
    return out;
}

namespace {

// Keep the last point of every geometric bin (12 per decade): evens out the
// point density so the dense small-x region does not dominate slopes.
std::vector<CcdfPoint> log_binned(const std::vector<CcdfPoint>& pts) {
    std::vector<CcdfPoint> out;
    long prev_bin = 0;
    bool have_prev = false;
    for (const CcdfPoint& p : pts) {
        const long bin = static_cast<long>(std::floor(std::log10(p.x) * 12.0));
        if (have_prev && bin == prev_bin)
            out.back() = p;
        else
            out.push_back(p);
        prev_bin = bin;
        have_prev = true;
    }
    return out;
}

}  // namespace

std::optional<double> detect_cutoff(const EmpiricalCcdf& c) {
    const std::vector<CcdfPoint> pts = c.positive_points();
    if (pts.size() < 10) throw std::runtime_error("cutoff: fewer than 10 ccdf points");

    const std::vector<CcdfPoint> binned = log_binned(pts);
    if (binned.size() < 7) return std::nullopt;

    std::vector<double> lx(binned.size()), lp(binned.size());
    for (std::size_t i = 0; i < binned.size(); ++i) {
        lx[i] = std::log(binned[i].x);
        lp[i] = std::log(binned[i].p_gt);
    }

    // Body exponent from the first half of the decimated points, away from
    // whatever the tail is doing.
    const std::size_t body =
        std::min(binned.size(), std::max<std::size_t>(kMinFitPoints, binned.size() / 2));
    const double alpha =
        -ols(std::span(lx).first(body), std::span(lp).first(body)).slope;
    const double threshold = -(alpha + 1.0);

    // Local slope at point i: least squares over a 5-point window around it,
    // which irons out the single-sample jitter of the sparse extreme tail.
    auto local_slope = [&](std::size_t i) {
        return ols(std::span(lx).subspan(i - 2, 5), std::span(lp).subspan(i - 2, 5)).slope;
    };

    std::size_t run = 0;
    for (std::size_t i = 2; i + 2 < binned.size(); ++i) {
        if (local_slope(i) < threshold) {
            if (++run == 3) return binned[i - 1].x;  // the run's middle point
        } else {
            run = 0;
        }
    }
    return std::nullopt;
}

void write_ccdf_csv(const EmpiricalCcdf& c, std::ostream& out) {
    out << "x_s,p_gt\n";
    for (const CcdfPoint& p : c.positive_points())
        out << fmt_g(p.x) << "," << fmt_g(p.p_gt) << "\n";
}

void write_fit_report(const TailFit& fit, std::ostream& out) {
    out << "model = " << (fit.model == TailModel::PowerLaw ? "powerlaw" : "weibull") << "\n";
    out << "alpha_or_k = " << fmt_g(fit.exponent) << "\n";
    if (fit.model == TailModel::Weibull) out << "scale = " << fmt_g(fit.scale) << "\n";
    out << "x_min = " << fmt_g(fit.x_min) << "\n";
    out << "x_max = " << fmt_g(fit.x_max) << "\n";
    out << "r2 = " << fmt_g(fit.r2) << "\n";
    out << "points = " << fit.points_used << "\n";
}

}  // namespace simps
