#include "threshold_lab/measure_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "threshold_lab/errors.hpp"

namespace tlab {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Fritsch-Carlson tangent limiting: keeps the Hermite interpolant monotone
// whenever the data are.
std::vector<double> monotone_tangents(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    std::vector<double> d(n - 1), m(n);
    for (int i = 0; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (int i = 1; i + 1 < n; ++i)
        m[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
    for (int i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            m[i] = 0.0;
            m[i + 1] = 0.0;
            continue;
        }
        const double alpha = m[i] / d[i];
        const double beta = m[i + 1] / d[i];
        const double s = alpha * alpha + beta * beta;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            m[i] = tau * alpha * d[i];
            m[i + 1] = tau * beta * d[i];
        }
    }
    return m;
}

}  // namespace

double MeasureFamily::Spline::eval(double t) const {
    const int n = static_cast<int>(x.size());
    int hi = static_cast<int>(std::upper_bound(x.begin(), x.end(), t) - x.begin());
    hi = std::clamp(hi, 1, n - 1);
    const int lo = hi - 1;
    const double h = x[hi] - x[lo];
    const double s = (t - x[lo]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    return h00 * y[lo] + h10 * h * slope[lo] + h01 * y[hi] + h11 * h * slope[hi];
}

double PmfSnapshot::s_star_point() const {
    double out = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= r(); ++k) out = std::min(out, tail_deriv[k]);
    if (r() < 2) out = 0.0;
    return out;
}

PmfSnapshot PmfSnapshot::from_probabilities(const std::vector<double>& probs, double t) {
    const int r = static_cast<int>(probs.size());
    if (r < 1) throw InputError("measure_family: empty probability vector");
    PmfSnapshot snap;
    snap.t = t;
    snap.p.assign(r + 1, 0.0);
    snap.tail.assign(r + 2, 0.0);
    snap.tail_deriv.assign(r + 2, 0.0);
    for (int k = 1; k <= r; ++k) snap.p[k] = probs[k - 1];
    snap.tail[r + 1] = 0.0;
    for (int k = r; k >= 1; --k) snap.tail[k] = snap.tail[k + 1] + snap.p[k];
    return snap;
}

bool FamilyValidation::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

MeasureFamily MeasureFamily::embedded_bernoulli(int r) {
    if (r < 2) throw InputError("measure_family: r must be >= 2");
    MeasureFamily f;
    f.r_ = r;
    f.a_ = 0.0;
    f.b_ = 1.0;
    f.kind_ = "embedded";
    f.analytic_derivatives_ = true;
    return f;
}

MeasureFamily MeasureFamily::power(int r, std::vector<double> alpha) {
    if (r < 2) throw InputError("measure_family: r must be >= 2");
    if (static_cast<int>(alpha.size()) != r - 1)
        throw InputError("measure_family: power family needs r-1 exponents (k = 2..r)");
    for (double a : alpha)
        if (!(a > 0.0)) throw InputError("measure_family: power exponents must be positive");
    MeasureFamily f;
    f.r_ = r;
    f.a_ = 0.0;
    f.b_ = 1.0;
    f.kind_ = "power";
    f.analytic_derivatives_ = true;
    f.alpha_.assign(r + 1, 0.0);
    for (int k = 2; k <= r; ++k) f.alpha_[k] = alpha[k - 2];
    return f;
}

MeasureFamily MeasureFamily::tabulated(int r, double a, double b, std::vector<double> t_grid,
                                       std::vector<std::vector<double>> tail_rows) {
    if (r < 2) throw InputError("measure_family: r must be >= 2");
    if (!(a < b)) throw InputError("measure_family: interval needs a < b");
    if (t_grid.size() < 2) throw InputError("measure_family: tabulated grid needs >= 2 points");
    if (static_cast<int>(tail_rows.size()) != r - 1)
        throw InputError("measure_family: tabulated family needs r-1 tail rows (k = 2..r)");
    for (std::size_t i = 0; i + 1 < t_grid.size(); ++i)
        if (!(t_grid[i] < t_grid[i + 1]))
            throw InputError("measure_family: tabulated t grid must be strictly increasing");
    if (t_grid.front() > a || t_grid.back() < b)
        throw InputError("measure_family: tabulated grid must cover [a, b]");
    MeasureFamily f;
    f.r_ = r;
    f.a_ = a;
    f.b_ = b;
    f.kind_ = "tabulated";
    f.analytic_derivatives_ = false;
    f.splines_.resize(r + 1);
    for (int k = 2; k <= r; ++k) {
        const auto& row = tail_rows[k - 2];
        if (row.size() != t_grid.size())
            throw InputError("measure_family: tail row for k=" + std::to_string(k) +
                             " has wrong length");
        Spline s;
        s.x = t_grid;
        s.y = row;
        s.slope = monotone_tangents(s.x, s.y);
        f.splines_[k] = std::move(s);
    }
    return f;
}

MeasureFamily MeasureFamily::with_finite_difference_derivatives(double h) const {
    if (!(h > 0.0)) throw InputError("measure_family: finite-difference step must be positive");
    MeasureFamily f = *this;
    f.use_fd_ = true;
    f.fd_step_ = h;
    return f;
}

void MeasureFamily::require_inside(double t) const {
    if (!(t > a_ && t < b_))
        throw DomainError("measure_family: t = " + fmt(t) + " outside the open interval (" +
                          fmt(a_) + ", " + fmt(b_) + ")");
}

double MeasureFamily::tail_unchecked(int k, double t) const {
    if (k <= 1) return 1.0;
    if (k > r_) return 0.0;
    if (kind_ == "embedded") return t;
    if (kind_ == "power") return std::pow(t, alpha_[k]);
    return splines_[k].eval(t);
}

double MeasureFamily::tail(int k, double t) const {
    if (k < 1 || k > r_ + 1)
        throw InputError("measure_family: tail level k outside [1, r+1]");
    require_inside(t);
    return tail_unchecked(k, t);
}

double MeasureFamily::fd_derivative(int k, double t, double h) const {
    const double h_eff = std::min({h, 0.5 * (t - a_), 0.5 * (b_ - t)});
    return (tail_unchecked(k, t + h_eff) - tail_unchecked(k, t - h_eff)) / (2.0 * h_eff);
}

double MeasureFamily::tail_derivative(int k, double t) const {
    if (k < 1 || k > r_ + 1)
        throw InputError("measure_family: tail level k outside [1, r+1]");
    require_inside(t);
    if (k == 1 || k == r_ + 1) return 0.0;
    if (use_fd_ || !analytic_derivatives_) return fd_derivative(k, t, fd_step_);
    if (kind_ == "embedded") return 1.0;
    // power
    return alpha_[k] * std::pow(t, alpha_[k] - 1.0);
}

PmfSnapshot MeasureFamily::pmf_at(double t) const {
    require_inside(t);
    PmfSnapshot snap;
    snap.t = t;
    snap.p.assign(r_ + 1, 0.0);
    snap.tail.assign(r_ + 2, 0.0);
    snap.tail_deriv.assign(r_ + 2, 0.0);
    snap.tail[1] = 1.0;
    for (int k = 2; k <= r_; ++k) snap.tail[k] = tail_unchecked(k, t);
    snap.tail[r_ + 1] = 0.0;
    for (int k = 1; k <= r_; ++k) {
        snap.p[k] = snap.tail[k] - snap.tail[k + 1];
        if (snap.p[k] < -1e-10)
            throw ValidationError("measure_family: negative probability p_" + std::to_string(k) +
                                  " = " + fmt(snap.p[k]) + " at t = " + fmt(t) +
                                  " (tails out of order)");
        if (snap.p[k] < 0.0) snap.p[k] = 0.0;
    }
    for (int k = 2; k <= r_; ++k) snap.tail_deriv[k] = tail_derivative(k, t);
    return snap;
}

SStarResult MeasureFamily::s_star_over(double t1, double t2, int grid_points) const {
    if (!(t1 <= t2)) throw DomainError("measure_family: s_star_over needs t1 <= t2");
    if (!(t1 > a_ && t2 < b_))
        throw DomainError("measure_family: [t1, t2] = [" + fmt(t1) + ", " + fmt(t2) +
                          "] not inside (" + fmt(a_) + ", " + fmt(b_) + ")");
    if (grid_points < 2) throw InputError("measure_family: s_star_over needs grid_points >= 2");
    SStarResult out{std::numeric_limits<double>::infinity(), t1, 2};
    for (int i = 0; i < grid_points; ++i) {
        const double t =
            (grid_points == 1) ? t1 : t1 + (t2 - t1) * static_cast<double>(i) / (grid_points - 1);
        for (int k = 2; k <= r_; ++k) {
            const double s = tail_derivative(k, t);
            if (s < out.value) out = {s, t, k};
        }
    }
    return out;
}

FamilyValidation MeasureFamily::validate(int grid_points) const {
    if (grid_points < 2) throw InputError("measure_family: validate needs grid_points >= 2");
    FamilyValidation report;
    const double span = b_ - a_;
    const double eps = span * 1e-6;
    const double tol_b = 1e-3;

    // pmf validity on an interior grid
    bool pmf_ok = true;
    std::string pmf_detail = "1 >= G_2 >= ... >= G_r >= 0 and sum p = 1 on grid";
    bool strict_ok = true;
    std::string strict_detail = "each tail strictly increasing in t on grid";
    std::vector<std::vector<double>> tails_on_grid(r_ + 1);
    std::vector<double> grid(grid_points);
    for (int i = 0; i < grid_points; ++i)
        grid[i] = a_ + eps + (span - 2 * eps) * static_cast<double>(i) / (grid_points - 1);
    for (int i = 0; i < grid_points && pmf_ok; ++i) {
        const double t = grid[i];
        double prev = 1.0;
        double sum = 0.0;
        for (int k = 2; k <= r_ + 1; ++k) {
            const double g = tail_unchecked(k, t);
            if (g > prev + 1e-12 || g < -1e-12) {
                pmf_ok = false;
                pmf_detail = "tail ordering fails at k=" + std::to_string(k) +
                             ", t=" + fmt(t) + " (G_k=" + fmt(g) + " > G_{k-1}=" + fmt(prev) + ")";
                break;
            }
            sum += prev - g;
            prev = g;
        }
        if (pmf_ok && std::abs(sum - 1.0) > 1e-12) {
            pmf_ok = false;
            pmf_detail = "probabilities sum to " + fmt(sum) + " at t=" + fmt(t);
        }
    }
    report.checks.push_back({"pmf_valid", pmf_ok, pmf_detail});

    for (int k = 2; k <= r_ && strict_ok; ++k) {
        double prev = tail_unchecked(k, grid[0]);
        for (int i = 1; i < grid_points; ++i) {
            const double g = tail_unchecked(k, grid[i]);
            if (!(g > prev)) {
                strict_ok = false;
                strict_detail = "G_" + std::to_string(k) + " not strictly increasing near t=" +
                                fmt(grid[i]);
                break;
            }
            prev = g;
        }
    }
    report.checks.push_back({"tails_strictly_increasing", strict_ok, strict_detail});

    const double g2_low = tail_unchecked(2, a_ + eps);
    report.checks.push_back({"boundary_low", g2_low < tol_b,
                             "G_2(a+eps) = " + fmt(g2_low) + " (needs < " + fmt(tol_b) + ")"});
    const double gr_high = tail_unchecked(r_, b_ - eps);
    report.checks.push_back({"boundary_high", gr_high > 1.0 - tol_b,
                             "G_r(b-eps) = " + fmt(gr_high) + " (needs > " + fmt(1.0 - tol_b) +
                                 ")"});

    // S_{t,k} >= 0 on the grid; infimum near zero is flagged, not failed.
    bool s_nonneg = true;
    double s_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i)
        for (int k = 2; k <= r_; ++k) {
            const double s = tail_derivative(k, grid[i]);
            s_min = std::min(s_min, s);
            if (s < -1e-9) s_nonneg = false;
        }
    report.checks.push_back(
        {"tail_derivatives_nonnegative", s_nonneg, "grid minimum S = " + fmt(s_min)});
    report.s_star_zero_flag = s_min < 1e-9;

    // Richardson consistency of the finite-difference path.
    if (use_fd_ || !analytic_derivatives_) {
        bool fd_ok = true;
        std::string fd_detail = "central differences consistent across h and h/2";
        for (int i = 0; i < grid_points; i += std::max(1, grid_points / 8)) {
            for (int k = 2; k <= r_; ++k) {
                const double d1 = fd_derivative(k, grid[i], fd_step_);
                const double d2 = fd_derivative(k, grid[i], fd_step_ / 2.0);
                const double scale = std::max({std::abs(d1), std::abs(d2), 1.0});
                if (std::abs(d1 - d2) > 1e-3 * scale) {
                    fd_ok = false;
                    fd_detail = "derivative of G_" + std::to_string(k) + " unstable at t=" +
                                fmt(grid[i]);
                }
            }
        }
        report.checks.push_back({"fd_richardson", fd_ok, fd_detail});
    }
    return report;
}

}  // namespace tlab
