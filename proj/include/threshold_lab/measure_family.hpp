#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tlab {

/// The measure mu_t at one parameter value.  Everything is 1-based in the
/// level index k: p[k] for k in [1, r], tail[k] = mu_t({k,...,r}) for
/// k in [1, r+1] with tail[1] = 1 and tail[r+1] = 0, and tail_deriv[k] =
/// S_{t,k} = d/dt tail[k] with the conventions S_{t,1} = S_{t,r+1} = 0.
struct PmfSnapshot {
    double t = 0.0;
    std::vector<double> p;
    std::vector<double> tail;
    std::vector<double> tail_deriv;

    int r() const { return static_cast<int>(p.size()) - 1; }
    double mu_prime(int k) const { return tail_deriv[k] - tail_deriv[k + 1]; }
    /// inf_{k=2..r} S_{t,k} at this t.
    double s_star_point() const;

    /// Build a snapshot from bare probabilities p_1..p_r (tails derived,
    /// derivatives zero).  Used for pushforward models and tests.
    static PmfSnapshot from_probabilities(const std::vector<double>& probs, double t = 0.0);
};

struct SStarResult {
    double value;
    double arg_t;
    int arg_k;
};

struct FamilyValidation {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    /// Grid infimum of S_{t,k} is zero within tolerance.  Flagged, not failed.
    bool s_star_zero_flag = false;

    bool all_pass() const;
};

/// A parametrized family t -> mu_t on {1,...,r} over an open interval (a, b):
/// tails strictly increase in t, mu_t({1}) -> 1 at a, mu_t({r}) -> 1 at b.
///
/// Built-ins:
///   embedded_bernoulli: tail_k(t) = t for every k >= 2 on (0, 1); mass sits
///     on levels 1 and r only, so {1,...,r} behaves exactly like {0,1}.
///   power: tail_k(t) = t^alpha_k on (0, 1) with 1 <= alpha_2 <= ... <= alpha_r.
///   tabulated: user-supplied tail samples on a t-grid, monotone cubic
///     interpolation, derivatives by central finite differences.
class MeasureFamily {
public:
    static MeasureFamily embedded_bernoulli(int r);
    static MeasureFamily power(int r, std::vector<double> alpha);
    static MeasureFamily tabulated(int r, double a, double b, std::vector<double> t_grid,
                                   std::vector<std::vector<double>> tail_rows);

    int r() const { return r_; }
    double a() const { return a_; }
    double b() const { return b_; }
    const std::string& kind() const { return kind_; }
    bool has_analytic_derivatives() const { return analytic_derivatives_ && !use_fd_; }

    /// G_k(t); k in [1, r+1].  Throws DomainError outside (a, b).
    double tail(int k, double t) const;
    /// S_{t,k}; analytic when available, else central difference (step fd_step).
    double tail_derivative(int k, double t) const;

    PmfSnapshot pmf_at(double t) const;

    /// min over a uniform grid of [t1, t2] and over k in [2, r] of S_{t,k}.
    SStarResult s_star_over(double t1, double t2, int grid_points) const;

    FamilyValidation validate(int grid_points = 101) const;

    /// Copy that ignores analytic derivatives and uses central differences.
    MeasureFamily with_finite_difference_derivatives(double h = 1e-4) const;

    double fd_step() const { return fd_step_; }

private:
    MeasureFamily() = default;

    double tail_unchecked(int k, double t) const;
    double fd_derivative(int k, double t, double h) const;
    void require_inside(double t) const;

    int r_ = 2;
    double a_ = 0.0;
    double b_ = 1.0;
    std::string kind_;
    bool analytic_derivatives_ = true;
    bool use_fd_ = false;
    double fd_step_ = 1e-4;

    // power
    std::vector<double> alpha_;  // alpha_[k] for k in [2, r]; size r+1

    // tabulated: one interpolant per level k in [2, r]
    struct Spline {
        std::vector<double> x, y, slope;
        double eval(double t) const;
    };
    std::vector<Spline> splines_;  // index k, size r+1
};

}  // namespace tlab
