#include "dilog/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <vector>

namespace dilog {

namespace {

cplx polar(double r, double theta) { return std::polar(r, theta); }

// Bisection for a monotone function with a sign change on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double flo) {
    for (int i = 0; i < 200 && hi - lo > 4.0 * DBL_EPSILON * std::fabs(lo); ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// ---- winding-number machinery ----------------------------------------

using Curve = std::function<cplx(double)>;  // t in [0,1]

struct PhaseWalk {
    double total = 0.0;
    double min_step = kPi;
    double max_step = 0.0;
    long points = 0;
};

double wrap_pi(double d) {
    while (d > kPi) d -= kTwoPi;
    while (d < -kPi) d += kTwoPi;
    return d;
}

// Accumulates arg(phi) increments along one parametrized piece, bisecting
// the parameter until every step is below pi/2.
void walk_piece(BranchIndex b, const Curve& curve, PhaseWalk& w) {
    auto phase = [&](double t) { return std::arg(phi(b, curve(t))); };
    struct Seg {
        double t0, t1, a0, a1;
    };
    constexpr int kInit = 32;
    std::vector<Seg> stack;
    stack.reserve(256);
    double prev_t = 0.0, prev_a = phase(0.0);
    ++w.points;
    for (int i = 1; i <= kInit; ++i) {
        double t = double(i) / kInit;
        double a = phase(t);
        ++w.points;
        stack.push_back({prev_t, t, prev_a, a});
        prev_t = t;
        prev_a = a;
    }
    // LIFO processing keeps the stack small; the sum is order-independent.
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        double d = wrap_pi(s.a1 - s.a0);
        if (std::fabs(d) < kPi / 2.0) {
            w.total += d;
            w.min_step = std::min(w.min_step, std::fabs(d));
            w.max_step = std::max(w.max_step, std::fabs(d));
            continue;
        }
        if (s.t1 - s.t0 < 1e-13)
            throw inconclusive_error(
                "winding_count: phase step >= pi/2 at refinement limit");
        double tm = 0.5 * (s.t0 + s.t1);
        double am = phase(tm);
        ++w.points;
        stack.push_back({s.t0, tm, s.a0, am});
        stack.push_back({tm, s.t1, am, s.a1});
    }
}

}  // namespace

double curve_I(int B, double theta, double r) {
    return li2(polar(r, theta)).imag() + kTwoPi * B * std::log(r);
}

double curve_R(BranchIndex b, double r, double theta) {
    return li2(polar(r, theta)).real() + 4.0 * kPiSq * b.A - kTwoPi * b.B * theta;
}

CurveSample curve_g(int B, double theta) {
    if (B < 1) throw unsupported_branch("curve_g: requires B >= 1");
    if (theta == 0.0 || std::fabs(theta) >= kPi)
        throw std::domain_error("curve_g: requires 0 < |theta| < pi");
    double kappa = clausen_max();
    double lo = std::exp(-kappa / (kTwoPi * B));
    double hi = std::exp(kappa / (kPi * (2.0 * B - 1.0)));
    auto f = [&](double r) { return curve_I(B, theta, r); };
    // I is strictly increasing in r; extend the bracket if the bounds of
    // the branch analysis are ever exceeded.
    double flo = f(lo);
    for (int i = 0; flo > 0.0 && i < 60; ++i) {
        lo *= 0.5;
        flo = f(lo);
    }
    double fhi = f(hi);
    for (int i = 0; fhi < 0.0 && i < 60; ++i) {
        hi *= 2.0;
        fhi = f(hi);
    }
    double r = bisect(f, lo, hi, flo);
    return {theta, r, f(r)};
}

CurveSample curve_h(BranchIndex b, double r) {
    if (b.B < 1 || 2 * b.A <= -b.B || 2 * b.A > b.B)
        throw unsupported_branch("curve_h: requires B >= 1 and -B/2 < A <= B/2");
    if (r <= 0.8 || r >= 2.0)
        throw std::domain_error("curve_h: requires r in (0.8, 2)");
    auto f = [&](double th) { return curve_R(b, r, th); };
    // R_r is strictly decreasing in theta; a solution exists iff the signs
    // at the endpoints differ.
    double lo = -kPi, hi = kPi;
    double flo = f(lo);
    if (flo <= 0.0 || f(hi) >= 0.0)
        throw std::domain_error("curve_h: no solution on this branch");
    double th = bisect(f, lo, hi, flo);
    return {r, th, f(th)};
}

cplx curve_intersection_zero(BranchIndex b, double tol) {
    PolarRectangle rect = polar_rectangle(b);
    double theta = 0.5 * (rect.theta1 + rect.theta2);
    double r = 1.0;
    for (int sweep = 0; sweep < 200; ++sweep) {
        CurveSample g = curve_g(b.B, theta);
        r = g.value;
        CurveSample h = curve_h(b, r);
        theta = h.value;
        if (std::fabs(curve_I(b.B, theta, r)) < tol &&
            std::fabs(curve_R(b, r, theta)) < tol)
            return polar(r, theta);
    }
    throw inconclusive_error("curve_intersection_zero: no convergence in 200 sweeps");
}

double default_contour_radius(BranchIndex b) {
    double scale = 0.0;
    if (has_zero(b)) {
        if (b.B == 0 && b.A >= 1)
            scale = std::exp(kPi * std::sqrt(8.0 * b.A - 1.0 / 3.0));
        else if (b.B != 0)
            scale = 1.0;
    }
    return 10.0 * std::max(2.0, scale + 1.0);
}

int expected_zero_count(BranchIndex b) { return has_zero(b) ? 1 : 0; }

WindingReport winding_count(BranchIndex b, double T, double eps, double delta) {
    if (b.B < 0) {
        // conjugation pairs the zeros of (A,B) and (A,-B)
        WindingReport w = winding_count({b.A, -b.B}, T, eps, delta);
        w.branch = b;
        return w;
    }
    if (eps > 1e-3 || delta > 1e-3 || eps <= 0.0 || delta <= 0.0 || delta >= eps)
        throw std::invalid_argument("winding_count: need 0 < delta < eps <= 1e-3");
    if (T < 10.0)
        throw std::invalid_argument("winding_count: contour radius too small");
    if (has_zero(b)) {
        double rho = b.B == 0 && b.A >= 1
                         ? std::exp(kPi * std::sqrt(8.0 * b.A - 1.0 / 3.0)) + 1.0
                         : 2.5;
        if (T < 2.0 * rho)
            throw std::invalid_argument("winding_count: contour does not enclose the zero region");
    }

    const double a1 = std::asin(delta / T);    // big-circle latitude of y = +-delta
    const double ae = std::asin(delta / eps);  // small-circle latitude
    const double xT = std::sqrt(T * T - delta * delta);
    const double xe = std::sqrt(eps * eps - delta * delta);

    std::vector<Curve> pieces;
    if (b.B != 0) {
        // Both cuts are present: two big-circle arcs about 1, an excursion
        // along (-inf,0] with a small circle about 0, and the keyhole
        // around [1,inf) with a small circle about 1.
        pieces.push_back([=](double t) {
            return 1.0 + T * std::polar(1.0, a1 + t * (kPi - 2.0 * a1));
        });
        pieces.push_back([=](double t) {
            return cplx((1.0 - xT) + t * (-xe - (1.0 - xT)), delta);
        });
        pieces.push_back([=](double t) {
            return eps * std::polar(1.0, (kPi - ae) - t * (kTwoPi - 2.0 * ae));
        });
        pieces.push_back([=](double t) {
            return cplx(-xe + t * ((1.0 - xT) + xe), -delta);
        });
        pieces.push_back([=](double t) {
            return 1.0 + T * std::polar(1.0, -(kPi - a1) + t * (kPi - 2.0 * a1));
        });
    } else {
        pieces.push_back([=](double t) {
            return 1.0 + T * std::polar(1.0, a1 + t * (kTwoPi - 2.0 * a1));
        });
    }
    pieces.push_back([=](double t) {
        return cplx(1.0 + xT + t * (xe - xT), -delta);
    });
    pieces.push_back([=](double t) {
        return 1.0 + eps * std::polar(1.0, -ae - t * (kTwoPi - 2.0 * ae));
    });
    pieces.push_back([=](double t) {
        return cplx(1.0 + xe + t * (xT - xe), delta);
    });

    PhaseWalk walk;
    for (const Curve& c : pieces) walk_piece(b, c, walk);

    WindingReport report;
    report.branch = b;
    double turns = walk.total / kTwoPi;
    report.count = int(std::lround(turns));
    if (std::fabs(turns - report.count) > 0.25)
        throw inconclusive_error("winding_count: non-integer winding total");
    if (report.count < 0)
        throw inconclusive_error("winding_count: negative count");
    report.min_phase_step = walk.min_step;
    report.max_phase_step = walk.max_step;
    report.contour_points = walk.points;
    return report;
}

cplx brute_force_zero(BranchIndex b, double r_lo, double r_hi, double theta_lo,
                      double theta_hi, int n) {
    if (n < 16) throw std::invalid_argument("brute_force_zero: n >= 16");
    if (!(0.0 < r_lo && r_lo <= r_hi) || !(theta_lo <= theta_hi))
        throw std::invalid_argument("brute_force_zero: invalid polar box");
    const bool deg_r = r_lo == r_hi;
    const bool deg_t = theta_lo == theta_hi;

    auto value = [&](double r, double th) { return std::abs(phi(b, polar(r, th))); };

    int nr = deg_r ? 1 : n;
    int nt = deg_t ? 1 : n;
    double best = HUGE_VAL;
    int bi = 0, bj = 0;
    for (int i = 0; i < nr; ++i) {
        double r = deg_r ? r_lo : r_lo + (r_hi - r_lo) * i / (nr - 1);
        for (int j = 0; j < nt; ++j) {
            double th = deg_t ? theta_lo : theta_lo + (theta_hi - theta_lo) * j / (nt - 1);
            double v = value(r, th);
            if (v < best) {
                best = v;
                bi = i;
                bj = j;
            }
        }
    }
    if ((!deg_r && (bi == 0 || bi == nr - 1)) ||
        (!deg_t && (bj == 0 || bj == nt - 1)))
        throw inconclusive_error("brute_force_zero: minimum on the box boundary");

    double r = r_lo + (deg_r ? 0.0 : (r_hi - r_lo) * bi / (nr - 1));
    double th = theta_lo + (deg_t ? 0.0 : (theta_hi - theta_lo) * bj / (nt - 1));
    double hr = deg_r ? 0.0 : (r_hi - r_lo) / (nr - 1);
    double ht = deg_t ? 0.0 : (theta_hi - theta_lo) / (nt - 1);

    // Parabolic descent on |phi|^2 with shrinking stencils.
    auto sq = [&](double rr, double tt) {
        double v = value(rr, tt);
        return v * v;
    };
    for (int it = 0; it < 60; ++it) {
        if (!deg_r) {
            double fm = sq(r - hr, th), f0 = sq(r, th), fp = sq(r + hr, th);
            double denom = fm - 2.0 * f0 + fp;
            double p = denom > 0.0 ? 0.5 * (fm - fp) / denom : (fp < fm ? 1.0 : -1.0);
            r += hr * std::clamp(p, -1.0, 1.0);
            r = std::clamp(r, r_lo, r_hi);
        }
        if (!deg_t) {
            double fm = sq(r, th - ht), f0 = sq(r, th), fp = sq(r, th + ht);
            double denom = fm - 2.0 * f0 + fp;
            double p = denom > 0.0 ? 0.5 * (fm - fp) / denom : (fp < fm ? 1.0 : -1.0);
            th += ht * std::clamp(p, -1.0, 1.0);
            th = std::clamp(th, theta_lo, theta_hi);
        }
        hr *= 0.6;
        ht *= 0.6;
        if (hr < 1e-14 * std::max(1.0, std::fabs(r)) && ht < 1e-14) break;
    }
    return polar(r, th);
}

}  // namespace dilog
