#ifndef DILOG_VERIFY_HPP
#define DILOG_VERIFY_HPP

#include <stdexcept>

#include "dilog/zero_finder.hpp"

namespace dilog {

// Raised when adaptive contour sampling cannot bound the phase steps, or a
// grid search cannot separate an interior minimum from the boundary.  The
// caller gets a definite "don't know", never a silently wrong count.
struct inconclusive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One point of an implicit curve together with the re-evaluated defining
// residual at that point.
struct CurveSample {
    double param;     // theta for g, r for h
    double value;     // r for g, theta for h
    double residual;  // I_theta(r) resp. R_r(theta) at the sample
};

// Result of an argument-principle zero count.
struct WindingReport {
    BranchIndex branch;
    int count = 0;
    double min_phase_step = 0.0;
    double max_phase_step = 0.0;  // adaptive sampling keeps this < pi/2
    long contour_points = 0;
};

// Im phi_{A,B}(r e^{i theta}) as a function of r (the A term drops out).
double curve_I(int B, double theta, double r);
// Re phi_{A,B}(r e^{i theta}) as a function of theta.
double curve_R(BranchIndex b, double r, double theta);

// The unique r = g_B(theta) with I_theta(r) = 0, for 0 < |theta| < pi.
CurveSample curve_g(int B, double theta);

// The unique theta = h_{A,B}(r) with R_r(theta) = 0, for r in (0.8, 2).
CurveSample curve_h(BranchIndex b, double r);

// Alternating projection between the two curves; the independent
// counterpart of find_zero.  tol bounds both defining residuals.
cplx curve_intersection_zero(BranchIndex b, double tol);

// Total winding of phi_{A,B} along a closed contour that encircles the cut
// plane: a circle of radius T about 1, circles of radius eps about the
// branch points, and horizontal segments offset +-delta from the cuts.
WindingReport winding_count(BranchIndex b, double T, double eps, double delta);

// Contour radius large enough to enclose the branch's zero comfortably.
double default_contour_radius(BranchIndex b);

// Expected count per the zero classification.
int expected_zero_count(BranchIndex b);

// Polar-grid scan for the minimum of |phi| followed by local parabolic
// refinement.  Shares no Newton machinery with find_zero.  A degenerate box
// (r_lo == r_hi or theta_lo == theta_hi) is scanned as one-dimensional.
cplx brute_force_zero(BranchIndex b, double r_lo, double r_hi,
                      double theta_lo, double theta_hi, int n);

}  // namespace dilog

#endif
