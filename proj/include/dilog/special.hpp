#ifndef DILOG_SPECIAL_HPP
#define DILOG_SPECIAL_HPP

#include <complex>

namespace dilog {

using cplx = std::complex<double>;

inline constexpr double kPi     = 3.14159265358979323846;
inline constexpr double kTwoPi  = 6.28318530717958647692;
inline constexpr double kPiSq   = 9.86960440108935861883;
inline constexpr double kZeta2  = kPiSq / 6.0;

// A computed value together with an absolute error bound.
struct EvalResult {
    cplx   value;
    double abs_err_estimate;  // >= 0
};

// Principal logarithm with arg in (-pi, pi].  Points on the negative real
// axis (either signed zero in the imaginary part) take the upper-edge value
// log|x| + i*pi.  Throws std::domain_error for z = 0.
cplx log_principal(cplx z);

// Principal-branch dilogarithm on the whole plane.  Real arguments x >= 1
// sit on the branch cut and evaluate to the lower-edge limit, whose
// imaginary part is -pi*log(x).
EvalResult li2_principal(cplx z);

// Value-only variant of li2_principal for hot paths.
cplx li2(cplx z);

// Li2 on the unit circle by the closed forms:
//   Li2(e^{2 pi i x}) = pi^2 B2(x - floor(x)) + i Cl2(2 pi x).
cplx li2_unit_circle(double x);

// Clausen's integral Cl2, odd and 2*pi-periodic, absolute error <= 1e-14.
double clausen(double theta);

// Second Bernoulli polynomial x^2 - x + 1/6.
double bernoulli_b2(double x);

// max of Cl2, attained at theta = pi/3.
double clausen_max();

}  // namespace dilog

#endif
