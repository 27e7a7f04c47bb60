#ifndef DILOG_POLYLOG_HPP
#define DILOG_POLYLOG_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dilog/special.hpp"

namespace dilog {

// Exact coefficient sequence of the Eulerian polynomial A_m.  Degree m-1
// for m >= 1; A_0 = A_1 = 1.  Coefficients are positive and palindromic.
struct EulerianPolynomial {
    int m = 0;
    std::vector<mpz_class> coeffs;
};

enum class ZeroHuntMethod { eulerian, lipschitz_newton, jonquiere_newton };

// Zeros of Li_s located by seeded Newton hunts, with the seed index of
// each converged zero and the indices whose hunts were abandoned.
struct PolylogZeroSet {
    cplx s;
    std::vector<cplx> zeros;
    ZeroHuntMethod method = ZeroHuntMethod::lipschitz_newton;
    std::vector<int> approx_indices;
    std::vector<int> failed_indices;
};

// Exact Eulerian coefficients via A_{m+1} = (1+mz)A_m + z(1-z)A_m'.
EulerianPolynomial eulerian(int m);

// The m-1 distinct negative zeros of A_m, sorted ascending
// (lambda_{m-1} < ... < lambda_1 < 0).  Bisection on the exact-coefficient
// polynomial; magnitudes beyond 1 are resolved through the palindrome
// identity z^{m-1} A_m(1/z) = A_m(z).
std::vector<double> eulerian_zeros(int m);

// -exp(-pi cot(pi (2j+1) / (2(m+1)))), the large-m location of lambda_j.
double sobolev_approx(int m, int j);

// Error constant K of the asymptotic zero formula; the formula applies
// once K <= 1/3.
double sobolev_K(int m, double M);

// Li_{-m}(z) = z A_m(z) / (1-z)^{m+1}.
cplx li_neg_m(int m, cplx z);

// F(w) = sum_{|k| <= kmax} ((2k-1)i - w)^{s-1}, the Lipschitz / Poisson
// summation series whose zeros track those of Li_s(-e^{pi w}) for
// Re(s) < 0.  kmax <= 0 picks the smallest truncation whose tail bound is
// below 1e-12 of the leading term.
EvalResult li_s_lipschitz(cplx s, cplx w, int kmax = 0);

// Li_s(z) by adaptive quadrature of z/Gamma(s) int_0^inf t^{s-1}/(e^t-z) dt,
// for Re(s) > 0 and z off [1, inf).
EvalResult li_s_jonquiere(cplx s, cplx z);

// -exp(-pi cot(pi (2j+1) / (2(1-s)))).
cplx spiral_zero_approx(cplx s, int j);

// Newton hunts seeded at spiral_zero_approx(s, j), j = 0..jmax.  Uses the
// Lipschitz series in the w-plane for Re(s) < 0 and the Jonquiere integral
// in the z-plane for Re(s) > 1.  Seeds that round to the origin are
// assigned the exact zero of Li_s there.
PolylogZeroSet find_polylog_zeros(cplx s, int jmax);

// Gamma on the complex plane (Lanczos with reflection); supporting
// machinery for the Jonquiere representation.
cplx complex_gamma(cplx s);

}  // namespace dilog

#endif
