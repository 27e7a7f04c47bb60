#ifndef DILOG_ZERO_FINDER_HPP
#define DILOG_ZERO_FINDER_HPP

#include <stdexcept>
#include <vector>

#include "dilog/branch.hpp"

namespace dilog {

// Raised when an operation is asked about a branch with no zero (outside
// the classification B=0, A>=0 or -|B|/2 < A <= |B|/2) or outside an
// operation's supported parameter range.
struct unsupported_branch : std::domain_error {
    using std::domain_error::domain_error;
};

// Region r1 <= r <= r2, theta1 <= theta <= theta2 known to contain the
// unique zero of its branch.
struct PolarRectangle {
    double r1 = 0.0;
    double r2 = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;

    bool contains(cplx z, double slack = 1e-9) const;
};

// A computed zero with a rigorous error radius and the Newton trace that
// produced it.  error_radius combines the scheme's a-priori envelope with
// the one-step contraction bound, floored at binary64 resolution.
struct ZeroCertificate {
    BranchIndex branch;
    cplx zero{};
    double error_radius = 0.0;
    std::vector<cplx> iterations;        // c0, c1, ...
    double contraction_constant = 0.0;   // K with |rho - c*| <= K |rho - c|^2
    bool tol_clamped = false;            // requested tol was below the 1e-14 floor
    bool in_region = true;               // every iterate stayed in its bounding region
};

// Zero-existence classification: true iff (B = 0 and A >= 0) or
// -|B|/2 < A <= |B|/2.
bool has_zero(BranchIndex b);

// Certified starting point for Newton's method on phi_{A,B}.
cplx initial_guess(BranchIndex b);

// One Newton step c - phi(c)/phi'(c).
cplx newton_step(BranchIndex b, cplx c);

// Runs the branch's Newton scheme until the contraction bounds certify
// error_radius <= tol (tol is clamped below 1e-14).
ZeroCertificate find_zero(BranchIndex b, double tol);

// First-order zero location e^{2 pi i A/B} (1 + (-Cl2(2 pi A/B)
// + i pi^2 B2(|A|/B)) / (2 pi B)), accurate to O((1+log B)/B^2).
cplx approx_zero_first_order(BranchIndex b);

// Leading-order location -exp(pi sqrt(8A - 1/3)) of the real zero on the
// B = 0 branches, within 1/sqrt(A) of the true zero.
cplx approx_zero_b0(int A);

PolarRectangle polar_rectangle(BranchIndex b);

}  // namespace dilog

#endif
