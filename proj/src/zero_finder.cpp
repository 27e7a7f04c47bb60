#include "dilog/zero_finder.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace dilog {

namespace {

constexpr int kMaxIterations = 64;

double fp_floor(cplx zero) { return 4.0 * DBL_EPSILON * (1.0 + std::abs(zero)); }

void require_zero(BranchIndex b) {
    if (!has_zero(b))
        throw unsupported_branch("no zero: requires B=0, A>=0 or -|B|/2 < A <= |B|/2");
}

// Smallest n with the a-priori envelope below tol, plus the envelope value
// at selected n.  Envelopes are evaluated in log space; they underflow to 0
// for large n, which is the correct limit.
struct Envelope {
    double log_amp;   // log of the n = 0 prefactor
    double log_base;  // bound = amp * exp(-2^n * log_base)

    double at(int n) const {
        return std::exp(log_amp - std::ldexp(1.0, n) * log_base);
    }
    int first_below(double tol) const {
        for (int n = 0; n < kMaxIterations; ++n)
            if (at(n) <= tol) return n;
        return kMaxIterations;
    }
};

Envelope envelope_b0(int A) {
    // |rho - c_n| <= 2 pi sqrt(A) (2 pi A)^{-2^n}
    return {std::log(kTwoPi * std::sqrt(double(A))), std::log(kTwoPi * A)};
}

Envelope envelope_general() {
    // |rho - c_n| < 1.25 (0.95)^{2^n}
    return {std::log(1.25), -std::log(0.95)};
}

ZeroCertificate conjugate(ZeroCertificate c, BranchIndex b) {
    c.branch = b;
    c.zero = std::conj(c.zero);
    for (auto& it : c.iterations) it = std::conj(it);
    return c;
}

}  // namespace

bool PolarRectangle::contains(cplx z, double slack) const {
    double r = std::abs(z);
    double th = std::atan2(z.imag(), z.real());
    // the A = B/2 rectangles reach theta2 = pi; atan2 wraps the lower edge
    if (th < theta1 - 1.0 && th + kTwoPi <= theta2 + slack) th += kTwoPi;
    return r >= r1 - slack && r <= r2 + slack && th >= theta1 - slack &&
           th <= theta2 + slack;
}

bool has_zero(BranchIndex b) {
    if (b.B == 0) return b.A >= 0;
    int absB = std::abs(b.B);
    return 2 * b.A > -absB && 2 * b.A <= absB;
}

cplx initial_guess(BranchIndex b) {
    require_zero(b);
    if (b.B == 0) {
        if (b.A == 0) return 0.0;
        return approx_zero_b0(b.A);
    }
    if (b.B < 0) return std::conj(initial_guess({b.A, -b.B}));
    if (b.A != 0) return std::exp(cplx(0.0, kTwoPi * b.A / b.B));
    return std::exp(cplx(0.0, kPi / (12.0 * b.B)));
}

cplx newton_step(BranchIndex b, cplx c) {
    return c - phi(b, c) / phi_derivative(b, c);
}

ZeroCertificate find_zero(BranchIndex b, double tol) {
    require_zero(b);

    ZeroCertificate cert;
    cert.branch = b;
    cert.tol_clamped = tol < 1e-14;
    tol = std::max(tol, 1e-14);

    if (b.B == 0 && b.A == 0) {
        // the series z + z^2/4 + ... pins the principal-branch zero at 0
        cert.zero = 0.0;
        cert.error_radius = 0.0;
        cert.iterations = {0.0};
        return cert;
    }
    if (b.B < 0) return conjugate(find_zero({b.A, -b.B}, tol), b);

    const bool real_line = b.B == 0;
    const Envelope env = real_line ? envelope_b0(b.A) : envelope_general();
    const double K = real_line ? 1.0 / (kTwoPi * std::sqrt(double(b.A)))
                               : b.B * (b.A != 0 ? 0.76 : 2.51);
    const int n_certified = env.first_below(tol);
    const int n_total = std::min(n_certified + 2, kMaxIterations);

    cplx c = initial_guess(b);
    cert.iterations.reserve(n_total + 1);
    cert.iterations.push_back(c);
    cert.in_region = true;

    PolarRectangle rect;
    double d_a = 0.0;
    if (real_line) {
        d_a = std::exp(kPi * std::sqrt(8.0 * b.A - 1.0 / 3.0));
    } else {
        rect = polar_rectangle(b);
    }

    for (int n = 0; n < n_total; ++n) {
        c = newton_step(b, c);
        if (real_line) c = cplx(c.real(), 0.0);  // iteration preserves reality
        cert.iterations.push_back(c);
        if (real_line) {
            double slack = 1e-9 * d_a;
            if (c.real() < -d_a - 1.0 / std::sqrt(double(b.A)) - slack ||
                c.real() > -d_a + 1.0 / std::sqrt(double(b.A)) + slack)
                cert.in_region = false;
        } else if (!rect.contains(c)) {
            cert.in_region = false;
        }
    }
    cert.zero = c;

    // a-posteriori chain from the certified envelope value
    double chain = env.at(std::min(n_certified, kMaxIterations - 1));
    for (int k = n_certified; k < n_total; ++k) chain = K * chain * chain;
    double bound = std::min(env.at(n_total), chain);

    // binary64 cannot locate the zero more tightly than the residual step
    double probe = std::abs(phi(b, c) / phi_derivative(b, c));
    cert.error_radius = std::max({bound, probe, fp_floor(c)});
    cert.contraction_constant = K;
    return cert;
}

cplx approx_zero_first_order(BranchIndex b) {
    if (b.B < 1 || 2 * b.A <= -b.B || 2 * b.A > b.B)
        throw unsupported_branch("approx_zero_first_order: requires B >= 1 and -B/2 < A <= B/2");
    double ratio = double(b.A) / b.B;
    cplx correction(-clausen(kTwoPi * ratio), kPiSq * bernoulli_b2(std::fabs(ratio)));
    return std::exp(cplx(0.0, kTwoPi * ratio)) *
           (1.0 + correction / (kTwoPi * b.B));
}

cplx approx_zero_b0(int A) {
    if (A < 1) throw unsupported_branch("approx_zero_b0: requires A >= 1");
    return -std::exp(kPi * std::sqrt(8.0 * A - 1.0 / 3.0));
}

PolarRectangle polar_rectangle(BranchIndex b) {
    if (b.B < 1 || 2 * b.A <= -b.B || 2 * b.A > b.B)
        throw unsupported_branch("polar_rectangle: requires B >= 1 and -B/2 < A <= B/2");
    double kappa = clausen_max();
    PolarRectangle r;
    if (b.A < 0) {
        r.r1 = 1.0;
        r.r2 = std::exp(kappa / (kPi * (2.0 * b.B - 1.0)));
    } else {
        r.r1 = std::exp(-kappa / (kTwoPi * b.B));
        r.r2 = 1.0;
    }
    r.theta1 = b.A != 0 ? kPi * (2.0 * b.A - 0.125) / b.B : kPi / (24.0 * b.B);
    r.theta2 = 2 * b.A != b.B ? kPi * (2.0 * b.A + 0.125) / b.B : kPi;
    return r;
}

}  // namespace dilog
