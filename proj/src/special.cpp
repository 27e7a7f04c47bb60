#include "dilog/special.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace dilog {

namespace {

// Coefficients B_n/(n+1)! of the expansion Li2(z) = sum_n c_n w^{n+1} in
// w = -log(1-z), convergent for |w| < 2*pi.  Odd n > 1 vanish.
struct LogExpCoeff {
    int    n;
    double c;
};
constexpr LogExpCoeff kLi2LogExp[] = {
    {0, 1.0},
    {1, -0.25},
    {2, 0.0277777777777777778},
    {4, -0.000277777777777777778},
    {6, 4.72411186696900983e-6},
    {8, -9.18577307466196355e-8},
    {10, 1.89788699889709991e-9},
    {12, -4.06476164514422553e-11},
    {14, 8.92169102045645256e-13},
    {16, -1.99392958607210757e-14},
    {18, 4.51898002961991819e-16},
    {20, -1.0356517612181247e-17},
    {22, 2.39521862102618675e-19},
    {24, -5.58178587432500934e-21},
    {26, 1.30915075541832129e-22},
    {28, -3.08741980242674029e-24},
    {30, 7.31597565270220342e-26},
    {32, -1.74084565723400074e-27},
    {34, 4.15763564461389972e-29},
    {36, -9.9621484882846221e-31},
    {38, 2.3940344248961653e-32},
    {40, -5.76834735536739008e-34},
    {42, 1.39317947964700798e-35},
    {44, -3.37212196548508947e-37},
    {46, 8.17820877756210262e-39},
    {48, -1.98701083115238593e-40},
    {50, 4.8357785180405509e-42},
    {52, -1.17869372487183843e-43},
    {54, 2.87709640811725715e-45},
    {56, -7.03205909815602801e-47},
    {58, 1.72086031450331463e-48},
    {60, -4.21607239056044549e-50},
    {62, 1.03404064051330396e-51},
    {64, -2.53866306259946532e-53},
    {66, 6.23855317692459089e-55},
    {68, -1.53443980691346504e-56},
    {70, 3.77729463557855023e-58},
    {72, -9.30586212480468659e-60},
    {74, 2.29434368222418732e-61},
};

// |B_{2n}| / (2n (2n+1)!) for the Clausen series
//   Cl2(t) = t - t log|t| + sum_n d_n t^{2n+1}   (|t| < 2 pi).
constexpr double kClausenCoeff[] = {
    0.0138888888888888889,
    0.0000694444444444444444,
    7.87351977828168304e-7,
    1.14822163433274544e-8,
    1.89788699889709991e-10,
    3.38730137095352127e-12,
    6.3726364431831804e-14,
    1.24620599129506723e-15,
    2.51054446089995455e-17,
    5.17825880609062351e-19,
    1.08873573683008488e-20,
    2.32574411430208722e-22,
    5.03519521314738956e-24,
    1.10264992943812153e-25,
    2.43865855090073447e-27,
    5.44014267885625232e-29,
    1.22283401312173521e-30,
    2.76726346896795058e-32,
    6.30009059183201395e-34,
    1.44208683884184752e-35,
    3.3170939991595428e-37,
    7.66391355792065789e-39,
    1.77787147338306579e-40,
    4.13960589823413734e-42,
    9.67155703608110179e-44,
    2.26671870167661237e-45,
    5.32795631132825397e-47,
    1.25572483895643357e-48,
    2.96700054224709419e-50,
    7.02678731760074249e-52,
    1.66780748469887735e-53,
    3.96666103531166456e-55,
};

// Direct power series sum z^n/n^2, for |z| <= 1/2.
cplx li2_series(cplx z) {
    cplx sum = 0.0;
    cplx term = 1.0;
    for (int n = 1; n <= 60; ++n) {
        term *= z;
        sum += term / static_cast<double>(n * n);
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) * n * n) break;
    }
    return sum;
}

// Expansion in w = -log(1-z) for the annulus where neither the direct
// series nor the functional equations reach a small argument.
cplx li2_log_expansion(cplx w) {
    cplx sum = 0.0;
    cplx p = 1.0;
    int next = 0;
    for (const auto& [n, c] : kLi2LogExp) {
        while (next <= n) {
            p *= w;
            ++next;
        }
        sum += c * p;
    }
    return sum;
}

// Normalizes signed zeros in the imaginary part so that the cut
// conventions see one well-defined edge.
cplx normalize_real_axis(cplx z) {
    if (z.imag() == 0.0) return {z.real(), 0.0};
    return z;
}

cplx li2_impl(cplx z) {
    z = normalize_real_axis(z);
    double az = std::abs(z);
    if (az == 0.0) return 0.0;
    if (az <= 0.5) return li2_series(z);
    if (az >= 2.0) {
        // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log^2(-z)/2
        cplx lz = log_principal(-z);
        return -li2_impl(1.0 / z) - kZeta2 - 0.5 * lz * lz;
    }
    cplx omz = normalize_real_axis(1.0 - z);
    double a1z = std::abs(omz);
    if (a1z <= 0.5 || a1z >= 2.0) {
        // reflection: Li2(z) = -Li2(1-z) + pi^2/6 - log(z) log(1-z)
        return -li2_impl(omz) + kZeta2 - log_principal(z) * log_principal(omz);
    }
    return li2_log_expansion(-log_principal(omz));
}

}  // namespace

cplx log_principal(cplx z) {
    if (z.real() == 0.0 && z.imag() == 0.0)
        throw std::domain_error("log_principal: argument is zero");
    if (z.imag() == 0.0) {
        double x = z.real();
        if (x < 0.0) return {std::log(-x), kPi};
        return {std::log(x), 0.0};
    }
    return std::log(z);
}

cplx li2(cplx z) { return li2_impl(z); }

EvalResult li2_principal(cplx z) {
    cplx v = li2_impl(z);
    return {v, 8.0 * DBL_EPSILON * (1.0 + std::abs(v))};
}

double clausen(double theta) {
    // Range reduction theta -> (-pi, pi] with a fused hi/lo split of 2*pi,
    // keeping cancellation under control for large arguments.
    constexpr double kTwoPiHi = 6.283185307179586232;
    constexpr double kTwoPiLo = 2.449293598294706414e-16;
    double k = std::nearbyint(theta / kTwoPi);
    double t = std::fma(-k, kTwoPiHi, theta);
    t = std::fma(-k, kTwoPiLo, t);
    if (t > kPi) t -= kTwoPi;
    if (t <= -kPi) t += kTwoPi;

    double a = std::fabs(t);
    if (a == 0.0) return 0.0;
    double a2 = a * a;
    double sum = 0.0;
    double p = a;  // a^{2n+1} running power
    for (double d : kClausenCoeff) {
        p *= a2;
        double term = d * p;
        sum += term;
        if (term < 1e-18) break;
    }
    double cl = a - a * std::log(a) + sum;
    return t < 0.0 ? -cl : cl;
}

cplx li2_unit_circle(double x) {
    double frac = x - std::floor(x);
    return {kPiSq * bernoulli_b2(frac), clausen(kTwoPi * frac)};
}

double bernoulli_b2(double x) { return x * x - x + 1.0 / 6.0; }

double clausen_max() {
    static const double kappa = clausen(kPi / 3.0);
    return kappa;
}

}  // namespace dilog
