#include "dilog/polylog.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dilog {

namespace {

// ---- gamma (Lanczos, g = 7, 9 terms) -----------------------------------

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cplx gamma_core(cplx s) {
    // valid for Re(s) >= 0.5
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (s - 1.0 + double(i));
    cplx t = s - 0.5 + kLanczosG;
    return std::sqrt(kTwoPi) * std::pow(t, s - 0.5) * std::exp(-t) * x;
}

// ---- tanh-sinh quadrature ------------------------------------------------

struct QuadResult {
    cplx value;
    double abs_err;
};

// Double-exponential rule on [a, b]; tolerates integrable endpoint
// singularities.  Levels double the node density until the estimate
// stabilizes to tol_rel.
QuadResult tanh_sinh(const std::function<cplx(double)>& f, double a, double b,
                     double tol_rel) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double umax = 4.0;

    auto sample = [&](double u, cplx& acc) {
        double sh = std::sinh(u);
        double c = std::cosh(0.5 * kPi * sh);
        double w = 0.5 * kPi * std::cosh(u) / (c * c);
        if (w < 1e-300) return;
        double t = mid + half * std::tanh(0.5 * kPi * sh);
        if (t <= a || t >= b) return;  // node collapsed onto an endpoint
        acc += f(t) * w;
    };

    double h = 1.0;
    cplx sum = 0.0;
    sample(0.0, sum);
    for (double u = h; u <= umax; u += h) {
        sample(u, sum);
        sample(-u, sum);
    }
    cplx prev = sum * (half * h);
    double err = HUGE_VAL;
    for (int level = 1; level <= 11; ++level) {
        h *= 0.5;
        for (double u = h; u <= umax; u += 2.0 * h) {
            sample(u, sum);
            sample(-u, sum);
        }
        cplx est = sum * (half * h);
        err = std::abs(est - prev);
        prev = est;
        if (level >= 3 && err <= tol_rel * (1.0 + std::abs(est)))
            break;
    }
    return {prev, err};
}

// ---- Eulerian helpers ------------------------------------------------------

// Compensated Horner: the rounding errors of each product and sum are
// re-accumulated, giving close to double-double accuracy near sign changes.
double horner_compensated(const std::vector<double>& c, double x) {
    double s = c.back();
    double comp = 0.0;
    for (int i = int(c.size()) - 2; i >= 0; --i) {
        double p = s * x;
        double pe = std::fma(s, x, -p);
        double t = p + c[i];
        double te = (p - (t - c[i])) + (c[i] - (t - p));
        s = t;
        comp = comp * x + (pe + te);
    }
    return s + comp;
}

// A_m(x) up to a positive factor; |x| > 1 is routed through the palindrome
// identity z^{m-1} A_m(1/z) = A_m(z) so the evaluation stays conditioned.
double eulerian_signed_value(const std::vector<double>& c, int m, double x) {
    if (std::fabs(x) <= 1.0) return horner_compensated(c, x);
    double inner = horner_compensated(c, 1.0 / x);
    int deg = m - 1;
    return (x < 0.0 && deg % 2 != 0) ? -inner : inner;
}

}  // namespace

cplx complex_gamma(cplx s) {
    if (s.real() < 0.5) {
        // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        cplx sp = std::sin(kPi * s);
        if (sp == 0.0) throw std::domain_error("complex_gamma: pole");
        return kPi / (sp * gamma_core(1.0 - s));
    }
    return gamma_core(s);
}

EulerianPolynomial eulerian(int m) {
    if (m < 0 || m > 500)
        throw std::domain_error("eulerian: m out of range [0, 500]");
    EulerianPolynomial p;
    p.m = m;
    p.coeffs = {mpz_class(1)};
    for (int mm = 1; mm < m; ++mm) {
        // A_{mm+1}[k] = (k+1) A_mm[k] + (mm-k+1) A_mm[k-1]
        std::vector<mpz_class> next(mm + 1);
        for (int k = 0; k <= mm; ++k) {
            mpz_class v = 0;
            if (k < int(p.coeffs.size())) v += mpz_class(k + 1) * p.coeffs[k];
            if (k >= 1) v += mpz_class(mm - k + 1) * p.coeffs[k - 1];
            next[k] = v;
        }
        p.coeffs = std::move(next);
    }
    return p;
}

std::vector<double> eulerian_zeros(int m) {
    if (m < 1 || m > 60)
        throw std::domain_error("eulerian_zeros: m out of range [1, 60]");
    if (m == 1) return {};
    EulerianPolynomial p = eulerian(m);
    std::vector<double> c(p.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs[i].get_d();

    // The asymptotic zero locations separate the true zeros; geometric
    // means of consecutive magnitudes give one bracket per zero across the
    // full dynamic range.
    std::vector<double> mag(m);
    for (int j = 1; j <= m - 1; ++j) mag[j] = -sobolev_approx(m, j);

    auto f = [&](double x) { return eulerian_signed_value(c, m, x); };
    auto refine = [&](double lo, double hi, double flo) {
        for (int i = 0; i < 200 && hi - lo > 2.0 * DBL_EPSILON * std::fabs(lo);
             ++i) {
            double midp = 0.5 * (lo + hi);
            double fm = f(midp);
            if (fm == 0.0) return midp;
            if ((fm > 0) == (flo > 0)) {
                lo = midp;
                flo = fm;
            } else {
                hi = midp;
            }
        }
        return 0.5 * (lo + hi);
    };

    std::vector<double> zeros;
    zeros.reserve(m - 1);
    for (int j = 1; j <= m - 1; ++j) {
        double hi = j == 1 ? -mag[1] * 1e-9 : -std::sqrt(mag[j] * mag[j - 1]);
        double lo = j == m - 1 ? -(2.0 * mag[m - 1] + 10.0)
                               : -std::sqrt(mag[j] * mag[j + 1]);
        double flo = f(lo), fhi = f(hi);
        for (int grow = 0; j == m - 1 && (flo > 0) == (fhi > 0) && grow < 60;
             ++grow) {
            lo *= 2.0;
            flo = f(lo);
        }
        if ((flo > 0) == (fhi > 0)) {
            // fallback: log-spaced scan inside the bracket
            double found = 0.0;
            double prev_x = lo, prev_f = flo;
            for (int k = 1; k <= 64 && found == 0.0; ++k) {
                double x = -std::exp(std::log(-lo) +
                                     (std::log(-hi) - std::log(-lo)) * k / 64.0);
                double fx = f(x);
                if ((fx > 0) != (prev_f > 0)) {
                    zeros.push_back(refine(prev_x, x, prev_f));
                    found = 1.0;
                }
                prev_x = x;
                prev_f = fx;
            }
            if (found == 0.0)
                throw std::runtime_error("eulerian_zeros: bracketing failed");
            continue;
        }
        zeros.push_back(refine(lo, hi, flo));
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

double sobolev_approx(int m, int j) {
    if (j < 1 || j > m - 1)
        throw std::domain_error("sobolev_approx: j out of range [1, m-1]");
    double x = kPi * (2.0 * j + 1.0) / (2.0 * (m + 1.0));
    return -std::exp(-kPi * std::cos(x) / std::sin(x));
}

double sobolev_K(int m, double M) {
    if (!(M > 1.0)) throw std::domain_error("sobolev_K: requires M > 1");
    if (m < 1) throw std::domain_error("sobolev_K: requires m >= 1");
    double l2 = std::log(M) * std::log(M);
    double nine = 9.0 * kPiSq + l2;
    return (1.0 + 0.25 * std::sqrt(nine)) *
           std::pow((kPiSq + l2) / nine, 0.5 * (m + 1.0));
}

cplx li_neg_m(int m, cplx z) {
    if (m < 0 || m > 60)
        throw std::domain_error("li_neg_m: m out of range [0, 60]");
    if (z == 1.0) throw std::domain_error("li_neg_m: pole at z = 1");
    EulerianPolynomial p = eulerian(m);
    cplx acc = 0.0;
    for (int k = int(p.coeffs.size()) - 1; k >= 0; --k)
        acc = acc * z + p.coeffs[k].get_d();
    return z * acc / std::pow(1.0 - z, double(m + 1));
}

EvalResult li_s_lipschitz(cplx s, cplx w, int kmax) {
    if (s.real() >= 0.0)
        throw std::domain_error("li_s_lipschitz: requires Re(s) < 0");
    const double p = s.real();
    const double aw = std::abs(w);

    // Tail of sum_{|k| > K} |((2k-1)i - w)^{s-1}| by integral comparison:
    // |u|^{Re(s)-1} decays while the phase factor exp(-Im(s) arg u) stays
    // below exp(|Im s| (pi/2 + atan(max(0, Re w)/(2K-1-|w|)))).
    auto tail_bound = [&](int K) {
        double base = 2.0 * K - 1.0 - aw;
        if (base <= 1.0) return HUGE_VAL;
        double phase = std::fabs(s.imag()) *
                       (0.5 * kPi + std::atan(std::max(0.0, w.real()) / base));
        return std::exp(phase + p * std::log(base)) / (-p);
    };

    if (kmax <= 0) {
        double lead = std::max(std::abs(std::pow(cplx(0, 1) - w, s - 1.0)),
                               std::abs(std::pow(cplx(0, -1) - w, s - 1.0)));
        kmax = int(aw) + 4;
        while (kmax < (1 << 22) && tail_bound(kmax) > 1e-12 * lead) kmax *= 2;
    }

    // far terms first; the near terms dominate the sum
    cplx sum = 0.0;
    double mag = 0.0;
    for (int k = kmax; k >= 1; --k) {
        cplx up = cplx(0.0, 2.0 * k - 1.0) - w;
        cplx um = cplx(0.0, -(2.0 * k - 1.0)) - w;
        cplx t = std::pow(up, s - 1.0) + std::pow(um, s - 1.0);
        sum += t;
        mag += std::abs(t);
    }
    double err = tail_bound(kmax) + 8.0 * DBL_EPSILON * mag;
    return {sum, err};
}

EvalResult li_s_jonquiere(cplx s, cplx z) {
    if (s.real() <= 0.0)
        throw std::domain_error("li_s_jonquiere: requires Re(s) > 0");
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw std::domain_error("li_s_jonquiere: z on [1, inf)");
    if (z == 0.0) return {0.0, 0.0};

    const double lz = std::log(std::abs(z));
    const double t0 = std::max(1.0, lz + 5.0);
    auto integrand = [&](double t) -> cplx {
        return std::exp((s - 1.0) * std::log(t)) / (std::exp(cplx(t, 0.0)) - z);
    };

    // Subdivide around t = log|z| where the denominator passes near its
    // pole, then run out to where the e^{-t} tail is negligible.
    std::vector<double> knots{0.0};
    if (lz > 1.0 && lz < t0 - 1.0) {
        knots.push_back(lz - 1.0);
        knots.push_back(lz + 1.0);
    }
    knots.push_back(t0);
    double tail_end = t0 + 60.0 + 10.0 * std::max(0.0, s.real() - 1.0);
    knots.push_back(tail_end);

    cplx total = 0.0;
    double err = 0.0;
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        QuadResult q = tanh_sinh(integrand, knots[i], knots[i + 1], 1e-13);
        total += q.value;
        err += q.abs_err;
    }
    cplx pref = z / complex_gamma(s);
    double cut_tail =
        2.0 * std::exp((s.real() - 1.0) * std::log(tail_end) - tail_end);
    return {pref * total, std::abs(pref) * (err + cut_tail)};
}

cplx spiral_zero_approx(cplx s, int j) {
    if (j < 0) throw std::domain_error("spiral_zero_approx: requires j >= 0");
    if (s == 1.0) throw std::domain_error("spiral_zero_approx: s = 1");
    cplx zeta = kPi * (2.0 * j + 1.0) / (2.0 * (1.0 - s));
    cplx cot;
    if (zeta.imag() > 19.0) {
        // e^{2 i zeta} underflows the direct quotient; expand about -i
        cot = cplx(0.0, -1.0) * (1.0 + 2.0 * std::exp(cplx(0.0, 2.0) * zeta));
    } else if (zeta.imag() < -19.0) {
        cot = cplx(0.0, 1.0) * (1.0 + 2.0 * std::exp(cplx(0.0, -2.0) * zeta));
    } else {
        cplx sn = std::sin(zeta);
        if (std::abs(sn) < 1e-290)
            throw std::domain_error("spiral_zero_approx: cotangent pole");
        cot = std::cos(zeta) / sn;
    }
    return -std::exp(-kPi * cot);
}

namespace {

struct HuntResult {
    cplx zero;
    bool ok;
};

// Newton in the w-plane on the Lipschitz series with the origin zero of
// Li_s divided out: G(w) = F(w) e^{-pi w}.  Without the deflation the
// iteration slides down the e^{pi w} slope toward w = -inf from the seeds
// nearest the origin and never reaches the first spiral zero.
HuntResult hunt_lipschitz(cplx s, cplx seed_z) {
    cplx w = log_principal(-seed_z) / kPi;
    cplx z_prev = seed_z;
    for (int it = 0; it < 120; ++it) {
        cplx F = li_s_lipschitz(s, w).value;
        // F'(w) = -(s-1) sum u^{s-2}: the same series at parameter s-1
        cplx Fp = -(s - 1.0) * li_s_lipschitz(s - 1.0, w).value;
        cplx dw = F / (Fp - kPi * F);
        if (!std::isfinite(dw.real()) || !std::isfinite(dw.imag()))
            return {0.0, false};
        if (std::abs(dw) > 50.0) return {0.0, false};
        w -= dw;
        cplx z = -std::exp(kPi * w);
        if (std::abs(dw) < 1e-13 * (1.0 + std::abs(w)) ||
            std::abs(z - z_prev) < 1e-14 * (1.0 + std::abs(z)))
            return {z, true};
        z_prev = z;
    }
    return {0.0, false};
}

// Newton in the z-plane on Li_s(z)/z via the Jonquiere integral, with a
// trust region so a step cannot tunnel across the spiral.
HuntResult hunt_jonquiere(cplx s, cplx seed_z) {
    cplx z = seed_z;
    if (z.imag() == 0.0 && z.real() >= 1.0) z += cplx(0.0, 1e-12);
    for (int it = 0; it < 120; ++it) {
        cplx L = li_s_jonquiere(s, z).value;
        cplx D = li_s_jonquiere(s - 1.0, z).value / z;  // d/dz Li_s
        cplx dz = L / (D - L / z);
        if (!std::isfinite(dz.real()) || !std::isfinite(dz.imag()))
            return {0.0, false};
        double cap = 0.7 * std::abs(z);
        if (std::abs(dz) > cap) dz *= cap / std::abs(dz);
        z -= dz;
        if (std::abs(z) > 1e8 || std::abs(z) < 1e-12) return {0.0, false};
        if (z.imag() == 0.0 && z.real() >= 1.0) z += cplx(0.0, 1e-12);
        if (std::abs(dz) < 1e-11 * (1.0 + std::abs(z))) return {z, true};
    }
    return {0.0, false};
}

}  // namespace

PolylogZeroSet find_polylog_zeros(cplx s, int jmax) {
    const bool lip = s.real() < 0.0;
    if (!lip && s.real() <= 1.0)
        throw std::domain_error(
            "find_polylog_zeros: unsupported strip 0 <= Re(s) <= 1");
    if (jmax < 0) throw std::domain_error("find_polylog_zeros: jmax >= 0");

    PolylogZeroSet out;
    out.s = s;
    out.method = lip ? ZeroHuntMethod::lipschitz_newton
                     : ZeroHuntMethod::jonquiere_newton;

    std::vector<cplx> seeds(jmax + 1);
    for (int j = 0; j <= jmax; ++j) seeds[j] = spiral_zero_approx(s, j);

    for (int j = 0; j <= jmax; ++j) {
        cplx seed = seeds[j];
        HuntResult h;
        if (std::abs(seed) <= 1e-8) {
            h = {0.0, true};  // the power series pins a zero at the origin
        } else {
            h = lip ? hunt_lipschitz(s, seed) : hunt_jonquiere(s, seed);
        }
        if (!h.ok) {
            out.failed_indices.push_back(j);
            continue;
        }
        // Merge only hunts that clearly landed on one zero: closer than
        // 1e-8 and than half their seed separation (the tail of the spiral
        // packs genuine zeros tighter than 1e-8).
        bool dup = false;
        for (size_t i = 0; i < out.zeros.size(); ++i) {
            double dz = std::abs(out.zeros[i] - h.zero);
            double ds = std::abs(seeds[size_t(out.approx_indices[i])] - seed);
            if (dz < std::min(1e-8, 0.5 * ds)) {
                dup = true;
                break;
            }
        }
        if (!dup) {
            out.zeros.push_back(h.zero);
            out.approx_indices.push_back(j);
        }
    }
    return out;
}

}  // namespace dilog
