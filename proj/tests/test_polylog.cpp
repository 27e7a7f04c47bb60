#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "dilog/polylog.hpp"
#include "oracles.hpp"

using namespace dilog;

TEST_CASE("eulerian polynomials are exact") {
    EulerianPolynomial a3 = eulerian(3);
    REQUIRE(a3.coeffs.size() == 3);
    CHECK(a3.coeffs[0] == 1);
    CHECK(a3.coeffs[1] == 4);
    CHECK(a3.coeffs[2] == 1);

    EulerianPolynomial a4 = eulerian(4);
    REQUIRE(a4.coeffs.size() == 4);
    CHECK(a4.coeffs[0] == 1);
    CHECK(a4.coeffs[1] == 11);
    CHECK(a4.coeffs[2] == 11);
    CHECK(a4.coeffs[3] == 1);

    CHECK(eulerian(0).coeffs == std::vector<mpz_class>{1});
    CHECK(eulerian(1).coeffs == std::vector<mpz_class>{1});
    CHECK_THROWS_AS(eulerian(501), std::domain_error);
    CHECK_THROWS_AS(eulerian(-1), std::domain_error);

    // the coefficients sum to m! and are positive palindromes
    for (int m = 1; m <= 30; ++m) {
        EulerianPolynomial p = eulerian(m);
        mpz_class sum = 0;
        for (const auto& c : p.coeffs) {
            CHECK(c > 0);
            sum += c;
        }
        CHECK(sum == oracles::factorial(m));
        size_t d = p.coeffs.size();
        for (size_t k = 0; k < d; ++k) CHECK(p.coeffs[k] == p.coeffs[d - 1 - k]);
    }
    // m = 500 stays exact (spot-check the sum)
    EulerianPolynomial big = eulerian(120);
    mpz_class sum = 0;
    for (const auto& c : big.coeffs) sum += c;
    CHECK(sum == oracles::factorial(120));
}

TEST_CASE("eulerian zeros") {
    CHECK(eulerian_zeros(1).empty());
    std::vector<double> z2 = eulerian_zeros(2);
    REQUIRE(z2.size() == 1);
    CHECK(z2[0] == doctest::Approx(-1.0).epsilon(1e-14));

    std::vector<double> z3 = eulerian_zeros(3);
    REQUIRE(z3.size() == 2);
    CHECK(z3[0] == doctest::Approx(-2.0 - std::sqrt(3.0)).epsilon(1e-13));
    CHECK(z3[1] == doctest::Approx(-2.0 + std::sqrt(3.0)).epsilon(1e-13));

    std::vector<double> z10 = eulerian_zeros(10);
    REQUIRE(z10.size() == 9);
    CHECK(z10[0] == doctest::Approx(-963.85446).epsilon(1e-6));
    CHECK(z10[1] == doctest::Approx(-37.541501).epsilon(1e-6));

    // negative, distinct, reciprocal pairs
    for (int m = 2; m <= 40; ++m) {
        std::vector<double> z = eulerian_zeros(m);
        REQUIRE(int(z.size()) == m - 1);
        for (size_t i = 0; i < z.size(); ++i) {
            CHECK(z[i] < 0.0);
            if (i) CHECK(z[i] > z[i - 1]);
            double recip = 1.0 / z[z.size() - 1 - i];
            CHECK(std::fabs(z[i] - recip) <= 1e-9 * std::fabs(z[i]));
        }
    }
}

TEST_CASE("interlacing of consecutive eulerian zero sets") {
    for (int m = 2; m <= 30; ++m) {
        std::vector<double> a = eulerian_zeros(m);
        std::vector<double> b = eulerian_zeros(m + 1);
        REQUIRE(b.size() == a.size() + 1);
        for (size_t i = 0; i + 1 < b.size(); ++i) {
            int inside = 0;
            for (double x : a)
                if (b[i] < x && x < b[i + 1]) ++inside;
            CHECK(inside == 1);
        }
    }
}

TEST_CASE("sobolev approximations") {
    CHECK(sobolev_approx(10, 9) == doctest::Approx(-971.78).epsilon(1e-4));
    CHECK(sobolev_approx(10, 8) == doctest::Approx(-37.55).epsilon(2e-4));
    CHECK(sobolev_approx(10, 5) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK_THROWS_AS(sobolev_approx(10, 0), std::domain_error);
    CHECK_THROWS_AS(sobolev_approx(10, 10), std::domain_error);
}

TEST_CASE("sobolev error constant") {
    double K = sobolev_K(10, 1000.0);
    CHECK(std::fabs(K - 0.033979) < 1e-5);
    CHECK(K <= 1.0 / 3.0);
    CHECK(sobolev_K(3, 1000.0) > 1.0 / 3.0);  // formula not yet applicable
    for (int m = 2; m <= 20; ++m)
        CHECK(sobolev_K(m + 1, 1000.0) < sobolev_K(m, 1000.0));
    CHECK_THROWS_AS(sobolev_K(10, 1.0), std::domain_error);
}

TEST_CASE("rational negative-order polylog") {
    CHECK(std::abs(li_neg_m(0, 0.5) - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(li_neg_m(1, 2.0) - cplx(2.0, 0.0)) < 1e-13);
    CHECK_THROWS_AS(li_neg_m(1, 1.0), std::domain_error);

    // reflection (-1)^{m+1} Li_{-m}(1/z) = Li_{-m}(z)
    for (int m = 0; m <= 8; ++m) {
        for (cplx z : {cplx(0.4, 0.7), cplx(-1.3, 0.2), cplx(2.0, -1.0)}) {
            cplx lhs = double(m % 2 == 0 ? -1 : 1) * li_neg_m(m, 1.0 / z);
            cplx rhs = li_neg_m(m, z);
            CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("lipschitz series against the rational form") {
    // F(t) = pi^{1+m}/m! Li_{-m}(-e^{pi t}) for s = -m, real t
    for (int m : {3, 10}) {
        for (double t : {-0.5, 0.2, 0.7}) {
            EvalResult F = li_s_lipschitz(cplx(-m, 0.0), cplx(t, 0.0));
            double pref = std::pow(kPi, m + 1);
            for (int i = 2; i <= m; ++i) pref /= i;
            cplx rhs = pref * li_neg_m(m, -std::exp(kPi * t));
            CHECK(std::abs(F.value - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
        }
    }
    // s = -10, w = 0: both sides vanish (A_10(-1) = 0 and the terms cancel
    // in conjugate pairs)
    EvalResult F0 = li_s_lipschitz(cplx(-10.0, 0.0), 0.0);
    CHECK(std::abs(F0.value) < 1e-14);
    CHECK(std::abs(li_neg_m(10, -1.0)) < 1e-10);

    CHECK_THROWS_AS(li_s_lipschitz(cplx(0.5, 1.0), 0.0), std::domain_error);
}

TEST_CASE("lipschitz tail bound is self-consistent") {
    cplx s(-3.0, -7.0);
    for (cplx w : {cplx(-0.4, 0.3), cplx(-1.0, -0.8), cplx(0.05, 0.4)}) {
        EvalResult f100 = li_s_lipschitz(s, w, 100);
        EvalResult f200 = li_s_lipschitz(s, w, 200);
        CHECK(std::abs(f100.value - f200.value) <= f100.abs_err_estimate);
    }
}

TEST_CASE("jonquiere representation cross-checks") {
    EvalResult a = li_s_jonquiere(cplx(2.0, 0.0), cplx(-1.0, 0.0));
    CHECK(std::abs(a.value - cplx(-kPiSq / 12.0, 0.0)) < 1e-9);

    cplx z(0.3, 0.4);
    EvalResult b = li_s_jonquiere(cplx(2.0, 0.0), z);
    CHECK(std::abs(b.value - li2(z)) < 1e-9);

    EvalResult c = li_s_jonquiere(cplx(1.0, 0.0), cplx(0.5, 0.0));
    CHECK(std::abs(c.value - cplx(std::log(2.0), 0.0)) < 1e-10);

    CHECK_THROWS_AS(li_s_jonquiere(cplx(2.0, 0.0), cplx(1.5, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(li_s_jonquiere(cplx(-1.0, 0.0), cplx(0.5, 0.0)),
                    std::domain_error);
}

TEST_CASE("derivative relation between neighbouring orders") {
    // z d/dz Li_s(z) = Li_{s-1}(z)
    cplx s(3.5, 1.0);
    for (cplx z : {cplx(0.4, 0.3), cplx(-0.8, 0.6), cplx(1.2, 1.5)}) {
        auto f = [&](cplx zz) { return li_s_jonquiere(s, zz).value; };
        cplx fd = oracles::fd_derivative(f, z, 1e-5);
        cplx rhs = li_s_jonquiere(s - 1.0, z).value;
        CHECK(std::abs(z * fd - rhs) < 1e-6 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("no principal-branch zeros for positive real order") {
    // empirical sweep of Le Roy's theorem away from the origin and cut
    for (double r : {0.5, 1.0, 2.7}) {
        double floor = HUGE_VAL;
        for (int i = 0; i < 28; ++i) {
            double th = 0.18 + (kTwoPi - 0.36) * i / 27.0;
            for (double rad : {0.1, 0.35, 0.8, 1.4, 2.2, 3.0}) {
                cplx z = std::polar(rad, th);
                floor = std::min(floor, std::abs(li_s_jonquiere(r, z).value));
            }
        }
        CHECK(floor > 1e-3);
    }
}

TEST_CASE("complex gamma") {
    CHECK(std::abs(complex_gamma(0.5) - cplx(std::sqrt(kPi), 0.0)) < 1e-14);
    CHECK(std::abs(complex_gamma(11.0) - cplx(3628800.0, 0.0)) <
          3628800.0 * 1e-13);
    // reflection consistency at a generic point
    cplx z(0.3, 0.7);
    cplx prod = complex_gamma(z) * complex_gamma(1.0 - z);
    CHECK(std::abs(prod - kPi / std::sin(kPi * z)) <
          1e-13 * std::abs(prod));
    // frozen high-precision value of Gamma(10 + 44i)
    cplx g(10.0, 44.0);
    cplx ref(-2.6254632456628792e-15, -1.0316066383826316e-14);
    CHECK(std::abs(complex_gamma(g) - ref) < 1e-12 * std::abs(ref));
}

TEST_CASE("spiral seeds") {
    // real negative order reduces to the sobolev form
    for (int m : {4, 10, 25}) {
        for (int j = 1; j <= m - 1; ++j) {
            cplx v = spiral_zero_approx(cplx(-m, 0.0), j);
            CHECK(std::abs(v - cplx(sobolev_approx(m, j), 0.0)) <
                  1e-12 * (1.0 + std::abs(v)));
        }
    }
    // the full seed run of the complex-order spiral stays finite/distinct
    cplx s(-10.0, -44.0);
    cplx first = spiral_zero_approx(s, 0);
    cplx last = spiral_zero_approx(s, 139);
    CHECK(std::isfinite(first.real()));
    CHECK(std::isfinite(last.real()));
    CHECK(std::abs(first - last) > 0.1);
    CHECK_THROWS_AS(spiral_zero_approx(cplx(2.0, 1.0), -1), std::domain_error);
}

TEST_CASE("polylog zero hunt at negative integer order") {
    // the nonzero results are the Eulerian zeros mapped into the plane
    PolylogZeroSet set = find_polylog_zeros(cplx(-10.0, 0.0), 9);
    std::vector<double> expect = eulerian_zeros(10);
    std::vector<double> got;
    for (cplx z : set.zeros) {
        if (std::abs(z) < 1e-8) continue;  // the origin zero
        CHECK(std::fabs(z.imag()) < 1e-9);
        got.push_back(z.real());
    }
    std::sort(got.begin(), got.end());
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i)
        CHECK(std::fabs(got[i] - expect[i]) <= 1e-6 * std::fabs(expect[i]));
}

TEST_CASE("polylog zero hunt along the complex spiral") {
    // reduced slice of the order -10-44i hunt; the acceptance suite runs
    // the full 140 seeds
    cplx s(-10.0, -44.0);
    PolylogZeroSet set = find_polylog_zeros(s, 25);
    CHECK(set.failed_indices.empty());
    REQUIRE(set.zeros.size() == 26);
    for (size_t i = 0; i < set.zeros.size(); ++i) {
        cplx seed = spiral_zero_approx(s, set.approx_indices[i]);
        CHECK(std::abs(set.zeros[i] - seed) < 1e-2);
    }
    // pairwise distinct
    for (size_t i = 0; i < set.zeros.size(); ++i)
        for (size_t k = i + 1; k < set.zeros.size(); ++k)
            CHECK(std::abs(set.zeros[i] - set.zeros[k]) > 1e-9);

    CHECK_THROWS_AS(find_polylog_zeros(cplx(0.5, 3.0), 5), std::domain_error);
}
