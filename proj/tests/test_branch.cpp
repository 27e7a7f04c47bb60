#include <doctest.h>

#include <cmath>
#include <random>

#include "dilog/branch.hpp"
#include "dilog/zero_finder.hpp"
#include "oracles.hpp"

using namespace dilog;

TEST_CASE("phi closed-form values at 0, 1, -1") {
    CHECK(phi({0, 0}, 0.0) == cplx(0.0, 0.0));
    for (int A : {-2, 0, 1, 3}) {
        for (int B : {-3, 0, 2}) {
            cplx at_one = phi({A, B}, 1.0);
            CHECK(std::abs(at_one - cplx(kPiSq * (1.0 / 6.0 + 4.0 * A), 0.0)) <
                  1e-12 * (1.0 + std::abs(at_one)));
            cplx at_minus = phi({A, B}, -1.0);
            CHECK(std::abs(at_minus -
                           cplx(kPiSq * (-1.0 / 12.0 + 4.0 * A - 2.0 * B), 0.0)) <
                  1e-12 * (1.0 + std::abs(at_minus)));
        }
    }
    CHECK_THROWS_AS(phi({0, 1}, 0.0), std::domain_error);
}

TEST_CASE("phi_derivative values and domain") {
    CHECK(std::abs(phi_derivative({0, 0}, -1.0) - cplx(std::log(2.0), 0.0)) <
          1e-15);
    // finite-difference oracle at z = 1/2
    auto f = [](cplx z) { return li2(z); };
    cplx fd = oracles::fd_derivative(f, cplx(0.5, 0.0), 1e-6);
    CHECK(std::abs(phi_derivative({0, 0}, 0.5) - fd) < 1e-9);
    CHECK(std::abs(phi_derivative({0, 0}, 0.5) - cplx(2.0 * std::log(2.0), 0.0)) <
          1e-14);

    CHECK_THROWS_AS(phi_derivative({0, 0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(phi_derivative({0, 0}, 1.5), std::domain_error);
    CHECK_THROWS_AS(phi_derivative({0, 1}, -0.5), std::domain_error);
    CHECK_NOTHROW(phi_derivative({0, 0}, -0.5));
}

TEST_CASE("derivative lower bound on the zero rectangle") {
    // |z phi'(z)| >= pi(2B - 1) inside R_{A,B}
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int B = 1; B <= 6; ++B) {
        for (int A = -(B - 1) / 2; 2 * A <= B; ++A) {
            if (!has_zero({A, B})) continue;
            PolarRectangle rect = polar_rectangle({A, B});
            for (int i = 0; i < 50; ++i) {
                double r = rect.r1 + (rect.r2 - rect.r1) * u(rng);
                double th = rect.theta1 + (rect.theta2 - rect.theta1) * u(rng);
                if (th >= kPi) continue;
                cplx z = std::polar(r, th);
                CHECK(std::abs(z * phi_derivative({A, B}, z)) >=
                      kPi * (2.0 * B - 1.0) - 1e-9);
            }
        }
    }
}

TEST_CASE("monodromy moves") {
    CHECK(monodromy_rotate_zero({0, -1}, true) == BranchIndex{-1, -1});
    CHECK(monodromy_rotate_zero({3, 2}, false) == BranchIndex{1, 2});
    BranchIndex b{4, -7};
    CHECK(monodromy_rotate_zero(monodromy_rotate_zero(b, true), false) == b);
    CHECK(monodromy_rotate_one({0, 0}, false) == BranchIndex{0, 1});
    CHECK(monodromy_rotate_one({0, 1}, true) == BranchIndex{0, 0});
    BranchIndex it{0, 0};
    for (int i = 0; i < 10; ++i) it = monodromy_rotate_one(it, false);
    CHECK(it == BranchIndex{0, 10});
}

TEST_CASE("heisenberg composition against the 3x3 matrix oracle") {
    MonodromyElement g0 = kMonodromyAboutZero;
    MonodromyElement g1 = kMonodromyAboutOne;
    CHECK(heisenberg_compose(kMonodromyIdentity, g1) == g1);
    CHECK(heisenberg_compose(g0, kMonodromyIdentity) == g0);

    // non-commuting generators
    CHECK(heisenberg_compose(g0, g1) != heisenberg_compose(g1, g0));

    // commutator is central
    MonodromyElement comm = heisenberg_compose(
        heisenberg_compose(g0, g1),
        heisenberg_compose(heisenberg_inverse(g0), heisenberg_inverse(g1)));
    CHECK(comm.x == 0);
    CHECK(comm.y == 0);
    CHECK(std::abs(comm.z) == 1);

    // random products match exact matrix multiplication
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long long> d(-30, 30);
    for (int i = 0; i < 200; ++i) {
        MonodromyElement a{d(rng), d(rng), d(rng)};
        MonodromyElement b{d(rng), d(rng), d(rng)};
        MonodromyElement c = heisenberg_compose(a, b);
        oracles::Mat3 m =
            oracles::mat_mul(oracles::unipotent(a.x, a.y, a.z),
                             oracles::unipotent(b.x, b.y, b.z));
        CHECK(c.x == m[0][1]);
        CHECK(c.y == m[1][2]);
        CHECK(c.z == m[0][2]);
        // inverse really inverts
        CHECK(heisenberg_compose(a, heisenberg_inverse(a)) == kMonodromyIdentity);
    }
}

TEST_CASE("cut-crossing glue between neighbouring branches") {
    // phi_{A,B}(x + iy) and phi_{A,B+1}(x - iy) share the y -> 0 limit on
    // x in (1,2); the gap closes linearly in y.
    for (double x : {1.25, 1.5, 1.9}) {
        for (int A : {0, 1}) {
            for (int B : {0, 1, 3}) {
                double y = 1e-10;
                cplx up = phi({A, B}, cplx(x, y));
                cplx dn = phi({A, B + 1}, cplx(x, -y));
                CHECK(std::abs(up - dn) < 1e-9);
                // linear decay: ten times closer at a tenth of the offset
                cplx up2 = phi({A, B}, cplx(x, 1e-6));
                cplx dn2 = phi({A, B + 1}, cplx(x, -1e-6));
                CHECK(std::abs(up2 - dn2) < 1e-4);
            }
        }
    }
}

TEST_CASE("conjugation symmetry of branches") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        cplx z = oracles::random_off_cuts(rng, 3.0, 1e-3);
        for (int A : {-1, 0, 2}) {
            for (int B : {-2, 0, 1}) {
                cplx lhs = phi({A, -B}, std::conj(z));
                cplx rhs = std::conj(phi({A, B}, z));
                CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("first-order expansion of phi") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        cplx z = oracles::random_off_cuts(rng, 2.0, 5e-2);
        cplx h = 1e-4 * std::polar(1.0, kTwoPi * double(i) / 100.0);
        BranchIndex b{1, 2};
        cplx resid = phi(b, z + h) - phi(b, z) - h * phi_derivative(b, z);
        CHECK(std::abs(resid) < 100.0 * std::norm(h));
    }
}
