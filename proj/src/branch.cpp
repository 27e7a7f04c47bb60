#include "dilog/branch.hpp"

#include <stdexcept>

namespace dilog {

cplx phi(BranchIndex b, cplx z) {
    cplx v = li2(z) + cplx(4.0 * kPiSq * b.A, 0.0);
    if (b.B != 0) {
        if (z == 0.0)
            throw std::domain_error("phi: z = 0 is a branch point when B != 0");
        v += cplx(0.0, kTwoPi * b.B) * log_principal(z);
    }
    return v;
}

cplx phi_derivative(BranchIndex b, cplx z) {
    if (z == 0.0)
        throw std::domain_error("phi_derivative: z = 0");
    if (z.imag() == 0.0) {
        double x = z.real();
        if (x >= 1.0)
            throw std::domain_error("phi_derivative: z on the cut [1,inf)");
        if (x < 0.0 && b.B != 0)
            throw std::domain_error("phi_derivative: z on the cut (-inf,0]");
    }
    cplx one_minus = z.imag() == 0.0 ? cplx(1.0 - z.real(), 0.0) : 1.0 - z;
    return (-log_principal(one_minus) + cplx(0.0, kTwoPi * b.B)) / z;
}

BranchIndex monodromy_rotate_zero(BranchIndex b, bool positive) {
    return positive ? BranchIndex{b.A + b.B, b.B} : BranchIndex{b.A - b.B, b.B};
}

BranchIndex monodromy_rotate_one(BranchIndex b, bool positive) {
    return positive ? BranchIndex{b.A, b.B - 1} : BranchIndex{b.A, b.B + 1};
}

MonodromyElement heisenberg_compose(MonodromyElement g, MonodromyElement h) {
    return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}

MonodromyElement heisenberg_inverse(MonodromyElement g) {
    return {-g.x, -g.y, -g.z + g.x * g.y};
}

}  // namespace dilog
