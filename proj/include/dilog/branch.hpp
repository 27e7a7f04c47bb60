#ifndef DILOG_BRANCH_HPP
#define DILOG_BRANCH_HPP

#include "dilog/special.hpp"

namespace dilog {

// Names the branch phi_{A,B}(z) = Li2(z) + 4 pi^2 A + 2 pi i B log(z) of
// the dilogarithm.  Every integer pair is a legal branch.
struct BranchIndex {
    int A = 0;
    int B = 0;
    friend bool operator==(BranchIndex, BranchIndex) = default;
};

// Element of the integer Heisenberg group H3(Z), stored as the three free
// entries of the upper-triangular unipotent matrix [[1,x,z],[0,1,y],[0,0,1]].
struct MonodromyElement {
    long long x = 0;
    long long y = 0;
    long long z = 0;
    friend bool operator==(MonodromyElement, MonodromyElement) = default;
};

inline constexpr MonodromyElement kMonodromyIdentity{};
// Generators: a positive loop about 0 and a negative loop about 1.
inline constexpr MonodromyElement kMonodromyAboutZero{1, 0, 0};
inline constexpr MonodromyElement kMonodromyAboutOne{0, 1, 0};

cplx phi(BranchIndex b, cplx z);

// (-log(1-z) + 2 pi i B) / z.  Defined off the cuts; the B = 0 branch is
// additionally defined on the negative real axis.
cplx phi_derivative(BranchIndex b, cplx z);

// A full rotation about 0 in the positive direction maps (A,B) -> (A+B,B).
BranchIndex monodromy_rotate_zero(BranchIndex b, bool positive);

// A full rotation about 1 in the negative direction maps (A,B) -> (A,B+1).
BranchIndex monodromy_rotate_one(BranchIndex b, bool positive);

MonodromyElement heisenberg_compose(MonodromyElement g, MonodromyElement h);
MonodromyElement heisenberg_inverse(MonodromyElement g);

}  // namespace dilog

#endif
