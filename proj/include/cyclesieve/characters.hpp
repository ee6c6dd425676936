#pragma once

// Symmetric group characters via the Murnaghan-Nakayama border strip
// recursion, and exact induced-character multiplicities from cyclic
// subgroups through root-of-unity sums.

#include "cyclesieve/cyclotomic.hpp"
#include "cyclesieve/partition.hpp"

namespace cyclesieve {

// Cycle type of a permutation, with the order of the generated cyclic group.
struct CycleType {
    Partition parts;

    explicit CycleType(Partition p) : parts(std::move(p)) {}
    int degree() const { return parts.size(); }
    long long order() const;  // lcm of the parts
};

// chi^lam(mu): character of the irreducible S_n module indexed by lam at a
// permutation of cycle type mu; requires |lam| == |mu|.
Int mn_character(const Partition& lam, const Partition& mu);

// Cycle type of sigma^j for sigma of cycle type nu: each part v contributes
// gcd(v, j) parts of size v / gcd(v, j). j = 0 gives the identity (1^n).
Partition power_cycle_type(const Partition& nu, long long j);

// Ramanujan sum c_q(r) = sum over d | gcd(q, r) of d * moebius(q / d);
// equals the sum of r-th powers of the primitive q-th roots of unity.
Int ramanujan_sum(long long q, long long r);

// Multiplicity of the irreducible S_n module indexed by lam in the
// induction of the cyclic character omega^r from the cyclic group generated
// by a permutation of cycle type nu (|nu| = n, r taken mod the group order):
//   (1/L) * sum_{j=1..L} chi^lam(type(sigma^j)) * omega_L^{-rj},
// evaluated exactly; always a nonnegative integer.
Int induced_multiplicity(const Partition& lam, const Partition& nu, long long r);

}  // namespace cyclesieve
