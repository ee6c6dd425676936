#pragma once

// The verification suite: each function checks one family of identities at
// desk scale in exact arithmetic and reports pass/fail with a witness on
// failure. Shared by the CLI `verify` command and the acceptance runner.

#include <string>
#include <vector>

namespace cyclesieve {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // summary of coverage, or the first witness
};

struct VerifyCaps {
    int max_n = 8;           // cyclic-induction, fiber, CSP, root-evaluation scale
    int block_max = 7;       // sum of block sizes for block-cyclic branching
    int lie_max = 6;         // higher Lie partition size
    int mash_max = 5;        // companion-statistic scan size
    int random_sets = 200;   // random rotation-closed families per length
    unsigned seed = 20240817u;

    // Scale every cap down to fit n (the CLI --max-n knob).
    static VerifyCaps capped(int n);
};

// 1. Schur coefficients of the cyclic induction series match the character
//    oracle (Murnaghan-Nakayama + Ramanujan sums) for n <= max_n.
CheckResult check_cyclic_induction_vs_oracle(const VerifyCaps& caps);

// 2. Necklace, flex-fiber and maj-fiber content generating functions agree
//    with each other and with the induction series for n <= max_n.
CheckResult check_fiber_gf_equalities(const VerifyCaps& caps);

// 3. Cyclic sieving: (W_alpha, C_n, maj) for every content class with
//    n <= max_n, and (W, C_n, flex) for random rotation-closed families.
CheckResult check_csp_suite(const VerifyCaps& caps);

// 4. Root-of-unity evaluations of tableau major index generating functions
//    equal irreducible characters at cycle powers for n <= max_n.
CheckResult check_tableau_root_evaluations(const VerifyCaps& caps);

// 5. Block-cyclic branching series equal the character oracle and the
//    orbit-enumeration expansions for every block partition of n <= block_max.
CheckResult check_block_cyclic_branching(const VerifyCaps& caps);

// 6. One-dimensional wreath inductions: formula = plethysm oracle = direct
//    necklace multiset/subset GF; even-column expansion for a = 2.
CheckResult check_wreath_one_dim_expansions(const VerifyCaps& caps);

// 7. Graded Frobenius series: module route = flex bucketing = maj bucketing;
//    specialization sums to the regular-representation expansion.
CheckResult check_graded_frobenius_routes(const VerifyCaps& caps);

// 8. Higher Lie characteristics equal the descent-class expansion for all
//    cycle types of size <= lie_max.
CheckResult check_higher_lie_vs_descent_sum(const VerifyCaps& caps);

// 9. Symmetries: gcd-invariance of induction multiplicities, block
//    permutation symmetry, and the conjugation identities.
CheckResult check_symmetries_and_conjugation(const VerifyCaps& caps);

// 10. Companion-statistic probe: the blockwise maj tuple fails recording-
//     tableau constancy with the known witness; the two degenerate
//     statistics pass both properties.
CheckResult check_companion_statistic_probe(const VerifyCaps& caps);

// 11. Kernel identities: plethysm units, basis round-trips, dual-path
//     Moebius weights.
CheckResult check_kernel_identities(const VerifyCaps& caps);

// All checks in order 1..11.
std::vector<CheckResult> run_all_checks(const VerifyCaps& caps);

}  // namespace cyclesieve
