#pragma once

// Frobenius characteristics of Lie-type modules for the symmetric group:
// the cyclic-induction series of Kraskiewicz-Weyman type, its refinement to
// arbitrary cyclic subgroups (Stembridge's formula), the generalized
// Schocker expansion of higher Lie characters, wreath module characters,
// and the associated graded Frobenius series. All results are Schur
// expansions with exact integer coefficients unless stated otherwise.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cyclesieve/necklace.hpp"
#include "cyclesieve/partition.hpp"
#include "cyclesieve/symfunc.hpp"
#include "cyclesieve/tableau.hpp"

namespace cyclesieve {

// --- necklace content generating functions (monomial basis) --------------

// Necklaces of length n with frequency exactly r / dividing r. Degree n;
// enumeration runs over the alphabet {1..n}, which reconstructs every
// monomial coefficient.
SymFunc nf_content_gf(int n, int r);
SymFunc nfd_content_gf(int n, int r);

// Multisets (resp. subsets) of b necklaces drawn from the length-a
// frequency-divides-r family; degree a*b.
SymFunc necklace_multiset_gf(int a, int r, int b);
SymFunc necklace_subset_gf(int a, int r, int b);

// --- cyclic induction series ----------------------------------------------

// Entry r-1 is sum over lam |- n of #{Q in SYT(lam): maj_n(Q) = r} * s_lam,
// the Frobenius characteristic of the induction of the r-th power character
// from the full cycle.
std::vector<SymFunc> kw_series(int n);

// Multiset of eigenvalue exponents of a full cycle on the irreducible
// module lam, as counts: entry r-1 equals a_{lam,r}; summing gives the
// number of standard tableaux.
std::vector<Int> cyclic_exponents(const Partition& lam);

// Stembridge refinement: nu describes the cycle type generating the cyclic
// group; entry r-1 (r in [lcm(nu)]) is sum over lam of
// #{Q in SYT(lam): maj_nu(Q) = r} * s_lam.
std::vector<SymFunc> stembridge_series(const std::vector<int>& nu);

// Content generating function of the sigma_nu-orbits on words of length
// sum(nu) over {1..m} whose orbit frequency divides r; computed by direct
// orbit enumeration and cross-checked internally against the two
// necklace-product expansions. Requires m >= sum(nu).
SymFunc ofd_content_gf(const std::vector<int>& nu, int r, int m);

// All entries r in [lcm(nu)] of the above, sharing one orbit enumeration.
std::vector<SymFunc> ofd_series(const std::vector<int>& nu, int m);

// --- generalized Schocker expansion ---------------------------------------

// mu_f(d, e) = sum over g with lcm(f,d) | g | e of moebius(g/f); evaluated
// by the divisor sum and the radical-criterion closed form, which are
// asserted equal. Requires f | e and d | e.
Int mobius_f(long long f, long long d, long long e);

enum class SchockerKind { Trivial, Sign };

// Frobenius characteristic of the wreath module induced from the r-th
// one-dimensional character (kind Trivial: det-free; kind Sign: twisted by
// the sign of the permutation part) of the wreath product C_a wr S_b:
//   sum over nu |- b, weight(nu)/z_nu, sum over tuples tau with
//   tau_j | r*nu_j of mu_{tau_j}(nu_j, r nu_j) products against blockwise
//   maj counts of standard tableaux of size a*b.
SymFunc schocker(int a, int b, int r, SchockerKind kind);

// --- wreath modules --------------------------------------------------------

// Frobenius characteristic of the induction of the irreducible wreath
// module indexed by an a-tuple of partitions with total b: product over
// slots r of s_{ul_r} plethysm the frequency-divides-r necklace series.
SymFunc wreath_char(int a, const PartitionTuple& ul);

// Dimension of that wreath module: multinomial of the slot sizes times the
// product of standard tableau counts.
Int wreath_dim(const PartitionTuple& ul);

// ul -> dim * wreath_char for every a-tuple with total b; verified
// internally against bucketing all words of length a*b over {1..a*b} by
// flex_ab and by maj_ab.
std::map<PartitionTuple, SymFunc> graded_frobenius(int a, int b);

// --- higher Lie characters -------------------------------------------------

// Frobenius characteristic of the higher Lie module of cycle type lam:
// product over distinct part sizes i with multiplicity b_i of
// schocker(i, b_i, 1, Trivial).
SymFunc higher_lie(const Partition& lam);

// Independent route: sum over permutations of cycle type lam of the content
// generating function of words whose rises are strict exactly on the
// permutation's descent positions.
SymFunc gessel_reutenauer_gf(const Partition& lam);

// --- candidate statistic checker -------------------------------------------

using TupleStat = std::function<PartitionTuple(std::span<const int>)>;

struct MashReport {
    // (i) equidistribution with maj_ab on every content class of W_{ab}
    bool equidistributed = true;
    std::optional<Composition> content_witness;
    // (ii) constancy on recording-tableau fibers
    bool q_fiber_constant = true;
    std::optional<std::pair<Word, Word>> fiber_witness;
    std::optional<std::pair<PartitionTuple, PartitionTuple>> fiber_values;
};

// Checks the two properties a candidate companion statistic for flex_ab
// must satisfy, over all words of length a*b on the alphabet {1..a*b}.
// Content classes are scanned from most refined (all letters distinct)
// to least, words within a class in lexicographic order; a fiber violation
// reports the previously seen word with the other value.
MashReport check_mash_candidate(const TupleStat& stat, int a, int b);

}  // namespace cyclesieve
