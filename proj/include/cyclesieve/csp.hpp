#pragma once

// Cyclic sieving checks for rotation-closed sets of words: the statistic
// generating function, reduced mod q^n - 1, must agree with the orbit
// polynomial of the rotation action. Verification uses the coefficientwise
// congruence as the primary route and exact root-of-unity evaluation as an
// independent second route; the two must agree on every instance.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cyclesieve/cyclotomic.hpp"
#include "cyclesieve/word.hpp"

namespace cyclesieve {

using WordStat = std::function<int(std::span<const int>)>;

// Sum over rotation orbits O of 1 + q^{n/|O|} + q^{2n/|O|} + ...; requires
// every word to have length n and W to be closed under rotation (throws
// std::invalid_argument naming the first offending word otherwise).
IntPolyModQn orbit_polynomial(const std::vector<Word>& W, int n);

struct CSPWitness {
    int r = 0;                 // first failing power of the rotation
    Int fixed_count;           // actual fixed points of rotation^r
    bool value_integral = false;
    Int value;                 // statistic generating function at w_n^r
};

struct CSPReport {
    bool holds = false;
    int order = 0;                            // n
    std::map<int, long long> orbit_profile;   // orbit size -> count
    std::optional<CSPWitness> witness;        // set iff !holds
};

// stat may take any nonnegative integer values; they are reduced mod n.
CSPReport verify_csp(const std::vector<Word>& W, int n, const WordStat& stat);

struct EquidistributionReport {
    bool equal = false;
    std::vector<long long> maj_counts;   // index r-1, r in [n]
    std::vector<long long> flex_counts;
};

// Compares the distributions of maj_n and flex over the content class of
// alpha.
EquidistributionReport verify_equidistribution(const Composition& alpha);

}  // namespace cyclesieve
