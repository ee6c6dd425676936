#pragma once

// Necklaces: rotation orbits of words, represented by their lexicographically
// least rotation.

#include <functional>
#include <vector>

#include "cyclesieve/word.hpp"

namespace cyclesieve {

struct Necklace {
    Word representative;  // lex-least rotation
    int period = 0;
    int frequency = 0;

    int length() const { return representative.size(); }
    auto operator<=>(const Necklace&) const = default;
};

// Canonical necklace of the rotation orbit of w.
Necklace necklace_of(std::span<const int> w);

enum class NecklaceFilter { All, FreqEq, FreqDivides };

// Stream every necklace of length n over {1..m} (canonical representatives
// in lexicographic order).
void for_each_necklace(int n, int m, const std::function<void(const Necklace&)>& fn);

// FreqEq keeps frequency == r, FreqDivides keeps frequency | r.
// Note FreqEq with r not dividing n yields the empty set.
std::vector<Necklace> enumerate_necklaces(int n, int m,
                                          NecklaceFilter filter = NecklaceFilter::All,
                                          int r = 0);

// A tuple of necklaces, one per block of a cycle type.
struct NuOrbit {
    std::vector<Necklace> blocks;

    std::vector<int> nu() const;   // block lengths
    std::vector<int> rho() const;  // block frequencies

    auto operator<=>(const NuOrbit&) const = default;
};

}  // namespace cyclesieve
