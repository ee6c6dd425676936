#include "cyclesieve/necklace.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclesieve {

Necklace necklace_of(std::span<const int> w) {
    auto rots = rotations(w);
    auto best = std::min_element(rots.begin(), rots.end());
    auto [p, f] = period_freq(w);
    return Necklace{*best, p, f};
}

void for_each_necklace(int n, int m, const std::function<void(const Necklace&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_necklace: n must be positive");
    // Walk all words in lex order and keep the ones equal to the lex-least
    // rotation of their orbit; those appear in lex order themselves.
    for_each_word(n, m, [&](std::span<const int> w) {
        int period = 0;
        // A canonical word is weakly below each rotation; find the period on
        // the way and bail out on the first strictly smaller rotation.
        for (int s = 1; s <= n; ++s) {
            bool less = false, equal = true;
            for (int i = 0; i < n; ++i) {
                int a = w[static_cast<size_t>((i + s) % n)];
                int b = w[static_cast<size_t>(i)];
                if (a != b) {
                    equal = false;
                    less = a < b;
                    break;
                }
            }
            if (less) return;  // not canonical
            if (equal) {
                period = s;
                break;
            }
        }
        fn(Necklace{Word(std::vector<int>(w.begin(), w.end())), period, n / period});
    });
}

std::vector<Necklace> enumerate_necklaces(int n, int m, NecklaceFilter filter, int r) {
    if (filter != NecklaceFilter::All && r < 1)
        throw std::invalid_argument("enumerate_necklaces: filter needs r >= 1");
    std::vector<Necklace> out;
    for_each_necklace(n, m, [&](const Necklace& nk) {
        switch (filter) {
            case NecklaceFilter::All: break;
            case NecklaceFilter::FreqEq:
                if (nk.frequency != r) return;
                break;
            case NecklaceFilter::FreqDivides:
                if (r % nk.frequency) return;
                break;
        }
        out.push_back(nk);
    });
    return out;
}

std::vector<int> NuOrbit::nu() const {
    std::vector<int> v;
    v.reserve(blocks.size());
    for (const auto& b : blocks) v.push_back(b.length());
    return v;
}

std::vector<int> NuOrbit::rho() const {
    std::vector<int> v;
    v.reserve(blocks.size());
    for (const auto& b : blocks) v.push_back(b.frequency);
    return v;
}

}  // namespace cyclesieve
