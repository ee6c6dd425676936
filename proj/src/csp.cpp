#include "cyclesieve/csp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclesieve {

IntPolyModQn orbit_polynomial(const std::vector<Word>& W, int n) {
    if (n < 1) throw std::invalid_argument("orbit_polynomial: n must be positive");
    std::set<std::vector<int>> pool;
    for (const auto& w : W) {
        if (w.size() != n)
            throw std::invalid_argument("orbit_polynomial: word of wrong length: " + to_string(w));
        if (!pool.insert(w.letters).second)
            throw std::invalid_argument("orbit_polynomial: duplicate word: " + to_string(w));
    }
    IntPolyModQn poly(n);
    std::set<std::vector<int>> seen;
    for (const auto& w : W) {
        if (seen.count(w.letters)) continue;
        auto rots = rotations(w);
        for (const auto& rot : rots) {
            if (!pool.count(rot.letters))
                throw std::invalid_argument("orbit_polynomial: set not rotation-closed, missing " +
                                            to_string(rot));
            seen.insert(rot.letters);
        }
        int s = static_cast<int>(rots.size());  // orbit size = period
        for (int i = 0; i < s; ++i) poly.add_term(static_cast<long long>(i) * (n / s), 1);
    }
    return poly;
}

CSPReport verify_csp(const std::vector<Word>& W, int n, const WordStat& stat) {
    IntPolyModQn orbit = orbit_polynomial(W, n);

    CSPReport report;
    report.order = n;

    IntPolyModQn gf(n);
    std::set<std::vector<int>> seen;
    for (const auto& w : W) {
        int v = stat(w);
        if (v < 0) throw std::invalid_argument("verify_csp: statistic must be nonnegative");
        gf.add_term(v, 1);
        if (seen.count(w.letters)) continue;
        auto rots = rotations(w);
        for (const auto& rot : rots) seen.insert(rot.letters);
        ++report.orbit_profile[static_cast<int>(rots.size())];
    }

    report.holds = gf == orbit;

    // Independent route: exact evaluation at every n-th root of unity must
    // match the fixed point counts, and must agree with the congruence.
    for (int r = 1; r <= n; ++r) {
        Int fixed = 0;
        for (const auto& [size, count] : report.orbit_profile)
            if (r % size == 0) fixed += Int(size) * count;
        RootValue v = eval_at_root(gf, r);
        bool match = v.integral && v.value == fixed;
        if (report.holds && !match)
            throw std::logic_error("verify_csp: congruence and evaluation routes disagree");
        if (!report.holds && !match && !report.witness) {
            CSPWitness w;
            w.r = r;
            w.fixed_count = fixed;
            w.value_integral = v.integral;
            if (v.integral) w.value = v.value;
            report.witness = std::move(w);
        }
    }
    if (!report.holds && !report.witness)
        throw std::logic_error("verify_csp: congruence failed but all evaluations match");
    return report;
}

EquidistributionReport verify_equidistribution(const Composition& alpha) {
    int n = 0;
    for (int part : alpha) {
        if (part < 0) throw std::invalid_argument("verify_equidistribution: negative part");
        n += part;
    }
    if (n == 0) throw std::invalid_argument("verify_equidistribution: empty content");
    EquidistributionReport rep;
    rep.maj_counts.assign(static_cast<size_t>(n), 0);
    rep.flex_counts.assign(static_cast<size_t>(n), 0);
    for_each_word_of_content(alpha, [&](std::span<const int> w) {
        ++rep.maj_counts[static_cast<size_t>(maj_n(w) - 1)];
        ++rep.flex_counts[static_cast<size_t>(flex(w) - 1)];
    });
    rep.equal = rep.maj_counts == rep.flex_counts;
    return rep;
}

}  // namespace cyclesieve
