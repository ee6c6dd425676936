#include "cyclesieve/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyclesieve/cache.hpp"

namespace cyclesieve {

long long CycleType::order() const {
    long long l = 1;
    for (int p : parts.parts()) l = std::lcm(l, static_cast<long long>(p));
    return l;
}

namespace {

// Beta-set encoding: strictly decreasing nonnegative integers
// beta_i = lam_i + (L - i), padded to a fixed length L. Removing a border
// strip of size k is beta_i -> beta_i - k (staying distinct); the strip
// height is the number of beta values jumped over.
using Beta = std::vector<int>;

Beta to_beta(const Partition& lam, int padded_len) {
    Beta b(static_cast<size_t>(padded_len));
    for (int i = 0; i < padded_len; ++i) {
        int part = i < lam.length() ? lam.part(i) : 0;
        b[static_cast<size_t>(i)] = part + (padded_len - 1 - i);
    }
    return b;  // strictly decreasing
}

Int mn_rec(Beta& beta, const std::vector<int>& mu, size_t mi,
           std::map<std::pair<Beta, size_t>, Int>& memo) {
    if (mi == mu.size()) return 1;  // nothing left to remove
    auto key = std::make_pair(beta, mi);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Int total = 0;
    int k = mu[mi];
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - k;
        if (target < 0) continue;
        // the new value must not collide; count entries passed over
        int height = 0;
        bool collision = false;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                collision = true;
                break;
            }
            if (beta[j] < beta[i] && beta[j] > target) ++height;
        }
        if (collision) continue;
        int saved = beta[i];
        beta[i] = target;
        Int sub = mn_rec(beta, mu, mi + 1, memo);
        beta[i] = saved;
        if (height % 2)
            total -= sub;
        else
            total += sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

Int mn_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("mn_character: |lam| and |mu| must agree");
    if (lam.size() == 0) return 1;
    Beta beta = to_beta(lam, lam.length());
    std::map<std::pair<Beta, size_t>, Int> memo;  // per-call memo, no shared state
    std::vector<int> parts = mu.parts();
    return mn_rec(beta, parts, 0, memo);
}

Partition power_cycle_type(const Partition& nu, long long j) {
    if (j < 0) throw std::invalid_argument("power_cycle_type: j must be nonnegative");
    std::vector<int> parts;
    for (int v : nu.parts()) {
        long long g = std::gcd(static_cast<long long>(v), j);  // gcd(v, 0) = v
        for (long long t = 0; t < g; ++t) parts.push_back(static_cast<int>(v / g));
    }
    return Partition::from_unsorted(std::move(parts));
}

Int ramanujan_sum(long long q, long long r) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be positive");
    long long g = std::gcd(q, ((r % q) + q) % q);  // gcd(q, 0) = q
    Int s = 0;
    for (long long d : divisors(g)) s += Int(d) * moebius(q / d);
    return s;
}

Int induced_multiplicity(const Partition& lam, const Partition& nu, long long r) {
    if (lam.size() != nu.size())
        throw std::invalid_argument("induced_multiplicity: |lam| and |nu| must agree");
    long long L = CycleType(nu).order();
    // The same character row is hit L times, so go through the shared tables.
    const auto& t = degree_tables(static_cast<int>(lam.size()));
    int row = t.index_of(lam);
    IntPolyModQn sum(static_cast<int>(L));
    for (long long j = 1; j <= L; ++j)
        sum.add_term(-r * j, t.character[static_cast<size_t>(row)]
                                        [static_cast<size_t>(t.index_of(power_cycle_type(nu, j)))]);
    RootValue v = eval_at_root(sum, 1);
    if (!v.integral)
        throw std::logic_error("induced_multiplicity: root-of-unity sum is not rational");
    if (v.value % L != 0)
        throw std::logic_error("induced_multiplicity: sum not divisible by group order");
    Int m = v.value / L;
    if (m < 0) throw std::logic_error("induced_multiplicity: negative multiplicity");
    return m;
}

}  // namespace cyclesieve
