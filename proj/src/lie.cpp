#include "cyclesieve/lie.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cyclesieve/characters.hpp"

namespace cyclesieve {

namespace {

// Content generating functions of necklaces of length n over {1..n},
// grouped by frequency. One word walk per n, shared by every caller.
const std::map<int, SymFunc>& necklace_freq_table(int n) {
    static std::mutex mu;
    static std::map<int, std::map<int, SymFunc>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::map<int, ContentAccumulator> acc;
    for (long long f : divisors(n)) acc.emplace(static_cast<int>(f), ContentAccumulator(n));
    for_each_necklace(n, n, [&](const Necklace& nk) {
        acc.at(nk.frequency).add_word(nk.representative);
    });
    std::map<int, SymFunc> table;
    for (const auto& [f, a] : acc) table.emplace(f, a.to_symfunc());
    return cache.emplace(n, std::move(table)).first->second;
}

SymFunc schur_line(const Partition& lam) {
    return SymFunc::unit(Basis::Schur, lam);
}

// Weak compositions of n into k parts.
std::vector<Composition> weak_compositions(int n, int k) {
    std::vector<Composition> out;
    Composition cur(k, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == k - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (k > 0) rec(rec, 0, n);
    return out;
}

// One application of sigma_nu: rotate each consecutive block right by one,
// matching the rotation convention used for single words.
void apply_sigma(std::vector<int>& w, std::span<const int> nu) {
    auto it = w.begin();
    for (int v : nu) {
        std::rotate(it, it + (v - 1), it + v);
        it += v;
    }
}

// Orbit contents of the sigma_nu action on words over {1..m}, grouped by
// orbit frequency (divisors of lcm(nu)).
std::map<int, SymFunc> ofd_freq_split(const std::vector<int>& nu, int m) {
    const int n = std::accumulate(nu.begin(), nu.end(), 0);
    const long long ell = lcm_of(nu);
    std::map<int, ContentAccumulator> acc;
    for (long long f : divisors(ell)) acc.emplace(static_cast<int>(f), ContentAccumulator(n));

    std::vector<int> orbit;
    for_each_word(n, m, [&](std::span<const int> w) {
        orbit.assign(w.begin(), w.end());
        long long size = ell;
        for (long long j = 1; j < ell; ++j) {
            apply_sigma(orbit, nu);
            if (std::lexicographical_compare(orbit.begin(), orbit.end(), w.begin(), w.end()))
                return;  // not the canonical representative
            if (size == ell && std::equal(orbit.begin(), orbit.end(), w.begin())) size = j;
        }
        acc.at(static_cast<int>(ell / size)).add(content(w));
    });

    std::map<int, SymFunc> table;
    for (const auto& [f, a] : acc) table.emplace(f, a.to_symfunc());
    return table;
}

// Expansion of OFD through exact-frequency necklace tuples: sum over
// rho | nu with ell | r * lcm(nu_j / rho_j) of
// (prod gamma_j / lcm(gamma_j)) * prod_j NF_{nu_j, rho_j}.
SymFunc ofd_via_exact_frequencies(const std::vector<int>& nu, int r) {
    const int n = std::accumulate(nu.begin(), nu.end(), 0);
    const long long ell = lcm_of(nu);
    const int k = static_cast<int>(nu.size());
    SymFunc out(n, Basis::Monomial);

    std::vector<int> rho(k);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == k) {
            std::vector<int> gamma(k);
            for (int i = 0; i < k; ++i) gamma[i] = nu[i] / rho[i];
            long long orbit = lcm_of(gamma);
            if ((static_cast<long long>(r) * orbit) % ell != 0) return;
            Int fiber = 1;
            for (int g : gamma) fiber *= g;
            fiber /= orbit;
            SymFunc prod = SymFunc::unit(Basis::Monomial, Partition());
            for (int i = 0; i < k; ++i)
                prod = multiply(prod, necklace_freq_table(nu[i]).at(rho[i]));
            out += Rat(fiber) * prod;
            return;
        }
        for (long long d : divisors(nu[j])) {
            rho[j] = static_cast<int>(d);
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Frequency-divides necklace content GF over {1..n} (degree n).
SymFunc nfd_table(int n, int r) {
    SymFunc out(n, Basis::Monomial);
    for (const auto& [f, gf] : necklace_freq_table(n))
        if (r % f == 0) out += gf;
    return out;
}

// Expansion of OFD through frequency-divides necklace tuples: sum over
// tau in [nu_1] x ... x [nu_k] with sum (ell / nu_j) tau_j = r (mod ell)
// of prod_j NFD_{nu_j, tau_j}.
SymFunc ofd_via_divided_frequencies(const std::vector<int>& nu, int r) {
    const int n = std::accumulate(nu.begin(), nu.end(), 0);
    const long long ell = lcm_of(nu);
    const int k = static_cast<int>(nu.size());
    SymFunc out(n, Basis::Monomial);

    std::vector<int> tau(k);
    auto rec = [&](auto&& self, int j, long long residue) -> void {
        if (j == k) {
            if (residue % ell != static_cast<long long>(r) % ell) return;
            SymFunc prod = SymFunc::unit(Basis::Monomial, Partition());
            for (int i = 0; i < k; ++i) prod = multiply(prod, nfd_table(nu[i], tau[i]));
            out += prod;
            return;
        }
        for (int t = 1; t <= nu[j]; ++t) {
            tau[j] = t;
            self(self, j + 1, (residue + (ell / nu[j]) * t) % ell);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<SymFunc> ofd_series_checked(const std::vector<int>& nu,
                                        const std::map<int, SymFunc>& freq_split) {
    const long long ell = lcm_of(nu);
    std::vector<SymFunc> out;
    out.reserve(static_cast<size_t>(ell));
    for (int r = 1; r <= ell; ++r) {
        SymFunc direct(std::accumulate(nu.begin(), nu.end(), 0), Basis::Monomial);
        for (const auto& [f, gf] : freq_split)
            if (r % f == 0) direct += gf;
        if (direct != ofd_via_exact_frequencies(nu, r) ||
            direct != ofd_via_divided_frequencies(nu, r))
            throw std::logic_error("orbit content expansions disagree");
        out.push_back(std::move(direct));
    }
    return out;
}

void require_positive_blocks(const std::vector<int>& nu) {
    if (nu.empty()) throw std::invalid_argument("block sizes must be nonempty");
    for (int v : nu)
        if (v < 1) throw std::invalid_argument("block sizes must be positive");
}

}  // namespace

SymFunc nf_content_gf(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("nf_content_gf: n, r must be positive");
    const auto& table = necklace_freq_table(n);
    auto it = table.find(r);
    if (it == table.end()) return SymFunc(n, Basis::Monomial);  // r does not divide n
    return it->second;
}

SymFunc nfd_content_gf(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("nfd_content_gf: n, r must be positive");
    return nfd_table(n, r);
}

SymFunc necklace_multiset_gf(int a, int r, int b) {
    if (a < 1 || r < 1 || b < 1)
        throw std::invalid_argument("necklace_multiset_gf: arguments must be positive");
    const int n = a * b;
    std::vector<Necklace> pool = enumerate_necklaces(a, n, NecklaceFilter::FreqDivides, r);
    ContentAccumulator acc(n);
    std::vector<int> letters(static_cast<size_t>(n));
    std::vector<int> pick(static_cast<size_t>(b));
    auto rec = [&](auto&& self, int slot, int from) -> void {
        if (slot == b) {
            auto out = letters.begin();
            for (int i : pick)
                out = std::copy(pool[static_cast<size_t>(i)].representative.letters.begin(),
                                pool[static_cast<size_t>(i)].representative.letters.end(), out);
            acc.add_word(letters);
            return;
        }
        for (int i = from; i < static_cast<int>(pool.size()); ++i) {
            pick[static_cast<size_t>(slot)] = i;
            self(self, slot + 1, i);  // repetition allowed
        }
    };
    rec(rec, 0, 0);
    return acc.to_symfunc();
}

SymFunc necklace_subset_gf(int a, int r, int b) {
    if (a < 1 || r < 1 || b < 1)
        throw std::invalid_argument("necklace_subset_gf: arguments must be positive");
    const int n = a * b;
    std::vector<Necklace> pool = enumerate_necklaces(a, n, NecklaceFilter::FreqDivides, r);
    ContentAccumulator acc(n);
    std::vector<int> letters(static_cast<size_t>(n));
    std::vector<int> pick(static_cast<size_t>(b));
    auto rec = [&](auto&& self, int slot, int from) -> void {
        if (slot == b) {
            auto out = letters.begin();
            for (int i : pick)
                out = std::copy(pool[static_cast<size_t>(i)].representative.letters.begin(),
                                pool[static_cast<size_t>(i)].representative.letters.end(), out);
            acc.add_word(letters);
            return;
        }
        for (int i = from; i < static_cast<int>(pool.size()); ++i) {
            pick[static_cast<size_t>(slot)] = i;
            self(self, slot + 1, i + 1);  // strictly increasing: a set
        }
    };
    rec(rec, 0, 0);
    return acc.to_symfunc();
}

std::vector<SymFunc> kw_series(int n) {
    if (n < 1) throw std::invalid_argument("kw_series: n must be positive");
    std::vector<SymFunc> out(static_cast<size_t>(n), SymFunc(n, Basis::Schur));
    for (const auto& lam : partitions_of(n))
        for_each_syt(lam, [&](const Tableau& q) {
            out[static_cast<size_t>(tableau_maj_n(q) - 1)].add_coeff(lam, Rat(1));
        });
    return out;
}

std::vector<Int> cyclic_exponents(const Partition& lam) {
    const int n = lam.size();
    if (n < 1) throw std::invalid_argument("cyclic_exponents: partition must be nonempty");
    std::vector<Int> counts(static_cast<size_t>(n), Int(0));
    for_each_syt(lam, [&](const Tableau& q) {
        ++counts[static_cast<size_t>(tableau_maj_n(q) - 1)];
    });
    return counts;
}

std::vector<SymFunc> stembridge_series(const std::vector<int>& nu) {
    require_positive_blocks(nu);
    const int n = std::accumulate(nu.begin(), nu.end(), 0);
    const long long ell = lcm_of(nu);
    std::vector<SymFunc> out(static_cast<size_t>(ell), SymFunc(n, Basis::Schur));
    for (const auto& lam : partitions_of(n))
        for_each_syt(lam, [&](const Tableau& q) {
            out[static_cast<size_t>(tableau_maj_nu(q, nu) - 1)].add_coeff(lam, Rat(1));
        });
    return out;
}

SymFunc ofd_content_gf(const std::vector<int>& nu, int r, int m) {
    require_positive_blocks(nu);
    const int n = std::accumulate(nu.begin(), nu.end(), 0);
    if (r < 1) throw std::invalid_argument("ofd_content_gf: r must be positive");
    if (m < n) throw std::invalid_argument("ofd_content_gf: alphabet too small");
    auto split = ofd_freq_split(nu, m);
    SymFunc direct(n, Basis::Monomial);
    for (const auto& [f, gf] : split)
        if (r % f == 0) direct += gf;
    if (direct != ofd_via_exact_frequencies(nu, r) ||
        direct != ofd_via_divided_frequencies(nu, r))
        throw std::logic_error("orbit content expansions disagree");
    return direct;
}

std::vector<SymFunc> ofd_series(const std::vector<int>& nu, int m) {
    require_positive_blocks(nu);
    const int n = std::accumulate(nu.begin(), nu.end(), 0);
    if (m < n) throw std::invalid_argument("ofd_series: alphabet too small");
    return ofd_series_checked(nu, ofd_freq_split(nu, m));
}

Int mobius_f(long long f, long long d, long long e) {
    if (f < 1 || d < 1 || e < 1 || e % d != 0 || e % f != 0)
        throw std::invalid_argument("mobius_f: need d | e and f | e");
    const long long base = std::lcm(f, d);

    Int by_sum = 0;
    for (long long g : divisors(e))
        if (g % base == 0) by_sum += moebius(g / f);

    const long long lf = base / f;
    Int closed = 0;
    if (rad(lf) == lf && rad(e / f) == lf) closed = moebius(lf);

    if (by_sum != closed) throw std::logic_error("mobius_f paths disagree");
    return by_sum;
}

SymFunc schocker(int a, int b, int r, SchockerKind kind) {
    if (a < 1 || b < 1) throw std::invalid_argument("schocker: a, b must be positive");
    if (r < 1 || r > a) throw std::invalid_argument("schocker: r must lie in [a]");
    const int n = a * b;
    std::map<Partition, Rat, std::greater<Partition>> coeffs;

    for (const auto& nu : partitions_of(b)) {
        const int k = nu.length();
        std::vector<int> anu(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) anu[static_cast<size_t>(j)] = a * nu.part(j);

        // blockwise maj counts of standard tableaux, grouped by value tuple
        std::map<std::vector<int>, std::map<Partition, Int>> bold;
        for (const auto& lam : partitions_of(n))
            for_each_syt(lam, [&](const Tableau& q) {
                ++bold[tableau_bfmaj_nu(q, anu)][lam];
            });

        Rat weight = Rat(1) / Rat(z_lambda(nu));
        if (kind == SchockerKind::Sign && (b - k) % 2 == 1) weight = -weight;

        std::vector<int> tau(static_cast<size_t>(k));
        auto rec = [&](auto&& self, int j, const Int& mu_part) -> void {
            if (mu_part == 0) return;
            if (j == k) {
                auto it = bold.find(tau);
                if (it == bold.end()) return;
                for (const auto& [lam, count] : it->second)
                    coeffs[lam] += weight * Rat(mu_part * count);
                return;
            }
            const long long e = static_cast<long long>(r) * nu.part(j);
            for (long long t : divisors(e)) {
                tau[static_cast<size_t>(j)] = static_cast<int>(t);
                self(self, j + 1, mu_part * mobius_f(t, nu.part(j), e));
            }
        };
        rec(rec, 0, Int(1));
    }

    SymFunc out(n, Basis::Schur);
    for (const auto& [lam, c] : coeffs) {
        if (!is_integer(c) || c < 0)
            throw std::logic_error("schocker: expansion not a nonnegative integer combination");
        out.set_coeff(lam, c);
    }
    return out;
}

SymFunc wreath_char(int a, const PartitionTuple& ul) {
    if (a < 1) throw std::invalid_argument("wreath_char: a must be positive");
    if (ul.slots() != a)
        throw std::invalid_argument("wreath_char: tuple must have one slot per character");
    SymFunc out = SymFunc::unit(Basis::Schur, Partition());
    for (int r = 1; r <= a; ++r) {
        const Partition& lam = ul.entry(r - 1);
        if (lam.size() == 0) continue;
        out = multiply(out, plethysm(schur_line(lam), nfd_content_gf(a, r)));
    }
    return out;
}

Int wreath_dim(const PartitionTuple& ul) {
    std::vector<int> alpha = ul.alpha();
    Int dim = multinomial(ul.total(), alpha);
    for (const auto& lam : ul.entries())
        if (lam.size() > 0) dim *= syt_count(lam);
    return dim;
}

std::map<PartitionTuple, SymFunc> graded_frobenius(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("graded_frobenius: a, b must be positive");
    const int n = a * b;

    std::map<PartitionTuple, SymFunc> by_modules;
    for (const auto& ul : partition_tuples(a, b))
        by_modules.emplace(ul, Rat(wreath_dim(ul)) * wreath_char(a, ul));

    std::map<PartitionTuple, ContentAccumulator> by_flex, by_maj;
    for_each_word(n, n, [&](std::span<const int> w) {
        by_flex.try_emplace(flex_ab(w, a, b), n).first->second.add_word(w);
        by_maj.try_emplace(maj_ab(w, a, b), n).first->second.add_word(w);
    });

    for (auto* bucketed : {&by_flex, &by_maj}) {
        if (bucketed->size() != by_modules.size())
            throw std::logic_error("graded Frobenius routes disagree");
        for (const auto& [ul, acc] : *bucketed)
            if (!value_equal(by_modules.at(ul), acc.to_symfunc()))
                throw std::logic_error("graded Frobenius routes disagree");
    }
    return by_modules;
}

SymFunc higher_lie(const Partition& lam) {
    if (lam.size() < 1) throw std::invalid_argument("higher_lie: partition must be nonempty");
    SymFunc out = SymFunc::unit(Basis::Schur, Partition());
    for (const auto& [part, mult] : lam.multiplicities())
        out = multiply(out, schocker(part, mult, 1, SchockerKind::Trivial));
    return out;
}

SymFunc gessel_reutenauer_gf(const Partition& lam) {
    const int n = lam.size();
    if (n < 1) throw std::invalid_argument("gessel_reutenauer_gf: partition must be nonempty");

    ContentAccumulator acc(n);
    std::vector<int> word(static_cast<size_t>(n));
    std::vector<bool> strict(static_cast<size_t>(n), false);

    // words weakly increasing over {1..n} except for forced strict rises
    auto expand = [&](auto&& self, int pos, int low) -> void {
        if (pos == n) {
            acc.add_word(word);
            return;
        }
        for (int v = low; v <= n; ++v) {
            word[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, strict[static_cast<size_t>(pos)] ? v + 1 : v);
        }
    };

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> seen;
    do {
        // cycle type of perm
        seen.assign(static_cast<size_t>(n), 0);
        std::vector<int> type;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<size_t>(j)]; j = perm[static_cast<size_t>(j)] - 1) {
                seen[static_cast<size_t>(j)] = 1;
                ++len;
            }
            type.push_back(len);
        }
        if (Partition::from_unsorted(type) != lam) continue;

        std::fill(strict.begin(), strict.end(), false);
        for (int d : descent_set(perm)) strict[static_cast<size_t>(d - 1)] = true;
        expand(expand, 0, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    return acc.to_symfunc();
}

MashReport check_mash_candidate(const TupleStat& stat, int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("check_mash_candidate: a, b must be positive");
    const int n = a * b;

    // content classes, most refined first: all-distinct-letter words drive
    // the earliest fiber comparisons
    std::vector<Composition> classes = weak_compositions(n, n);
    std::stable_sort(classes.begin(), classes.end(),
                     [](const Composition& x, const Composition& y) {
                         auto support = [](const Composition& c) {
                             return std::count_if(c.begin(), c.end(), [](int v) { return v > 0; });
                         };
                         return support(x) > support(y);
                     });

    MashReport report;

    for (const auto& alpha : classes) {
        std::map<PartitionTuple, long long> candidate, reference;
        for_each_word_of_content(alpha, [&](std::span<const int> w) {
            ++candidate[stat(w)];
            ++reference[maj_ab(w, a, b)];
        });
        if (candidate != reference) {
            report.equidistributed = false;
            report.content_witness = alpha;
            break;
        }
    }

    std::map<Tableau, std::pair<Word, PartitionTuple>> fibers;
    for (const auto& alpha : classes) {
        if (!report.q_fiber_constant) break;
        for_each_word_of_content(alpha, [&](std::span<const int> w) {
            if (!report.q_fiber_constant) return;
            PartitionTuple value = stat(w);
            Tableau q = rsk(w).second;
            Word word(std::vector<int>(w.begin(), w.end()));
            auto [it, fresh] = fibers.try_emplace(std::move(q), word, value);
            if (fresh) return;
            if (it->second.second != value) {
                report.q_fiber_constant = false;
                report.fiber_witness = {std::move(word), it->second.first};
                report.fiber_values = {value, it->second.second};
                return;
            }
            it->second.first = std::move(word);  // most recent representative
        });
    }

    return report;
}

}  // namespace cyclesieve
