#include "cyclesieve/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclesieve {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty()) throw std::invalid_argument("Tableau: empty row");
        if (i && row.size() > rows_[i - 1].size())
            throw std::invalid_argument("Tableau: row lengths must weakly decrease");
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) throw std::invalid_argument("Tableau: entries must be >= 1");
            if (j && row[j] < row[j - 1])
                throw std::invalid_argument("Tableau: rows must weakly increase");
            if (i && row[j] <= rows_[i - 1][j])
                throw std::invalid_argument("Tableau: columns must strictly increase");
        }
    }
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int Tableau::size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

bool Tableau::is_standard() const {
    std::vector<char> seen(static_cast<size_t>(size()) + 1, 0);
    for (const auto& row : rows_)
        for (int x : row) {
            if (x > size() || seen[static_cast<size_t>(x)]) return false;
            seen[static_cast<size_t>(x)] = 1;
        }
    return true;
}

std::string to_string(const Tableau& t) {
    std::string s;
    for (size_t i = 0; i < t.rows().size(); ++i) {
        if (i) s += '/';
        for (size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(t.rows()[i][j]);
        }
    }
    return s;
}

std::pair<Tableau, Tableau> rsk(std::span<const int> w) {
    std::vector<std::vector<int>> p, q;
    for (size_t k = 0; k < w.size(); ++k) {
        int cur = w[k];
        if (cur < 1) throw std::invalid_argument("rsk: letters must be >= 1");
        size_t r = 0;
        while (true) {
            if (r == p.size()) {
                p.push_back({cur});
                q.push_back({static_cast<int>(k) + 1});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), cur);
            if (it == p[r].end()) {
                p[r].push_back(cur);
                q[r].push_back(static_cast<int>(k) + 1);
                break;
            }
            std::swap(cur, *it);
            ++r;
        }
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Partition rsk_shape(std::span<const int> w) {
    std::vector<std::vector<int>> p;
    for (size_t k = 0; k < w.size(); ++k) {
        int cur = w[k];
        size_t r = 0;
        while (true) {
            if (r == p.size()) {
                p.push_back({cur});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), cur);
            if (it == p[r].end()) {
                p[r].push_back(cur);
                break;
            }
            std::swap(cur, *it);
            ++r;
        }
    }
    std::vector<int> parts;
    parts.reserve(p.size());
    for (const auto& row : p) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

namespace {

// row index of each value 1..n in a standard tableau
std::vector<int> value_rows(const Tableau& q) {
    if (!q.is_standard()) throw std::invalid_argument("expected a standard tableau");
    std::vector<int> row_of(static_cast<size_t>(q.size()) + 1, -1);
    for (size_t i = 0; i < q.rows().size(); ++i)
        for (int x : q.rows()[i]) row_of[static_cast<size_t>(x)] = static_cast<int>(i);
    return row_of;
}

int window_mod(int value, int n) { return (value - 1 + n * n) % n + 1; }

}  // namespace

std::vector<int> tableau_descents(const Tableau& q) {
    auto row_of = value_rows(q);
    std::vector<int> des;
    for (int i = 1; i < q.size(); ++i)
        if (row_of[static_cast<size_t>(i + 1)] > row_of[static_cast<size_t>(i)]) des.push_back(i);
    return des;
}

int tableau_maj(const Tableau& q) {
    auto des = tableau_descents(q);
    return std::accumulate(des.begin(), des.end(), 0);
}

int tableau_maj_n(const Tableau& q) {
    if (q.size() == 0) throw std::invalid_argument("tableau_maj_n: empty tableau");
    return window_mod(tableau_maj(q), q.size());
}

std::vector<int> tableau_bfmaj_nu(const Tableau& q, std::span<const int> nu) {
    int total = 0;
    for (int p : nu) {
        if (p < 1) throw std::invalid_argument("tableau_bfmaj_nu: block lengths must be positive");
        total += p;
    }
    if (total != q.size())
        throw std::invalid_argument("tableau_bfmaj_nu: block lengths must sum to size");
    auto des = tableau_descents(q);
    std::vector<int> out;
    out.reserve(nu.size());
    int off = 0;
    for (int p : nu) {
        int m = 0;
        for (int d : des)
            if (d > off && d < off + p) m += d - off;  // boundary descents belong to no block
        out.push_back(window_mod(m, p));
        off += p;
    }
    return out;
}

int tableau_maj_nu(const Tableau& q, std::span<const int> nu) {
    auto bf = tableau_bfmaj_nu(q, nu);
    long long L = lcm_of(nu);
    long long s = 0;
    for (size_t j = 0; j < bf.size(); ++j) s += (L / nu[j]) * bf[j];
    return static_cast<int>((s - 1) % L + 1);
}

void for_each_syt(const Partition& lam, const std::function<void(const Tableau&)>& fn) {
    int n = lam.size();
    std::vector<std::vector<int>> rows(static_cast<size_t>(lam.length()));
    for (size_t i = 0; i < rows.size(); ++i) rows[i].reserve(static_cast<size_t>(lam.part(static_cast<int>(i))));
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            fn(Tableau(rows));
            return;
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) >= lam.part(static_cast<int>(i))) continue;
            if (i && rows[i - 1].size() <= rows[i].size()) continue;  // cell above must exist
            rows[i].push_back(v);
            rec(v + 1);
            rows[i].pop_back();
        }
    };
    rec(1);
}

std::vector<Tableau> enumerate_syt(const Partition& lam) {
    std::vector<Tableau> out;
    for_each_syt(lam, [&](const Tableau& t) { out.push_back(t); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Shared SSYT backtracking; emit==nullptr just counts.
Int ssyt_walk(const Partition& lam, const Composition& mu,
              const std::function<void(const Tableau&)>* emit) {
    int n = lam.size();
    Composition want = strip_trailing_zeros(mu);
    int supply = std::accumulate(want.begin(), want.end(), 0);
    if (supply != n) return 0;
    std::vector<int> left(want.begin(), want.end());
    std::vector<std::vector<int>> rows(static_cast<size_t>(lam.length()));
    Int count = 0;
    std::function<void(int, int)> rec = [&](int ri, int ci) {
        if (ri == lam.length()) {
            ++count;
            if (emit) (*emit)(Tableau(rows));
            return;
        }
        int next_ri = ri, next_ci = ci + 1;
        if (next_ci == lam.part(ri)) {
            ++next_ri;
            next_ci = 0;
        }
        int lo = ci ? rows[static_cast<size_t>(ri)][static_cast<size_t>(ci - 1)] : 1;
        if (ri && static_cast<int>(rows[static_cast<size_t>(ri - 1)].size()) > ci)
            lo = std::max(lo, rows[static_cast<size_t>(ri - 1)][static_cast<size_t>(ci)] + 1);
        for (int x = lo; x <= static_cast<int>(left.size()); ++x) {
            if (!left[static_cast<size_t>(x - 1)]) continue;
            --left[static_cast<size_t>(x - 1)];
            rows[static_cast<size_t>(ri)].push_back(x);
            rec(next_ri, next_ci);
            rows[static_cast<size_t>(ri)].pop_back();
            ++left[static_cast<size_t>(x - 1)];
        }
    };
    if (n == 0) {
        ++count;
        if (emit) (*emit)(Tableau{});
        return count;
    }
    rec(0, 0);
    return count;
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& lam, const Composition& mu) {
    std::vector<Tableau> out;
    std::function<void(const Tableau&)> emit = [&](const Tableau& t) { out.push_back(t); };
    ssyt_walk(lam, mu, &emit);
    std::sort(out.begin(), out.end());
    return out;
}

Int kostka_number(const Partition& lam, const Composition& mu) {
    return ssyt_walk(lam, mu, nullptr);
}

Int syt_maj_count(const Partition& lam, int r) {
    int n = lam.size();
    if (n == 0 || r < 1 || r > n) throw std::invalid_argument("syt_maj_count: need r in [n], n >= 1");
    Int c = 0;
    for_each_syt(lam, [&](const Tableau& q) {
        if (tableau_maj_n(q) == r) ++c;
    });
    return c;
}

namespace {

PartitionTuple block_shapes(std::span<const int> w, int a, int b,
                            const std::function<int(std::span<const int>)>& block_value,
                            const BlockOrder& order) {
    if (a < 1 || b < 1) throw std::invalid_argument("block statistics: need a, b >= 1");
    if (static_cast<int>(w.size()) != a * b)
        throw std::invalid_argument("block statistics: word length must be a*b");

    std::vector<Word> blocks;
    blocks.reserve(static_cast<size_t>(b));
    for (int j = 0; j < b; ++j) {
        auto piece = w.subspan(static_cast<size_t>(j) * a, static_cast<size_t>(a));
        blocks.emplace_back(Word(std::vector<int>(piece.begin(), piece.end())));
    }

    // rank blocks in the chosen total order on length-a words
    std::vector<Word> sorted = blocks;
    auto less = order ? order : BlockOrder([](const Word& x, const Word& y) { return x < y; });
    std::sort(sorted.begin(), sorted.end(), less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto rank_of = [&](const Word& blk) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), blk, less);
        return static_cast<int>(it - sorted.begin()) + 1;
    };

    std::vector<std::vector<int>> buckets(static_cast<size_t>(a));
    for (const auto& blk : blocks) {
        int r = block_value(blk);
        buckets[static_cast<size_t>(r - 1)].push_back(rank_of(blk));
    }
    std::vector<Partition> entries;
    entries.reserve(static_cast<size_t>(a));
    for (const auto& bucket : buckets) entries.push_back(rsk_shape(bucket));
    return PartitionTuple(std::move(entries));
}

}  // namespace

PartitionTuple flex_ab(std::span<const int> w, int a, int b, const BlockOrder& order) {
    return block_shapes(w, a, b, [](std::span<const int> blk) { return flex(blk); }, order);
}

PartitionTuple maj_ab(std::span<const int> w, int a, int b, const BlockOrder& order) {
    return block_shapes(w, a, b, [](std::span<const int> blk) { return maj_n(blk); }, order);
}

}  // namespace cyclesieve
