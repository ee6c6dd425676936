#include "cyclesieve/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cyclesieve {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition{};
    conj.resize(static_cast<size_t>(parts_[0]));
    for (int col = 0; col < parts_[0]; ++col)
        conj[static_cast<size_t>(col)] =
            static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                           [col](int p) { return p > col; }));
    return Partition(std::move(conj));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: partitions must have equal size");
    int sa = 0, sb = 0;
    size_t k = std::max(a.parts().size(), b.parts().size());
    for (size_t i = 0; i < k; ++i) {
        sa += i < a.parts().size() ? a.parts()[i] : 0;
        sb += i < b.parts().size() ? b.parts()[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

Int z_lambda(const Partition& lam) {
    Int z = 1;
    for (auto [part, mult] : lam.multiplicities()) {
        for (int i = 0; i < mult; ++i) z *= part;
        z *= factorial(mult);
    }
    return z;
}

Int syt_count(const Partition& lam) {
    const auto& parts = lam.parts();
    Partition conj = lam.conjugate();
    Int hooks = 1;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = conj.parts()[static_cast<size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(lam.size()) / hooks;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    s += ')';
    return s;
}

PartitionTuple::PartitionTuple(std::vector<Partition> entries) : entries_(std::move(entries)) {}

int PartitionTuple::total() const {
    int t = 0;
    for (const auto& p : entries_) t += p.size();
    return t;
}

std::vector<int> PartitionTuple::alpha() const {
    std::vector<int> a;
    a.reserve(entries_.size());
    for (const auto& p : entries_) a.push_back(p.size());
    return a;
}

std::vector<PartitionTuple> partition_tuples(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("partition_tuples: negative argument");
    std::vector<PartitionTuple> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == a) {
            if (remaining == 0) out.emplace_back(PartitionTuple(cur));
            return;
        }
        for (int sz = 0; sz <= remaining; ++sz)
            for (const auto& p : partitions_of(sz)) {
                cur.push_back(p);
                rec(slot + 1, remaining - sz);
                cur.pop_back();
            }
    };
    rec(0, b);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const PartitionTuple& t) {
    std::string s = "(";
    for (int i = 0; i < t.slots(); ++i) {
        if (i) s += ',';
        s += to_string(t.entry(i));
    }
    s += ')';
    return s;
}

}  // namespace cyclesieve
