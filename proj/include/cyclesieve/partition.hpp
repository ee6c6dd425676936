#pragma once

// Integer partitions and tuples of partitions.
//
// A Partition holds a weakly decreasing list of positive parts; the empty
// partition is allowed and prints as "()". Comparison is lexicographic on
// the parts vector, so sorting with std::greater gives the decreasing
// lexicographic order used everywhere for deterministic output.

#include <compare>
#include <string>
#include <vector>

#include "cyclesieve/numbers.hpp"

namespace cyclesieve {

class Partition {
public:
    Partition() = default;

    // Requires weakly decreasing positive parts.
    explicit Partition(std::vector<int> parts);

    // Sorts descending and drops zeros; negative entries are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;            // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_.at(static_cast<size_t>(i)); }

    Partition conjugate() const;

    // (part value, multiplicity) pairs, part values decreasing.
    std::vector<std::pair<int, int>> multiplicities() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of n (n >= 0) in decreasing lexicographic order:
// (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

// Dominance order via partial sums: true iff a >= b, requires |a| == |b|.
bool dominates(const Partition& a, const Partition& b);

// z_lambda = prod_i i^{m_i} m_i! (order of the centralizer of a permutation
// of cycle type lambda).
Int z_lambda(const Partition& lam);

// Number of standard Young tableaux of shape lam (hook length formula).
Int syt_count(const Partition& lam);

// "(3,1)"; the empty partition is "()".
std::string to_string(const Partition& p);

// A fixed-length tuple of partitions; entries may be empty.
class PartitionTuple {
public:
    PartitionTuple() = default;
    explicit PartitionTuple(std::vector<Partition> entries);

    const std::vector<Partition>& entries() const { return entries_; }
    const Partition& entry(int i) const { return entries_.at(static_cast<size_t>(i)); }
    int slots() const { return static_cast<int>(entries_.size()); }
    int total() const;                 // sum of entry sizes
    std::vector<int> alpha() const;    // entry sizes, in slot order

    auto operator<=>(const PartitionTuple&) const = default;

private:
    std::vector<Partition> entries_;
};

// All a-tuples of partitions with total size b, ordered lexicographically
// by entries (each entry compared as a Partition).
std::vector<PartitionTuple> partition_tuples(int a, int b);

// "((1),(2,1),())"
std::string to_string(const PartitionTuple& t);

}  // namespace cyclesieve
