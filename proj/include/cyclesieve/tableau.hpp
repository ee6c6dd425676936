#pragma once

// Young tableaux (English convention: row 1 on top, rows weakly increase
// left to right, columns strictly increase top to bottom) and RSK row
// insertion.

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "cyclesieve/partition.hpp"
#include "cyclesieve/word.hpp"

namespace cyclesieve {

class Tableau {
public:
    Tableau() = default;

    // Validates semistandardness; throws std::invalid_argument otherwise.
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const;  // number of cells

    // True iff entries are exactly 1..size, each once.
    bool is_standard() const;

    auto operator<=>(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

std::string to_string(const Tableau& t);

// Row-insertion RSK: word -> (P, Q); P semistandard with the content of w,
// Q standard recording the insertion order, Des(Q) = Des(w).
std::pair<Tableau, Tableau> rsk(std::span<const int> w);

// Shape of the insertion tableau only (cheaper than full rsk).
Partition rsk_shape(std::span<const int> w);

// Descents of a standard tableau: i such that i+1 sits in a strictly lower
// row than i.
std::vector<int> tableau_descents(const Tableau& q);
int tableau_maj(const Tableau& q);

// maj_n of a standard tableau, n = size.
int tableau_maj_n(const Tableau& q);

// Blockwise statistics of a standard tableau with size sum(nu): these are
// functions of the descent set alone, applied as if to any word w with
// Q(w) = q.
std::vector<int> tableau_bfmaj_nu(const Tableau& q, std::span<const int> nu);
int tableau_maj_nu(const Tableau& q, std::span<const int> nu);

// All standard tableaux of shape lam, in lexicographic order of row-reading
// words.
std::vector<Tableau> enumerate_syt(const Partition& lam);
void for_each_syt(const Partition& lam, const std::function<void(const Tableau&)>& fn);

// All semistandard tableaux of shape lam and content mu.
std::vector<Tableau> enumerate_ssyt(const Partition& lam, const Composition& mu);

// Kostka number K_{lam,mu} = #SSYT(lam, mu).
Int kostka_number(const Partition& lam, const Composition& mu);

// a_{lam,r} = #{ standard Q of shape lam : maj_n(Q) = r }, n = |lam|, r in [n].
Int syt_maj_count(const Partition& lam, int r);

// Ordering on length-a blocks used by the tuple statistics below; empty
// means lexicographic. Blocks of equal value compare equal, which is safe:
// they are identical words.
using BlockOrder = std::function<bool(const Word&, const Word&)>;

// Tuple statistics on words of length a*b: split w into b consecutive
// blocks of length a, bucket the blocks by flex (resp. maj_a) value
// r in [a] keeping their order, and record in slot r the RSK shape of the
// bucket read as a word over the ordered alphabet of length-a blocks.
PartitionTuple flex_ab(std::span<const int> w, int a, int b,
                       const BlockOrder& order = {});
PartitionTuple maj_ab(std::span<const int> w, int a, int b,
                      const BlockOrder& order = {});

}  // namespace cyclesieve
