#pragma once

// Words over the alphabet {1, 2, ...} and their cyclic statistics.
//
// Conventions, fixed once for the whole library:
//   * positions are 1-based; Des(w) = { i : w_i > w_{i+1} }, i in [n-1]
//   * maj(w) is the sum of descent positions; maj of the empty word and of
//     any one-letter word is 0
//   * maj_n(w) is maj reduced mod n = len(w) into the window [n] = {1..n}
//   * the rotation operator sends w_1...w_n to w_n w_1 ... w_{n-1}
//   * flex(w) = freq(w) * (1-based rank of w among its distinct rotations
//     in lexicographic order)

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cyclesieve {

struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls);
    Word(std::initializer_list<int> ls);

    // "15531553" -> Word{1,5,5,3,1,5,5,3}; digits 1..9 only.
    static Word from_digits(const std::string& digits);

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    operator std::span<const int>() const { return letters; }

    auto operator<=>(const Word&) const = default;
};

std::string to_string(const Word& w);

// Content composition: parts[j-1] = multiplicity of letter j, up to the
// largest letter present. content of the empty word is ().
using Composition = std::vector<int>;

Composition strip_trailing_zeros(Composition c);
bool content_equal(const Composition& a, const Composition& b);

std::vector<int> descent_set(std::span<const int> w);
int maj(std::span<const int> w);

// maj mod n mapped into {1,...,n}; requires a nonempty word.
int maj_n(std::span<const int> w);

Composition content(std::span<const int> w);

// (period, frequency): w = v^f with v primitive of length p, p * f = n.
std::pair<int, int> period_freq(std::span<const int> w);

// The distinct rotations of w, starting from w and applying the rotation
// operator repeatedly; exactly period(w) entries.
std::vector<Word> rotations(std::span<const int> w);

// 1-based position of w in the lexicographic ordering of its distinct
// rotations.
int lex_rank(std::span<const int> w);

int flex(std::span<const int> w);

// All m^n words over {1..m} in lexicographic order, streamed.
void for_each_word(int n, int m, const std::function<void(std::span<const int>)>& fn);
std::vector<Word> enumerate_words(int n, int m);

// All words with content alpha (alpha may contain zeros), lexicographic.
void for_each_word_of_content(const Composition& alpha,
                              const std::function<void(std::span<const int>)>& fn);
std::vector<Word> enumerate_words_by_content(const Composition& alpha);

// Blockwise major index: split w into consecutive blocks of lengths nu and
// take maj_{nu_j} of each block. Requires len(w) == sum(nu), nu_j >= 1.
std::vector<int> bfmaj_nu(std::span<const int> w, std::span<const int> nu);

// maj_nu(w) = sum_j (L / nu_j) * bfmaj_nu(w)_j reduced mod L into [L],
// where L = lcm(nu).
int maj_nu(std::span<const int> w, std::span<const int> nu);

long long lcm_of(std::span<const int> nu);

}  // namespace cyclesieve
