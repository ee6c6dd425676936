#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "cyclesieve/necklace.hpp"
#include "cyclesieve/numbers.hpp"
#include "cyclesieve/word.hpp"

using namespace cyclesieve;

TEST_CASE("descents and major index of a fixed word") {
    Word w = Word::from_digits("15531553");
    CHECK(descent_set(w) == std::vector<int>{3, 4, 7});
    CHECK(maj(w) == 14);
    CHECK(maj_n(w) == 6);  // 14 mod 8 -> 6 in the window [8]
    CHECK(period_freq(w) == std::pair<int, int>{4, 2});
}

TEST_CASE("maj_n window edge cases") {
    CHECK(maj(Word{1}) == 0);
    CHECK(maj_n(Word{1}) == 1);           // 0 mod 1 -> window [1]
    CHECK(maj_n(Word{1, 2}) == 2);        // maj 0 -> 2
    CHECK(maj_n(Word{2, 1}) == 1);        // maj 1 -> 1
    CHECK(maj_n(Word{1, 2, 3}) == 3);     // maj 0 -> 3
    CHECK(maj_n(Word{3, 2, 1}) == 3);     // maj 3 -> 3
    CHECK(maj(std::vector<int>{}) == 0);
}

TEST_CASE("rotation direction sends the last letter to the front") {
    Word w{1, 2, 3, 4};
    auto rots = rotations(w);
    REQUIRE(rots.size() == 4);
    CHECK(rots[0] == Word{1, 2, 3, 4});
    CHECK(rots[1] == Word{4, 1, 2, 3});
    CHECK(rots[2] == Word{3, 4, 1, 2});
    CHECK(rots[3] == Word{2, 3, 4, 1});
}

TEST_CASE("flex of periodic words") {
    CHECK(flex(Word::from_digits("221221")) == 6);
    CHECK(flex(Word::from_digits("21132113")) == 6);
    // constant word: one rotation, frequency n
    CHECK(flex(Word{2, 2, 2}) == 3);
    // primitive word that is lex-least among its rotations
    CHECK(flex(Word{1, 1, 2}) == 1);
    CHECK(lex_rank(Word{2, 1, 1}) == 3);
}

TEST_CASE("flex is determined by frequency times lex rank") {
    for_each_word(5, 3, [](std::span<const int> w) {
        auto [p, f] = period_freq(w);
        CHECK(p * f == 5);
        CHECK(flex(w) == f * lex_rank(w));
        CHECK(static_cast<int>(rotations(w).size()) == p);
    });
}

TEST_CASE("word enumeration counts") {
    int count = 0;
    for_each_word(4, 3, [&](std::span<const int>) { ++count; });
    CHECK(count == 81);

    auto words = enumerate_words_by_content({2, 1, 1});
    CHECK(words.size() == 12);  // multinomial(4; 2,1,1)
    CHECK(multinomial(4, std::vector<int>{2, 1, 1}) == 12);
    for (const auto& w : words) CHECK(content(w) == Composition{2, 1, 1});
    CHECK(std::is_sorted(words.begin(), words.end()));

    // zero entries in the content are allowed and skip that letter
    auto gap = enumerate_words_by_content({1, 0, 1});
    REQUIRE(gap.size() == 2);
    CHECK(gap[0] == Word{1, 3});
}

TEST_CASE("blockwise major index of the fixed example") {
    Word w = Word::from_digits("44121361631");
    std::vector<int> nu{5, 3, 3};
    CHECK(maj_n(std::span<const int>(w.letters).subspan(0, 5)) == 1);
    CHECK(bfmaj_nu(w, nu) == std::vector<int>{1, 2, 3});
    CHECK(lcm_of(nu) == 15);
    CHECK(maj_nu(w, nu) == 13);
}

TEST_CASE("blockwise statistics depend only on the descent set") {
    std::vector<int> nu{2, 3};
    std::map<std::vector<int>, std::vector<int>> by_descents;
    for_each_word(5, 3, [&](std::span<const int> w) {
        auto key = descent_set(w);
        auto val = bfmaj_nu(w, nu);
        auto [it, fresh] = by_descents.emplace(key, val);
        if (!fresh) CHECK(it->second == val);
    });
}

TEST_CASE("necklace canonical form and filters") {
    Necklace nk = necklace_of(Word::from_digits("221221"));
    CHECK(nk.representative == Word::from_digits("122122"));
    CHECK(nk.period == 3);
    CHECK(nk.frequency == 2);

    // binary necklaces of length 4: 0000,0001,0011,0101,0111,1111 -> 6
    CHECK(enumerate_necklaces(4, 2).size() == 6);
    // aperiodic ones: 0001, 0011, 0111 -> 3
    CHECK(enumerate_necklaces(4, 2, NecklaceFilter::FreqEq, 1).size() == 3);
    // frequency dividing 2: adds 0101 -> 4
    CHECK(enumerate_necklaces(4, 2, NecklaceFilter::FreqDivides, 2).size() == 4);
    // every word lies in exactly one enumerated orbit
    long long total = 0;
    for (const auto& n : enumerate_necklaces(4, 2)) total += n.period;
    CHECK(total == 16);
}

TEST_CASE("necklace representative is the least rotation") {
    for_each_word(6, 2, [](std::span<const int> w) {
        Necklace nk = necklace_of(w);
        for (const auto& rot : rotations(w)) CHECK(nk.representative <= rot);
    });
}
