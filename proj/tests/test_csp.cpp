#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "cyclesieve/csp.hpp"
#include "cyclesieve/necklace.hpp"
#include "cyclesieve/word.hpp"

using namespace cyclesieve;

namespace {
WordStat maj_stat = [](std::span<const int> w) { return maj(w); };
WordStat flex_stat = [](std::span<const int> w) { return flex(w); };
}  // namespace

TEST_CASE("orbit polynomial of a content class") {
    // content (2,2): 6 words, orbits {1122...} of size 4 and {1212, 2121} of size 2
    auto words = enumerate_words_by_content({2, 2});
    REQUIRE(words.size() == 6);
    IntPolyModQn f = orbit_polynomial(words, 4);
    CHECK(f.coeff(0) == 2);  // both orbits contribute q^0
    CHECK(f.coeff(1) == 1);
    CHECK(f.coeff(2) == 2);  // size-4 orbit at q^2, size-2 orbit at q^2
    CHECK(f.coeff(3) == 1);
    CHECK(f.sum_of_coeffs() == 6);
}

TEST_CASE("orbit polynomial rejects sets that are not rotation closed") {
    std::vector<Word> bad = {Word{1, 2}};
    CHECK_THROWS_AS(orbit_polynomial(bad, 2), std::invalid_argument);
    std::vector<Word> wrong_len = {Word{1, 2, 3}};
    CHECK_THROWS_AS(orbit_polynomial(wrong_len, 2), std::invalid_argument);
}

TEST_CASE("sieving holds for maj on content classes") {
    CHECK(verify_csp(enumerate_words_by_content({2, 2}), 4, maj_stat).holds);
    CHECK(verify_csp(enumerate_words_by_content({2, 1, 1}), 4, maj_stat).holds);
    CHECK(verify_csp(enumerate_words_by_content({3, 2}), 5, maj_stat).holds);
    CHECK(verify_csp(enumerate_words_by_content({1, 1, 1, 1}), 4, maj_stat).holds);

    CSPReport report = verify_csp(enumerate_words_by_content({2, 2}), 4, maj_stat);
    CHECK(report.order == 4);
    CHECK(report.orbit_profile == std::map<int, long long>{{2, 1}, {4, 1}});
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("sieving holds for flex on arbitrary rotation closed unions") {
    // union of two necklace orbits of different content
    std::set<Word> pool;
    for (const auto& rot : rotations(Word{1, 1, 2, 3})) pool.insert(rot);
    for (const auto& rot : rotations(Word{1, 2, 1, 2})) pool.insert(rot);
    std::vector<Word> W(pool.begin(), pool.end());
    CHECK(verify_csp(W, 4, flex_stat).holds);

    // all words of length 6 over two letters
    CHECK(verify_csp(enumerate_words(6, 2), 6, flex_stat).holds);
}

TEST_CASE("a constant statistic fails sieving with a concrete witness") {
    WordStat zero = [](std::span<const int>) { return 0; };
    CSPReport report = verify_csp(enumerate_words_by_content({1, 1}), 2, zero);
    REQUIRE_FALSE(report.holds);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->r == 1);
    CHECK(report.witness->fixed_count == 0);
    CHECK(report.witness->value_integral);
    CHECK(report.witness->value == 2);
}

TEST_CASE("maj_n and flex are equidistributed on every content class") {
    for (int n = 2; n <= 6; ++n) {
        // compositions of n with exactly two parts as a cheap family
        for (int a = 1; a < n; ++a) {
            EquidistributionReport rep = verify_equidistribution({a, n - a});
            CHECK(rep.equal);
            CHECK(rep.maj_counts == rep.flex_counts);
            long long sum = std::accumulate(rep.maj_counts.begin(), rep.maj_counts.end(), 0LL);
            CHECK(sum == multinomial(n, std::vector<int>{a, n - a}).convert_to<long long>());
        }
    }
    EquidistributionReport rep = verify_equidistribution({2, 1, 1});
    CHECK(rep.equal);
}
