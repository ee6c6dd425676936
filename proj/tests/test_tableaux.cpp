#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "cyclesieve/partition.hpp"
#include "cyclesieve/tableau.hpp"
#include "cyclesieve/word.hpp"

using namespace cyclesieve;

TEST_CASE("rsk of the two fixed words shares the recording tableau") {
    auto [p1, q1] = rsk(Word{2, 3, 1, 4});
    auto [p2, q2] = rsk(Word{1, 4, 2, 3});
    Tableau expected_q({{1, 2, 4}, {3}});
    CHECK(q1 == expected_q);
    CHECK(q2 == expected_q);
    CHECK(p1 == Tableau({{1, 3, 4}, {2}}));
    CHECK(p2 == Tableau({{1, 2, 3}, {4}}));
}

TEST_CASE("rsk invariants over a full word class") {
    for_each_word(5, 3, [](std::span<const int> w) {
        auto [p, q] = rsk(w);
        CHECK(p.shape() == q.shape());
        CHECK(q.is_standard());
        CHECK(p.shape() == rsk_shape(w));
        // Q records the descents of the word
        CHECK(tableau_descents(q) == descent_set(w));
        // P has the content of the word
        Composition c(3, 0);
        for (const auto& row : p.rows())
            for (int v : row) ++c[static_cast<size_t>(v - 1)];
        CHECK(content_equal(c, content(w)));
    });
}

TEST_CASE("standard tableau counts and enumeration") {
    CHECK(syt_count(Partition({3, 1})) == 3);
    CHECK(syt_count(Partition({2, 2})) == 2);
    CHECK(syt_count(Partition({2, 1, 1})) == 3);
    CHECK(syt_count(Partition({4, 3, 1})) == 70);
    CHECK(enumerate_syt(Partition({3, 2})).size() == 5);

    // sum over shapes of (#SYT)^2 counts permutations
    Int total = 0;
    for (const auto& lam : partitions_of(6)) total += syt_count(lam) * syt_count(lam);
    CHECK(total == 720);
}

TEST_CASE("tableau maj statistics match word statistics through Q") {
    std::vector<int> nu{2, 3};
    for_each_word(5, 2, [&](std::span<const int> w) {
        Tableau q = rsk(w).second;
        CHECK(tableau_maj(q) == maj(w));
        CHECK(tableau_maj_n(q) == maj_n(w));
        CHECK(tableau_bfmaj_nu(q, nu) == bfmaj_nu(w, nu));
        CHECK(tableau_maj_nu(q, nu) == maj_nu(w, nu));
    });
}

TEST_CASE("syt maj counts split the tableau count") {
    for (const auto& lam : partitions_of(6)) {
        Int sum = 0;
        for (int r = 1; r <= 6; ++r) sum += syt_maj_count(lam, r);
        CHECK(sum == syt_count(lam));
    }
}

TEST_CASE("kostka numbers") {
    CHECK(kostka_number(Partition({2, 1}), {1, 1, 1}) == 2);
    CHECK(kostka_number(Partition({3}), {1, 1, 1}) == 1);
    CHECK(kostka_number(Partition({1, 1, 1}), {1, 1, 1}) == 1);
    CHECK(kostka_number(Partition({2, 2}), {2, 1, 1}) == 1);
    CHECK(kostka_number(Partition({2, 2}), {1, 1, 1, 1}) == 2);
    CHECK(kostka_number(Partition({1, 1}), {2}) == 0);
    // K_{lam,lam} = 1 and dominance gives zero below
    CHECK(kostka_number(Partition({3, 1}), {3, 1}) == 1);
    CHECK(kostka_number(Partition({3, 1}), {4}) == 0);
    CHECK(enumerate_ssyt(Partition({2, 1}), {1, 1, 1}).size() == 2);
}

TEST_CASE("tuple statistics of the fixed block example") {
    Word w = Word::from_digits("323134212352");
    PartitionTuple fx = flex_ab(w, 3, 4);
    PartitionTuple mj = maj_ab(w, 3, 4);
    CHECK(fx == PartitionTuple({Partition({1}), Partition({2, 1}), Partition()}));
    CHECK(mj == PartitionTuple({Partition({1, 1}), Partition({1}), Partition({1})}));
}

TEST_CASE("tuple statistics on the fixed small pair") {
    CHECK(maj_ab(Word{2, 3, 1, 4}, 2, 2) ==
          PartitionTuple({Partition(), Partition({1, 1})}));
    CHECK(maj_ab(Word{1, 4, 2, 3}, 2, 2) ==
          PartitionTuple({Partition(), Partition({2})}));
}

TEST_CASE("tuple statistics sizes and degenerate parameters") {
    for_each_word(4, 2, [](std::span<const int> w) {
        PartitionTuple fx = flex_ab(w, 2, 2);
        PartitionTuple mj = maj_ab(w, 2, 2);
        CHECK(fx.slots() == 2);
        CHECK(mj.slots() == 2);
        CHECK(fx.total() == 2);
        CHECK(mj.total() == 2);
    });
    // a = 1: the single slot records the shape of the whole word
    Word w{2, 1, 3, 1};
    PartitionTuple t = maj_ab(w, 1, 4);
    REQUIRE(t.slots() == 1);
    CHECK(t.entry(0) == rsk_shape(w));
    // b = 1: a single cell sits at position maj_n(w)
    PartitionTuple s = maj_ab(w, 4, 1);
    REQUIRE(s.slots() == 4);
    for (int r = 1; r <= 4; ++r)
        CHECK(s.entry(r - 1) == (r == maj_n(w) ? Partition({1}) : Partition()));
}

TEST_CASE("block order parameter changes the recorded shapes consistently") {
    // reverse-lexicographic block order still gives slot shapes of the same sizes
    BlockOrder rev = [](const Word& x, const Word& y) { return y < x; };
    for_each_word(4, 2, [&](std::span<const int> w) {
        PartitionTuple a = maj_ab(w, 2, 2);
        PartitionTuple b = maj_ab(w, 2, 2, rev);
        REQUIRE(a.slots() == b.slots());
        for (int i = 0; i < a.slots(); ++i)
            CHECK(a.entry(i).size() == b.entry(i).size());
    });
}

TEST_CASE("partition tuple enumeration") {
    CHECK(partition_tuples(2, 2).size() == 5);   // ((2)),((11)) in two slots + splits
    CHECK(partition_tuples(1, 3).size() == 3);   // partitions of 3
    CHECK(partition_tuples(3, 1).size() == 3);   // one cell in one of three slots
    for (const auto& t : partition_tuples(2, 3)) {
        CHECK(t.slots() == 2);
        CHECK(t.total() == 3);
    }
}
