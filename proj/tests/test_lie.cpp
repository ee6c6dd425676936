#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cyclesieve/characters.hpp"
#include "cyclesieve/lie.hpp"
#include "cyclesieve/symfunc.hpp"
#include "cyclesieve/tableau.hpp"

using namespace cyclesieve;

namespace {
SymFunc s(std::initializer_list<int> parts) { return SymFunc::unit(Basis::Schur, Partition(parts)); }
}  // namespace

TEST_CASE("necklace content generating functions in low degree") {
    CHECK(value_equal(nf_content_gf(2, 1), s({1, 1})));
    // constant words only: the pure monomial sum m_2
    CHECK(value_equal(nf_content_gf(2, 2), s({2}) - s({1, 1})));
    // all necklaces of length two: m_2 + m_11 = h_2
    CHECK(value_equal(nfd_content_gf(2, 2), s({2})));
    CHECK_FALSE(value_equal(nfd_content_gf(2, 2), nf_content_gf(2, 2)));
    CHECK(value_equal(nfd_content_gf(1, 1), s({1})));
    CHECK(value_equal(nfd_content_gf(4, 1), s({3, 1}) + s({2, 1, 1})));
    // frequencies that do not divide the length give the zero function
    CHECK(nf_content_gf(4, 3).is_zero());
}

TEST_CASE("fixed series for the full cycle") {
    auto series = kw_series(4);
    REQUIRE(series.size() == 4);
    CHECK(value_equal(series[0], s({3, 1}) + s({2, 1, 1})));
    CHECK(value_equal(series[1], s({3, 1}) + s({2, 2}) + s({1, 1, 1, 1})));
    CHECK(value_equal(series[2], s({3, 1}) + s({2, 1, 1})));
    CHECK(value_equal(series[3], s({4}) + s({2, 2}) + s({2, 1, 1})));
    // entries refine the regular representation of the cyclic group index
    SymFunc total(4, Basis::Schur);
    for (const auto& f : series) total += convert(f, Basis::Schur);
    for (const auto& lam : partitions_of(4))
        CHECK(total.coeff(lam) == Rat(syt_count(lam)));
}

TEST_CASE("cyclic exponents and their gcd collapse") {
    auto counts = cyclic_exponents(Partition({2, 2}));
    CHECK(counts == std::vector<Int>{0, 1, 0, 1});
    auto hook = cyclic_exponents(Partition({2, 1}));
    CHECK(hook == std::vector<Int>{1, 1, 0});
    for (int r = 1; r <= 4; ++r)
        CHECK(cyclic_exponents(Partition({3, 1}))[static_cast<size_t>(r - 1)] ==
              cyclic_exponents(Partition({3, 1}))[static_cast<size_t>(std::gcd(4, r) - 1)]);
}

TEST_CASE("block cyclic branching series on a fixed type") {
    auto series = stembridge_series({2, 1});
    REQUIRE(series.size() == 2);
    CHECK(value_equal(series[0], s({2, 1}) + s({1, 1, 1})));
    CHECK(value_equal(series[1], s({3}) + s({2, 1})));
    // blocks of size one only shift indices: nu = (1) gives the single word
    auto tiny = stembridge_series({1});
    REQUIRE(tiny.size() == 1);
    CHECK(value_equal(tiny[0], s({1})));
}

TEST_CASE("orbit frequency divisibility classes, all routes") {
    // trivial block rotation: every word is a singleton orbit, so the
    // full-index class carries the all-words generating function p1^n
    SymFunc p1 = SymFunc::unit(Basis::PowerSum, Partition({1}));
    SymFunc everything = multiply(multiply(p1, p1), p1);
    CHECK(value_equal(ofd_content_gf({1, 1, 1}, 1, 3), everything));
    // aperiodic class matches the branching series entry
    CHECK(value_equal(ofd_content_gf({2, 1}, 1, 3), s({2, 1}) + s({1, 1, 1})));
    auto series = ofd_series({2, 1}, 3);
    auto branch = stembridge_series({2, 1});
    REQUIRE(series.size() == branch.size());
    for (size_t r = 0; r < series.size(); ++r) CHECK(value_equal(series[r], branch[r]));
}

TEST_CASE("divisor-window moebius on fixed values") {
    CHECK(mobius_f(1, 1, 1) == 1);
    CHECK(mobius_f(1, 2, 2) == -1);
    CHECK(mobius_f(1, 2, 4) == -1);
    CHECK(mobius_f(2, 2, 4) == 0);
    CHECK(mobius_f(1, 3, 3) == -1);
    CHECK(mobius_f(1, 3, 6) == 0);
    CHECK(mobius_f(1, 6, 6) == 1);
    CHECK(mobius_f(1, 1, 4) == 0);
    CHECK(mobius_f(2, 1, 4) == 0);
    CHECK(mobius_f(4, 1, 4) == 1);
    CHECK_THROWS_AS(mobius_f(3, 2, 4), std::invalid_argument);
}

TEST_CASE("one dimensional wreath inductions in closed form") {
    CHECK(value_equal(schocker(2, 2, 1, SchockerKind::Trivial), s({2, 2}) + s({1, 1, 1, 1})));
    CHECK(value_equal(schocker(2, 2, 1, SchockerKind::Sign), s({2, 1, 1})));
    CHECK(value_equal(schocker(2, 2, 2, SchockerKind::Trivial), s({4}) + s({2, 2})));
    CHECK(value_equal(schocker(2, 2, 2, SchockerKind::Sign), s({3, 1})));
    // multiset and subset necklace generating functions agree with them
    CHECK(value_equal(necklace_multiset_gf(2, 1, 2), s({2, 2}) + s({1, 1, 1, 1})));
    CHECK(value_equal(necklace_subset_gf(2, 1, 2), s({2, 1, 1})));
    CHECK(value_equal(necklace_multiset_gf(2, 2, 2), s({4}) + s({2, 2})));
    CHECK(value_equal(necklace_subset_gf(2, 2, 2), s({3, 1})));
    // b = 1 collapses to a single necklace class
    CHECK(value_equal(schocker(3, 1, 1, SchockerKind::Trivial), nfd_content_gf(3, 1)));
    CHECK(value_equal(schocker(3, 1, 1, SchockerKind::Sign), nfd_content_gf(3, 1)));
}

TEST_CASE("wreath module characteristics and dimensions") {
    PartitionTuple sign_slot({Partition({1}), Partition()});
    PartitionTuple triv_slot({Partition(), Partition({1})});
    CHECK(value_equal(wreath_char(2, sign_slot), s({1, 1})));
    CHECK(value_equal(wreath_char(2, triv_slot), s({2})));
    CHECK(wreath_dim(sign_slot) == 1);
    CHECK(wreath_dim(triv_slot) == 1);

    PartitionTuple both({Partition({1}), Partition({1})});
    CHECK(wreath_dim(both) == 2);
    CHECK(value_equal(wreath_char(2, both), s({3, 1}) + s({2, 1, 1})));

    PartitionTuple two_row({Partition(), Partition({2})});
    CHECK(value_equal(wreath_char(2, two_row), s({4}) + s({2, 2})));
    CHECK(wreath_dim(two_row) == 1);
}

TEST_CASE("graded frobenius distribution for small parameters") {
    auto table = graded_frobenius(2, 2);
    CHECK(table.size() == 5);
    // entries carry the dimension factor already; q -> 1 gives the regular
    // representation
    SymFunc total(4, Basis::Schur);
    for (const auto& [ul, f] : table) total += convert(f, Basis::Schur);
    // each entry is dim times the induced characteristic
    PartitionTuple both({Partition({1}), Partition({1})});
    CHECK(value_equal(table.at(both),
                      Rat(wreath_dim(both)) * wreath_char(2, both)));
    for (const auto& lam : partitions_of(4))
        CHECK(total.coeff(lam) == Rat(syt_count(lam)));
}

TEST_CASE("higher lie modules match the descent class sums") {
    CHECK(value_equal(higher_lie(Partition({2})), s({1, 1})));
    CHECK(value_equal(higher_lie(Partition({3})), s({2, 1})));
    CHECK(value_equal(higher_lie(Partition({1, 1})), s({2})));
    CHECK(value_equal(higher_lie(Partition({2, 1})), s({2, 1}) + s({1, 1, 1})));
    CHECK(value_equal(gessel_reutenauer_gf(Partition({2, 1})),
                      s({2, 1}) + s({1, 1, 1})));
    CHECK(value_equal(gessel_reutenauer_gf(Partition({1, 1, 1})), s({3})));
    // the full sum over cycle types is the regular character
    SymFunc total(4, Basis::Schur);
    for (const auto& lam : partitions_of(4)) total += convert(higher_lie(lam), Basis::Schur);
    for (const auto& lam : partitions_of(4))
        CHECK(total.coeff(lam) == Rat(syt_count(lam)));
}

TEST_CASE("companion statistic probe reports the fixed witness") {
    TupleStat stat = [](std::span<const int> w) { return maj_ab(w, 2, 2); };
    MashReport report = check_mash_candidate(stat, 2, 2);
    CHECK(report.equidistributed);
    REQUIRE_FALSE(report.q_fiber_constant);
    REQUIRE(report.fiber_witness.has_value());
    CHECK(report.fiber_witness->first == Word{2, 3, 1, 4});
    CHECK(report.fiber_witness->second == Word{1, 4, 2, 3});
    REQUIRE(report.fiber_values.has_value());
    CHECK(report.fiber_values->first == PartitionTuple({Partition(), Partition({1, 1})}));
    CHECK(report.fiber_values->second == PartitionTuple({Partition(), Partition({2})}));

    // the two endpoints of the interpolation do satisfy both properties
    TupleStat shape = [](std::span<const int> w) { return maj_ab(w, 1, 4); };
    MashReport ok = check_mash_candidate(shape, 1, 4);
    CHECK(ok.equidistributed);
    CHECK(ok.q_fiber_constant);
    TupleStat pointer = [](std::span<const int> w) { return maj_ab(w, 4, 1); };
    MashReport ok2 = check_mash_candidate(pointer, 4, 1);
    CHECK(ok2.equidistributed);
    CHECK(ok2.q_fiber_constant);
}
