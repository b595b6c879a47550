#include <algorithm>
#include <set>

#include "doctest.h"
#include "schurq/composition.hpp"

using namespace schurq;

namespace {
Composition C(const std::string& s) { return Composition::parse(s); }
Partition P(const std::string& s) { return sort_to_partition(Composition::parse(s)); }
}  // namespace

TEST_SUITE("composition") {

TEST_CASE("compositions_of enumerates in binary-gap order") {
    auto c3 = compositions_of(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0] == C("3"));
    CHECK(c3[1] == C("2,1"));
    CHECK(c3[2] == C("1,2"));
    CHECK(c3[3] == C("1,1,1"));

    auto c1 = compositions_of(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == C("1"));

    auto c4 = compositions_of(4);
    REQUIRE(c4.size() == 8);
    CHECK(c4[0] == C("4"));
    CHECK(c4[1] == C("3,1"));
    CHECK(c4[2] == C("2,2"));
    CHECK(c4[3] == C("2,1,1"));
    CHECK(c4[4] == C("1,3"));
    CHECK(c4[5] == C("1,2,1"));
    CHECK(c4[6] == C("1,1,2"));
    CHECK(c4[7] == C("1,1,1,1"));

    CHECK(compositions_of(0).empty());

    for (int n = 1; n <= 9; ++n) {
        auto all = compositions_of(n);
        CHECK(all.size() == (size_t{1} << (n - 1)));
        std::set<Composition> seen;
        for (size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].size() == n);
            CHECK(composition_rank(all[i]) == i);
            seen.insert(all[i]);
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("sort_to_partition") {
    CHECK(sort_to_partition(C("2,1,2,1")) == P("2,2,1,1"));
    CHECK(sort_to_partition(C("1,2,2,3,1,1,1")) == P("3,2,2,1,1,1,1"));
    CHECK(sort_to_partition(C("5")) == P("5"));
    // idempotent and multiset-preserving
    for (int n = 1; n <= 7; ++n) {
        for (const auto& a : compositions_of(n)) {
            Partition p = sort_to_partition(a);
            CHECK(p.size() == a.size());
            CHECK(sort_to_partition(Composition(p.parts())) == p);
            parts_t x = a.parts(), y = p.parts();
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            CHECK(x == y);
        }
    }
}

TEST_CASE("coarsenings") {
    auto cs = coarsenings(C("1,2,1"));
    std::set<Composition> got(cs.begin(), cs.end());
    CHECK(got == std::set<Composition>{C("1,2,1"), C("3,1"), C("1,3"), C("4")});
    auto cs11 = coarsenings(C("1,1"));
    CHECK(std::set<Composition>(cs11.begin(), cs11.end()) ==
          std::set<Composition>{C("1,1"), C("2")});

    CHECK(is_coarsening(C("5,3,1,2"), C("1,2,2,3,1,1,1")));

    for (int n = 1; n <= 8; ++n) {
        for (const auto& a : compositions_of(n)) {
            auto all = coarsenings(a);
            CHECK(all.size() == (size_t{1} << (a.length() - 1)));
            std::set<Composition> s(all.begin(), all.end());
            CHECK(s.size() == all.size());
            CHECK(s.count(a) == 1);
            CHECK(s.count(Composition({n})) == 1);
            // predicate agrees with the generator
            for (const auto& x : compositions_of(n)) CHECK(is_coarsening(x, a) == (s.count(x) == 1));
        }
    }
}

TEST_CASE("dominance_compare") {
    CHECK(dominance_compare(P("4"), P("1,1,1,1")) == Order::Greater);
    CHECK(dominance_compare(P("3,1"), P("2,2")) == Order::Greater);
    CHECK(dominance_compare(P("2,2"), P("3,1")) == Order::Less);
    CHECK(dominance_compare(P("3,1"), P("3,1")) == Order::Equal);
    CHECK(dominance_compare(P("3,1,1,1"), P("2,2,2")) == Order::Incomparable);
    CHECK_THROWS_AS(dominance_compare(P("2"), P("1,1,1")), std::invalid_argument);

    // partial order on all partitions of n <= 8
    for (int n = 1; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps) {
            CHECK(dominance_compare(a, a) == Order::Equal);
            for (const auto& b : ps) {
                Order ab = dominance_compare(a, b);
                Order ba = dominance_compare(b, a);
                if (ab == Order::Greater) CHECK(ba == Order::Less);
                if (ab == Order::Equal) CHECK(a == b);
                if (ab == Order::Incomparable) CHECK(ba == Order::Incomparable);
                for (const auto& c : ps) {
                    if (ab == Order::Greater && dominance_compare(b, c) == Order::Greater)
                        CHECK(dominance_compare(a, c) == Order::Greater);
                }
            }
        }
    }
}

TEST_CASE("lex and strictness") {
    CHECK(lex_compare(C("3,2"), C("3,1,1")) > 0);
    CHECK(lex_compare(C("1,2"), C("2,1")) < 0);
    CHECK(lex_compare(C("2,1"), C("2,1")) == 0);
    CHECK(is_strict(P("4,3,1")));
    CHECK(!is_strict(P("3,2,2,1")));
}

TEST_CASE("serialization") {
    CHECK(C("3,1,2").str() == "3,1,2");
    CHECK(Composition().str() == "0");
    CHECK(Composition::parse("12,3").parts() == parts_t{12, 3});
    CHECK_THROWS_AS(Composition::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,-2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1, 2"), std::invalid_argument);
}

TEST_CASE("ribbon-level gluings") {
    CHECK(concat(C("2,1"), C("3,2")) == C("2,1,3,2"));
    CHECK(near_concat(C("2,1"), C("3,2")) == C("2,4,2"));
    CHECK(concat(Composition(), C("3")) == C("3"));
    CHECK(near_concat(C("3"), Composition()) == C("3"));
    CHECK(rotate180(C("2,3,1")) == C("1,3,2"));
}

TEST_CASE("partition enumeration") {
    CHECK(strict_partitions_of(10).size() == 10);
    CHECK(partitions_of(8).size() == 22);
    CHECK(strict_partitions_of(0).size() == 1);  // just the empty partition
    for (const auto& p : strict_partitions_of(9)) CHECK(p.size() == 9);
}

}  // TEST_SUITE
