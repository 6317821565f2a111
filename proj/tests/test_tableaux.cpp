// Skew tableau parsing and printing, Kashiwara-Nakashima validation, the
// split form, weights, key tableaux, the canonical maximum-overlap
// alignment of a column sequence, and signed-permutation orbits.

#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "sptab/errors.hpp"
#include "sptab/tableau.hpp"

using namespace sptab;

namespace {

SkewTableau T(const std::string& literal, int n) { return parse_tableau(literal, n); }

}  // namespace

TEST_CASE("literal round trips") {
    for (const char* lit : {"1", "-1", "1,1;2", "2,2;3,3;-3", ".,2;1,3;2,-1",
                            ".,.,3;.,1,-3;2,-2,-1", ".,.,3;1,-3,-1;3;-3",
                            "2,3,3,4;4,-4,-4,-4;-5,-3,-2;-4;-3"}) {
        SkewTableau t = T(lit, 5);
        CHECK(t.to_literal() == lit);
        SkewTableau back = tableau_from_json(t.to_json());
        CHECK(back.to_literal() == lit);
        CHECK(back.n == t.n);
        CHECK(parse_tableau_any(t.to_json().dump(), 0).to_literal() == lit);
    }
}

TEST_CASE("parse_tableau rejects malformed literals") {
    CHECK_THROWS_AS(T("1,,2", 3), error);
    CHECK_THROWS_AS(T("1,2;;3", 3), error);
    CHECK_THROWS_AS(T("x", 3), error);
    CHECK_THROWS_AS(T("4", 3), error);      // out of range
    CHECK_THROWS_AS(T("-4", 3), error);     // out of range
    CHECK_THROWS_AS(T("1;.,2", 3), error);  // inner cells not a partition
    CHECK_THROWS_AS(T("1,2;1,2,3", 3), error);  // rows grow downward
}

TEST_CASE("placed column accessors") {
    SkewTableau t = T(".,2;1,3;2,-1", 3);
    REQUIRE(t.cols.size() == 2);
    const PlacedColumn& c1 = t.cols[0];
    CHECK(c1.top == 2);
    CHECK(c1.cells == Column{1, 2});
    CHECK(c1.height() == 2);
    CHECK(c1.bottom() == 3);
    CHECK_FALSE(c1.empty());
    CHECK(c1.covers(2));
    CHECK(c1.covers(3));
    CHECK_FALSE(c1.covers(1));
    CHECK(c1.at(2) == 1);
    CHECK(c1.at(3) == 2);
    CHECK(t.cols[1].top == 1);
    CHECK(t.cols[1].cells == Column{2, 3, -1});

    CHECK_FALSE(t.straight());
    CHECK(t.first_row() == 1);
    CHECK(t.last_row() == 3);
    CHECK(t.cell_count() == 5);
    CHECK(t.column_lengths() == std::vector<int>{2, 3});
    CHECK(t.contents() == std::vector<Column>{{1, 2}, {2, 3, -1}});

    SkewTableau s = T("2,2;3,3;-3", 3);
    CHECK(s.straight());
    CHECK_FALSE(s.empty());
    CHECK(s.cell_count() == 5);
    CHECK(s.column_lengths() == std::vector<int>{3, 2});

    SkewTableau e;
    CHECK(e.empty());
    CHECK(e.straight());
    CHECK(e.first_row() == 1);
    CHECK(e.last_row() == 0);
}

TEST_CASE("tableau_from_columns builds a straight tableau") {
    SkewTableau t = tableau_from_columns({{1, 3, -3}, {3, -3}, {-1}}, 3);
    CHECK(t.straight());
    CHECK(t.to_literal() == "1,3,-1;3,-3;-3");
}

TEST_CASE("split form of the two-and-two staircase tableau") {
    SkewTableau t = T("2,2;3,3;-3", 3);
    CHECK(validate_kn(t).valid);
    CHECK_NOTHROW(require_kn(t));
    CHECK(split_form(t).to_literal() == "1,2,2,2;2,3,3,3;-3,-1");
    CHECK(weight(t) == std::vector<int>{0, 2, 1});
}

TEST_CASE("split form of the four-column n = 5 tableau") {
    SkewTableau t = T("2,3,3,4;4,-4,-4,-4;-5,-3,-2;-4;-3", 5);
    CHECK(validate_kn(t).valid);
    CHECK(split_form(t).to_literal() ==
          "1,2,2,3,3,3,3,4;2,4,-4,-4,-4,-4,-4,-3;-5,-5,-3,-2,-2,-2;-4,-3;-3,-1");
}

TEST_CASE("split form doubles the columns of a key tableau") {
    SkewTableau k = T("1,1,2;2,2;-3", 3);
    SkewTableau s = split_form(k);
    auto cols = s.contents();
    REQUIRE(cols.size() == 6);
    for (size_t j = 0; j < 3; ++j) {
        CHECK(cols[2 * j] == k.contents()[j]);
        CHECK(cols[2 * j + 1] == k.contents()[j]);
    }
}

TEST_CASE("validation failure reasons") {
    // Column strictness is checked during validation, not parsing: a bare
    // literal reads as rows, so build the offending columns directly.
    ValidationResult r = validate_kn(tableau_from_columns({{1, 2}, {2, 1}}, 2));
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "column 2: column entries not strictly increasing: 2,1");

    r = validate_kn(tableau_from_columns({{1, 2, -1}}, 3));
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "column 1 breaks 1CC at 1");

    r = validate_kn(T("2,1", 2));
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "split form row 1 decreases between columns 2 and 3");

    r = validate_kn(T("3,3;-3,-3", 3));
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "split form row 1 decreases between columns 2 and 3");

    CHECK_THROWS_AS(require_kn(tableau_from_columns({{1, 2, -1}}, 3)), invalid_tableau);
}

TEST_CASE("key_of_weight produces the expected key tableaux") {
    CHECK(key_of_weight({2, 1}, {2, 1}, 2).to_literal() == "1,1;2");
    CHECK(key_of_weight({1, 2}, {2, 1}, 2).to_literal() == "1,2;2");
    CHECK(key_of_weight({2, -1}, {2, 1}, 2).to_literal() == "1,1;-2");
    CHECK(key_of_weight({-1, 2}, {2, 1}, 2).to_literal() == "2,2;-1");
    CHECK(key_of_weight({1, -2}, {2, 1}, 2).to_literal() == "1,-2;-2");
    CHECK(key_of_weight({-2, 1}, {2, 1}, 2).to_literal() == "2,-1;-1");
    CHECK(key_of_weight({-1, -2}, {2, 1}, 2).to_literal() == "-2,-2;-1");
    CHECK(key_of_weight({-2, -1}, {2, 1}, 2).to_literal() == "-2,-1;-1");

    SkewTableau k = key_of_weight({0, 2, 1}, {2, 1}, 3);
    CHECK(k.to_literal() == "2,2;3");
    CHECK(weight(k) == std::vector<int>{0, 2, 1});

    CHECK_THROWS_AS(key_of_weight({2, 2}, {2, 1}, 2), weight_not_in_orbit);
    CHECK_THROWS_AS(key_of_weight({3, 1}, {2, 1}, 2), weight_not_in_orbit);
}

TEST_CASE("is_key_tableau accepts exactly the nested-column tableaux") {
    for (const char* lit : {"1,1;2", "1,2;2", "1,1;-2", "2,2;-1", "-2,-2;-1", "1,-2;-2",
                            "2,-1;-1", "-2,-1;-1"})
        CHECK(is_key_tableau(T(lit, 2)));
    // Columns not nested, or a value present both barred and unbarred.
    for (const char* lit : {"1,2;-2", "1,-1;2", "2,-2;-1", "1,3,-1;3,-3;-3"})
        CHECK_FALSE(is_key_tableau(T(lit, 3)));
}

TEST_CASE("entrywise_leq compares equal shapes cellwise") {
    CHECK(entrywise_leq(T("1,2;2", 2), T("2,2;-1", 2)));
    CHECK_FALSE(entrywise_leq(T("2,2;-1", 2), T("1,2;2", 2)));
    CHECK(entrywise_leq(T("1,1;2", 2), T("1,1;2", 2)));
    CHECK_THROWS_AS(entrywise_leq(T("1,1;2", 2), T("1,1,1", 2)), error);  // shapes differ
}

TEST_CASE("weights count unbarred minus barred occurrences") {
    CHECK(weight(T("1,3,-1;3,-3;-3", 3)) == std::vector<int>{0, 0, 0});
    CHECK(weight(T("2,-1;-1", 2)) == std::vector<int>{-2, 1});
    CHECK(weight(T(".,2;1,3;2,-1", 3)) == std::vector<int>{0, 2, 1});
}

TEST_CASE("canonical_alignment reproduces the worked slide placements") {
    // The five intermediate placements of the four-column n = 5 example.
    struct Stage {
        std::vector<Column> cols;
        std::vector<int> tops;
        const char* literal;
    };
    const std::vector<Stage> stages = {
        {{{2, -5, -3}, {3, 5, -5, -4, -3}, {3, -4, -2}, {4, -4}},
         {3, 1, 1, 1},
         ".,3,3,4;.,5,-4,-4;2,-5,-2;-5,-4;-3,-3"},
        {{{2, -5, -3}, {3, 5, -5, -4, -3}, {3, -4}, {4, -4, -2}},
         {4, 2, 2, 1},
         ".,.,.,4;.,3,3,-4;.,5,-4,-2;2,-5;-5,-4;-3,-3"},
        {{{2, -5, -3}, {2, -4}, {3, 5, -5, -4, -2}, {4, -4, -2}},
         {4, 4, 1, 1},
         ".,.,3,4;.,.,5,-4;.,.,-5,-2;2,2,-4;-5,-4,-2;-3"},
        {{{2, -5}, {2, -4, -3}, {3, 5, -5, -4, -2}, {4, -4, -2}},
         {4, 3, 1, 1},
         ".,.,3,4;.,.,5,-4;.,2,-5,-2;2,-4,-4;-5,-3,-2"},
        {{{2, -5}, {2, -4, -3}, {3, -4, -2}, {4, 5, -5, -4, -2}},
         {4, 3, 3, 1},
         ".,.,.,4;.,.,.,5;.,2,3,-5;2,-4,-4,-4;-5,-3,-2,-2"},
    };
    for (const Stage& st : stages) {
        SkewTableau t = canonical_alignment(st.cols, 5);
        for (size_t c = 0; c < st.cols.size(); ++c) {
            CHECK(t.cols[c].top == st.tops[c]);
            CHECK(t.cols[c].cells == st.cols[c]);
        }
        CHECK(t.to_literal() == st.literal);
    }
}

TEST_CASE("canonical_alignment handles empty slots and straight sequences") {
    CHECK(canonical_alignment({{1, 3, -3}, {3, -3}, {-1}}, 3).to_literal() ==
          "1,3,-1;3,-3;-3");
    CHECK(canonical_alignment({{1, 2}, {3, -3, -2}, {-1}}, 3).to_literal() ==
          ".,3,-1;1,-3;2,-2");
    CHECK(canonical_alignment({{1, 3, -3}, {-3}, {3, -1}}, 3).to_literal() ==
          ".,.,3;1,-3,-1;3;-3");
    // An empty slot separates the flanking columns edge to edge.
    SkewTableau v = canonical_alignment({{1, 2, 4}, {2}, {2, 3, 4}}, 4);
    CHECK(v.cols[0].top == 3);
    CHECK(v.cols[1].top == 3);
    CHECK(v.cols[2].top == 1);
    CHECK(v.to_literal() == ".,.,2;.,.,3;1,2,4;2;4");
    SkewTableau w = canonical_alignment({{1}, {}, {2}}, 2);
    CHECK(w.cols[0].top == 2);
    CHECK(w.cols[2].top == 1);
    CHECK(w.to_literal() == ".,2;1");
    CHECK(canonical_alignment({{2, -2}}, 2).to_literal() == "2;-2");
}

TEST_CASE("weyl_orbit enumerates signed permutations without duplicates") {
    auto orbit = weyl_orbit({2, 1}, 2);
    CHECK(orbit.size() == 8);
    std::set<std::vector<int>> seen(orbit.begin(), orbit.end());
    CHECK(seen.size() == 8);
    for (const std::vector<int>& v :
         {std::vector<int>{2, 1}, {1, 2}, {2, -1}, {-1, 2}, {1, -2}, {-2, 1}, {-1, -2}, {-2, -1}})
        CHECK(seen.count(v) == 1);

    CHECK(weyl_orbit({1, 1}, 2).size() == 4);
    CHECK(weyl_orbit({2, 2}, 2).size() == 4);
    CHECK(weyl_orbit({2, 1}, 3).size() == 24);  // one zero coordinate
}

TEST_CASE("apply_simple_reflection acts as the type C generators") {
    CHECK(apply_simple_reflection({2, 1}, 1, 2) == std::vector<int>{1, 2});
    CHECK(apply_simple_reflection({2, 1}, 2, 2) == std::vector<int>{2, -1});
    CHECK(apply_simple_reflection({3, 1, -2}, 2, 3) == std::vector<int>{3, -2, 1});
    CHECK(apply_simple_reflection({3, 1, -2}, 3, 3) == std::vector<int>{3, 1, 2});
}
