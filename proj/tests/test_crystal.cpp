// Type C crystal operators and graphs: the signature rule on reading
// words, crystal generation checked against the symplectic Weyl dimension
// formula, Demazure and opposite Demazure crystals and atoms, and the
// character identities connecting them.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "sptab/crystal.hpp"
#include "sptab/errors.hpp"
#include "test_util.hpp"

using namespace sptab;

namespace {

SkewTableau T(const std::string& literal, int n) { return parse_tableau(literal, n); }

std::set<std::string> literal_set(const CrystalGraph& g, const std::vector<int>& idxs) {
    std::set<std::string> out;
    for (int v : idxs) out.insert(g.literals[v]);
    return out;
}

std::vector<int> negated(std::vector<int> v) {
    for (int& x : v) x = -x;
    return v;
}

// Pairing of a weight with the i-th simple coroot of type C_n.
int coroot_pairing(const std::vector<int>& wt, int i, int n) {
    return i < n ? wt[i - 1] - wt[i] : wt[n - 1];
}

}  // namespace

TEST_CASE("reading word runs over columns right to left") {
    CHECK(reading_word(T("1,3,-1;3,-3;-3", 3)) == std::vector<Letter>{-1, 3, -3, 1, 3, -3});
    CHECK(reading_word(T(".,2;1,3;2,-1", 3)) == std::vector<Letter>{2, 3, -1, 1, 2});
}

TEST_CASE("signature rule edges of the two-row crystal") {
    auto f = [](const std::string& lit, int i) {
        auto r = lower(T(lit, 2), i);
        REQUIRE(r.has_value());
        return r->to_literal();
    };
    CHECK(f("1,1;2", 1) == "1,2;2");
    CHECK(f("1,1;2", 2) == "1,1;-2");
    CHECK(f("1,2;2", 2) == "1,-2;2");
    CHECK(f("1,1;-2", 1) == "1,2;-2");

    CHECK_FALSE(lower(T("-2,-1;-1", 2), 1).has_value());
    CHECK_FALSE(lower(T("-2,-1;-1", 2), 2).has_value());
    CHECK_FALSE(raise(T("1,1;2", 2), 1).has_value());
    CHECK_FALSE(raise(T("1,1;2", 2), 2).has_value());
}

TEST_CASE("raising inverts lowering across a whole crystal") {
    for (int n : {2, 3}) {
        CrystalGraph g = generate_crystal({2, 1}, n);
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            for (int i = 1; i <= n; ++i) {
                auto down = lower(g.vertices[v], i);
                CHECK(down.has_value() == (g.f_edge[v][i - 1] >= 0));
                if (down) {
                    CHECK(down->to_literal() == g.literals[g.f_edge[v][i - 1]]);
                    auto up = raise(*down, i);
                    REQUIRE(up.has_value());
                    CHECK(up->to_literal() == g.literals[v]);
                }
            }
        }
    }
}

TEST_CASE("the sixteen vertices of the (2,1) crystal over n = 2") {
    CrystalGraph g = generate_crystal({2, 1}, 2);
    CHECK(g.vertices.size() == 16);
    const std::set<std::string> expected = {
        "1,1;2",   "1,2;2",   "1,1;-2",  "1,-2;2",  "1,2;-2",  "2,2;-2",
        "2,2;-1",  "2,-2;-2", "2,-2;-1", "-2,-2;-1", "1,-2;-2", "1,-1;-2",
        "1,-1;2",  "2,-1;-2", "2,-1;-1", "-2,-1;-1"};
    CHECK(std::set<std::string>(g.literals.begin(), g.literals.end()) == expected);
    CHECK(g.literals[g.highest] == "1,1;2");
    CHECK(g.literals[g.lowest] == "-2,-1;-1");
    CHECK(g.index_of("1,2;2") >= 0);
    CHECK(g.index_of(T("1,2;2", 2)) == g.index_of("1,2;2"));
    CHECK(g.index_of("9,9;9") == -1);

    // Highest and lowest weight vertices are the extreme keys.
    CHECK(g.literals[g.highest] == key_of_weight({2, 1}, {2, 1}, 2).to_literal());
    CHECK(g.literals[g.lowest] == key_of_weight({-2, -1}, {2, 1}, 2).to_literal());
}

TEST_CASE("crystal sizes match the Weyl dimension formula") {
    for (int n : {2, 3}) {
        for (const std::vector<int>& lambda : test_util::partitions_up_to(4, n)) {
            CrystalGraph g = generate_crystal(lambda, n);
            CHECK((long long)g.vertices.size() == test_util::symplectic_dimension(lambda, n));
        }
    }
}

TEST_CASE("the one-column (1,1) crystal over n = 2 is the admissible column set") {
    CrystalGraph g = generate_crystal({1, 1}, 2);
    CHECK(g.vertices.size() == 5);
    std::set<std::string> expected;
    for (const Column& c : test_util::all_columns(2, 2))
        if (is_admissible(c, 2)) expected.insert(tableau_from_columns({c}, 2).to_literal());
    CHECK(expected.size() == 5);
    CHECK(std::set<std::string>(g.literals.begin(), g.literals.end()) == expected);
}

TEST_CASE("string lengths track the coroot pairing of the weight") {
    for (const std::vector<int>& lambda : {std::vector<int>{2, 1}, {1, 1}}) {
        CrystalGraph g = generate_crystal(lambda, 2);
        for (const SkewTableau& t : g.vertices) {
            std::vector<int> wt = weight(t);
            for (int i = 1; i <= 2; ++i) {
                CHECK(eps_count(t, i) >= 0);
                CHECK(phi_count(t, i) >= 0);
                CHECK(phi_count(t, i) - eps_count(t, i) == coroot_pairing(wt, i, 2));
            }
        }
        CHECK(eps_count(g.vertices[g.highest], 1) == 0);
        CHECK(eps_count(g.vertices[g.highest], 2) == 0);
        CHECK(phi_count(g.vertices[g.lowest], 1) == 0);
        CHECK(phi_count(g.vertices[g.lowest], 2) == 0);
    }
}

TEST_CASE("reduced words walk the orbit from lambda") {
    const std::vector<int> lambda = {2, 1};
    for (const std::vector<int>& v : weyl_orbit(lambda, 2)) {
        std::vector<int> word = reduced_word_for(v, lambda, 2);
        std::vector<int> x = lambda;
        for (int i : word) x = apply_simple_reflection(x, i, 2);
        CHECK(x == v);
    }
    CHECK(reduced_word_for(lambda, lambda, 2).empty());
    CHECK_THROWS_AS(reduced_word_for({3, 0}, lambda, 2), weight_not_in_orbit);
    CHECK_THROWS_AS(reduced_word_for({2, 2}, lambda, 2), weight_not_in_orbit);

    for (const std::vector<int>& v : weyl_orbit({2, 2, 1}, 3)) {
        std::vector<int> word = reduced_word_for(v, {2, 2, 1}, 3);
        std::vector<int> x = {2, 2, 1};
        for (int i : word) x = apply_simple_reflection(x, i, 3);
        CHECK(x == v);
    }
}

TEST_CASE("Demazure crystals grow from the highest weight") {
    CrystalGraph g = generate_crystal({2, 1}, 2);
    CHECK(literal_set(g, demazure_crystal(g, {})) == std::set<std::string>{"1,1;2"});
    CHECK(literal_set(g, demazure_crystal(g, reduced_word_for({-1, 2}, {2, 1}, 2))) ==
          std::set<std::string>{"1,1;-2", "1,1;2", "1,2;-2", "1,2;2", "2,2;-1", "2,2;-2"});
    CHECK(demazure_crystal(g, reduced_word_for({-2, -1}, {2, 1}, 2)).size() == 16);
    CHECK(opposite_demazure_crystal(g, reduced_word_for({2, 1}, {2, 1}, 2)).empty() == false);
}

TEST_CASE("atoms partition the crystal with one key tableau each") {
    CrystalGraph g = generate_crystal({2, 1}, 2);
    const std::map<std::vector<int>, std::set<std::string>> expected = {
        {{2, 1}, {"1,1;2"}},
        {{1, 2}, {"1,2;2"}},
        {{2, -1}, {"1,1;-2"}},
        {{-1, 2}, {"1,2;-2", "2,2;-1", "2,2;-2"}},
        {{1, -2}, {"1,-2;-2", "1,-2;2"}},
        {{-2, 1}, {"1,-1;-2", "1,-1;2", "2,-1;-1", "2,-1;-2"}},
        {{-1, -2}, {"-2,-2;-1", "2,-2;-1", "2,-2;-2"}},
        {{-2, -1}, {"-2,-1;-1"}},
    };
    size_t total = 0;
    std::set<std::string> seen;
    for (const auto& [v, members] : expected) {
        std::set<std::string> atom = literal_set(g, demazure_atom(g, v));
        CHECK(atom == members);
        total += atom.size();
        seen.insert(atom.begin(), atom.end());
        int keys = 0;
        for (const std::string& lit : atom) keys += is_key_tableau(T(lit, 2));
        CHECK(keys == 1);
        CHECK(atom.count(key_of_weight(v, {2, 1}, 2).to_literal()) == 1);
    }
    CHECK(total == 16);
    CHECK(seen.size() == 16);
}

TEST_CASE("opposite atoms mirror the atoms") {
    CrystalGraph g = generate_crystal({2, 1}, 2);
    size_t total = 0;
    std::set<std::string> seen;
    for (const std::vector<int>& v : weyl_orbit({2, 1}, 2)) {
        std::set<std::string> atom = literal_set(g, opposite_demazure_atom(g, v));
        CHECK(atom.size() == literal_set(g, demazure_atom(g, negated(v))).size());
        int keys = 0;
        for (const std::string& lit : atom) keys += is_key_tableau(T(lit, 2));
        CHECK(keys == 1);
        CHECK(atom.count(key_of_weight(v, {2, 1}, 2).to_literal()) == 1);
        total += atom.size();
        seen.insert(atom.begin(), atom.end());
    }
    CHECK(total == 16);
    CHECK(seen.size() == 16);
}

TEST_CASE("Laurent polynomial arithmetic") {
    LaurentPolynomial p;
    p.add({1, 0}, 1);
    p.add({0, -1}, 2);
    p.add({1, 0}, -1);  // cancels the first term
    CHECK(p.terms.size() == 1);
    CHECK(p.to_string() == "2*x2^-1");
    LaurentPolynomial q = p.inverted();
    CHECK(q.to_string() == "2*x2");
    LaurentPolynomial r = q.reflected(1, 2);  // swap the two exponents
    CHECK(r.to_string() == "2*x1");
    LaurentPolynomial s = q.reflected(2, 2);  // negate the last exponent
    CHECK(s == p);
    LaurentPolynomial zero;
    CHECK(zero.to_string() == "0");
}

TEST_CASE("the full character of the (2,1) crystal over n = 2") {
    CrystalGraph g = generate_crystal({2, 1}, 2);
    LaurentPolynomial chi = full_character(g);
    CHECK(chi.to_string() ==
          "x1^2*x2 + x1^2*x2^-1 + x1*x2^2 + 2*x1 + x1*x2^-2 + 2*x2 + 2*x2^-1 + x1^-1*x2^2 + "
          "2*x1^-1 + x1^-1*x2^-2 + x1^-2*x2 + x1^-2*x2^-1");
    // Invariant under every simple reflection and under inversion.
    CHECK(chi.reflected(1, 2) == chi);
    CHECK(chi.reflected(2, 2) == chi);
    CHECK(chi.inverted() == chi);
}

TEST_CASE("character identities across the orbit") {
    CrystalGraph g = generate_crystal({2, 1}, 2);
    LaurentPolynomial full = full_character(g);
    LaurentPolynomial atom_sum, op_atom_sum;
    for (const std::vector<int>& v : weyl_orbit({2, 1}, 2)) {
        LaurentPolynomial kappa = demazure_character(g, v);
        LaurentPolynomial kappa_op = opposite_demazure_character(g, negated(v));
        CHECK(kappa == kappa_op.inverted());
        LaurentPolynomial hat = demazure_atom_character(g, v);
        LaurentPolynomial hat_op = opposite_demazure_atom_character(g, negated(v));
        CHECK(hat == hat_op.inverted());
        for (const auto& [e, c] : hat.terms) atom_sum.add(e, c);
        for (const auto& [e, c] :
             opposite_demazure_atom_character(g, v).terms)
            op_atom_sum.add(e, c);
        CHECK((long long)demazure_crystal(g, reduced_word_for(v, {2, 1}, 2)).size() ==
              [&kappa] {
                  long long s = 0;
                  for (const auto& [e, c] : kappa.terms) s += c;
                  return s;
              }());
    }
    CHECK(atom_sum == full);
    CHECK(op_atom_sum == full);
    CHECK(demazure_character(g, {-2, -1}) == full);
}

TEST_CASE("crystal serializations") {
    CrystalGraph g = generate_crystal({1, 1}, 2);
    nlohmann::json j = crystal_to_json(g);
    CHECK(j["n"] == 2);
    CHECK(j["vertices"].size() == 5);
    CHECK(j["highest"] == "1;2");
    CHECK(j["lowest"] == "-2;-1");
    int edge_count = 0;
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (int i = 0; i < 2; ++i) edge_count += g.f_edge[v][i] >= 0;
    CHECK((int)j["edges"].size() == edge_count);

    std::string dot = crystal_to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("-2;-1") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
}
