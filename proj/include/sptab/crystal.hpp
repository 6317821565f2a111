#pragma once

// Type C_n crystal operators on Kashiwara-Nakashima tableaux, crystal
// graph generation, Demazure and opposite Demazure crystals and atoms,
// and their characters as Laurent polynomials.
//
// The operators use the signature rule on the reading word (columns right
// to left, each top to bottom). For i < n a letter contributes '+' when it
// is i or bar(i+1) and '-' when it is i+1 or bar(i); for i = n, the letter
// n is '+' and bar(n) is '-'. After cancelling every adjacent "+-" pair,
// f_i acts on the cell of the leftmost surviving '+' and e_i on the cell
// of the rightmost surviving '-'. Both act in place; columns stay strict.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sptab/tableau.hpp"

namespace sptab {

// Reading word: columns right to left, each read top to bottom.
std::vector<Letter> reading_word(const SkewTableau& t);

// f_i / e_i for 1 <= i <= n; empty optional at the string end.
std::optional<SkewTableau> lower(const SkewTableau& t, int i);
std::optional<SkewTableau> raise(const SkewTableau& t, int i);

int eps_count(const SkewTableau& t, int i);  // e_i steps to the top of the i-string
int phi_count(const SkewTableau& t, int i);  // f_i steps to the bottom

struct CrystalGraph {
    int n = 0;
    std::vector<int> shape;
    std::vector<SkewTableau> vertices;  // sorted by literal
    std::vector<std::string> literals;
    std::vector<std::vector<int>> f_edge;  // [v][i-1] -> target index or -1
    std::vector<std::vector<int>> e_edge;
    int highest = -1;  // index of the key of shape lambda (weight lambda)
    int lowest = -1;   // index of the key of weight -lambda

    int index_of(const std::string& literal) const;
    int index_of(const SkewTableau& t) const;
};

CrystalGraph generate_crystal(const std::vector<int>& lambda, int n);

// Demazure crystal for a word (i_1, ..., i_m), closing under f_{i_1}
// first; returns sorted vertex indices. The opposite version closes from
// the lowest weight under e_i.
std::vector<int> demazure_crystal(const CrystalGraph& g, const std::vector<int>& word);
std::vector<int> opposite_demazure_crystal(const CrystalGraph& g, const std::vector<int>& word);

// A word for the minimal Weyl element sending lambda to v (last reflection
// listed first, so demazure_crystal can apply it head first). Throws
// weight_not_in_orbit.
std::vector<int> reduced_word_for(const std::vector<int>& v, const std::vector<int>& lambda,
                                  int n);

// Atom: the Demazure crystal for v minus the Demazure crystals of all
// orbit weights u whose key lies entrywise below the key of v. The
// opposite atom mirrors this from below.
std::vector<int> demazure_atom(const CrystalGraph& g, const std::vector<int>& v);
std::vector<int> opposite_demazure_atom(const CrystalGraph& g, const std::vector<int>& v);

struct LaurentPolynomial {
    std::map<std::vector<int>, long long> terms;  // exponent vector -> coefficient

    void add(const std::vector<int>& exp, long long coef);
    bool operator==(const LaurentPolynomial&) const = default;

    LaurentPolynomial inverted() const;               // x_j -> 1/x_j
    LaurentPolynomial reflected(int i, int n) const;  // s_i acting on exponents

    std::string to_string() const;
    nlohmann::json to_json() const;
};

LaurentPolynomial character_of(const CrystalGraph& g, const std::vector<int>& idxs);
LaurentPolynomial full_character(const CrystalGraph& g);
LaurentPolynomial demazure_character(const CrystalGraph& g, const std::vector<int>& v);
LaurentPolynomial demazure_atom_character(const CrystalGraph& g, const std::vector<int>& v);
LaurentPolynomial opposite_demazure_character(const CrystalGraph& g, const std::vector<int>& v);
LaurentPolynomial opposite_demazure_atom_character(const CrystalGraph& g,
                                                   const std::vector<int>& v);

nlohmann::json crystal_to_json(const CrystalGraph& g);
std::string crystal_to_dot(const CrystalGraph& g);

}  // namespace sptab
