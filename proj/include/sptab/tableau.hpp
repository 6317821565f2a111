#pragma once

// Skew tableaux over [+-n], stored column-wise with explicit vertical
// placement. Column c occupies the contiguous rows [top, top+h-1]; a valid
// skew placement has tops and bottoms weakly decreasing left to right, so
// the row form is a skew shape (inner cells form a partition). The text
// literal lists rows top to bottom separated by ';', entries separated by
// ',', barred k written as '-k', inner cells written as '.'.
//
// A tableau is a Kashiwara-Nakashima tableau when all its columns are
// admissible and its split form (each column replaced by lC rC) is a
// semistandard skew tableau.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sptab/column.hpp"

namespace sptab {

struct PlacedColumn {
    int top = 1;
    Column cells;
    int height() const { return (int)cells.size(); }
    int bottom() const { return top + (int)cells.size() - 1; }
    bool empty() const { return cells.empty(); }
    bool covers(int row) const { return !empty() && top <= row && row <= bottom(); }
    Letter at(int row) const { return cells[row - top]; }
};

struct SkewTableau {
    int n = 0;
    std::vector<PlacedColumn> cols;

    bool empty() const;
    bool straight() const;  // every column nonempty with top 1
    int first_row() const;  // min top over nonempty columns (1 if empty)
    int last_row() const;   // max bottom over nonempty columns (0 if empty)
    int cell_count() const;
    std::vector<int> column_lengths() const;
    std::vector<Column> contents() const;

    std::string to_literal() const;
    nlohmann::json to_json() const;
};

// Parsing keeps the given placement; it validates only well-formedness
// (shape staircase, letters in range), not KN validity. Errors carry
// row/column coordinates.
SkewTableau parse_tableau(const std::string& literal, int n);
SkewTableau tableau_from_json(const nlohmann::json& j);
// Accepts either a row literal or a JSON object (first character '{').
SkewTableau parse_tableau_any(const std::string& text, int n);

SkewTableau tableau_from_columns(const std::vector<Column>& cols, int n);  // straight, tops 1

struct ValidationResult {
    bool valid;
    std::string reason;
};

ValidationResult validate_kn(const SkewTableau& t);
void require_kn(const SkewTableau& t);  // throws invalid_tableau

SkewTableau split_form(const SkewTableau& t);

std::vector<int> weight(const SkewTableau& t);

bool is_key_tableau(const SkewTableau& t);

// The unique key tableau of shape lambda with weight v (column j holds
// sign(v_i)*i for every |v_i| >= j). Throws weight_not_in_orbit when
// sort(|v|) descending differs from lambda.
SkewTableau key_of_weight(const std::vector<int>& v, const std::vector<int>& lambda, int n);

// Entrywise comparison of equal-shape straight tableaux in letter order.
bool entrywise_leq(const SkewTableau& a, const SkewTableau& b);

// Maximum-overlap placement of a column sequence: the rightmost nonempty
// column is anchored at row 1 and every column is pushed as high as the
// split-form row condition allows; across empty slots the flanking
// columns touch edge to edge (zero overlap).
SkewTableau canonical_alignment(const std::vector<Column>& cols, int n);

// Signed-permutation orbit B_n . lambda, deduplicated, sorted.
std::vector<std::vector<int>> weyl_orbit(const std::vector<int>& lambda, int n);

std::vector<int> apply_simple_reflection(std::vector<int> v, int i, int n);

}  // namespace sptab
