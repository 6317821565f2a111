#pragma once

// Admissible and coadmissible columns over [+-n].
//
// A strictly increasing column C satisfies the one-column condition (is
// admissible) when for every value z with both z and zbar in C, the count
// N(z) = #{x in C : x <= z or x >= zbar} is at most z. An admissible
// column splits into a pair lC <= C <= rC by the greedy rule on the
// paired values, and Phi maps C to the coadmissible column whose unbarred
// part comes from lC and whose barred part comes from rC. Coadmissibility
// bounds N*(z) = #{x in C : z <= x <= zbar} by n - z + 1; Phi inverts via
// the mirrored greedy rule.

#include <utility>

#include "sptab/errors.hpp"
#include "sptab/letters.hpp"

namespace sptab {

struct AdmissibilityResult {
    bool admissible;
    int break_value;  // minimal z with N(z) > z; 0 when admissible
};

// Values z with z and zbar both present, in decreasing order.
Column paired_values(const Column& c);

// Requires a strictly increasing column over [+-n]; throws parse_error on
// a malformed column.
AdmissibilityResult admissibility_check(const Column& c, int n);

bool is_admissible(const Column& c, int n);
bool is_coadmissible(const Column& c, int n);

struct ColumnSplit {
    Column left;
    Column right;
    Column paired;        // the z_i, decreasing
    Column replacements;  // the t_i, aligned with paired
};

// Throws not_admissible / split_impossible.
ColumnSplit split_column_full(const Column& c, int n);
std::pair<Column, Column> split_column(const Column& c, int n);
Column left_split(const Column& c, int n);
Column right_split(const Column& c, int n);

// Phi and its inverse; throw not_admissible / not_coadmissible.
Column phi(const Column& c, int n);
Column phi_inverse(const Column& c, int n);

// Sorted-set helpers used by the slide algebra.
Column column_union(const Column& a, Letter x);    // insert, keeps order
Column column_minus(const Column& a, Letter x);    // remove one occurrence
void validate_column(const Column& c, int n);      // range + strict increase

}  // namespace sptab
