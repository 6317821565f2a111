#include "sptab/column.hpp"

#include <algorithm>

namespace sptab {

void validate_column(const Column& c, int n) {
    for (Letter x : c) {
        if (x == 0 || x > n || x < -n)
            throw parse_error("letter " + letter_str(x) + " outside alphabet bound n=" +
                              std::to_string(n));
    }
    if (!column_strictly_increasing(c))
        throw parse_error("column entries not strictly increasing: " + column_str(c));
}

Column paired_values(const Column& c) {
    Column zs;
    for (Letter x : c) {
        if (x > 0 && column_contains(c, bar(x))) zs.push_back(x);
    }
    std::sort(zs.begin(), zs.end(), [](Letter a, Letter b) { return a > b; });
    return zs;
}

AdmissibilityResult admissibility_check(const Column& c, int n) {
    validate_column(c, n);
    int worst = 0;
    for (Letter z : paired_values(c)) {
        int count = 0;
        for (Letter x : c) {
            if (letter_leq(x, z) || letter_leq(bar(z), x)) ++count;
        }
        if (count > z && (worst == 0 || z < worst)) worst = z;
    }
    if (worst != 0) return {false, worst};
    return {true, 0};
}

bool is_admissible(const Column& c, int n) { return admissibility_check(c, n).admissible; }

bool is_coadmissible(const Column& c, int n) {
    validate_column(c, n);
    for (Letter z : paired_values(c)) {
        int count = 0;
        for (Letter x : c) {
            if (letter_leq(z, x) && letter_leq(x, bar(z))) ++count;
        }
        if (count > n - z + 1) return false;
    }
    return true;
}

ColumnSplit split_column_full(const Column& c, int n) {
    AdmissibilityResult adm = admissibility_check(c, n);
    if (!adm.admissible)
        throw not_admissible("column breaks 1CC at " + std::to_string(adm.break_value), 0,
                             adm.break_value);
    ColumnSplit out;
    out.paired = paired_values(c);  // z_1 > z_2 > ... > z_r
    int upper = n + 1;              // exclusive bound for the next t
    for (Letter z : out.paired) {
        int limit = std::min(upper, (int)z);
        int t = 0;
        for (int cand = limit - 1; cand >= 1; --cand) {
            if (!column_contains(c, cand) && !column_contains(c, -cand)) {
                t = cand;
                break;
            }
        }
        if (t == 0)
            throw split_impossible("no replacement below " + std::to_string(z) +
                                   " for column " + column_str(c));
        out.replacements.push_back(t);
        upper = t;
    }
    out.left = c;
    out.right = c;
    for (size_t i = 0; i < out.paired.size(); ++i) {
        Letter z = out.paired[i], t = out.replacements[i];
        *std::find(out.left.begin(), out.left.end(), z) = t;
        *std::find(out.right.begin(), out.right.end(), bar(z)) = bar(t);
    }
    std::sort(out.left.begin(), out.left.end(), LetterLess{});
    std::sort(out.right.begin(), out.right.end(), LetterLess{});
    return out;
}

std::pair<Column, Column> split_column(const Column& c, int n) {
    ColumnSplit s = split_column_full(c, n);
    return {std::move(s.left), std::move(s.right)};
}

Column left_split(const Column& c, int n) { return split_column_full(c, n).left; }
Column right_split(const Column& c, int n) { return split_column_full(c, n).right; }

Column phi(const Column& c, int n) {
    ColumnSplit s = split_column_full(c, n);
    Column out;
    for (Letter x : s.left)
        if (!is_barred(x)) out.push_back(x);
    for (Letter x : s.right)
        if (is_barred(x)) out.push_back(x);
    std::sort(out.begin(), out.end(), LetterLess{});
    return out;
}

Column phi_inverse(const Column& c, int n) {
    validate_column(c, n);
    if (!is_coadmissible(c, n))
        throw not_coadmissible("column not coadmissible: " + column_str(c));
    Column zs = paired_values(c);  // z_1 > ... > z_r
    // h_r for the smallest paired value first, moving up.
    std::vector<Letter> hs(zs.size(), 0);
    int lower = 0;  // exclusive bound for the next h
    for (size_t i = zs.size(); i-- > 0;) {
        Letter z = zs[i];
        int start = std::max(lower, (int)z) + 1;
        int h = 0;
        for (int cand = start; cand <= n; ++cand) {
            if (!column_contains(c, cand) && !column_contains(c, -cand)) {
                h = cand;
                break;
            }
        }
        if (h == 0)
            throw not_coadmissible("no replacement above " + std::to_string(z) +
                                   " for column " + column_str(c));
        hs[i] = h;
        lower = h;
    }
    Column out;
    for (Letter x : c) {
        if (x > 0 && column_contains(c, bar(x))) continue;  // drop z and zbar
        if (x < 0 && column_contains(c, bar(x))) continue;
        out.push_back(x);
    }
    for (Letter h : hs) {
        out.push_back(h);
        out.push_back(bar(h));
    }
    std::sort(out.begin(), out.end(), LetterLess{});
    return out;
}

Column column_union(const Column& a, Letter x) {
    Column out = a;
    out.insert(std::upper_bound(out.begin(), out.end(), x, LetterLess{}), x);
    return out;
}

Column column_minus(const Column& a, Letter x) {
    Column out = a;
    auto it = std::find(out.begin(), out.end(), x);
    if (it == out.end())
        throw slide_error("letter " + letter_str(x) + " absent from column " + column_str(a));
    out.erase(it);
    return out;
}

}  // namespace sptab
