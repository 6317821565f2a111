#include "sptab/sjdt.hpp"

#include <algorithm>
#include <string>

#include "sptab/column.hpp"
#include "sptab/errors.hpp"

namespace sptab {

namespace {

// Cell index inside a punctured column for an absolute row of its track.
int punct_index(const PlacedColumn& col, int hole_row, int row) {
    return row < hole_row ? row - col.top : row - col.top - 1;
}

void emit(StepTrace* trace, std::string line) {
    if (trace) trace->push_back(std::move(line));
}

}  // namespace

SlideOutcome elementary_forward_slide(PuncturedTableau& p, StepTrace* trace) {
    if (!p.has_hole()) throw slide_error("forward slide on a tableau without a hole");
    const int n = p.t.n;
    auto& cols = p.t.cols;
    const int hc = p.hole_col;
    const int hr = p.hole_row;
    PlacedColumn& left = cols[hc];

    bool has_alpha = hr + 1 <= p.track_bottom();
    Letter alpha = 0;
    if (has_alpha) alpha = right_split(left.cells, n)[punct_index(left, hr, hr + 1)];

    bool has_beta = hc + 1 < (int)cols.size() && cols[hc + 1].covers(hr);
    Letter beta = 0;
    if (has_beta) beta = left_split(cols[hc + 1].cells, n)[hr - cols[hc + 1].top];

    if (!has_alpha && !has_beta) {
        if (hr != p.track_bottom()) throw slide_error("stuck hole: nothing below or right");
        p.hole_col = -1;
        p.hole_row = 0;
        return {SlideKind::Terminal, 0, 0, 0};
    }

    if (has_alpha && (!has_beta || letter_leq(alpha, beta))) {
        p.hole_row = hr + 1;
        emit(trace, "V " + std::to_string(p.hole_row) + " " + std::to_string(hc + 1));
        return {SlideKind::Vertical, alpha, 0, 0};
    }

    PlacedColumn& right = cols[hc + 1];
    try {
        if (is_barred(beta)) {
            left.cells = phi_inverse(column_union(phi(left.cells, n), beta), n);
            right.cells.erase(right.cells.begin() + (hr - right.top));
            p.hole_col = hc + 1;
            emit(trace, "HB " + letter_str(beta));
            return {SlideKind::HorizontalBarred, beta, 0, 0};
        }
        Column grown = column_union(left.cells, beta);
        int lost = 0;
        int cells_lost = 0;
        AdmissibilityResult adm = admissibility_check(grown, n);
        if (!adm.admissible) {
            lost = adm.break_value;
            grown = column_minus(column_minus(grown, lost), -lost);
            if (!admissibility_check(grown, n).admissible)
                throw slide_error("column still breaks 1CC after erasing the breaking pair");
            left.top += 1;
            cells_lost = 2;
        }
        left.cells = grown;
        right.cells = phi_inverse(column_minus(phi(right.cells, n), beta), n);
        p.hole_col = hc + 1;
        if (lost != 0)
            emit(trace, "HU " + letter_str(beta) + " lost " + std::to_string(lost));
        else
            emit(trace, "HU " + letter_str(beta));
        return {SlideKind::HorizontalUnbarred, beta, lost, cells_lost};
    } catch (const slide_error&) {
        throw;
    } catch (const error& e) {
        throw slide_error(std::string("forward slide failed: ") + e.what());
    }
}

SlideOutcome elementary_reverse_slide(PuncturedTableau& p, StepTrace* trace) {
    if (!p.has_hole()) throw slide_error("reverse slide on a tableau without a hole");
    const int n = p.t.n;
    auto& cols = p.t.cols;
    const int hc = p.hole_col;
    const int hr = p.hole_row;
    PlacedColumn& col = cols[hc];

    bool has_a = hr - 1 >= col.top;
    Letter a = 0;
    if (has_a) a = left_split(col.cells, n)[punct_index(col, hr, hr - 1)];

    bool has_b = hc > 0 && cols[hc - 1].covers(hr);
    Letter b = 0;
    if (has_b) b = right_split(cols[hc - 1].cells, n)[hr - cols[hc - 1].top];

    if (!has_a && !has_b) {
        if (hr != col.top) throw slide_error("stuck hole: nothing above or left");
        col.top = hr + 1;
        p.hole_col = -1;
        p.hole_row = 0;
        return {SlideKind::Terminal, 0, 0, 0};
    }

    // A tie pushes the reverse slide vertical, undoing a forward vertical.
    if (has_a && (!has_b || letter_leq(b, a))) {
        p.hole_row = hr - 1;
        emit(trace, "V " + std::to_string(p.hole_row) + " " + std::to_string(hc + 1));
        return {SlideKind::Vertical, a, 0, 0};
    }

    PlacedColumn& left = cols[hc - 1];
    try {
        if (is_barred(b)) {
            col.cells = column_union(col.cells, b);
            left.cells = phi_inverse(column_minus(phi(left.cells, n), b), n);
            p.hole_col = hc - 1;
            emit(trace, "HB " + letter_str(b));
            return {SlideKind::HorizontalBarred, b, 0, 0};
        }
        col.cells = phi_inverse(column_union(phi(col.cells, n), b), n);
        left.cells = column_minus(left.cells, b);
        p.hole_col = hc - 1;
        emit(trace, "HU " + letter_str(b));
        return {SlideKind::HorizontalUnbarred, b, 0, 0};
    } catch (const slide_error&) {
        throw;
    } catch (const error& e) {
        throw slide_error(std::string("reverse slide failed: ") + e.what());
    }
}

std::vector<int> inner_corner_columns(const SkewTableau& t) {
    std::vector<int> out;
    const int k = (int)t.cols.size();
    for (int c = 0; c < k; ++c) {
        if (t.cols[c].top < 2) continue;
        if (c + 1 == k || t.cols[c + 1].top < t.cols[c].top) out.push_back(c);
    }
    return out;
}

namespace {

void drop_empty_columns(SkewTableau& t) {
    std::erase_if(t.cols, [](const PlacedColumn& c) { return c.cells.empty(); });
}

}  // namespace

SkewTableau rectify(const SkewTableau& t, StepTrace* trace,
                    const std::function<int(const std::vector<int>&)>& chooser) {
    require_kn(t);
    SkewTableau cur = t;
    drop_empty_columns(cur);
    while (true) {
        std::vector<int> corners = inner_corner_columns(cur);
        if (corners.empty()) break;
        int c = corners.front();
        if (chooser) {
            c = chooser(corners);
            if (std::find(corners.begin(), corners.end(), c) == corners.end())
                throw slide_error("corner chooser returned a non-corner column");
        } else {
            for (int cand : corners)
                if (cur.cols[cand].top < cur.cols[c].top) c = cand;
        }
        PuncturedTableau p{cur, c, cur.cols[c].top - 1};
        p.t.cols[c].top -= 1;
        while (elementary_forward_slide(p, trace).kind != SlideKind::Terminal) {
        }
        cur = p.t;
        drop_empty_columns(cur);
    }
    if (!cur.straight()) throw slide_error("rectification did not straighten");
    return cur;
}

namespace {

std::pair<Column, Column> finish_pair(PuncturedTableau& p, StepTrace* trace) {
    while (elementary_forward_slide(p, trace).kind != SlideKind::Terminal) {
    }
    return {p.t.cols[0].cells, p.t.cols[1].cells};
}

std::pair<Column, Column> finish_pair_reverse(PuncturedTableau& p, StepTrace* trace) {
    while (elementary_reverse_slide(p, trace).kind != SlideKind::Terminal) {
    }
    return {p.t.cols[0].cells, p.t.cols[1].cells};
}

}  // namespace

std::pair<Column, Column> pair_forward_play(const Column& left, const Column& right, int n,
                                            StepTrace* trace) {
    if (right.empty()) throw slide_error("forward play needs a nonempty right column");
    SkewTableau mini = canonical_alignment({left, right}, n);
    PuncturedTableau p{mini, 0, 0};
    if (left.empty()) {
        // The left track opens beside the right column's bottom cell: a
        // reverse play that empties the left column exits there, so its
        // forward inverse must re-enter at the same row.
        p.t.cols[0].top = p.t.cols[1].bottom();
        p.hole_row = p.t.cols[0].top;
    } else {
        if (p.t.cols[0].top <= p.t.cols[1].top)
            throw slide_error("forward play needs the left top strictly below the right top");
        p.t.cols[0].top -= 1;
        p.hole_row = p.t.cols[0].top;
    }
    return finish_pair(p, trace);
}

std::pair<Column, Column> pair_reverse_play(const Column& left, const Column& right, int n,
                                            StepTrace* trace) {
    if (left.empty()) throw slide_error("reverse play needs a nonempty left column");
    SkewTableau mini = canonical_alignment({left, right}, n);
    PuncturedTableau p{mini, 1, 0};
    if (right.empty()) {
        p.t.cols[1].top = p.t.cols[0].top;
        p.hole_row = p.t.cols[1].top;
    } else {
        int bl = p.t.cols[0].bottom();
        int br = p.t.cols[1].bottom();
        if (bl <= br)
            throw slide_error("reverse play needs the left bottom strictly below the right bottom");
        p.hole_row = br + 1;  // the right track grows one row downward
    }
    return finish_pair_reverse(p, trace);
}

std::pair<Column, Column> swap_adjacent_column_lengths(const Column& c1, const Column& c2, int n,
                                                       StepTrace* trace) {
    const int h1 = (int)c1.size();
    const int h2 = (int)c2.size();
    if (h1 == h2) return {c1, c2};
    Column a = c1;
    Column b = c2;
    for (int step = 0; step < h1 - h2; ++step) std::tie(a, b) = pair_reverse_play(a, b, n, trace);
    for (int step = 0; step < h2 - h1; ++step) std::tie(a, b) = pair_forward_play(a, b, n, trace);
    return {a, b};
}

SkewTableau reshape(const SkewTableau& t, const std::vector<int>& target,
                    std::vector<std::vector<Column>>* stages) {
    require_kn(t);
    const int n = t.n;
    std::vector<Column> cur = t.contents();
    std::erase_if(cur, [](const Column& c) { return c.empty(); });

    std::vector<int> have;
    for (const Column& c : cur) have.push_back((int)c.size());
    std::vector<int> want;
    for (int h : target)
        if (h > 0) want.push_back(h);
    {
        std::vector<int> a = have, b = want;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw not_a_permutation("target lengths do not permute the column lengths");
    }
    while (cur.size() < target.size()) cur.push_back({});
    if (cur.size() != target.size())
        throw not_a_permutation("target has fewer slots than nonempty columns");

    auto lengths = [&]() {
        std::vector<int> v;
        for (const Column& c : cur) v.push_back((int)c.size());
        return v;
    };

    while (lengths() != target) {
        std::vector<int> cl = lengths();
        size_t p = 0;
        while (cl[p] == target[p]) ++p;
        size_t q = p + 1;
        while (q < cl.size() && cl[q] != target[p]) ++q;
        if (q == cl.size()) throw not_a_permutation("target lengths do not permute the column lengths");
        for (size_t j = q; j > p; --j) {
            std::tie(cur[j - 1], cur[j]) =
                swap_adjacent_column_lengths(cur[j - 1], cur[j], n, nullptr);
            if (stages) stages->push_back(cur);
        }
    }
    return canonical_alignment(cur, n);
}

}  // namespace sptab
