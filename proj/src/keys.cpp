#include "sptab/keys.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "sptab/errors.hpp"
#include "sptab/sjdt.hpp"

namespace sptab {

namespace {

void require_straight_kn(const SkewTableau& t) {
    require_kn(t);
    if (!t.straight()) throw invalid_tableau("key maps need a straight tableau");
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

SkewTableau assemble_key(const std::vector<Column>& cols, int n, const SkewTableau& source) {
    SkewTableau key = tableau_from_columns(cols, n);
    if (!is_key_tableau(key)) throw verification_mismatch("key map produced a non-key tableau");
    if (key.column_lengths() != source.column_lengths())
        throw verification_mismatch("key map changed the shape");
    return key;
}

}  // namespace

Matching match_split_columns(const Column& rc, const Column& lc) {
    Matching m;
    int ptr = (int)rc.size() - 1;
    for (int j = (int)lc.size() - 1; j >= 0; --j) {
        while (ptr >= 0 && letter_less(lc[j], rc[ptr])) {
            m.unmatched_left.push_back(ptr);
            --ptr;
        }
        if (ptr >= 0) {
            m.pairs.emplace_back(ptr, j);
            --ptr;
        } else {
            m.unmatched_right.push_back(j);
        }
    }
    while (ptr >= 0) m.unmatched_left.push_back(ptr--);
    std::sort(m.unmatched_left.begin(), m.unmatched_left.end());
    std::sort(m.unmatched_right.begin(), m.unmatched_right.end());
    return m;
}

namespace {

std::string match_str(const Matching& m, const Column& left, const Column& right) {
    std::string s;
    for (size_t i = 0; i < m.pairs.size(); ++i) {
        if (i) s += ' ';
        s += letter_str(left[m.pairs[i].first]) + "~" + letter_str(right[m.pairs[i].second]);
    }
    return s;
}

std::string values_str(const std::vector<int>& idxs, const Column& c) {
    Column vals;
    for (int i : idxs) vals.push_back(c[i]);
    return column_str(vals);
}

}  // namespace

SkewTableau right_key_direct(const SkewTableau& t, std::vector<std::string>* trace) {
    require_straight_kn(t);
    const int n = t.n;
    const std::vector<Column> cont = t.contents();
    const int k = (int)cont.size();
    std::vector<Column> lefts(k), rights(k);
    for (int j = 0; j < k; ++j) std::tie(lefts[j], rights[j]) = split_column(cont[j], n);

    std::vector<Column> key_cols(k);
    for (int j0 = 0; j0 < k; ++j0) {
        if (trace) {
            trace->push_back("column " + std::to_string(j0 + 1));
            trace->push_back("start " + column_str(rights[j0]));
        }
        Column cur = rights[j0];
        for (int j = j0 + 1; j < k; ++j) {
            Matching m = match_split_columns(cur, lefts[j]);
            if (!m.unmatched_right.empty())
                throw verification_mismatch("right key matching left some split entries unmatched");
            Column acc = rights[j];
            Column added;
            for (int idx : m.unmatched_left) {
                Letter a = cur[idx];
                Letter x = 0;
                for (int rk = letter_rank(a, n); rk <= 2 * n; ++rk) {
                    Letter cand = rk <= n ? rk : rk - 2 * n - 1;
                    if (!column_contains(acc, cand) && !column_contains(acc, -cand)) {
                        x = cand;
                        break;
                    }
                }
                if (x == 0)
                    throw verification_mismatch("no letter available for the right key column");
                acc = column_union(acc, x);
                added.push_back(x);
            }
            if (trace)
                trace->push_back("vs " + std::to_string(j + 1) + ": match " +
                                 match_str(m, cur, lefts[j]) + "; unmatched " +
                                 values_str(m.unmatched_left, cur) + "; add " + column_str(added) +
                                 "; now " + column_str(acc));
            cur = acc;
        }
        key_cols[j0] = cur;
    }
    SkewTableau key = assemble_key(key_cols, n, t);
    if (trace) trace->push_back("K+ " + key.to_literal());
    return key;
}

SkewTableau left_key_direct(const SkewTableau& t, std::vector<std::string>* trace) {
    require_straight_kn(t);
    const int n = t.n;
    const std::vector<Column> cont = t.contents();
    const int k = (int)cont.size();
    std::vector<Column> lefts(k), rights(k);
    for (int j = 0; j < k; ++j) std::tie(lefts[j], rights[j]) = split_column(cont[j], n);

    std::vector<Column> key_cols(k);
    for (int j0 = 0; j0 < k; ++j0) {
        if (trace) {
            trace->push_back("column " + std::to_string(j0 + 1));
            trace->push_back("start " + column_str(lefts[j0]));
        }
        Column cur = lefts[j0];
        for (int i = j0 - 1; i >= 0; --i) {
            Matching m = match_split_columns(rights[i], cur);
            if (!m.unmatched_right.empty())
                throw verification_mismatch("left key matching left some split entries unmatched");
            const Column& l = lefts[i];
            const Column& r = rights[i];
            std::vector<char> surv_l(l.size(), 1), surv_r(r.size(), 1);
            Column deleted;
            for (int bidx : m.unmatched_left) {
                int chosen = -1;
                for (int row = bidx; row >= 0 && chosen < 0; --row) {
                    if (!surv_l[row]) continue;
                    int ne = -1;
                    for (int rr = row - 1; rr >= 0; --rr)
                        if (surv_r[rr]) {
                            ne = rr;
                            break;
                        }
                    if (ne >= 0 && letter_less(r[ne], l[row])) chosen = row;
                }
                if (chosen < 0)
                    for (int row = 0; row < (int)l.size(); ++row)
                        if (surv_l[row]) {
                            chosen = row;
                            break;
                        }
                surv_l[chosen] = 0;
                surv_r[bidx] = 0;
                deleted.push_back(l[chosen]);
            }
            Column next;
            for (size_t row = 0; row < l.size(); ++row)
                if (surv_l[row]) next.push_back(l[row]);
            if (trace)
                trace->push_back("vs " + std::to_string(i + 1) + ": match " +
                                 match_str(m, rights[i], cur) + "; unmatched " +
                                 values_str(m.unmatched_left, rights[i]) + "; delete " +
                                 column_str(deleted) + "; now " + column_str(next));
            cur = next;
        }
        key_cols[j0] = cur;
    }
    SkewTableau key = assemble_key(key_cols, n, t);
    if (trace) trace->push_back("K- " + key.to_literal());
    return key;
}

SkewTableau right_key_sjdt(const SkewTableau& t) {
    require_straight_kn(t);
    const std::vector<Column> cont = t.contents();
    const int k = (int)cont.size();
    std::vector<Column> key_cols(k);
    for (int j = 0; j < k; ++j) {
        std::vector<Column> suffix(cont.begin() + j, cont.end());
        std::vector<int> target;
        for (size_t i = 1; i < suffix.size(); ++i) target.push_back((int)suffix[i].size());
        target.push_back((int)suffix[0].size());
        SkewTableau moved = reshape(tableau_from_columns(suffix, t.n), target);
        key_cols[j] = right_split(moved.cols.back().cells, t.n);
    }
    return assemble_key(key_cols, t.n, t);
}

SkewTableau left_key_sjdt(const SkewTableau& t) {
    require_straight_kn(t);
    const std::vector<Column> cont = t.contents();
    const int k = (int)cont.size();
    std::vector<Column> key_cols(k);
    for (int j = 0; j < k; ++j) {
        std::vector<Column> prefix(cont.begin(), cont.begin() + j + 1);
        std::vector<int> target{(int)prefix[j].size()};
        for (int i = 0; i < j; ++i) target.push_back((int)prefix[i].size());
        SkewTableau moved = reshape(tableau_from_columns(prefix, t.n), target);
        key_cols[j] = left_split(moved.cols.front().cells, t.n);
    }
    return assemble_key(key_cols, t.n, t);
}

SkewTableau right_key(const SkewTableau& t) { return right_key_direct(t); }
SkewTableau left_key(const SkewTableau& t) { return left_key_direct(t); }

std::vector<int> atom_of(const SkewTableau& t) {
    std::vector<int> w = weight(right_key(t));
    w.resize(t.n, 0);
    return w;
}

std::vector<std::string> sjdt_key_trace(const SkewTableau& t) {
    require_straight_kn(t);
    const int n = t.n;
    std::vector<Column> cur = t.contents();
    const int k = (int)cur.size();
    std::vector<std::string> lines;
    std::map<int, Column> kplus_seen, kminus_seen;

    auto lengths_of = [&]() {
        std::vector<int> v;
        for (const Column& c : cur) v.push_back((int)c.size());
        return v;
    };
    auto snapshot = [&]() {
        SkewTableau placed = canonical_alignment(cur, n);
        lines.push_back("lengths " + join_ints(lengths_of()));
        lines.push_back("tableau " + placed.to_literal());
        lines.push_back("split " + split_form(placed).to_literal());
        int hl = (int)cur.front().size();
        int hr = (int)cur.back().size();
        if (!kminus_seen.count(hl)) {
            kminus_seen[hl] = left_split(cur.front(), n);
            lines.push_back("K- length " + std::to_string(hl) + " column " +
                            column_str(kminus_seen[hl]));
        }
        if (!kplus_seen.count(hr)) {
            kplus_seen[hr] = right_split(cur.back(), n);
            lines.push_back("K+ length " + std::to_string(hr) + " column " +
                            column_str(kplus_seen[hr]));
        }
    };

    snapshot();
    int parity = 0;
    std::vector<int> lens = lengths_of();
    while (!std::is_sorted(lens.begin(), lens.end())) {
        for (int p = parity; p + 1 < k; p += 2) {
            if ((int)cur[p].size() <= (int)cur[p + 1].size()) continue;
            std::tie(cur[p], cur[p + 1]) = swap_adjacent_column_lengths(cur[p], cur[p + 1], n);
            lines.push_back("swap " + std::to_string(p + 1) + " " + std::to_string(p + 2));
            snapshot();
        }
        parity = 1 - parity;
        lens = lengths_of();
    }

    SkewTableau kp = right_key_sjdt(t);
    SkewTableau km = left_key_sjdt(t);
    for (int j = 0; j < k; ++j) {
        int h = (int)t.cols[j].cells.size();
        auto itp = kplus_seen.find(h);
        if (itp != kplus_seen.end() && itp->second != kp.cols[j].cells)
            throw verification_mismatch("recorded right key column disagrees with the reshape result");
        auto itm = kminus_seen.find(h);
        if (itm != kminus_seen.end() && itm->second != km.cols[j].cells)
            throw verification_mismatch("recorded left key column disagrees with the reshape result");
    }
    lines.push_back("K+ " + kp.to_literal());
    lines.push_back("K- " + km.to_literal());
    return lines;
}

LaurentPolynomial character_via_keys(const CrystalGraph& g, const std::vector<int>& v) {
    std::vector<int> vv(v);
    vv.resize(g.n, 0);
    SkewTableau kv = key_of_weight(vv, g.shape, g.n);
    LaurentPolynomial p;
    for (const SkewTableau& t : g.vertices) {
        if (!entrywise_leq(right_key(t), kv)) continue;
        std::vector<int> w = weight(t);
        w.resize(g.n, 0);
        p.add(w, 1);
    }
    return p;
}

}  // namespace sptab
