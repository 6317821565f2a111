#include "sptab/rsk.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sptab/crystal.hpp"
#include "sptab/errors.hpp"
#include "sptab/sjdt.hpp"

namespace sptab {

Biword biword_of(const std::vector<Column>& slots) {
    Biword w;
    const int r = (int)slots.size();
    for (int s = r - 1; s >= 0; --s)
        for (Letter x : slots[s]) w.pairs.emplace_back(r - s, x);
    return w;
}

Biword biword_of(const SkewTableau& t) {
    std::vector<Column> slots;
    for (const auto& pc : t.cols) slots.push_back(pc.cells);
    return biword_of(slots);
}

std::string biword_str(const Biword& w) {
    std::string s;
    for (size_t i = 0; i < w.pairs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w.pairs[i].first) + ":" + letter_str(w.pairs[i].second);
    }
    return s;
}

Biword parse_biword(const std::string& s) {
    Biword w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        size_t colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
            throw parse_error("biletter must look like top:bottom, got '" + tok + "'");
        try {
            size_t used = 0;
            int top = std::stoi(tok.substr(0, colon), &used);
            if (used != colon) throw parse_error("bad biletter top in '" + tok + "'");
            Letter bot = std::stoi(tok.substr(colon + 1), &used);
            if (used != tok.size() - colon - 1) throw parse_error("bad biletter bottom in '" + tok + "'");
            w.pairs.emplace_back(top, bot);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad biletter '" + tok + "'");
        } catch (const std::out_of_range&) {
            throw parse_error("biletter out of range '" + tok + "'");
        }
    }
    return w;
}

namespace {

// Inserts y into the column sequence, bumping rightward; returns the
// 1-based (column, row) of the cell that appears.
std::pair<int, int> column_insert_cell(std::vector<Column>& cols, Letter y) {
    for (size_t p = 0;; ++p) {
        if (p == cols.size()) cols.push_back({});
        Column& c = cols[p];
        auto it = std::lower_bound(c.begin(), c.end(), y, LetterLess{});
        if (it == c.end()) {
            c.push_back(y);
            return {(int)p + 1, (int)c.size()};
        }
        Letter bumped = *it;
        *it = y;
        y = bumped;
    }
}

}  // namespace

SkewTableau column_insert_word(const std::vector<Letter>& word, int n) {
    std::vector<Column> cols;
    for (Letter y : word) column_insert_cell(cols, y);
    return tableau_from_columns(cols, n);
}

std::pair<SkewTableau, SkewTableau> dual_rsk(const Biword& w, int n, int r) {
    for (size_t i = 0; i < w.pairs.size(); ++i) {
        auto [u, v] = w.pairs[i];
        if (u < 1 || u > r) throw malformed_biword("top letter out of range");
        if (v < 1 || v > n) throw malformed_biword("bottom letters must be unbarred and at most n");
        if (i) {
            auto [pu, pv] = w.pairs[i - 1];
            if (pu > u || (pu == u && pv >= v))
                throw malformed_biword("biletters must strictly increase");
        }
    }
    std::vector<Column> pcols, qcols;
    for (auto [x, y] : w.pairs) {
        auto [col, row] = column_insert_cell(pcols, y);
        if (row > (int)qcols.size()) qcols.push_back({});
        qcols[row - 1].push_back(x);
        if ((int)qcols[row - 1].size() != col)
            throw verification_mismatch("recording cell breaks the conjugate shape");
    }
    SkewTableau p = tableau_from_columns(pcols, n);
    SkewTableau q = tableau_from_columns(qcols, r);
    require_kn(p);
    require_kn(q);
    return {p, q};
}

namespace {

std::string slot_key(const std::vector<Column>& slots) {
    std::string s;
    for (const Column& c : slots) {
        s += column_str(c);
        s += '|';
    }
    return s;
}

}  // namespace

int Cocrystal::index_of(const std::vector<Column>& slots) const {
    for (size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == slots) return (int)v;
    return -1;
}

Cocrystal generate_cocrystal(const SkewTableau& t, int r) {
    require_kn(t);
    if (!t.straight()) throw invalid_tableau("cocrystal needs a straight tableau");
    const int n = t.n;
    std::vector<Column> base_slots = t.contents();
    const int k = (int)base_slots.size();
    if (r < 1 || r < k) throw invalid_shape("slot count must cover every column");
    std::vector<int> lambda_p;
    for (const Column& c : base_slots) lambda_p.push_back((int)c.size());
    while ((int)base_slots.size() < r) base_slots.push_back({});
    bool unbarred = true;
    for (const Column& c : base_slots)
        for (Letter x : c)
            if (x < 0) unbarred = false;

    auto slot_weight = [r](const std::vector<Column>& slots) {
        std::vector<int> v(r, 0);
        for (int s = 0; s < r; ++s) v[r - 1 - s] = (int)slots[s].size();
        return v;
    };

    std::vector<std::vector<Column>> verts{base_slots};
    std::vector<SkewTableau> qs{key_of_weight(slot_weight(base_slots), lambda_p, r)};
    std::vector<std::vector<int>> fe, ee;
    std::map<std::string, int> seen{{slot_key(base_slots), 0}};

    auto play = [&](const std::vector<Column>& slots, int i, bool lowering) {
        std::vector<Column> next = slots;
        int left = r - i - 1, right = r - i;
        try {
            auto moved = lowering ? pair_forward_play(next[left], next[right], n, nullptr)
                                  : pair_reverse_play(next[left], next[right], n, nullptr);
            next[left] = moved.first;
            next[right] = moved.second;
        } catch (const error& e) {
            throw verification_mismatch(std::string("slide unavailable where the Q-symbol allows it: ") + e.what());
        }
        return next;
    };

    for (size_t v = 0; v < verts.size(); ++v) {
        fe.emplace_back(r - 1, -1);
        ee.emplace_back(r - 1, -1);
        for (int i = 1; i < r; ++i) {
            if (auto qf = lower(qs[v], i)) {
                std::vector<Column> next = play(verts[v], i, true);
                auto [it, fresh] = seen.try_emplace(slot_key(next), (int)verts.size());
                if (fresh) {
                    verts.push_back(next);
                    qs.push_back(*qf);
                } else if (qs[it->second].contents() != qf->contents()) {
                    throw verification_mismatch("transported Q-symbols disagree");
                }
                fe[v][i - 1] = it->second;
            }
            if (auto qe = raise(qs[v], i)) {
                std::vector<Column> next = play(verts[v], i, false);
                auto [it, fresh] = seen.try_emplace(slot_key(next), (int)verts.size());
                if (fresh) {
                    verts.push_back(next);
                    qs.push_back(*qe);
                } else if (qs[it->second].contents() != qe->contents()) {
                    throw verification_mismatch("transported Q-symbols disagree");
                }
                ee[v][i - 1] = it->second;
            }
        }
    }

    const int m = (int)verts.size();
    std::vector<SkewTableau> placed(m);
    for (int v = 0; v < m; ++v) {
        // Empty slots carry no cells, so the placed picture drops them.
        std::vector<Column> filled;
        for (const Column& c : verts[v])
            if (!c.empty()) filled.push_back(c);
        placed[v] = canonical_alignment(filled, n);
        if (weight(qs[v]) != slot_weight(verts[v]))
            throw verification_mismatch("Q-symbol weight disagrees with the slot lengths");
        if (unbarred) {
            auto [p, q] = dual_rsk(biword_of(verts[v]), n, r);
            if (p.contents() != t.contents())
                throw verification_mismatch("dual RSK insertion tableau disagrees with the base");
            if (q.contents() != qs[v].contents())
                throw verification_mismatch("dual RSK recording tableau disagrees with the Q-symbol");
        }
    }

    std::vector<int> order(m);
    for (int v = 0; v < m; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        std::string la = placed[a].to_literal(), lb = placed[b].to_literal();
        if (la != lb) return la < lb;
        return slot_key(verts[a]) < slot_key(verts[b]);
    });
    std::vector<int> rank(m);
    for (int v = 0; v < m; ++v) rank[order[v]] = v;

    Cocrystal c;
    c.n = n;
    c.r = r;
    c.base = rank[0];
    c.vertices.resize(m);
    c.placed.resize(m);
    c.qsymbols.resize(m);
    c.f_edge.assign(m, std::vector<int>(r - 1, -1));
    c.e_edge.assign(m, std::vector<int>(r - 1, -1));
    for (int v = 0; v < m; ++v) {
        c.vertices[rank[v]] = verts[v];
        c.placed[rank[v]] = placed[v];
        c.qsymbols[rank[v]] = qs[v];
        for (int i = 0; i < r - 1; ++i) {
            if (fe[v][i] >= 0) c.f_edge[rank[v]][i] = rank[fe[v][i]];
            if (ee[v][i] >= 0) c.e_edge[rank[v]][i] = rank[ee[v][i]];
        }
    }
    return c;
}

std::vector<int> cocrystal_key_indices(const Cocrystal& c) {
    auto sorted_lengths = [](const std::vector<Column>& slots) {
        std::vector<int> v;
        for (const Column& col : slots) v.push_back((int)col.size());
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<int> base_lens = sorted_lengths(c.vertices[c.base]);
    std::vector<int> keys;
    for (int v = 0; v < (int)c.vertices.size(); ++v)
        if (sorted_lengths(c.vertices[v]) == base_lens) keys.push_back(v);
    return keys;
}

nlohmann::json cocrystal_to_json(const Cocrystal& c) {
    nlohmann::json verts = nlohmann::json::array();
    for (int v = 0; v < (int)c.vertices.size(); ++v) {
        nlohmann::json slots = nlohmann::json::array();
        std::vector<int> lengths;
        for (const Column& col : c.vertices[v]) {
            slots.push_back(col);
            lengths.push_back((int)col.size());
        }
        verts.push_back({{"slots", slots},
                         {"literal", c.placed[v].to_literal()},
                         {"q", c.qsymbols[v].to_literal()},
                         {"lengths", lengths}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (int v = 0; v < (int)c.vertices.size(); ++v)
        for (int i = 1; i < c.r; ++i)
            if (c.f_edge[v][i - 1] >= 0)
                edges.push_back({{"from", v}, {"to", c.f_edge[v][i - 1]}, {"i", i}});
    return {{"n", c.n}, {"r", c.r}, {"base", c.base}, {"vertices", verts}, {"edges", edges}};
}

std::string cocrystal_to_dot(const Cocrystal& c) {
    std::ostringstream os;
    os << "digraph cocrystal {\n  rankdir=TB;\n  node [shape=box];\n";
    for (int v = 0; v < (int)c.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << c.placed[v].to_literal() << "\"];\n";
    for (int v = 0; v < (int)c.vertices.size(); ++v)
        for (int i = 1; i < c.r; ++i)
            if (c.f_edge[v][i - 1] >= 0)
                os << "  v" << v << " -> v" << c.f_edge[v][i - 1] << " [label=\"F" << i << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace sptab
