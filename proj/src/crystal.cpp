#include "sptab/crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "sptab/errors.hpp"

namespace sptab {

std::vector<Letter> reading_word(const SkewTableau& t) {
    std::vector<Letter> w;
    for (auto it = t.cols.rbegin(); it != t.cols.rend(); ++it)
        for (Letter x : it->cells) w.push_back(x);
    return w;
}

namespace {

struct CellRef {
    int col;
    int idx;  // index into cols[col].cells
};

// Signature survivors on the reading word for index i. Returns the
// leftmost surviving '+' and the rightmost surviving '-' as cell refs.
struct Survivors {
    std::optional<CellRef> plus;
    std::optional<CellRef> minus;
    int plus_count = 0;
    int minus_count = 0;
};

Survivors signature(const SkewTableau& t, int i) {
    const int n = t.n;
    std::vector<CellRef> plus_stack;
    std::vector<CellRef> minus_surv;
    for (int c = (int)t.cols.size() - 1; c >= 0; --c) {
        const Column& cells = t.cols[c].cells;
        for (int k = 0; k < (int)cells.size(); ++k) {
            Letter x = cells[k];
            bool is_plus, is_minus;
            if (i < n) {
                is_plus = x == i || x == -(i + 1);
                is_minus = x == i + 1 || x == -i;
            } else {
                is_plus = x == n;
                is_minus = x == -n;
            }
            if (is_plus) {
                plus_stack.push_back({c, k});
            } else if (is_minus) {
                if (!plus_stack.empty())
                    plus_stack.pop_back();
                else
                    minus_surv.push_back({c, k});
            }
        }
    }
    Survivors s;
    s.plus_count = (int)plus_stack.size();
    s.minus_count = (int)minus_surv.size();
    if (!plus_stack.empty()) s.plus = plus_stack.front();
    if (!minus_surv.empty()) s.minus = minus_surv.back();
    return s;
}

void check_column_still_strict(const Column& c) {
    if (!column_strictly_increasing(c))
        throw verification_mismatch("crystal operator broke column strictness");
}

}  // namespace

std::optional<SkewTableau> lower(const SkewTableau& t, int i) {
    if (i < 1 || i > t.n) throw error("operator index out of range");
    Survivors s = signature(t, i);
    if (!s.plus) return std::nullopt;
    SkewTableau out = t;
    Letter& x = out.cols[s.plus->col].cells[s.plus->idx];
    if (i < t.n)
        x = x == i ? i + 1 : -i;
    else
        x = -t.n;
    check_column_still_strict(out.cols[s.plus->col].cells);
    return out;
}

std::optional<SkewTableau> raise(const SkewTableau& t, int i) {
    if (i < 1 || i > t.n) throw error("operator index out of range");
    Survivors s = signature(t, i);
    if (!s.minus) return std::nullopt;
    SkewTableau out = t;
    Letter& x = out.cols[s.minus->col].cells[s.minus->idx];
    if (i < t.n)
        x = x == i + 1 ? i : -(i + 1);
    else
        x = t.n;
    check_column_still_strict(out.cols[s.minus->col].cells);
    return out;
}

int eps_count(const SkewTableau& t, int i) { return signature(t, i).minus_count; }
int phi_count(const SkewTableau& t, int i) { return signature(t, i).plus_count; }

int CrystalGraph::index_of(const std::string& literal) const {
    auto it = std::lower_bound(literals.begin(), literals.end(), literal);
    if (it == literals.end() || *it != literal) return -1;
    return (int)(it - literals.begin());
}

int CrystalGraph::index_of(const SkewTableau& t) const { return index_of(t.to_literal()); }

CrystalGraph generate_crystal(const std::vector<int>& lambda, int n) {
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0 || (i + 1 < lambda.size() && lambda[i] < lambda[i + 1]))
            throw invalid_shape("shape must be a partition");
        if (lambda[i] > 0 && (int)i >= n) throw invalid_shape("shape has more than n rows");
    }
    std::vector<int> lam(lambda);
    lam.resize(n, 0);

    SkewTableau top = key_of_weight(lam, lambda, n);
    std::map<std::string, SkewTableau> seen;
    std::deque<SkewTableau> queue{top};
    seen[top.to_literal()] = top;
    while (!queue.empty()) {
        SkewTableau cur = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            for (auto next : {lower(cur, i), raise(cur, i)}) {
                if (!next) continue;
                std::string lit = next->to_literal();
                if (seen.emplace(lit, *next).second) queue.push_back(*next);
            }
        }
    }

    CrystalGraph g;
    g.n = n;
    g.shape = lambda;
    for (auto& [lit, t] : seen) {
        g.literals.push_back(lit);
        g.vertices.push_back(t);
    }
    g.f_edge.assign(g.vertices.size(), std::vector<int>(n, -1));
    g.e_edge.assign(g.vertices.size(), std::vector<int>(n, -1));
    for (int v = 0; v < (int)g.vertices.size(); ++v) {
        for (int i = 1; i <= n; ++i) {
            if (auto next = lower(g.vertices[v], i)) {
                int w = g.index_of(*next);
                if (w < 0) throw verification_mismatch("crystal closure missed a vertex");
                g.f_edge[v][i - 1] = w;
                g.e_edge[w][i - 1] = v;
            }
        }
    }
    g.highest = g.index_of(top);
    std::vector<int> neg(lam);
    for (int& x : neg) x = -x;
    g.lowest = g.index_of(key_of_weight(neg, lambda, n));
    if (g.highest < 0 || g.lowest < 0)
        throw verification_mismatch("extreme keys missing from the crystal");
    return g;
}

namespace {

std::vector<int> closure(const CrystalGraph& g, const std::vector<int>& word, bool use_f,
                         int start) {
    std::set<int> members{start};
    for (int i : word) {
        std::vector<int> frontier(members.begin(), members.end());
        for (int v : frontier) {
            int cur = v;
            while (true) {
                int next = use_f ? g.f_edge[cur][i - 1] : g.e_edge[cur][i - 1];
                if (next < 0) break;
                members.insert(next);
                cur = next;
            }
        }
    }
    return {members.begin(), members.end()};
}

}  // namespace

std::vector<int> demazure_crystal(const CrystalGraph& g, const std::vector<int>& word) {
    return closure(g, word, true, g.highest);
}

std::vector<int> opposite_demazure_crystal(const CrystalGraph& g, const std::vector<int>& word) {
    return closure(g, word, false, g.lowest);
}

std::vector<int> reduced_word_for(const std::vector<int>& v, const std::vector<int>& lambda,
                                  int n) {
    std::vector<int> lam(lambda);
    lam.resize(n, 0);
    std::vector<int> x(v);
    x.resize(n, 0);
    {
        std::vector<int> a(x);
        for (int& e : a) e = std::abs(e);
        std::sort(a.rbegin(), a.rend());
        if (a != lam) throw weight_not_in_orbit("weight is not in the orbit of the shape");
    }
    std::vector<int> collected;
    while (x != lam) {
        int i = 0;
        if (x[n - 1] < 0) {
            i = n;
        } else {
            for (int j = 1; j < n; ++j)
                if (x[j - 1] < x[j]) {
                    i = j;
                    break;
                }
        }
        if (i == 0) throw weight_not_in_orbit("weight walk stalled");
        x = apply_simple_reflection(x, i, n);
        collected.push_back(i);
    }
    std::reverse(collected.begin(), collected.end());
    return collected;
}

namespace {

std::vector<std::vector<int>> orbit_padded(const CrystalGraph& g) {
    return weyl_orbit(g.shape, g.n);
}

std::vector<int> subtract(const std::vector<int>& a, const std::set<int>& b) {
    std::vector<int> out;
    for (int v : a)
        if (!b.count(v)) out.push_back(v);
    return out;
}

bool key_below(const SkewTableau& a, const SkewTableau& b) {
    return !(a.to_literal() == b.to_literal()) && entrywise_leq(a, b);
}

}  // namespace

std::vector<int> demazure_atom(const CrystalGraph& g, const std::vector<int>& v) {
    std::vector<int> vv(v);
    vv.resize(g.n, 0);
    SkewTableau kv = key_of_weight(vv, g.shape, g.n);
    std::vector<int> bv = demazure_crystal(g, reduced_word_for(vv, g.shape, g.n));
    std::set<int> below;
    for (const auto& u : orbit_padded(g)) {
        SkewTableau ku = key_of_weight(u, g.shape, g.n);
        if (!key_below(ku, kv)) continue;
        for (int w : demazure_crystal(g, reduced_word_for(u, g.shape, g.n))) below.insert(w);
    }
    return subtract(bv, below);
}

std::vector<int> opposite_demazure_atom(const CrystalGraph& g, const std::vector<int>& v) {
    std::vector<int> vv(v);
    vv.resize(g.n, 0);
    SkewTableau kv = key_of_weight(vv, g.shape, g.n);
    auto op_word = [&](const std::vector<int>& u) {
        std::vector<int> neg(u);
        for (int& x : neg) x = -x;
        return reduced_word_for(neg, g.shape, g.n);
    };
    std::vector<int> bv = opposite_demazure_crystal(g, op_word(vv));
    std::set<int> above;
    for (const auto& u : orbit_padded(g)) {
        SkewTableau ku = key_of_weight(u, g.shape, g.n);
        if (!key_below(kv, ku)) continue;
        for (int w : opposite_demazure_crystal(g, op_word(u))) above.insert(w);
    }
    return subtract(bv, above);
}

void LaurentPolynomial::add(const std::vector<int>& exp, long long coef) {
    auto it = terms.find(exp);
    if (it == terms.end()) {
        if (coef != 0) terms.emplace(exp, coef);
        return;
    }
    it->second += coef;
    if (it->second == 0) terms.erase(it);
}

LaurentPolynomial LaurentPolynomial::inverted() const {
    LaurentPolynomial out;
    for (const auto& [exp, coef] : terms) {
        std::vector<int> neg(exp);
        for (int& x : neg) x = -x;
        out.add(neg, coef);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::reflected(int i, int n) const {
    LaurentPolynomial out;
    for (const auto& [exp, coef] : terms) {
        std::vector<int> e(exp);
        e.resize(n, 0);
        if (i < n)
            std::swap(e[i - 1], e[i]);
        else
            e[n - 1] = -e[n - 1];
        out.add(e, coef);
    }
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms.empty()) return "0";
    // Terms print in descending lexicographic exponent order.
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [exp, coef] = *it;
        if (!first) os << " + ";
        first = false;
        bool constant = true;
        for (int e : exp) constant &= e == 0;
        if (coef != 1 || constant) os << coef;
        bool printed = coef != 1 || constant;
        for (size_t j = 0; j < exp.size(); ++j) {
            if (exp[j] == 0) continue;
            if (printed) os << "*";
            os << "x" << (j + 1);
            if (exp[j] != 1) os << "^" << exp[j];
            printed = true;
        }
    }
    return os.str();
}

nlohmann::json LaurentPolynomial::to_json() const {
    nlohmann::json monos = nlohmann::json::array();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        monos.push_back({{"exp", it->first}, {"coef", it->second}});
    return {{"monomials", monos}};
}

LaurentPolynomial character_of(const CrystalGraph& g, const std::vector<int>& idxs) {
    LaurentPolynomial p;
    for (int v : idxs) {
        std::vector<int> w = weight(g.vertices[v]);
        w.resize(g.n, 0);
        p.add(w, 1);
    }
    return p;
}

LaurentPolynomial full_character(const CrystalGraph& g) {
    std::vector<int> all(g.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    return character_of(g, all);
}

LaurentPolynomial demazure_character(const CrystalGraph& g, const std::vector<int>& v) {
    std::vector<int> vv(v);
    vv.resize(g.n, 0);
    return character_of(g, demazure_crystal(g, reduced_word_for(vv, g.shape, g.n)));
}

LaurentPolynomial demazure_atom_character(const CrystalGraph& g, const std::vector<int>& v) {
    return character_of(g, demazure_atom(g, v));
}

LaurentPolynomial opposite_demazure_character(const CrystalGraph& g, const std::vector<int>& v) {
    std::vector<int> neg(v);
    neg.resize(g.n, 0);
    for (int& x : neg) x = -x;
    return character_of(g, opposite_demazure_crystal(g, reduced_word_for(neg, g.shape, g.n)));
}

LaurentPolynomial opposite_demazure_atom_character(const CrystalGraph& g,
                                                   const std::vector<int>& v) {
    return character_of(g, opposite_demazure_atom(g, v));
}

nlohmann::json crystal_to_json(const CrystalGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (int v = 0; v < (int)g.vertices.size(); ++v)
        for (int i = 1; i <= g.n; ++i)
            if (g.f_edge[v][i - 1] >= 0)
                edges.push_back({{"from", g.literals[v]}, {"to", g.literals[g.f_edge[v][i - 1]]},
                                 {"i", i}});
    return {{"n", g.n},
            {"shape", g.shape},
            {"vertices", g.literals},
            {"edges", edges},
            {"highest", g.literals[g.highest]},
            {"lowest", g.literals[g.lowest]}};
}

std::string crystal_to_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
    for (int v = 0; v < (int)g.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << g.literals[v] << "\"];\n";
    for (int v = 0; v < (int)g.vertices.size(); ++v)
        for (int i = 1; i <= g.n; ++i)
            if (g.f_edge[v][i - 1] >= 0)
                os << "  v" << v << " -> v" << g.f_edge[v][i - 1] << " [label=\"" << i << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace sptab
