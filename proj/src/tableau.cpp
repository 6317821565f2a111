#include "sptab/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sptab {

bool SkewTableau::empty() const {
    for (const auto& c : cols)
        if (!c.empty()) return false;
    return true;
}

bool SkewTableau::straight() const {
    for (const auto& c : cols)
        if (c.empty() || c.top != 1) return false;
    return true;
}

int SkewTableau::first_row() const {
    int r = 0;
    for (const auto& c : cols)
        if (!c.empty() && (r == 0 || c.top < r)) r = c.top;
    return r == 0 ? 1 : r;
}

int SkewTableau::last_row() const {
    int r = 0;
    for (const auto& c : cols)
        if (!c.empty()) r = std::max(r, c.bottom());
    return r;
}

int SkewTableau::cell_count() const {
    int k = 0;
    for (const auto& c : cols) k += c.height();
    return k;
}

std::vector<int> SkewTableau::column_lengths() const {
    std::vector<int> out;
    for (const auto& c : cols) out.push_back(c.height());
    return out;
}

std::vector<Column> SkewTableau::contents() const {
    std::vector<Column> out;
    for (const auto& c : cols) out.push_back(c.cells);
    return out;
}

std::string SkewTableau::to_literal() const {
    if (empty()) return "";
    std::string s;
    int r0 = first_row(), r1 = last_row();
    for (int r = r0; r <= r1; ++r) {
        if (r > r0) s += ';';
        bool first = true;
        for (const auto& c : cols) {
            if (c.empty()) continue;
            if (c.top > r) {  // inner cell left of the row's entries
                if (!first) s += ',';
                s += '.';
                first = false;
            } else if (c.covers(r)) {
                if (!first) s += ',';
                s += letter_str(c.at(r));
                first = false;
            }
            // columns that ended above row r contribute nothing
        }
    }
    return s;
}

nlohmann::json SkewTableau::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    if (!empty()) {
        int r0 = first_row(), r1 = last_row();
        for (int r = r0; r <= r1; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& c : cols) {
                if (c.empty()) continue;
                if (c.top > r)
                    row.push_back(nullptr);
                else if (c.covers(r))
                    row.push_back(c.at(r));
            }
            rows.push_back(row);
        }
    }
    return nlohmann::json{{"n", n}, {"rows", rows}};
}

namespace {

SkewTableau from_rows(const std::vector<std::vector<std::optional<Letter>>>& rows, int n) {
    // rows[r] = the cells of row r+1: nullopt for inner cells (must be a
    // prefix), letters after.
    std::vector<int> inner, outer;
    for (size_t r = 0; r < rows.size(); ++r) {
        size_t dots = 0;
        while (dots < rows[r].size() && !rows[r][dots].has_value()) ++dots;
        for (size_t c = dots; c < rows[r].size(); ++c) {
            if (!rows[r][c].has_value())
                throw parse_error("row " + std::to_string(r + 1) + ", column " +
                                  std::to_string(c + 1) + ": inner cell after an entry");
        }
        if (dots == rows[r].size())
            throw parse_error("row " + std::to_string(r + 1) + " has no entries");
        inner.push_back((int)dots);
        outer.push_back((int)rows[r].size());
    }
    for (size_t r = 1; r < rows.size(); ++r) {
        if (outer[r] > outer[r - 1])
            throw parse_error("row " + std::to_string(r + 1) + " longer than row " +
                              std::to_string(r));
        if (inner[r] > inner[r - 1])
            throw parse_error("row " + std::to_string(r + 1) +
                              " has more inner cells than row " + std::to_string(r));
    }
    SkewTableau t;
    t.n = n;
    int width = rows.empty() ? 0 : outer[0];
    for (int c = 0; c < width; ++c) {
        PlacedColumn pc;
        pc.top = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (inner[r] <= c && c < outer[r]) {
                if (pc.top == 0) pc.top = (int)r + 1;
                Letter x = *rows[r][c];
                if (x == 0 || x > n || x < -n)
                    throw parse_error("row " + std::to_string(r + 1) + ", column " +
                                      std::to_string(c + 1) + ": letter " + letter_str(x) +
                                      " outside alphabet bound n=" + std::to_string(n));
                pc.cells.push_back(x);
            }
        }
        if (pc.top == 0)
            throw parse_error("column " + std::to_string(c + 1) + " has no entries");
        t.cols.push_back(std::move(pc));
    }
    return t;
}

}  // namespace

SkewTableau parse_tableau(const std::string& literal, int n) {
    if (n <= 0) throw parse_error("alphabet bound n must be positive");
    std::vector<std::vector<std::optional<Letter>>> rows;
    std::string trimmed;
    for (char ch : literal)
        if (!isspace((unsigned char)ch)) trimmed += ch;
    if (trimmed.empty()) return SkewTableau{n, {}};
    std::stringstream rs(trimmed);
    std::string row;
    int r = 0;
    while (std::getline(rs, row, ';')) {
        ++r;
        std::vector<std::optional<Letter>> cells;
        std::stringstream cs(row);
        std::string cell;
        int c = 0;
        while (std::getline(cs, cell, ',')) {
            ++c;
            if (cell == ".") {
                cells.push_back(std::nullopt);
            } else {
                try {
                    size_t used = 0;
                    int v = std::stoi(cell, &used);
                    if (used != cell.size()) throw std::invalid_argument(cell);
                    cells.push_back(v);
                } catch (const std::exception&) {
                    throw parse_error("row " + std::to_string(r) + ", column " +
                                      std::to_string(c) + ": unreadable entry '" + cell + "'");
                }
            }
        }
        if (cells.empty())
            throw parse_error("row " + std::to_string(r) + " is empty");
        rows.push_back(std::move(cells));
    }
    return from_rows(rows, n);
}

SkewTableau tableau_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw parse_error("tableau JSON needs fields \"n\" and \"rows\"");
    int n = j.at("n").get<int>();
    if (n <= 0) throw parse_error("alphabet bound n must be positive");
    std::vector<std::vector<std::optional<Letter>>> rows;
    for (const auto& jr : j.at("rows")) {
        std::vector<std::optional<Letter>> row;
        for (const auto& cell : jr) {
            if (cell.is_null())
                row.push_back(std::nullopt);
            else
                row.push_back(cell.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return from_rows(rows, n);
}

SkewTableau parse_tableau_any(const std::string& text, int n) {
    size_t i = 0;
    while (i < text.size() && isspace((unsigned char)text[i])) ++i;
    if (i < text.size() && text[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const std::exception& e) {
            throw parse_error(std::string("bad tableau JSON: ") + e.what());
        }
        return tableau_from_json(j);
    }
    return parse_tableau(text, n);
}

SkewTableau tableau_from_columns(const std::vector<Column>& cols, int n) {
    SkewTableau t;
    t.n = n;
    for (const auto& c : cols) t.cols.push_back(PlacedColumn{1, c});
    return t;
}

namespace {

bool placement_ok(const SkewTableau& t, std::string* why) {
    int prev_top = 0, prev_bottom = 0;
    bool seen = false;
    for (size_t j = 0; j < t.cols.size(); ++j) {
        const auto& c = t.cols[j];
        if (c.empty()) {
            if (why) *why = "column " + std::to_string(j + 1) + " is empty";
            return false;
        }
        if (seen) {
            if (c.top > prev_top) {
                if (why)
                    *why = "column " + std::to_string(j + 1) + " starts below column " +
                           std::to_string(j);
                return false;
            }
            if (c.bottom() > prev_bottom) {
                if (why)
                    *why = "column " + std::to_string(j + 1) + " ends below column " +
                           std::to_string(j);
                return false;
            }
        }
        prev_top = c.top;
        prev_bottom = c.bottom();
        seen = true;
    }
    return true;
}

}  // namespace

ValidationResult validate_kn(const SkewTableau& t) {
    if (t.empty()) return {true, ""};
    std::string why;
    if (!placement_ok(t, &why)) return {false, why};
    for (size_t j = 0; j < t.cols.size(); ++j) {
        const Column& c = t.cols[j].cells;
        try {
            validate_column(c, t.n);
        } catch (const parse_error& e) {
            return {false, "column " + std::to_string(j + 1) + ": " + e.what()};
        }
        AdmissibilityResult adm = admissibility_check(c, t.n);
        if (!adm.admissible)
            return {false, "column " + std::to_string(j + 1) + " breaks 1CC at " +
                               std::to_string(adm.break_value)};
    }
    // Split-form semistandardness: within a column lC <= rC holds
    // entrywise by construction, so the binding condition is
    // rC_j <= lC_{j+1} on every common row.
    std::vector<Column> lefts, rights;
    for (const auto& pc : t.cols) {
        auto s = split_column(pc.cells, t.n);
        lefts.push_back(s.first);
        rights.push_back(s.second);
    }
    for (size_t j = 0; j + 1 < t.cols.size(); ++j) {
        const auto& a = t.cols[j];
        const auto& b = t.cols[j + 1];
        int lo = std::max(a.top, b.top), hi = std::min(a.bottom(), b.bottom());
        for (int r = lo; r <= hi; ++r) {
            Letter x = rights[j][r - a.top];
            Letter y = lefts[j + 1][r - b.top];
            if (!letter_leq(x, y))
                return {false, "split form row " + std::to_string(r) +
                                   " decreases between columns " + std::to_string(2 * j + 2) +
                                   " and " + std::to_string(2 * j + 3)};
        }
    }
    return {true, ""};
}

void require_kn(const SkewTableau& t) {
    ValidationResult v = validate_kn(t);
    if (!v.valid) throw invalid_tableau(v.reason);
}

SkewTableau split_form(const SkewTableau& t) {
    SkewTableau out;
    out.n = t.n;
    for (size_t j = 0; j < t.cols.size(); ++j) {
        std::pair<Column, Column> s;
        try {
            s = split_column(t.cols[j].cells, t.n);
        } catch (const not_admissible& e) {
            throw not_admissible("column " + std::to_string(j + 1) + " breaks 1CC at " +
                                     std::to_string(e.break_value),
                                 (int)j + 1, e.break_value);
        }
        out.cols.push_back(PlacedColumn{t.cols[j].top, s.first});
        out.cols.push_back(PlacedColumn{t.cols[j].top, s.second});
    }
    return out;
}

std::vector<int> weight(const SkewTableau& t) {
    std::vector<int> w(t.n, 0);
    for (const auto& c : t.cols)
        for (Letter x : c.cells) {
            if (x > 0)
                ++w[x - 1];
            else
                --w[-x - 1];
        }
    return w;
}

bool is_key_tableau(const SkewTableau& t) {
    require_kn(t);
    if (!t.straight()) throw invalid_tableau("key tableaux must be straight");
    std::set<int> values;
    for (const auto& c : t.cols)
        for (Letter x : c.cells) {
            if (values.count(-x)) return false;
            values.insert(x);
        }
    for (size_t j = 0; j + 1 < t.cols.size(); ++j) {
        std::set<Letter> a(t.cols[j].cells.begin(), t.cols[j].cells.end());
        for (Letter x : t.cols[j + 1].cells)
            if (!a.count(x)) return false;
    }
    return true;
}

SkewTableau key_of_weight(const std::vector<int>& v, const std::vector<int>& lambda, int n) {
    if ((int)v.size() != n) throw weight_not_in_orbit("weight vector must have length n");
    std::vector<int> sorted;
    for (int x : v) sorted.push_back(std::abs(x));
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<int> lam = lambda;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    while (sorted.size() > lam.size() && sorted.back() == 0) sorted.pop_back();
    if (sorted != lam)
        throw weight_not_in_orbit("weight is not a signed permutation of the shape");
    int width = lam.empty() ? 0 : lam[0];
    std::vector<Column> cols;
    for (int j = 1; j <= width; ++j) {
        Column c;
        for (int i = 1; i <= n; ++i)
            if (std::abs(v[i - 1]) >= j) c.push_back(v[i - 1] > 0 ? i : -i);
        std::sort(c.begin(), c.end(), LetterLess{});
        cols.push_back(c);
    }
    SkewTableau t = tableau_from_columns(cols, n);
    if (!is_key_tableau(t) || weight(t) != v)
        throw verification_mismatch("key_of_weight output failed its own checks");
    return t;
}

bool entrywise_leq(const SkewTableau& a, const SkewTableau& b) {
    if (a.cols.size() != b.cols.size()) throw invalid_tableau("shapes differ");
    for (size_t j = 0; j < a.cols.size(); ++j) {
        if (a.cols[j].cells.size() != b.cols[j].cells.size())
            throw invalid_tableau("shapes differ");
        for (size_t i = 0; i < a.cols[j].cells.size(); ++i)
            if (!letter_leq(a.cols[j].cells[i], b.cols[j].cells[i])) return false;
    }
    return true;
}

SkewTableau canonical_alignment(const std::vector<Column>& cols, int n) {
    SkewTableau t;
    t.n = n;
    t.cols.assign(cols.size(), PlacedColumn{});
    for (size_t j = 0; j < cols.size(); ++j) t.cols[j].cells = cols[j];

    int rightmost = -1;
    for (int j = (int)cols.size() - 1; j >= 0; --j)
        if (!cols[j].empty()) {
            rightmost = j;
            break;
        }
    if (rightmost < 0) {
        for (auto& pc : t.cols) pc.top = 1;
        return t;
    }
    std::vector<Column> lefts(cols.size()), rights(cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        if (!cols[j].empty()) {
            auto s = split_column(cols[j], n);
            lefts[j] = s.first;
            rights[j] = s.second;
        }

    t.cols[rightmost].top = 1;
    int prev = rightmost;  // nearest placed nonempty column to the right
    bool gap = false;      // an empty slot separates j from prev
    for (int j = rightmost - 1; j >= 0; --j) {
        if (cols[j].empty()) {
            gap = true;
            continue;
        }
        int pt = t.cols[prev].top;
        int pb = t.cols[prev].bottom();
        int h = (int)cols[j].size();
        int top;
        if (gap) {
            top = pb + 1;  // edges touch across the empty slot, no overlap
        } else {
            top = std::max(pt, pb - h + 1);
            for (; top <= pb; ++top) {
                bool ok = true;
                for (int r = top; r <= std::min(top + h - 1, pb); ++r) {
                    if (!letter_leq(rights[j][r - top], lefts[prev][r - pt])) {
                        ok = false;
                        break;
                    }
                }
                if (ok) break;
            }
            // top == pb + 1 (zero overlap) when no overlapping placement works
        }
        t.cols[j].top = top;
        prev = j;
        gap = false;
    }
    // Empty slots get a nominal top (they have no cells).
    for (auto& pc : t.cols)
        if (pc.empty()) pc.top = 1;
    return t;
}

std::vector<int> apply_simple_reflection(std::vector<int> v, int i, int n) {
    if (i < 1 || i > n) throw invalid_shape("generator index out of range");
    if (i < n)
        std::swap(v[i - 1], v[i]);
    else
        v[n - 1] = -v[n - 1];
    return v;
}

std::vector<std::vector<int>> weyl_orbit(const std::vector<int>& lambda, int n) {
    std::vector<int> lam(n, 0);
    for (size_t i = 0; i < lambda.size(); ++i) {
        if ((int)i >= n && lambda[i] != 0)
            throw invalid_shape("shape has more parts than n");
        if ((int)i < n) lam[i] = lambda[i];
    }
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{lam};
    seen.insert(lam);
    for (size_t q = 0; q < queue.size(); ++q) {
        for (int i = 1; i <= n; ++i) {
            auto w = apply_simple_reflection(queue[q], i, n);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace sptab
