#include "sptab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sptab/column.hpp"
#include "sptab/crystal.hpp"
#include "sptab/errors.hpp"
#include "sptab/keys.hpp"
#include "sptab/rsk.hpp"
#include "sptab/sjdt.hpp"
#include "sptab/tableau.hpp"

namespace sptab {

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw parse_error(std::string(what) + ": unreadable entry '" + tok + "'");
        }
    }
    return out;
}

std::string slurp(const std::string& positional, std::istream& in) {
    if (!positional.empty()) return positional;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace((unsigned char)c); });
}

int need_n(int n) {
    if (n <= 0) throw parse_error("--n is required for literal input");
    return n;
}

SkewTableau read_tableau(const std::string& text, int n) {
    size_t i = 0;
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    if (i < text.size() && text[i] == '{') return parse_tableau_any(text, n);
    return parse_tableau(text, need_n(n));
}

// A bare comma list is read as one column by the column-oriented verbs.
bool single_column_literal(const std::string& text) {
    return !blank(text) && text.find(';') == std::string::npos &&
           text.find('{') == std::string::npos && text.find('.') == std::string::npos;
}

void print_tableau(const SkewTableau& t, const std::string& fmt, std::ostream& out) {
    if (fmt == "json")
        out << t.to_json().dump() << "\n";
    else if (fmt == "text")
        out << t.to_literal() << "\n";
    else
        throw parse_error("output format '" + fmt + "' does not apply here");
}

void print_lines(const std::vector<std::string>& lines, std::ostream& out) {
    for (const auto& line : lines) out << line << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"symplectic Kashiwara-Nakashima tableau toolkit"};
    app.name("sptab");
    app.require_subcommand(1);

    int n = 0;
    int r = 0;
    std::string shape_s, v_s, word_s, side = "right", method, fmt = "text", input;
    bool want_trace = false;

    auto common = [&](CLI::App* sub, bool positional = true) {
        sub->add_option("--n", n, "alphabet bound");
        sub->add_option("--out", fmt, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        if (positional) sub->add_option("input", input, "literal or JSON; read from stdin if absent");
        return sub;
    };

    CLI::App* c_validate = common(app.add_subcommand(
        "validate", "check the Kashiwara-Nakashima conditions; a bare comma list is one column"));
    CLI::App* c_split = common(app.add_subcommand("split", "print the split form"));
    CLI::App* c_phi = common(app.add_subcommand("phi", "split-embedding of one admissible column"));
    c_phi->add_option("--method", method, "forward (default) or inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));
    CLI::App* c_rectify = common(app.add_subcommand("rectify", "rectify a skew tableau"));
    c_rectify->add_flag("--trace", want_trace, "log every elementary slide");
    CLI::App* c_reshape = common(app.add_subcommand("reshape", "move a tableau to the column lengths of --shape"));
    c_reshape->add_option("--shape", shape_s, "target column lengths, left to right")->required();
    CLI::App* c_key = common(app.add_subcommand("key", "right or left key tableau"));
    c_key->add_option("--side", side, "right (default) or left")
        ->check(CLI::IsMember({"right", "left"}));
    c_key->add_option("--method", method, "sjdt, direct, or both (default)")
        ->check(CLI::IsMember({"sjdt", "direct", "both"}));
    c_key->add_flag("--trace", want_trace, "log the direct computation");
    CLI::App* c_crystal = common(app.add_subcommand("crystal", "enumerate the crystal of a shape"), false);
    c_crystal->add_option("--shape", shape_s, "partition")->required();
    CLI::App* c_demazure = common(app.add_subcommand("demazure", "Demazure crystal vertices"), false);
    c_demazure->add_option("--shape", shape_s, "partition")->required();
    c_demazure->add_option("--v", v_s, "orbit weight");
    c_demazure->add_option("--word", word_s, "explicit generator word, applied head first");
    c_demazure->add_option("--method", method, "standard (default) or opposite")
        ->check(CLI::IsMember({"standard", "opposite"}));
    CLI::App* c_atom = common(app.add_subcommand("atom", "Demazure atom vertices"), false);
    c_atom->add_option("--shape", shape_s, "partition")->required();
    c_atom->add_option("--v", v_s, "orbit weight")->required();
    c_atom->add_option("--method", method, "standard (default) or opposite")
        ->check(CLI::IsMember({"standard", "opposite"}));
    CLI::App* c_character = common(app.add_subcommand("character", "character as a Laurent polynomial"), false);
    c_character->add_option("--shape", shape_s, "partition")->required();
    c_character->add_option("--v", v_s, "orbit weight");
    c_character->add_option("--method", method,
                            "demazure, atom, opposite, opposite-atom, keys, or full")
        ->check(CLI::IsMember({"demazure", "atom", "opposite", "opposite-atom", "keys", "full"}));
    CLI::App* c_cocrystal = common(app.add_subcommand("cocrystal", "slide closure of a straight tableau"));
    c_cocrystal->add_option("--r", r, "number of column slots (default: its column count)");
    c_cocrystal->add_option("--method", method, "all (default) or keys")
        ->check(CLI::IsMember({"all", "keys"}));
    CLI::App* c_rsk = common(app.add_subcommand(
        "rsk", "dual RSK of a biword \"t:b t:b ...\", or the biword of a tableau"));
    c_rsk->add_option("--r", r, "top alphabet bound (default: largest top)");
    CLI::App* c_trace = common(app.add_subcommand("trace", "step log of a key computation"));
    c_trace->add_option("--method", method, "sjdt (default), right, or left")
        ->check(CLI::IsMember({"sjdt", "right", "left"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(c_validate)) {
            std::string text = slurp(input, in);
            SkewTableau t = single_column_literal(text)
                                ? tableau_from_columns({parse_int_list(text, "column")}, need_n(n))
                                : read_tableau(text, n);
            ValidationResult vr = validate_kn(t);
            if (!vr.valid) {
                out << vr.reason << "\n";
                return 1;
            }
            out << "ok\n";
        } else if (app.got_subcommand(c_split)) {
            std::string text = slurp(input, in);
            SkewTableau t = single_column_literal(text)
                                ? tableau_from_columns({parse_int_list(text, "column")}, need_n(n))
                                : read_tableau(text, n);
            print_tableau(split_form(t), fmt, out);
        } else if (app.got_subcommand(c_phi)) {
            Column c = parse_int_list(slurp(input, in), "column");
            Column res = (method == "inverse") ? phi_inverse(c, need_n(n)) : phi(c, need_n(n));
            if (fmt == "json")
                out << nlohmann::json(res).dump() << "\n";
            else
                out << column_str(res) << "\n";
        } else if (app.got_subcommand(c_rectify)) {
            SkewTableau t = read_tableau(slurp(input, in), n);
            StepTrace tr;
            SkewTableau res = rectify(t, want_trace ? &tr : nullptr);
            print_lines(tr, out);
            print_tableau(res, fmt, out);
        } else if (app.got_subcommand(c_reshape)) {
            SkewTableau t = read_tableau(slurp(input, in), n);
            print_tableau(reshape(t, parse_int_list(shape_s, "--shape")), fmt, out);
        } else if (app.got_subcommand(c_key)) {
            SkewTableau t = read_tableau(slurp(input, in), n);
            const bool right = side == "right";
            const std::string m = method.empty() ? "both" : method;
            std::vector<std::string> tr;
            if (m == "sjdt") {
                print_tableau(right ? right_key_sjdt(t) : left_key_sjdt(t), fmt, out);
            } else if (m == "direct") {
                SkewTableau res = right ? right_key_direct(t, want_trace ? &tr : nullptr)
                                        : left_key_direct(t, want_trace ? &tr : nullptr);
                print_lines(tr, out);
                print_tableau(res, fmt, out);
            } else {
                SkewTableau by_slides = right ? right_key_sjdt(t) : left_key_sjdt(t);
                SkewTableau direct = right ? right_key_direct(t, want_trace ? &tr : nullptr)
                                           : left_key_direct(t, want_trace ? &tr : nullptr);
                print_lines(tr, out);
                print_tableau(by_slides, fmt, out);
                print_tableau(direct, fmt, out);
                if (by_slides.contents() != direct.contents()) {
                    out << "MISMATCH\n";
                    return 2;
                }
                out << "MATCH\n";
            }
        } else if (app.got_subcommand(c_crystal)) {
            CrystalGraph g = generate_crystal(parse_int_list(shape_s, "--shape"), need_n(n));
            if (fmt == "json")
                out << crystal_to_json(g).dump() << "\n";
            else if (fmt == "dot")
                out << crystal_to_dot(g);
            else
                for (const auto& lit : g.literals) out << lit << "\n";
        } else if (app.got_subcommand(c_demazure)) {
            std::vector<int> lambda = parse_int_list(shape_s, "--shape");
            CrystalGraph g = generate_crystal(lambda, need_n(n));
            const bool opposite = method == "opposite";
            std::vector<int> word;
            if (!word_s.empty()) {
                word = parse_int_list(word_s, "--word");
            } else if (!v_s.empty()) {
                std::vector<int> v = parse_int_list(v_s, "--v");
                if (opposite)
                    for (int& x : v) x = -x;
                word = reduced_word_for(v, lambda, g.n);
            } else {
                throw parse_error("demazure needs --v or --word");
            }
            std::vector<int> idxs =
                opposite ? opposite_demazure_crystal(g, word) : demazure_crystal(g, word);
            if (fmt == "json") {
                nlohmann::json lits = nlohmann::json::array();
                for (int i : idxs) lits.push_back(g.literals[i]);
                out << lits.dump() << "\n";
            } else {
                for (int i : idxs) out << g.literals[i] << "\n";
            }
        } else if (app.got_subcommand(c_atom)) {
            std::vector<int> lambda = parse_int_list(shape_s, "--shape");
            CrystalGraph g = generate_crystal(lambda, need_n(n));
            std::vector<int> v = parse_int_list(v_s, "--v");
            std::vector<int> idxs =
                (method == "opposite") ? opposite_demazure_atom(g, v) : demazure_atom(g, v);
            if (fmt == "json") {
                nlohmann::json lits = nlohmann::json::array();
                for (int i : idxs) lits.push_back(g.literals[i]);
                out << lits.dump() << "\n";
            } else {
                for (int i : idxs) out << g.literals[i] << "\n";
            }
        } else if (app.got_subcommand(c_character)) {
            std::vector<int> lambda = parse_int_list(shape_s, "--shape");
            CrystalGraph g = generate_crystal(lambda, need_n(n));
            std::string m = method.empty() ? (v_s.empty() ? "full" : "demazure") : method;
            LaurentPolynomial p;
            if (m == "full") {
                p = full_character(g);
            } else {
                std::vector<int> v = parse_int_list(v_s, "--v");
                if (v_s.empty()) throw parse_error("character --method " + m + " needs --v");
                if (m == "demazure")
                    p = demazure_character(g, v);
                else if (m == "atom")
                    p = demazure_atom_character(g, v);
                else if (m == "opposite")
                    p = opposite_demazure_character(g, v);
                else if (m == "opposite-atom")
                    p = opposite_demazure_atom_character(g, v);
                else
                    p = character_via_keys(g, v);
            }
            if (fmt == "json")
                out << p.to_json().dump() << "\n";
            else
                out << p.to_string() << "\n";
        } else if (app.got_subcommand(c_cocrystal)) {
            SkewTableau t = read_tableau(slurp(input, in), n);
            int slots = r > 0 ? r : (int)t.contents().size();
            Cocrystal c = generate_cocrystal(t, slots);
            if (method == "keys") {
                for (int idx : cocrystal_key_indices(c)) out << c.placed[idx].to_literal() << "\n";
            } else if (fmt == "json") {
                out << cocrystal_to_json(c).dump() << "\n";
            } else if (fmt == "dot") {
                out << cocrystal_to_dot(c);
            } else {
                out << "vertices " << c.vertices.size() << " base v" << c.base << "\n";
                for (size_t v = 0; v < c.vertices.size(); ++v)
                    out << "v" << v << " " << c.placed[v].to_literal() << " | q "
                        << c.qsymbols[v].to_literal() << "\n";
                for (size_t v = 0; v < c.vertices.size(); ++v)
                    for (int i = 1; i < c.r; ++i)
                        if (c.f_edge[v][i - 1] >= 0)
                            out << "v" << v << " -F" << i << "-> v" << c.f_edge[v][i - 1] << "\n";
            }
        } else if (app.got_subcommand(c_rsk)) {
            std::string text = slurp(input, in);
            if (text.find(':') != std::string::npos) {
                Biword w = parse_biword(text);
                int top_max = 0;
                for (auto& [u, v] : w.pairs) top_max = std::max(top_max, u);
                int rr = r > 0 ? r : std::max(top_max, 1);
                auto [p, q] = dual_rsk(w, need_n(n), rr);
                if (fmt == "json") {
                    out << nlohmann::json{{"p", p.to_json()}, {"q", q.to_json()}}.dump() << "\n";
                } else {
                    print_tableau(p, fmt, out);
                    print_tableau(q, fmt, out);
                }
            } else {
                SkewTableau t = read_tableau(text, n);
                std::vector<Column> slots = t.contents();
                while ((int)slots.size() < r) slots.push_back({});
                out << biword_str(biword_of(slots)) << "\n";
            }
        } else if (app.got_subcommand(c_trace)) {
            SkewTableau t = read_tableau(slurp(input, in), n);
            const std::string m = method.empty() ? "sjdt" : method;
            std::vector<std::string> tr;
            if (m == "sjdt") {
                tr = sjdt_key_trace(t);
            } else if (m == "right") {
                right_key_direct(t, &tr);
            } else {
                left_key_direct(t, &tr);
            }
            print_lines(tr, out);
        }
        return 0;
    } catch (const verification_mismatch& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

}  // namespace sptab
