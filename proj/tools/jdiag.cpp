// Command-line front end: enumeration, dimensions, verification checks,
// brackets, exports and reports over the diagram spaces.  Exit codes: 0 ok,
// 1 verification failure (witness file written), 2 usage, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jdiag/diagram.hpp"
#include "jdiag/enumerate.hpp"
#include "jdiag/forest_graph.hpp"
#include "jdiag/hopf.hpp"
#include "jdiag/lie.hpp"
#include "jdiag/relations.hpp"
#include "jdiag/spaces.hpp"
#include "jdiag/verify.hpp"

namespace {

using namespace jdiag;
using nlohmann::ordered_json;

// --out target of the running subcommand, for the partial manifest on a
// resource failure.
std::string g_out;

void emit(const std::string& text) {
    if (g_out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(g_out);
    if (!f) throw StructError("cannot write " + g_out);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

ordered_json vec_terms(const RatVec& v) {
    ordered_json terms = ordered_json::array();
    for (auto& [id, c] : v.entries)
        terms.push_back(ordered_json::array({rat_to_string(c), diag_info(id).encoding}));
    return terms;
}

ordered_json tuple_json(const WordTuple& t) {
    ordered_json out = ordered_json::array();
    for (auto& w : t.words) out.push_back(w);
    return out;
}

ordered_json site_json(const SlideSite& s) {
    return ordered_json{{"factor", s.factor}, {"pos", s.pos}};
}

std::string tuple_id(const WordTuple& t) {
    std::string s;
    for (size_t i = 0; i < t.words.size(); ++i) {
        if (i) s += "|";
        for (int x : t.words[i]) s += std::to_string(x);
    }
    return s;
}

std::string tuple_label(const WordTuple& t) {
    std::string s;
    for (size_t i = 0; i < t.words.size(); ++i) {
        if (i) s += " | ";
        for (size_t j = 0; j < t.words[i].size(); ++j)
            s += (j ? " " : "") + std::to_string(t.words[i][j]);
    }
    return s;
}

std::vector<int> parse_mult(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v <= 0) throw StructError("multiplicities must be positive: " + s);
        out.push_back(v);
    }
    if (out.empty()) throw StructError("empty multiplicity vector");
    return out;
}

// Undirected graph in DOT form, every vertex annotated with its height.
std::string graph_dot(const std::string& name, const std::vector<WordTuple>& verts,
                      const std::string& caption) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    if (!caption.empty()) os << "  label=\"" << caption << "\";\n";
    os << "  node [shape=box];\n";
    for (auto& v : verts)
        os << "  \"" << tuple_id(v) << "\" [label=\"" << tuple_label(v)
           << "\\nh=" << height(v) << "\"];\n";
    for (auto& v : verts)
        for (auto& [site, w] : slide_neighbors(v))
            if (v < w)
                os << "  \"" << tuple_id(v) << "\" -- \"" << tuple_id(w) << "\";\n";
    os << "}\n";
    return os.str();
}

std::map<DiagId, int> position_index(const std::vector<DiagramClass>& ambient) {
    std::map<DiagId, int> pos;
    for (size_t i = 0; i < ambient.size(); ++i)
        pos[intern_encoding(ambient[i].encoding)] = (int)i;
    return pos;
}

// Rows re-keyed to ambient positions and ordered by pivot position.
std::vector<std::vector<std::pair<int, Rat>>> positioned_rows(
    const std::vector<RatVec>& rows, const std::map<DiagId, int>& pos) {
    std::vector<std::vector<std::pair<int, Rat>>> out;
    for (auto& r : rows) {
        std::vector<std::pair<int, Rat>> row;
        for (auto& [id, c] : r.entries) {
            auto it = pos.find(id);
            if (it == pos.end())
                throw StructError("row entry outside the ambient family");
            row.emplace_back(it->second, c);
        }
        std::sort(row.begin(), row.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.front().first < b.front().first; });
    return out;
}

std::string matrix_csv(const std::vector<std::vector<std::pair<int, Rat>>>& rows) {
    std::ostringstream os;
    os << "row,col,numerator,denominator\n";
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto& [col, c] : rows[i])
            os << i << "," << col << "," << c.get_num().get_str() << ","
               << c.get_den().get_str() << "\n";
    return os.str();
}

ordered_json matrix_json(const std::vector<std::vector<std::pair<int, Rat>>>& rows) {
    ordered_json jrows = ordered_json::array();
    for (auto& row : rows) {
        ordered_json jr = ordered_json::array();
        for (auto& [col, c] : row)
            jr.push_back(ordered_json::array({col, rat_to_string(c)}));
        jrows.push_back(std::move(jr));
    }
    return jrows;
}

ordered_json encodings_json(const std::vector<DiagramClass>& ambient) {
    ordered_json out = ordered_json::array();
    for (auto& dc : ambient) out.push_back(dc.encoding);
    return out;
}

struct SpacePick {
    std::string space; // L, F, A, C
    int strands = 1;
    int degree = 1;
    int size = -1;
    bool fi = true;
};

std::vector<DiagramClass> pick_ambient(const SpacePick& p) {
    if (p.space == "L") return forest_ambient(p.strands, p.degree, 1);
    if (p.space == "F") return forest_ambient(p.strands, p.degree, p.size);
    if (p.space == "A") return forest_ambient(p.strands, p.degree);
    return chord_ambient(p.strands, p.degree);
}

const QuotientSpace& pick_space(const SpacePick& p) {
    if (p.space == "L") return graded_space(p.strands, p.degree, 1, p.fi);
    if (p.space == "F") return graded_space(p.strands, p.degree, p.size, p.fi);
    if (p.space == "A") return algebra_space(p.strands, p.degree, p.fi);
    return chord_space(p.strands, p.degree, p.fi);
}

void require_size(const SpacePick& p) {
    if (p.space == "F" && p.size < 1)
        throw CLI::ValidationError("--space F needs --size");
}

int cmd_enumerate(int strands, int degree, const std::string& filter, int size,
                  long long cap, const std::string& format) {
    EnumSpec spec;
    spec.strands = strands;
    spec.degree = degree;
    spec.cap = cap;
    if (size > 0) spec.size = size;
    spec.filter = filter == "chords"  ? DiagramFilter::Chords
                  : filter == "trees" ? DiagramFilter::Trees
                  : filter == "all"   ? DiagramFilter::All
                                      : DiagramFilter::Forests;
    auto classes = enumerate_diagrams(spec);
    if (format == "json") {
        ordered_json j;
        j["strands"] = strands;
        j["degree"] = degree;
        j["filter"] = filter;
        if (size > 0) j["size"] = size;
        j["count"] = classes.size();
        j["encodings"] = encodings_json(classes);
        emit(j.dump(2));
        return 0;
    }
    std::ostringstream os;
    for (auto& dc : classes) os << dc.encoding << "\n";
    emit(os.str());
    return 0;
}

int cmd_dim(const SpacePick& p, const std::string& format) {
    require_size(p);
    int d = space_dim(pick_ambient(p), pick_space(p));
    if (format == "json") {
        ordered_json j;
        j["space"] = p.space;
        j["strands"] = p.strands;
        j["degree"] = p.degree;
        if (p.space == "F") j["size"] = p.size;
        j["mode"] = p.fi ? "fi" : "framed";
        j["dim"] = d;
        emit(j.dump(2));
        return 0;
    }
    emit(std::to_string(d));
    return 0;
}

int cmd_verify(const std::string& check, const CheckConfig& cfg,
               const std::string& out) {
    std::vector<std::string> names;
    if (check == "all") names = check_names();
    else names.push_back(check);
    int rc = 0;
    for (auto& name : names) {
        CheckResult r = run_check(name, cfg);
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " strands="
                  << r.strands << " degree=" << r.degree << ": " << r.summary
                  << "\n";
        if (!r.pass) {
            rc = 1;
            std::string path = out.empty() ? name + "-witness.json" : out;
            std::ofstream f(path);
            if (!f) throw StructError("cannot write " + path);
            f << r.witness_json << "\n";
            std::cerr << "witness: " << path << "\n";
        }
    }
    return rc;
}

int cmd_bracket(const std::string& left, const std::string& right, bool table,
                int strands, int max_degree, const std::string& format) {
    if (table) {
        emit(bracket_table_json(strands, max_degree));
        return 0;
    }
    if (left.empty() || right.empty())
        throw CLI::ValidationError("bracket needs --left and --right, or --table");
    Diagram a = decode(left), b = decode(right);
    RatVec v = tree_bracket(a, b);
    if (format == "json") {
        ordered_json j;
        j["left"] = canonicalize(a).encoding;
        j["right"] = canonicalize(b).encoding;
        j["terms"] = vec_terms(v);
        emit(j.dump(2));
        return 0;
    }
    if (v.zero()) {
        emit("0");
        return 0;
    }
    std::ostringstream os;
    for (auto& [id, c] : v.entries)
        os << rat_to_string(c) << "  " << diag_info(id).encoding << "\n";
    emit(os.str());
    return 0;
}

std::vector<Relation> pick_relations(const std::string& rel, const SpacePick& p) {
    if (rel == "stu") return gen_STU(forest_ambient(p.strands, p.degree));
    if (rel == "4t") return gen_4T(p.strands, p.degree);
    if (rel == "stu2") return gen_STU2(p.strands, p.degree, p.size);
    if (rel == "hex") return gen_HEX(p.strands, p.degree, p.size);
    if (rel == "squares") return gen_squares(p.strands, p.degree, p.size);
    auto ambient = pick_ambient(p);
    if (rel == "as") return gen_AS(ambient);
    if (rel == "ihx") return gen_IHX(ambient);
    return gen_1T(ambient);
}

std::vector<DiagramClass> relation_ambient(const std::string& rel, const SpacePick& p) {
    if (rel == "stu") return forest_ambient(p.strands, p.degree);
    if (rel == "4t") return chord_ambient(p.strands, p.degree);
    if (rel == "stu2" || rel == "hex" || rel == "squares")
        return forest_ambient(p.strands, p.degree, p.size);
    return pick_ambient(p);
}

int cmd_export_matrix(const SpacePick& p, const std::string& format) {
    require_size(p);
    auto ambient = pick_ambient(p);
    const QuotientSpace& q = pick_space(p);
    std::vector<RatVec> rows;
    for (auto& [pivot, row] : q.rows()) rows.push_back(row);
    auto positioned = positioned_rows(rows, position_index(ambient));
    if (format == "json") {
        ordered_json j;
        j["space"] = p.space;
        j["strands"] = p.strands;
        j["degree"] = p.degree;
        if (p.space == "F") j["size"] = p.size;
        j["mode"] = p.fi ? "fi" : "framed";
        j["ambient"] = encodings_json(ambient);
        j["rank"] = q.rank();
        j["rows"] = matrix_json(positioned);
        emit(j.dump(2));
        return 0;
    }
    emit(matrix_csv(positioned));
    return 0;
}

int cmd_export_basis(const SpacePick& p, const std::string& format) {
    require_size(p);
    auto ambient = pick_ambient(p);
    auto basis = quotient_basis(ambient, pick_space(p));
    if (format == "json") {
        ordered_json j;
        j["space"] = p.space;
        j["strands"] = p.strands;
        j["degree"] = p.degree;
        if (p.space == "F") j["size"] = p.size;
        j["mode"] = p.fi ? "fi" : "framed";
        j["ambient"] = encodings_json(ambient);
        ordered_json b = ordered_json::array();
        for (DiagId id : basis) b.push_back(diag_info(id).encoding);
        j["basis"] = std::move(b);
        emit(j.dump(2));
        return 0;
    }
    std::ostringstream os;
    for (DiagId id : basis) os << diag_info(id).encoding << "\n";
    emit(os.str());
    return 0;
}

int cmd_export_relations(const std::string& rel, const SpacePick& p,
                         const std::string& format) {
    if ((rel == "stu2" || rel == "hex" || rel == "squares") && p.size < 1)
        throw CLI::ValidationError("--rel " + rel + " needs --size");
    if (p.space == "F") require_size(p);
    auto rels = pick_relations(rel, p);
    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (auto& r : rels) {
            ordered_json j;
            j["kind"] = rel_kind_name(r.kind);
            j["site"] = r.site;
            j["terms"] = vec_terms(r.vec);
            out.push_back(std::move(j));
        }
        emit(out.dump(2));
        return 0;
    }
    auto pos = position_index(relation_ambient(rel, p));
    std::vector<RatVec> rows;
    for (auto& r : rels)
        if (!r.vec.zero()) rows.push_back(r.vec);
    std::ostringstream os;
    os << "row,col,numerator,denominator\n";
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto& [id, c] : rows[i].entries) {
            auto it = pos.find(id);
            if (it == pos.end())
                throw StructError("relation entry outside the ambient family");
            os << i << "," << it->second << "," << c.get_num().get_str() << ","
               << c.get_den().get_str() << "\n";
        }
    emit(os.str());
    return 0;
}

int cmd_export_permutograph(const std::vector<std::string>& mults, long long cap) {
    std::vector<Permutograph> factors;
    std::string caption;
    for (auto& m : mults) {
        factors.push_back(Permutograph{parse_mult(m)});
        caption += (caption.empty() ? "(" : ") x (") + m;
    }
    emit(graph_dot("permutograph", box_vertices(factors, cap), caption + ")"));
    return 0;
}

int cmd_export_forest_graph(const std::string& forest, long long cap) {
    LabelledGraph g = build_labelled_graph(canonical_labelling(decode(forest)));
    return emit(graph_dot("forests", g.vertices(cap),
                          canonicalize(g.base.d).encoding)),
           0;
}

int cmd_export_path(const std::string& from, const std::string& to, long long cap) {
    Diagram a = decode(from), b = decode(to);
    SlidePath p = forest_path(a, b, cap);
    ordered_json j;
    j["from"] = p.verts.front().encoding;
    j["to"] = p.verts.back().encoding;
    ordered_json verts = ordered_json::array();
    for (auto& dc : p.verts) verts.push_back(dc.encoding);
    j["vertices"] = std::move(verts);
    ordered_json sites = ordered_json::array();
    ordered_json steps = ordered_json::array();
    for (size_t k = 0; k < p.sites.size(); ++k) {
        sites.push_back(site_json(p.sites[k]));
        steps.push_back(vec_terms(edge_vector(p.verts[k].canon, p.sites[k])));
    }
    j["sites"] = std::move(sites);
    j["step_vectors"] = std::move(steps);
    j["path_vector"] = vec_terms(slide_path_vector(p));
    emit(j.dump(2));
    return 0;
}

int cmd_export_cycle_atoms(const std::vector<std::string>& mults, long long cap,
                           int limit) {
    std::vector<Permutograph> factors;
    WordTuple start;
    ordered_json jf = ordered_json::array();
    for (auto& m : mults) {
        factors.push_back(Permutograph{parse_mult(m)});
        start.words.push_back(factors.back().bottom());
        jf.push_back(factors.back().mult);
    }
    auto cycles = fundamental_cycles(start, cap);
    ordered_json j;
    j["factors"] = std::move(jf);
    j["cycle_count"] = cycles.size();
    j["emitted"] = std::min<size_t>(cycles.size(), (size_t)limit);
    ordered_json jc = ordered_json::array();
    for (size_t i = 0; i < cycles.size() && i < (size_t)limit; ++i) {
        ordered_json one;
        ordered_json walk = ordered_json::array();
        for (auto& v : cycles[i]) walk.push_back(tuple_json(v));
        one["walk"] = std::move(walk);
        ordered_json atoms = ordered_json::array();
        for (auto& a : decompose_cycle(cycles[i])) {
            ordered_json ja;
            ja["base"] = tuple_json(a.base);
            ja["first"] = site_json(a.first);
            ja["second"] = site_json(a.second);
            ja["period"] = a.period;
            ja["coeff"] = rat_to_string(a.coeff);
            atoms.push_back(std::move(ja));
        }
        one["atoms"] = std::move(atoms);
        jc.push_back(std::move(one));
    }
    j["cycles"] = std::move(jc);
    emit(j.dump(2));
    return 0;
}

int cmd_report(int strands, int degree, bool fi, const std::string& format) {
    FiltrationReport rep = compare_filtrations(strands, degree, fi);
    std::vector<int> lie;
    for (int d = 1; d <= degree; ++d)
        lie.push_back(space_dim(forest_ambient(strands, d, 1),
                                graded_space(strands, d, 1, fi)));
    int prim = (int)primitive_basis(strands, degree, fi).size();
    int alg = space_dim(forest_ambient(strands, degree),
                        algebra_space(strands, degree, fi));
    int chords = space_dim(chord_ambient(strands, degree),
                           chord_space(strands, degree, fi));
    if (format == "json") {
        ordered_json j = ordered_json::parse(filtration_report_json(rep));
        j["lie_dims"] = lie;
        j["primitive_dim"] = prim;
        j["algebra_dim"] = alg;
        j["chord_dim"] = chords;
        emit(j.dump(2));
        return 0;
    }
    auto row = [](const std::vector<int>& v) {
        std::string s;
        for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
        return s;
    };
    std::ostringstream os;
    os << "strands " << strands << ", degree " << degree << ", mode "
       << (fi ? "fi" : "framed") << "\n"
       << "algebra dim " << alg << " (chord presentation " << chords << ")\n"
       << "primitive dim " << prim << "\n"
       << "lie dims by degree:      " << row(lie) << "\n"
       << "size filtration dims:    " << row(rep.dim_size) << "\n"
       << "product filtration dims: " << row(rep.dim_product) << "\n"
       << "graded piece dims:       " << row(rep.dim_graded) << "\n"
       << "size = product: " << (rep.size_eq_product ? "yes" : "no")
       << ", graded matches: " << (rep.graded_matches ? "yes" : "no")
       << ", ladder commutes: " << (rep.ladder_commutes ? "yes" : "no")
       << ", top full: " << (rep.top_full ? "yes" : "no") << "\n";
    emit(os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uni-trivalent diagram spaces on strands"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir_flag;
    app.add_option("--cache-dir", cache_dir_flag,
                   "row cache directory (JDIAG_CACHE_DIR overrides)");
    // Callbacks below run inside parse; the flag is assigned by then.
    auto apply_cache = [&] {
        if (!cache_dir_flag.empty())
            setenv("JDIAG_CACHE_DIR", cache_dir_flag.c_str(), 0);
    };

    int rc = 0;

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "list canonical diagram classes");
    int e_strands = 1, e_degree = 1, e_size = -1;
    long long e_cap = 2'000'000;
    std::string e_format = "text";
    bool e_chords = false, e_trees = false, e_forests = false, e_all = false;
    enu->add_option("--strands", e_strands)->check(CLI::PositiveNumber);
    enu->add_option("--degree", e_degree)->check(CLI::PositiveNumber);
    enu->add_option("--size", e_size, "component count")->check(CLI::PositiveNumber);
    enu->add_option("--cap", e_cap)->check(CLI::PositiveNumber);
    enu->add_option("--format", e_format)->check(CLI::IsMember({"text", "json"}));
    auto* fc = enu->add_flag("--chords", e_chords, "chord diagrams only");
    auto* ft = enu->add_flag("--trees", e_trees, "trees only");
    auto* ff = enu->add_flag("--forests", e_forests, "forests (default)");
    auto* fa = enu->add_flag("--all", e_all, "every uni-trivalent diagram");
    fc->excludes(ft)->excludes(ff)->excludes(fa);
    ft->excludes(ff)->excludes(fa);
    ff->excludes(fa);
    enu->callback([&] {
        apply_cache();
        std::string filter = e_chords ? "chords"
                             : e_trees ? "trees"
                             : e_all   ? "all"
                                       : "forests";
        rc = cmd_enumerate(e_strands, e_degree, filter, e_size, e_cap, e_format);
    });

    // dim
    auto* dim = app.add_subcommand("dim", "dimension of a quotient space");
    SpacePick d_pick;
    std::string d_mode = "fi", d_format = "text";
    dim->add_option("--space", d_pick.space, "L trees, F graded, A algebra, C chords")
        ->required()
        ->check(CLI::IsMember({"L", "F", "A", "C"}));
    dim->add_option("--strands", d_pick.strands)->check(CLI::PositiveNumber);
    dim->add_option("--degree", d_pick.degree)->check(CLI::PositiveNumber);
    dim->add_option("--size", d_pick.size)->check(CLI::PositiveNumber);
    dim->add_option("--mode", d_mode)->check(CLI::IsMember({"fi", "framed"}));
    dim->add_option("--format", d_format)->check(CLI::IsMember({"text", "json"}));
    dim->callback([&] {
        apply_cache();
        d_pick.fi = d_mode == "fi";
        rc = cmd_dim(d_pick, d_format);
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run a named structural check");
    std::string v_check, v_out;
    bool v_list = false;
    CheckConfig v_cfg;
    ver->add_flag("--list", v_list, "print the check names and exit");
    ver->add_option("--check", v_check, "check name, or: all");
    ver->add_option("--strands", v_cfg.strands)->check(CLI::PositiveNumber);
    ver->add_option("--degree", v_cfg.degree)->check(CLI::PositiveNumber);
    ver->add_option("--seed", v_cfg.seed, "seed for the sampled checks");
    ver->add_option("--sample-pairs", v_cfg.sample_pairs)->check(CLI::PositiveNumber);
    ver->add_option("--sample-paths", v_cfg.sample_paths)->check(CLI::PositiveNumber);
    ver->add_option("--sample-diagrams", v_cfg.sample_diagrams)
        ->check(CLI::PositiveNumber);
    ver->add_option("--cap", v_cfg.cap)->check(CLI::PositiveNumber);
    ver->add_option("--out", v_out, "witness file on failure");
    ver->callback([&] {
        apply_cache();
        if (v_list) {
            for (auto& n : check_names()) std::cout << n << "\n";
            return;
        }
        if (v_check.empty()) throw CLI::ValidationError("verify needs --check");
        if (v_check != "all") {
            auto& names = check_names();
            if (std::find(names.begin(), names.end(), v_check) == names.end())
                throw CLI::ValidationError("unknown check: " + v_check);
        }
        g_out = ""; // verify writes its witness itself
        rc = cmd_verify(v_check, v_cfg, v_out);
    });

    // bracket
    auto* bra = app.add_subcommand("bracket", "bracket of trees");
    std::string b_left, b_right, b_format = "text";
    bool b_table = false;
    int b_strands = 2, b_max_degree = 3;
    bra->add_option("--left", b_left, "tree encoding");
    bra->add_option("--right", b_right, "tree encoding");
    bra->add_flag("--table", b_table, "structure constants on basis trees");
    bra->add_option("--strands", b_strands)->check(CLI::PositiveNumber);
    bra->add_option("--max-degree", b_max_degree)->check(CLI::PositiveNumber);
    bra->add_option("--format", b_format)->check(CLI::IsMember({"text", "json"}));
    std::string b_out;
    bra->add_option("--out", b_out, "write to file instead of stdout");
    bra->callback([&] {
        apply_cache();
        g_out = b_out;
        rc = cmd_bracket(b_left, b_right, b_table, b_strands, b_max_degree, b_format);
    });

    // export
    auto* exp = app.add_subcommand("export", "matrices, bases, relations, graphs");
    std::string x_what, x_rel = "stu", x_format, x_forest, x_from, x_to, x_out;
    std::vector<std::string> x_mult;
    SpacePick x_pick;
    x_pick.space = "A";
    std::string x_mode = "fi";
    long long x_cap = 200000;
    int x_limit = 100;
    exp->add_option("--what", x_what, "matrix, basis, relations, permutograph, forest-graph, path, cycle-atoms")
        ->required()
        ->check(CLI::IsMember({"matrix", "basis", "relations", "permutograph",
                               "forest-graph", "path", "cycle-atoms"}));
    exp->add_option("--space", x_pick.space)->check(CLI::IsMember({"L", "F", "A", "C"}));
    exp->add_option("--strands", x_pick.strands)->check(CLI::PositiveNumber);
    exp->add_option("--degree", x_pick.degree)->check(CLI::PositiveNumber);
    exp->add_option("--size", x_pick.size)->check(CLI::PositiveNumber);
    exp->add_option("--mode", x_mode)->check(CLI::IsMember({"fi", "framed"}));
    exp->add_option("--rel", x_rel,
                    "relation family for --what relations")
        ->check(CLI::IsMember({"1t", "as", "stu", "ihx", "4t", "stu2", "hex",
                               "squares"}));
    exp->add_option("--format", x_format, "csv or json (matrix, relations)")
        ->check(CLI::IsMember({"csv", "json"}));
    exp->add_option("--mult", x_mult,
                    "letter multiplicities like 2,2,1; repeat to box");
    exp->add_option("--forest", x_forest, "forest encoding for forest-graph");
    exp->add_option("--from", x_from, "start forest for path");
    exp->add_option("--to", x_to, "end forest for path");
    exp->add_option("--cap", x_cap)->check(CLI::PositiveNumber);
    exp->add_option("--limit", x_limit, "cycles emitted by cycle-atoms")
        ->check(CLI::PositiveNumber);
    exp->add_option("--out", x_out, "write to file instead of stdout");
    exp->callback([&] {
        apply_cache();
        g_out = x_out;
        x_pick.fi = x_mode == "fi";
        if (x_what == "matrix")
            rc = cmd_export_matrix(x_pick, x_format.empty() ? "csv" : x_format);
        else if (x_what == "basis")
            rc = cmd_export_basis(x_pick, x_format.empty() ? "text" : x_format);
        else if (x_what == "relations")
            rc = cmd_export_relations(x_rel, x_pick,
                                      x_format.empty() ? "json" : x_format);
        else if (x_what == "permutograph") {
            if (x_mult.empty())
                throw CLI::ValidationError("permutograph needs --mult");
            rc = cmd_export_permutograph(x_mult, x_cap);
        } else if (x_what == "forest-graph") {
            if (x_forest.empty())
                throw CLI::ValidationError("forest-graph needs --forest");
            rc = cmd_export_forest_graph(x_forest, x_cap);
        } else if (x_what == "path") {
            if (x_from.empty() || x_to.empty())
                throw CLI::ValidationError("path needs --from and --to");
            rc = cmd_export_path(x_from, x_to, x_cap);
        } else {
            if (x_mult.empty())
                throw CLI::ValidationError("cycle-atoms needs --mult");
            rc = cmd_export_cycle_atoms(x_mult, x_cap, x_limit);
        }
    });

    // report
    auto* rep = app.add_subcommand("report", "dimensions and filtration verdicts");
    int r_strands = 1, r_degree = 2;
    std::string r_mode = "fi", r_format = "text", r_out;
    rep->add_option("--strands", r_strands)->check(CLI::PositiveNumber);
    rep->add_option("--degree", r_degree)->check(CLI::PositiveNumber);
    rep->add_option("--mode", r_mode)->check(CLI::IsMember({"fi", "framed"}));
    rep->add_option("--format", r_format)->check(CLI::IsMember({"text", "json"}));
    rep->add_option("--out", r_out, "write to file instead of stdout");
    rep->callback([&] {
        apply_cache();
        g_out = r_out;
        rc = cmd_report(r_strands, r_degree, r_mode == "fi", r_format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ResourceError& e) {
        ordered_json j;
        j["status"] = "resource-limit";
        j["message"] = e.what();
        j["partial"] = e.partial;
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        emit(j.dump(2));
        return 3;
    } catch (const StructError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
