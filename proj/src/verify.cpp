#include "jdiag/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "jdiag/enumerate.hpp"
#include "jdiag/forest_graph.hpp"
#include "jdiag/hopf.hpp"
#include "jdiag/lie.hpp"
#include "jdiag/rational.hpp"
#include "jdiag/relations.hpp"
#include "jdiag/spaces.hpp"

namespace jdiag {

namespace {

using nlohmann::ordered_json;

std::vector<RatVec> rel_vecs(const std::vector<Relation>& rels) {
    std::vector<RatVec> out;
    for (auto& r : rels)
        if (!r.vec.zero()) out.push_back(r.vec);
    return out;
}

QuotientSpace span_of(const std::vector<RatVec>& vecs) {
    QuotientSpace q;
    for (auto& v : vecs) q.add_relation(v);
    return q;
}

ordered_json vec_json(const RatVec& v) {
    ordered_json terms = ordered_json::array();
    for (auto& [id, c] : v.entries)
        terms.push_back(ordered_json::array({rat_to_string(c), diag_info(id).encoding}));
    return terms;
}

// Linear extension of the merge map over canonical representatives.
RatVec pi_tilde_vec(const RatVec& v) {
    RatVec out;
    for (auto& [id, c] : v.entries) {
        Diagram d = diag_info(id).canon;
        out.axpy(c, pi_tilde(d));
    }
    return out;
}

CheckResult base_result(const std::string& name, const CheckConfig& cfg) {
    CheckResult r;
    r.name = name;
    r.strands = cfg.strands;
    r.degree = cfg.degree;
    return r;
}

void fail(CheckResult& r, const std::string& summary, ordered_json detail) {
    r.pass = false;
    r.summary = summary;
    detail["check"] = r.name;
    detail["strands"] = r.strands;
    detail["degree"] = r.degree;
    r.witness_json = detail.dump(2);
}

CheckResult check_stu2_eq_squares(const CheckConfig& cfg) {
    auto r = base_result("stu2-eq-squares", cfg);
    int m = cfg.strands, n = cfg.degree;
    for (int s = 1; s < n; ++s) {
        auto sq = rel_vecs(gen_squares(m, n, s));
        auto st = rel_vecs(gen_STU2(m, n, s));
        if (!same_row_space(sq, st)) {
            fail(r, "slide squares and second resolutions span differently at size " +
                        std::to_string(s),
                 {{"size", s},
                  {"square_rank", span_of(sq).rank()},
                  {"stu2_rank", span_of(st).rank()}});
            return r;
        }
    }
    r.pass = true;
    r.summary = n < 2 ? "vacuous: no sizes below the degree"
                      : "equal spans at sizes 1.." + std::to_string(n - 1);
    return r;
}

CheckResult check_4t_from_stu2(const CheckConfig& cfg) {
    auto r = base_result("4t-from-stu2", cfg);
    int m = cfg.strands, n = cfg.degree;
    auto st = rel_vecs(gen_STU2(m, n, n));
    auto ft = rel_vecs(gen_4T(m, n));
    if (!same_row_space(st, ft)) {
        fail(r, "second resolutions at full size do not match four-term",
             {{"stu2_rank", span_of(st).rank()}, {"4t_rank", span_of(ft).rank()}});
        return r;
    }
    r.pass = true;
    r.summary = "four-term span recovered at size " + std::to_string(n);
    return r;
}

CheckResult check_hexagon(const CheckConfig& cfg) {
    auto r = base_result("hexagon-from-stu2-ihx", cfg);
    int m = cfg.strands, n = cfg.degree;
    int checked = 0;
    for (int s = 1; s + 1 < n; ++s) {
        QuotientSpace q = span_of(rel_vecs(gen_STU2(m, n, s)));
        for (auto& rel : gen_IHX(forest_ambient(m, n, s))) q.add_relation(rel.vec);
        for (auto& hex : gen_HEX(m, n, s)) {
            ++checked;
            if (!q.in_span(hex.vec)) {
                fail(r, "hexagon outside the second-resolution + IHX span",
                     {{"size", s}, {"site", hex.site}, {"vector", vec_json(hex.vec)}});
                return r;
            }
        }
    }
    r.pass = true;
    r.summary = checked == 0 ? "vacuous: hexagons need two sizes of headroom"
                             : std::to_string(checked) + " hexagons absorbed";
    return r;
}

CheckResult check_pi_section(const CheckConfig& cfg) {
    auto r = base_result("pi-section", cfg);
    int m = cfg.strands, n = cfg.degree;
    int checked = 0;
    for (int s = 1; s < n; ++s) {
        const QuotientSpace& q = graded_space(m, n, s);
        for (DiagId b : quotient_basis(forest_ambient(m, n, s), q)) {
            Diagram d = diag_info(b).canon;
            RatVec back = q.reduce(pi_tilde_vec(iota(d)));
            ++checked;
            if (back != q.reduce(unit_vec(b))) {
                fail(r, "merge after split moved a basis forest",
                     {{"size", s},
                      {"basis", diag_info(b).encoding},
                      {"image", vec_json(back)}});
                return r;
            }
        }
    }
    r.pass = true;
    r.summary = checked == 0 ? "vacuous: no sizes below the degree"
                             : "identity on " + std::to_string(checked) + " basis forests";
    return r;
}

CheckResult check_path_independence(const CheckConfig& cfg) {
    auto r = base_result("path-independence", cfg);
    int m = cfg.strands, n = cfg.degree;
    std::mt19937 rng(cfg.seed);
    auto random_vertex = [&](const WordTuple& origin) {
        WordTuple v = origin;
        for (auto& w : v.words) std::shuffle(w.begin(), w.end(), rng);
        return v;
    };
    long long pairs = 0, path_pairs = 0;
    for (int s = 2; s <= std::min(3, n); ++s) {
        auto ambient = forest_ambient(m, n, s);
        if (ambient.empty()) continue;
        QuotientSpace rels = span_of(rel_vecs(gen_AS(forest_ambient(m, n, s - 1))));
        for (auto& rel : gen_squares(m, n, s - 1)) rels.add_relation(rel.vec);
        for (auto& rel : gen_HEX(m, n, s - 1)) rels.add_relation(rel.vec);
        std::uniform_int_distribution<size_t> pick(0, ambient.size() - 1);
        for (int i = 0; i < cfg.sample_pairs; ++i) {
            const DiagramClass& fc = ambient[pick(rng)];
            LabelledGraph g = build_labelled_graph(canonical_labelling(fc.canon));
            WordTuple u = random_vertex(g.origin), v = random_vertex(g.origin);
            ++pairs;
            for (int t = 0; t < cfg.sample_paths; ++t) {
                WordTuple w1 = random_vertex(g.origin), w2 = random_vertex(g.origin);
                RatVec p1 = path_vector(g, bubble_path(u, w1));
                p1.axpy(Rat(1), path_vector(g, bubble_path(w1, v)));
                RatVec p2 = path_vector(g, bubble_path(u, w2));
                p2.axpy(Rat(1), path_vector(g, bubble_path(w2, v)));
                ++path_pairs;
                p1.axpy(Rat(-1), p2);
                if (!rels.in_span(p1)) {
                    fail(r, "two paths between the same forests differ in the quotient",
                         {{"size", s},
                          {"forest", fc.encoding},
                          {"from", encode(g.diagram_at(u))},
                          {"to", encode(g.diagram_at(v))},
                          {"difference", vec_json(p1)},
                          {"seed", cfg.seed}});
                    return r;
                }
            }
        }
    }
    r.pass = true;
    std::ostringstream os;
    os << path_pairs << " path pairs over " << pairs << " endpoint pairs, seed="
       << cfg.seed;
    if (path_pairs == 0) os << " (vacuous: no multi-tree forests)";
    r.summary = os.str();
    return r;
}

CheckResult check_prim_eq_size(const CheckConfig& cfg) {
    auto r = base_result("prim-eq-size", cfg);
    int m = cfg.strands, n = cfg.degree;
    auto prim = primitive_basis(m, n);
    const QuotientSpace& q = algebra_space(m, n);
    QuotientSpace tspan;
    for (auto& dc : tree_ambient(m, n))
        tspan.add_relation(q.reduce(unit_vec(intern_class(dc))));
    tspan.finalize();
    std::vector<RatVec> trees;
    for (auto& [pivot, row] : tspan.rows()) trees.push_back(row);
    if (!same_row_space(prim, trees)) {
        fail(r, "kernel of the reduced comultiplication is not the tree span",
             {{"dim_kernel", (int)prim.size()}, {"dim_trees", (int)trees.size()}});
        return r;
    }
    r.pass = true;
    r.summary = "kernel = tree span, dim " + std::to_string(prim.size());
    return r;
}

CheckResult check_filtration_iso(const CheckConfig& cfg) {
    auto r = base_result("filtration-iso", cfg);
    int m = cfg.strands, n = cfg.degree;
    FiltrationReport rep = compare_filtrations(m, n);
    bool monotone = std::is_sorted(rep.dim_size.begin(), rep.dim_size.end());

    // both filtrations die under the matching power of the reduced
    // comultiplication
    bool killed = true;
    for (int k = 1; k < n && killed; ++k) {
        for (auto& row : size_filtration_basis(m, n, k))
            killed = killed && reduce_tensor(reduced_comult_power(row, k), m).zero();
        for (auto& row : product_filtration_basis(m, n, k))
            killed = killed && reduce_tensor(reduced_comult_power(row, k), m).zero();
    }

    bool ok = rep.graded_matches && rep.size_eq_product && rep.ladder_commutes &&
              rep.top_full && monotone && killed;
    r.witness_json = filtration_report_json(rep);
    if (!ok) {
        r.pass = false;
        r.summary = std::string("filtration comparison failed: ") +
                    (!rep.graded_matches ? "presentation dims " : "") +
                    (!rep.size_eq_product ? "size!=product " : "") +
                    (!rep.ladder_commutes ? "ladder " : "") +
                    (!rep.top_full ? "top " : "") + (!monotone ? "monotone " : "") +
                    (!killed ? "kernel-power " : "");
        return r;
    }
    r.pass = true;
    std::ostringstream os;
    os << "dims";
    for (int d : rep.dim_size) os << " " << d;
    os << " agree across all three pipelines";
    r.summary = os.str();
    return r;
}

CheckResult check_jacobi(const CheckConfig& cfg) {
    auto r = base_result("jacobi", cfg);
    int m = cfg.strands, n = cfg.degree;

    // antisymmetry on quotient basis pairs; for one strand every bracket of
    // plain trees must already die
    long long anti_pairs = 0, zero_pairs = 0;
    for (int p = 1; p < n; ++p)
        for (int q = 1; p + q <= n; ++q)
            for (DiagId a : lie_basis(m, p))
                for (DiagId b : lie_basis(m, q)) {
                    Diagram da = diag_info(a).canon, db = diag_info(b).canon;
                    RatVec sum = tree_bracket(da, db) + tree_bracket(db, da);
                    ++anti_pairs;
                    if (!sum.zero()) {
                        fail(r, "bracket is not antisymmetric",
                             {{"left", diag_info(a).encoding},
                              {"right", diag_info(b).encoding},
                              {"sum", vec_json(sum)}});
                        return r;
                    }
                }
    if (m == 1) {
        for (int p = 1; p < n; ++p)
            for (int q = 1; p + q <= n; ++q)
                for (auto& a : tree_ambient(1, p))
                    for (auto& b : tree_ambient(1, q)) {
                        ++zero_pairs;
                        if (!tree_bracket(a.canon, b.canon).zero()) {
                            fail(r, "one-strand bracket is nonzero",
                                 {{"left", a.encoding}, {"right", b.encoding}});
                            return r;
                        }
                    }
    }

    JacobiReport rep = jacobi_check(m, n);
    if (!rep.ok()) {
        ordered_json wit;
        wit["failures"] = rep.failures;
        fail(r, "jacobi identity failed on " + std::to_string(rep.failures.size()) +
                    " triples",
             wit);
        return r;
    }
    r.pass = true;
    std::ostringstream os;
    os << rep.triples << " triples, " << anti_pairs << " antisymmetry pairs";
    if (m == 1) os << ", " << zero_pairs << " tree pairs all zero";
    r.summary = os.str();
    return r;
}

CheckResult check_hopf_axioms(const CheckConfig& cfg) {
    auto r = base_result("hopf-axioms", cfg);
    int m = cfg.strands, n = cfg.degree;
    std::mt19937 rng(cfg.seed);

    std::vector<std::vector<DiagramClass>> pool(n + 1);
    for (int d = 1; d <= n; ++d) pool[d] = forest_ambient(m, d);

    auto cocommutative = [](DiagId x) {
        TensorVector d = comult(x), sw;
        for (auto& [k, c] : d.terms) sw.axpy(c, tensor_unit({k[1], k[0]}));
        return d == sw;
    };
    auto coassociative = [](DiagId x) {
        TensorVector d = comult(x), l, rgt;
        for (auto& [k, c] : d.terms) {
            for (auto& [k2, c2] : comult(k[0]).terms)
                l.axpy(c * c2, tensor_unit({k2[0], k2[1], k[1]}));
            for (auto& [k2, c2] : comult(k[1]).terms)
                rgt.axpy(c * c2, tensor_unit({k[0], k2[0], k2[1]}));
        }
        return l == rgt;
    };
    DiagId unit = intern(empty_diagram(m));
    auto wrap = [&](const RatVec& v, bool left) {
        TensorVector t;
        for (auto& [id, c] : v.entries)
            t.axpy(c, tensor_unit(left ? std::vector<DiagId>{unit, id}
                                       : std::vector<DiagId>{id, unit}));
        return t;
    };
    auto product_formula = [&](DiagId x, DiagId y) {
        RatVec ux = unit_vec(x), uy = unit_vec(y);
        TensorVector lhs = reduced_comult(mul_vec(ux, uy));
        TensorVector dx = reduced_comult(ux), dy = reduced_comult(uy);
        TensorVector rhs = tensor_mul(dx, dy);
        rhs.axpy(Rat(1), tensor_mul(dx, wrap(uy, true)));
        rhs.axpy(Rat(1), tensor_mul(dx, wrap(uy, false)));
        rhs.axpy(Rat(1), tensor_mul(wrap(ux, true), dy));
        rhs.axpy(Rat(1), tensor_mul(wrap(ux, false), dy));
        rhs.axpy(Rat(1), tensor_unit({x, y}));
        rhs.axpy(Rat(1), tensor_unit({y, x}));
        return lhs == rhs;
    };

    long long pairs = 0;
    for (int dx = 1; dx <= n; ++dx) {
        std::uniform_int_distribution<size_t> px(0, pool[dx].size() - 1);
        std::uniform_int_distribution<int> pd(1, n);
        for (int i = 0; i < cfg.sample_diagrams; ++i) {
            DiagId x = intern_class(pool[dx][px(rng)]);
            int dy = pd(rng);
            std::uniform_int_distribution<size_t> py(0, pool[dy].size() - 1);
            DiagId y = intern_class(pool[dy][py(rng)]);
            ++pairs;
            std::string broke;
            if (!cocommutative(x) || !cocommutative(y)) broke = "cocommutativity";
            else if (!coassociative(x) || !coassociative(y)) broke = "coassociativity";
            else if (comult_vec(mul_vec(unit_vec(x), unit_vec(y))) !=
                     tensor_mul(comult(x), comult(y)))
                broke = "multiplicativity";
            else if (!product_formula(x, y)) broke = "reduced product formula";
            if (!broke.empty()) {
                fail(r, broke + " failed",
                     {{"x", diag_info(x).encoding},
                      {"y", diag_info(y).encoding},
                      {"seed", cfg.seed}});
                return r;
            }
        }
    }
    r.pass = true;
    std::ostringstream os;
    os << pairs << " sampled pairs across degrees 1.." << n << ", seed=" << cfg.seed;
    r.summary = os.str();
    return r;
}

void partitions_into(int rest, int maxpart, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_into(rest - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int w) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_into(w, w, cur, out);
    return out;
}

CheckResult check_homology(const CheckConfig& cfg) {
    auto r = base_result("homology-squares-hexagons", cfg);
    long long graphs = 0, cycles = 0, atoms = 0;
    std::string where;

    auto run_graph = [&](const std::vector<Permutograph>& factors,
                         const std::string& label) {
        WordTuple start;
        for (auto& f : factors) start.words.push_back(f.bottom());
        for (const TupleWalk& cyc : fundamental_cycles(start, cfg.cap)) {
            EdgeChain sum;
            for (const CycleAtom& a : decompose_cycle(cyc)) {
                chain_axpy(sum, a.coeff, walk_chain(atom_walk(a)));
                ++atoms;
            }
            if (!(sum == walk_chain(cyc))) {
                where = label;
                return false;
            }
            ++cycles;
        }
        ++graphs;
        return true;
    };
    auto label_of = [](const std::vector<std::vector<int>>& ms) {
        std::string s;
        for (auto& v : ms) {
            s += s.empty() ? "(" : ") x (";
            for (size_t i = 0; i < v.size(); ++i)
                s += (i ? "," : "") + std::to_string(v[i]);
        }
        return s + ")";
    };

    for (int w = 2; w <= 7 && where.empty(); ++w)
        for (auto& lam : partitions(w)) {
            if (!run_graph({Permutograph{lam}}, label_of({lam}))) break;
        }
    for (int w1 = 1; w1 <= 6 && where.empty(); ++w1)
        for (int w2 = w1; w1 + w2 <= 7 && where.empty(); ++w2)
            for (auto& l1 : partitions(w1)) {
                for (auto& l2 : partitions(w2)) {
                    if (w1 == w2 && l2 < l1) continue;
                    if (!run_graph({Permutograph{l1}, Permutograph{l2}},
                                   label_of({l1, l2})))
                        break;
                }
                if (!where.empty()) break;
            }

    if (!where.empty()) {
        fail(r, "a fundamental cycle did not re-sum from its atoms",
             {{"graph", where}});
        return r;
    }
    r.pass = true;
    std::ostringstream os;
    os << graphs << " graphs, " << cycles << " cycles, " << atoms << " atoms";
    r.summary = os.str();
    return r;
}

} // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "stu2-eq-squares",  "4t-from-stu2", "hexagon-from-stu2-ihx",
        "pi-section",       "path-independence", "prim-eq-size",
        "filtration-iso",   "jacobi",       "hopf-axioms",
        "homology-squares-hexagons"};
    return names;
}

CheckResult run_check(const std::string& name, const CheckConfig& cfg) {
    if (name == "stu2-eq-squares") return check_stu2_eq_squares(cfg);
    if (name == "4t-from-stu2") return check_4t_from_stu2(cfg);
    if (name == "hexagon-from-stu2-ihx") return check_hexagon(cfg);
    if (name == "pi-section") return check_pi_section(cfg);
    if (name == "path-independence") return check_path_independence(cfg);
    if (name == "prim-eq-size") return check_prim_eq_size(cfg);
    if (name == "filtration-iso") return check_filtration_iso(cfg);
    if (name == "jacobi") return check_jacobi(cfg);
    if (name == "hopf-axioms") return check_hopf_axioms(cfg);
    if (name == "homology-squares-hexagons") return check_homology(cfg);
    throw StructError("unknown check: " + name);
}

} // namespace jdiag
