#include "jdiag/relations.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

#include "jdiag/enumerate.hpp"

namespace jdiag {

namespace {

// Orientation-flip orbit scan.  Results are memoized per canonical encoding;
// every generator below funnels through here, so the same class is never
// folded twice.
RatVec fold_class(const DiagramClass& dc) {
    static std::unordered_map<std::string, RatVec> memo;
    std::string enc = dc.encoding; // dc may point into the intern table
    auto hit = memo.find(enc);
    if (hit != memo.end()) return hit->second;

    int t = dc.canon.node_count();
    std::string best;
    bool best_even = false, best_odd = false;
    DiagramClass best_class;
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        Diagram flipped = dc.canon;
        for (int k = 0; k < t; ++k)
            if (mask & (1u << k)) flipped = flip_node(flipped, k);
        DiagramClass fc = canonicalize(flipped);
        bool odd = __builtin_popcount(mask) & 1;
        if (best.empty() || fc.encoding < best) {
            best = fc.encoding;
            best_class = fc;
            best_even = !odd;
            best_odd = odd;
        } else if (fc.encoding == best) {
            (odd ? best_odd : best_even) = true;
        }
    }

    RatVec out;
    if (!(best_even && best_odd)) {
        out = unit_vec(intern_class(best_class));
        if (best_odd) out.scale(Rat(-1));
    }
    memo.emplace(enc, out);
    return out;
}

RatVec fold_id(DiagId id) {
    DiagramClass dc = diag_info(id); // copy: folding may grow the table
    return fold_class(dc);
}

RatVec resolve_fold_diff(const Diagram& d, int node, int slot) {
    auto [eq, cr] = resolve_node(d, node, slot);
    return fold_class(canonicalize(eq)) - fold_class(canonicalize(cr));
}

// Leg-join evaluated in the folded space.  resolve_node at the joint node
// recovers (slide, original), so modulo the three-term relation this equals
// slide(d) - d.
RatVec join_fold(const Diagram& d, int strand, int pos) {
    return fold_class(canonicalize(join_legs(d, strand, pos)));
}

// Nodes surviving iterated removal of degree-<=1 vertices, i.e. the nodes on
// the unique cycle when the diagram has one.
std::vector<char> cycle_nodes(const Diagram& d) {
    int L = d.leaf_total();
    int t = d.node_count();
    int V = L + t;
    std::vector<std::vector<int>> adj(V);
    for (int leaf = 0; leaf < L; ++leaf) adj[leaf].push_back(d.leaf_peer(leaf));
    for (int k = 0; k < t; ++k)
        for (int s = 0; s < 3; ++s) adj[L + k].push_back(d.far_vertex(d.nodes[k][s]));
    std::vector<int> deg(V);
    std::vector<int> queue;
    for (int v = 0; v < V; ++v) {
        deg[v] = (int)adj[v].size();
        if (deg[v] <= 1) queue.push_back(v);
    }
    std::vector<char> gone(V, 0);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (gone[v]) continue;
        gone[v] = 1;
        for (int u : adj[v])
            if (!gone[u] && --deg[u] <= 1) queue.push_back(u);
    }
    std::vector<char> out(t, 0);
    for (int k = 0; k < t; ++k) out[k] = !gone[L + k];
    return out;
}

// Re-points `ref`'s partner record at port (node, slot).  Leaf refs need no
// write: a leaf-to-node edge is recorded only in the node triple.
void point_back(Diagram& d, int ref, int node, int slot) {
    if (d.is_port_ref(ref)) d.nodes[d.port_node(ref)][d.port_slot(ref)] = d.make_port(node, slot);
}

std::string site_at(const DiagramClass& dc, const std::string& where) {
    return dc.encoding + " @ " + where;
}

// Marked node-leg resolution sites of one diagram, optionally restricted to
// nodes flagged in `allow`.
std::vector<std::pair<int, int>> leaf_slots(const Diagram& d, const std::vector<char>* allow) {
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < d.node_count(); ++k) {
        if (allow && !(*allow)[k]) continue;
        for (int s = 0; s < 3; ++s)
            if (d.is_leaf_ref(d.nodes[k][s])) out.emplace_back(k, s);
    }
    return out;
}

void push_second_resolutions(const DiagramClass& dc, const std::vector<char>* allow,
                             std::vector<Relation>& out) {
    auto sites = leaf_slots(dc.canon, allow);
    for (size_t a = 0; a < sites.size(); ++a)
        for (size_t b = a + 1; b < sites.size(); ++b) {
            RatVec vec = resolve_fold_diff(dc.canon, sites[a].first, sites[a].second) -
                         resolve_fold_diff(dc.canon, sites[b].first, sites[b].second);
            std::string where = "n" + std::to_string(sites[a].first) + "." +
                                std::to_string(sites[a].second) + " vs n" +
                                std::to_string(sites[b].first) + "." +
                                std::to_string(sites[b].second);
            out.push_back({std::move(vec), RelKind::STU2, site_at(dc, where)});
        }
}

} // namespace

const char* rel_kind_name(RelKind k) {
    switch (k) {
        case RelKind::OneT: return "1T";
        case RelKind::AS: return "AS";
        case RelKind::STU: return "STU";
        case RelKind::IHX: return "IHX";
        case RelKind::FourT: return "4T";
        case RelKind::STU2: return "STU2";
        case RelKind::Hex: return "HEX";
        case RelKind::Square: return "SQ";
    }
    return "?";
}

RatVec fold_as(const Diagram& d) { return fold_class(canonicalize(d)); }

RatVec fold_vec(const RatVec& v) {
    RatVec out;
    for (const auto& [id, c] : v.entries) out.axpy(c, fold_id(id));
    return out;
}

std::vector<Relation> gen_1T(const std::vector<DiagramClass>& ambient) {
    std::vector<Relation> out;
    for (const auto& dc : ambient)
        if (has_isolated_chord(dc.canon))
            out.push_back({unit_vec(intern_class(dc)), RelKind::OneT, dc.encoding});
    return dedupe_relations(std::move(out));
}

std::vector<Relation> gen_AS(const std::vector<DiagramClass>& ambient) {
    std::vector<Relation> out;
    for (const auto& dc : ambient) {
        DiagId id = intern_class(dc);
        for (int k = 0; k < dc.canon.node_count(); ++k) {
            DiagId fid = intern(flip_node(dc.canon, k));
            out.push_back({unit_vec(id) + unit_vec(fid), RelKind::AS,
                           site_at(dc, "n" + std::to_string(k))});
        }
    }
    return dedupe_relations(std::move(out));
}

std::vector<Relation> gen_STU(const std::vector<DiagramClass>& ambient) {
    std::vector<Relation> out;
    for (const auto& dc : ambient) {
        DiagId id = intern_class(dc);
        for (auto [k, s] : leaf_slots(dc.canon, nullptr)) {
            auto [eq, cr] = resolve_node(dc.canon, k, s);
            RatVec vec = unit_vec(id) - unit_vec(intern(eq)) + unit_vec(intern(cr));
            out.push_back({std::move(vec), RelKind::STU,
                           site_at(dc, "n" + std::to_string(k) + "." + std::to_string(s))});
        }
    }
    return dedupe_relations(std::move(out));
}

std::vector<Relation> gen_IHX(const std::vector<DiagramClass>& ambient) {
    std::vector<Relation> out;
    for (const auto& dc : ambient) {
        const Diagram& d = dc.canon;
        for (int k = 0; k < d.node_count(); ++k)
            for (int i = 0; i < 3; ++i) {
                int e = d.nodes[k][i];
                if (!d.is_port_ref(e)) continue;
                int w = d.port_node(e);
                int mult = 0;
                for (int s2 = 0; s2 < 3; ++s2)
                    if (d.is_port_ref(d.nodes[k][s2]) && d.port_node(d.nodes[k][s2]) == w)
                        ++mult;
                if (mult != 1) continue; // parallel edges pivot ambiguously
                int s = d.port_slot(e);

                int a = d.nodes[k][(i + 1) % 3];
                int b = d.nodes[k][(i + 2) % 3];
                int c = d.nodes[w][(s + 1) % 3];
                int d2 = d.nodes[w][(s + 2) % 3];

                // rotate the near pair one step around the pivot edge, twice
                Diagram t2 = d;
                t2.nodes[k][(i + 1) % 3] = b;
                t2.nodes[k][(i + 2) % 3] = c;
                t2.nodes[w][(s + 1) % 3] = a;
                t2.nodes[w][(s + 2) % 3] = d2;
                point_back(t2, b, k, (i + 1) % 3);
                point_back(t2, c, k, (i + 2) % 3);
                point_back(t2, a, w, (s + 1) % 3);
                point_back(t2, d2, w, (s + 2) % 3);
                t2.validate();

                Diagram t3 = d;
                t3.nodes[k][(i + 1) % 3] = c;
                t3.nodes[k][(i + 2) % 3] = a;
                t3.nodes[w][(s + 1) % 3] = b;
                t3.nodes[w][(s + 2) % 3] = d2;
                point_back(t3, c, k, (i + 1) % 3);
                point_back(t3, a, k, (i + 2) % 3);
                point_back(t3, b, w, (s + 1) % 3);
                point_back(t3, d2, w, (s + 2) % 3);
                t3.validate();

                RatVec vec = fold_class(dc) + fold_as(t2) + fold_as(t3);
                if (vec.zero()) continue;
                out.push_back({std::move(vec), RelKind::IHX,
                               site_at(dc, "n" + std::to_string(k) + "-n" + std::to_string(w))});
            }
    }
    return dedupe_relations(std::move(out));
}

std::vector<Relation> gen_4T(int strands, int degree) {
    std::vector<Relation> out;
    if (degree < 2) return out;
    EnumSpec spec;
    spec.strands = strands;
    spec.degree = degree;
    spec.filter = DiagramFilter::Forests;
    spec.size = degree - 1; // one tripod, the rest chords
    for (const auto& dc : enumerate_diagrams(spec)) {
        std::array<std::pair<DiagId, DiagId>, 3> res;
        for (int s = 0; s < 3; ++s) {
            auto [eq, cr] = resolve_node(dc.canon, 0, s);
            res[s] = {intern(eq), intern(cr)};
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                RatVec vec = unit_vec(res[i].first) - unit_vec(res[i].second) -
                             unit_vec(res[j].first) + unit_vec(res[j].second);
                out.push_back({std::move(vec), RelKind::FourT,
                               site_at(dc, std::to_string(i) + "," + std::to_string(j))});
            }
    }
    return dedupe_relations(std::move(out));
}

std::vector<Relation> gen_STU2(int strands, int degree, int size) {
    std::vector<Relation> out;
    if (size >= 2) {
        EnumSpec spec;
        spec.strands = strands;
        spec.degree = degree;
        spec.filter = DiagramFilter::Forests;
        spec.size = size - 1; // each resolution splits a component
        for (const auto& dc : enumerate_diagrams(spec))
            push_second_resolutions(dc, nullptr, out);
    }
    EnumSpec cyc;
    cyc.strands = strands;
    cyc.degree = degree;
    cyc.filter = DiagramFilter::OneCycle;
    cyc.size = size; // breaking the cycle keeps the component count
    for (const auto& dc : enumerate_diagrams(cyc)) {
        auto allow = cycle_nodes(dc.canon);
        push_second_resolutions(dc, &allow, out);
    }
    return dedupe_relations(std::move(out));
}

std::vector<Relation> gen_HEX(int strands, int degree, int size) {
    std::vector<Relation> out;
    EnumSpec spec;
    spec.strands = strands;
    spec.degree = degree;
    spec.filter = DiagramFilter::Forests;
    spec.size = size + 1; // each join merges two components
    if (size + 1 > degree) return out;
    for (const auto& dc : enumerate_diagrams(spec)) {
        const Diagram& d = dc.canon;
        auto comp = component_of(d);
        for (int j = 0; j < d.strands; ++j)
            for (int p = 0; p + 2 < d.leg_count[j]; ++p) {
                int c0 = comp[d.leaf_at(j, p)];
                int c1 = comp[d.leaf_at(j, p + 1)];
                int c2 = comp[d.leaf_at(j, p + 2)];
                if (c0 == c1 || c0 == c2 || c1 == c2) continue;
                RatVec vec;
                Diagram cur = d;
                for (int step = 0; step < 6; ++step) {
                    int pos = (step & 1) ? p + 1 : p;
                    if (!slidable(cur, j, pos))
                        throw StructError("hexagon walk blocked; braid sites must commute");
                    vec = vec + join_fold(cur, j, pos);
                    cur = slide(cur, j, pos);
                }
                if (canonicalize(cur).encoding != dc.encoding)
                    throw StructError("hexagon walk did not close");
                out.push_back({std::move(vec), RelKind::Hex,
                               site_at(dc, "s" + std::to_string(j) + "." + std::to_string(p))});
            }
    }
    return dedupe_relations(std::move(out));
}

std::vector<Relation> gen_squares(int strands, int degree, int size) {
    std::vector<Relation> out;
    EnumSpec spec;
    spec.strands = strands;
    spec.degree = degree;
    spec.filter = DiagramFilter::Forests;
    spec.size = size + 1;
    if (size + 1 > degree) return out;
    for (const auto& dc : enumerate_diagrams(spec)) {
        const Diagram& d = dc.canon;
        std::vector<std::pair<int, int>> sites;
        for (int j = 0; j < d.strands; ++j)
            for (int p = 0; p + 1 < d.leg_count[j]; ++p)
                if (slidable(d, j, p)) sites.emplace_back(j, p);
        for (size_t a = 0; a < sites.size(); ++a)
            for (size_t b = a + 1; b < sites.size(); ++b) {
                auto [ja, pa] = sites[a];
                auto [jb, pb] = sites[b];
                if (ja == jb && std::abs(pa - pb) < 2) continue; // sites overlap
                Diagram da = slide(d, ja, pa);
                Diagram db = slide(d, jb, pb);
                if (canonicalize(slide(da, jb, pb)).encoding !=
                    canonicalize(slide(db, ja, pa)).encoding)
                    throw StructError("far-commuting slides disagree");
                RatVec vec = join_fold(d, ja, pa) + join_fold(da, jb, pb) -
                             join_fold(db, ja, pa) - join_fold(d, jb, pb);
                std::string where = "s" + std::to_string(ja) + "." + std::to_string(pa) +
                                    " | s" + std::to_string(jb) + "." + std::to_string(pb);
                out.push_back({std::move(vec), RelKind::Square, site_at(dc, where)});
            }
    }
    return dedupe_relations(std::move(out));
}

std::vector<Relation> dedupe_relations(std::vector<Relation> rels) {
    std::vector<Relation> out;
    std::set<std::string> seen;
    for (auto& r : rels) {
        if (r.vec.zero()) continue;
        RatVec norm = r.vec;
        norm.normalize();
        std::string key;
        for (const auto& [col, c] : norm.entries)
            key += std::to_string(col) + ":" + rat_to_string(c) + ";";
        if (seen.insert(std::move(key)).second) out.push_back(std::move(r));
    }
    return out;
}

} // namespace jdiag
