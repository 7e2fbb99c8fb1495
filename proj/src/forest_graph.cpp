#include "jdiag/forest_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "jdiag/relations.hpp"

namespace jdiag {

int inversions(const Word& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

Word ascending_word(const std::vector<int>& mult) {
    Word w;
    for (size_t i = 0; i < mult.size(); ++i)
        w.insert(w.end(), mult[i], (int)i + 1);
    return w;
}

Word descending_word(const std::vector<int>& mult) {
    Word w = ascending_word(mult);
    std::reverse(w.begin(), w.end());
    return w;
}

long long Permutograph::vertex_count() const {
    long long total = 0, result = 1;
    for (int c : mult) {
        if (c < 0) throw StructError("permutograph: negative multiplicity");
        for (int i = 1; i <= c; ++i) {
            ++total;
            result = result * total / i; // binomial prefix products stay integral
        }
    }
    return result;
}

std::vector<Word> Permutograph::vertices(long long cap) const {
    long long n = vertex_count();
    if (n > cap) throw ResourceError("permutograph vertex cap exceeded", n);
    std::vector<Word> out;
    Word w = bottom();
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int height(const WordTuple& v) {
    int h = 0;
    for (const Word& w : v.words) h += inversions(w);
    return h;
}

WordTuple apply_swap(const WordTuple& v, const SlideSite& site) {
    if (site.factor < 0 || site.factor >= (int)v.words.size())
        throw StructError("apply_swap: factor out of range");
    const Word& w = v.words[site.factor];
    if (site.pos < 0 || site.pos + 1 >= (int)w.size())
        throw StructError("apply_swap: position out of range");
    if (w[site.pos] == w[site.pos + 1])
        throw StructError("apply_swap: equal letters do not span an edge");
    WordTuple out = v;
    std::swap(out.words[site.factor][site.pos], out.words[site.factor][site.pos + 1]);
    return out;
}

std::vector<std::pair<SlideSite, WordTuple>> slide_neighbors(const WordTuple& v) {
    std::vector<std::pair<SlideSite, WordTuple>> out;
    for (int f = 0; f < (int)v.words.size(); ++f)
        for (int p = 0; p + 1 < (int)v.words[f].size(); ++p)
            if (v.words[f][p] != v.words[f][p + 1])
                out.push_back({{f, p}, apply_swap(v, {f, p})});
    return out;
}

SlideSite site_between(const WordTuple& u, const WordTuple& v) {
    if (u.words.size() != v.words.size())
        throw StructError("site_between: factor counts differ");
    int factor = -1;
    for (int f = 0; f < (int)u.words.size(); ++f) {
        if (u.words[f] == v.words[f]) continue;
        if (factor >= 0) throw StructError("site_between: vertices differ in two factors");
        factor = f;
    }
    if (factor < 0) throw StructError("site_between: vertices are equal");
    const Word& a = u.words[factor];
    const Word& b = v.words[factor];
    if (a.size() != b.size()) throw StructError("site_between: word lengths differ");
    int lo = 0, hi = (int)a.size() - 1;
    while (a[lo] == b[lo]) ++lo;
    while (a[hi] == b[hi]) --hi;
    if (hi != lo + 1 || a[lo] != b[hi] || a[hi] != b[lo])
        throw StructError("site_between: vertices are not adjacent");
    return {factor, lo};
}

std::vector<WordTuple> box_vertices(const std::vector<Permutograph>& factors, long long cap) {
    long long n = 1;
    for (const auto& f : factors) n *= f.vertex_count();
    if (n > cap) throw ResourceError("box product vertex cap exceeded", n);
    std::vector<WordTuple> out{WordTuple{std::vector<Word>{}}};
    for (const auto& f : factors) {
        std::vector<Word> words = f.vertices(cap);
        std::vector<WordTuple> next;
        next.reserve(out.size() * words.size());
        for (const auto& t : out)
            for (const auto& w : words) {
                WordTuple e = t;
                e.words.push_back(w);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

void validate_walk(const TupleWalk& w, bool closed) {
    if (w.empty()) throw StructError("walk: empty");
    for (size_t i = 0; i + 1 < w.size(); ++i) site_between(w[i], w[i + 1]);
    if (closed && w.front() != w.back()) throw StructError("walk: not closed");
}

EdgeChain walk_chain(const TupleWalk& w) {
    EdgeChain chain;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        bool forward = w[i] < w[i + 1];
        auto key = forward ? std::make_pair(w[i], w[i + 1]) : std::make_pair(w[i + 1], w[i]);
        Rat& c = chain[key];
        c = c + (forward ? Rat(1) : Rat(-1));
        if (c == Rat(0)) chain.erase(key);
    }
    return chain;
}

EdgeChain& chain_axpy(EdgeChain& acc, const Rat& c, const EdgeChain& other) {
    for (const auto& [key, val] : other) {
        Rat& slot = acc[key];
        slot = slot + c * val;
        if (slot == Rat(0)) acc.erase(key);
    }
    return acc;
}

TupleWalk atom_walk(const CycleAtom& a) {
    if (a.period < 1 || a.period > 3) throw StructError("atom: period must be 1, 2 or 3");
    TupleWalk walk{a.base};
    for (int step = 0; step < 2 * a.period; ++step)
        walk.push_back(apply_swap(walk.back(), step % 2 == 0 ? a.first : a.second));
    if (walk.back() != a.base) throw StructError("atom: walk does not close");
    return walk;
}

namespace {

// Remove one spike ... u, w, u ... from an open cyclic vertex list.
// Returns false when none is present.
bool cancel_backtrack(std::vector<WordTuple>& cyc, std::vector<CycleAtom>* report) {
    int l = (int)cyc.size();
    if (l < 2) return false;
    for (int i = 0; i < l; ++i) {
        const WordTuple& prev = cyc[(i + l - 1) % l];
        const WordTuple& next = cyc[(i + 1) % l];
        if (prev != next) continue;
        if (report) {
            SlideSite s = site_between(prev, cyc[i]);
            report->push_back({prev, s, s, 1, Rat(1)});
        }
        std::vector<WordTuple> shrunk;
        shrunk.reserve(l - 2);
        int skip1 = i, skip2 = (i + 1) % l;
        for (int k = 0; k < l; ++k)
            if (k != skip1 && k != skip2) shrunk.push_back(cyc[k]);
        cyc = std::move(shrunk);
        return true;
    }
    return false;
}

// One rewrite pass over an open cyclic vertex list; emits atoms, returns
// subcycles still to process.  Backtracks created by rewrites carry no
// chain and are spliced out silently.
void scan_cycle(std::vector<WordTuple> cyc, std::vector<std::vector<WordTuple>>& work,
                std::vector<CycleAtom>& atoms, long long& budget) {
    while (true) {
        if (--budget < 0) throw StructError("decompose_cycle: rewrite budget exhausted");
        int l = (int)cyc.size();
        if (l <= 1) return;

        if (cancel_backtrack(cyc, nullptr)) continue;

        // Split at a repeated vertex into two shorter cycles.
        {
            std::map<WordTuple, int> seen;
            int ri = -1, rj = -1;
            for (int k = 0; k < l; ++k) {
                auto [it, fresh] = seen.emplace(cyc[k], k);
                if (!fresh) {
                    ri = it->second;
                    rj = k;
                    break;
                }
            }
            if (ri >= 0) {
                std::vector<WordTuple> inner(cyc.begin() + ri, cyc.begin() + rj);
                std::vector<WordTuple> outer(cyc.begin(), cyc.begin() + ri);
                outer.insert(outer.end(), cyc.begin() + rj, cyc.end());
                if (inner.size() > 1) work.push_back(std::move(inner));
                if (outer.size() > 1) work.push_back(std::move(outer));
                return;
            }
        }

        // Simple cycle: rewrite at the first height maximum.
        int idx = 0;
        for (int k = 1; k < l; ++k)
            if (height(cyc[k]) > height(cyc[idx])) idx = k;
        const WordTuple top = cyc[idx];
        const WordTuple prev = cyc[(idx + l - 1) % l];
        const WordTuple next = cyc[(idx + 1) % l];
        SlideSite to_prev = site_between(top, prev);
        SlideSite to_next = site_between(top, next);

        bool braiding = to_prev.factor == to_next.factor &&
                        std::abs(to_prev.pos - to_next.pos) == 1;
        if (!braiding) {
            // Far-commuting transpositions: route the walk around the square.
            WordTuple across = apply_swap(prev, to_next);
            if (across != apply_swap(next, to_prev))
                throw StructError("decompose_cycle: commuting slides disagree");
            atoms.push_back({top, to_next, to_prev, 2, Rat(1)});
            cyc[idx] = across;
        } else {
            // Adjacent transpositions: three strictly descending letters at
            // the maximum; route the walk around the bottom of the hexagon.
            CycleAtom hex{top, to_next, to_prev, 3, Rat(1)};
            TupleWalk w = atom_walk(hex);
            if (w[5] != prev)
                throw StructError("decompose_cycle: braiding slides disagree");
            atoms.push_back(hex);
            cyc[idx] = w[4];
            cyc.insert(cyc.begin() + idx + 1, {w[3], w[2]});
        }
    }
}

} // namespace

std::vector<CycleAtom> decompose_cycle(const TupleWalk& cycle) {
    validate_walk(cycle, true);
    std::vector<WordTuple> open(cycle.begin(), cycle.end() - 1);
    std::vector<CycleAtom> atoms;
    // Spikes present in the input are part of what the caller asked to
    // decompose; report each as a period-1 atom before rewriting starts.
    while (cancel_backtrack(open, &atoms)) {}
    long long budget = 10'000'000;
    std::vector<std::vector<WordTuple>> work{std::move(open)};
    std::vector<CycleAtom> atoms_rw;
    while (!work.empty()) {
        auto cyc = std::move(work.back());
        work.pop_back();
        scan_cycle(std::move(cyc), work, atoms_rw, budget);
    }
    atoms.insert(atoms.end(), atoms_rw.begin(), atoms_rw.end());
    return atoms;
}

std::vector<TupleWalk> fundamental_cycles(const WordTuple& start, long long cap) {
    std::map<WordTuple, WordTuple> parent;
    std::map<WordTuple, int> depth;
    std::vector<WordTuple> order{start};
    depth[start] = 0;
    for (size_t head = 0; head < order.size(); ++head) {
        WordTuple u = order[head];
        for (const auto& [site, v] : slide_neighbors(u)) {
            if (depth.count(v)) continue;
            if ((long long)order.size() + 1 > cap)
                throw ResourceError("fundamental_cycles: vertex cap exceeded",
                                    (long long)order.size());
            parent.emplace(v, u);
            depth[v] = depth[u] + 1;
            order.push_back(v);
        }
    }

    auto path_up = [&](WordTuple v) {
        TupleWalk p{v};
        while (p.back() != start) p.push_back(parent.at(p.back()));
        return p; // v, parent(v), ..., start
    };

    std::vector<TupleWalk> cycles;
    std::set<std::pair<WordTuple, WordTuple>> seen;
    for (const auto& u : order)
        for (const auto& [site, v] : slide_neighbors(u)) {
            auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
            if (!seen.insert(key).second) continue;
            if (parent.count(v) && parent.at(v) == u) continue;
            if (parent.count(u) && parent.at(u) == v) continue;
            // Meet of the two tree paths, then around: meet..u, v..meet.
            TupleWalk up = path_up(u), vp = path_up(v);
            while (up.size() > 1 && vp.size() > 1 &&
                   up[up.size() - 2] == vp[vp.size() - 2]) {
                up.pop_back();
                vp.pop_back();
            }
            TupleWalk cyc(up.rbegin(), up.rend()); // meet ... u
            cyc.insert(cyc.end(), vp.begin(), vp.end()); // v ... meet
            cycles.push_back(std::move(cyc));
        }
    return cycles;
}

// ---------------------------------------------------------------------------
// Labelled forests.

LabelledForest canonical_labelling(const Diagram& forest) {
    if (!is_forest(forest)) throw StructError("labelling: diagram is not a forest");
    std::vector<int> comp = component_of(forest);
    int count = component_count(forest);
    std::vector<std::pair<std::string, int>> keys; // (encoding, first leaf), index = comp
    std::vector<int> first_leaf(count, -1);
    for (int leaf = forest.leaf_total() - 1; leaf >= 0; --leaf) first_leaf[comp[leaf]] = leaf;
    for (int c = 0; c < count; ++c)
        keys.push_back({canonicalize(subdiagram(forest, {c})).encoding, first_leaf[c]});
    std::vector<int> by_rank(count);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<int> label_of_comp(count);
    for (int r = 0; r < count; ++r) label_of_comp[by_rank[r]] = r + 1;
    LabelledForest out{forest, {}};
    out.label.resize(forest.leaf_total());
    for (int leaf = 0; leaf < forest.leaf_total(); ++leaf)
        out.label[leaf] = label_of_comp[comp[leaf]];
    return out;
}

Diagram tree_of(const LabelledForest& f, int label) {
    std::vector<int> comp = component_of(f.d);
    for (int leaf = 0; leaf < f.d.leaf_total(); ++leaf)
        if (f.label[leaf] == label) return subdiagram(f.d, {comp[leaf]});
    throw StructError("tree_of: no component carries that label");
}

WordTuple word_tuple(const LabelledForest& f) {
    WordTuple v;
    for (int j = 0; j < f.d.strands; ++j) {
        Word w;
        for (int p = 0; p < f.d.leg_count[j]; ++p) w.push_back(f.label[f.d.leaf_at(j, p)]);
        v.words.push_back(std::move(w));
    }
    return v;
}

namespace {

void check_labelling(const LabelledForest& f, int s) {
    if ((int)f.label.size() != f.d.leaf_total())
        throw StructError("labelled forest: one label per leaf required");
    std::vector<int> comp = component_of(f.d);
    std::vector<int> of_comp(component_count(f.d), 0);
    for (int leaf = 0; leaf < f.d.leaf_total(); ++leaf) {
        int lab = f.label[leaf];
        if (lab < 1 || lab > s) throw StructError("labelled forest: label out of range");
        int& slot = of_comp[comp[leaf]];
        if (slot == 0) slot = lab;
        if (slot != lab) throw StructError("labelled forest: component labelled twice");
    }
    std::sort(of_comp.begin(), of_comp.end());
    for (int c = 0; c < (int)of_comp.size(); ++c)
        if (of_comp[c] != c + 1)
            throw StructError("labelled forest: labels are not a bijection");
}

} // namespace

std::vector<Permutograph> LabelledGraph::strand_factors() const {
    std::vector<Permutograph> out;
    for (const Word& w : origin.words) {
        Permutograph p;
        p.mult.assign(tree_count, 0);
        for (int letter : w) ++p.mult[letter - 1];
        out.push_back(std::move(p));
    }
    return out;
}

long long LabelledGraph::vertex_count() const {
    long long n = 1;
    for (const auto& f : strand_factors()) n *= f.vertex_count();
    return n;
}

std::vector<WordTuple> LabelledGraph::vertices(long long cap) const {
    return box_vertices(strand_factors(), cap);
}

Diagram LabelledGraph::diagram_at(const WordTuple& v) const {
    if (v.words.size() != origin.words.size())
        throw StructError("diagram_at: strand count mismatch");
    const Diagram& d = base.d;
    std::vector<int> leaf_map(d.leaf_total(), -1); // old leaf -> new leaf
    int offset = 0;
    for (int j = 0; j < d.strands; ++j) {
        const Word& from = origin.words[j];
        const Word& to = v.words[j];
        if (from.size() != to.size())
            throw StructError("diagram_at: leg count mismatch");
        // Same-label legs keep their relative order: k-th occurrence maps to
        // k-th occurrence.
        std::map<int, std::vector<int>> slots; // label -> new positions
        for (int p = (int)to.size() - 1; p >= 0; --p) slots[to[p]].push_back(p);
        for (int p = 0; p < (int)from.size(); ++p) {
            auto& free = slots[from[p]];
            if (free.empty()) throw StructError("diagram_at: label multiset mismatch");
            leaf_map[offset + p] = offset + free.back();
            free.pop_back();
        }
        offset += (int)from.size();
    }
    Diagram out = d;
    for (auto& [a, b] : out.chords) {
        a = leaf_map[a];
        b = leaf_map[b];
        if (a > b) std::swap(a, b);
    }
    for (auto& node : out.nodes)
        for (int& ref : node)
            if (d.is_leaf_ref(ref)) ref = leaf_map[ref];
    return out;
}

LabelledForest LabelledGraph::labelled_at(const WordTuple& v) const {
    LabelledForest out{diagram_at(v), {}};
    for (const Word& w : v.words) out.label.insert(out.label.end(), w.begin(), w.end());
    return out;
}

LabelledGraph build_labelled_graph(const LabelledForest& base) {
    if (!is_forest(base.d)) throw StructError("labelled graph: base is not a forest");
    int s = component_count(base.d);
    check_labelling(base, s);
    LabelledGraph g{base, word_tuple(base), s};
    return g;
}

LabelledGraph build_labelled_graph(const std::vector<Diagram>& trees) {
    if (trees.empty()) throw StructError("labelled graph: no trees");
    Diagram d = trees[0];
    if (!is_tree(d)) throw StructError("labelled graph: component 1 is not a tree");
    for (size_t i = 1; i < trees.size(); ++i) {
        if (!is_tree(trees[i])) throw StructError("labelled graph: not a tree");
        if (trees[i].strands != d.strands)
            throw StructError("labelled graph: strand counts differ");
        d = stack(trees[i], d);
    }
    LabelledForest base{d, {}};
    base.label.resize(d.leaf_total());
    // Stacking keeps each strand's legs grouped tree by tree, in list order.
    int offset = 0;
    for (int j = 0; j < d.strands; ++j) {
        for (size_t t = 0; t < trees.size(); ++t)
            for (int p = 0; p < trees[t].leg_count[j]; ++p)
                base.label[offset++] = (int)t + 1;
    }
    return build_labelled_graph(base);
}

// ---------------------------------------------------------------------------
// Edge and path vectors.

RatVec edge_vector(const Diagram& d, const SlideSite& site) {
    return fold_as(join_legs(d, site.factor, site.pos));
}

TupleWalk bubble_path(const WordTuple& from, const WordTuple& to) {
    if (from.words.size() != to.words.size())
        throw StructError("bubble_path: factor counts differ");
    // Rank every occurrence by its position in `to`; equal letters keep
    // their order, so the k-th occurrence pairs with the k-th occurrence.
    std::vector<std::vector<int>> rank(from.words.size());
    for (size_t f = 0; f < from.words.size(); ++f) {
        std::map<int, std::vector<int>> targets; // letter -> positions in `to`
        for (int p = (int)to.words[f].size() - 1; p >= 0; --p)
            targets[to.words[f][p]].push_back(p);
        for (int letter : from.words[f]) {
            auto& t = targets[letter];
            if (t.empty()) throw StructError("bubble_path: letter multisets differ");
            rank[f].push_back(t.back());
            t.pop_back();
        }
        if (from.words[f].size() != to.words[f].size())
            throw StructError("bubble_path: word lengths differ");
    }
    TupleWalk walk{from};
    while (true) {
        bool swapped = false;
        for (size_t f = 0; f < rank.size() && !swapped; ++f)
            for (size_t p = 0; p + 1 < rank[f].size(); ++p)
                if (rank[f][p] > rank[f][p + 1]) {
                    walk.push_back(apply_swap(walk.back(), {(int)f, (int)p}));
                    std::swap(rank[f][p], rank[f][p + 1]);
                    swapped = true;
                    break;
                }
        if (!swapped) break;
    }
    if (walk.back() != to) throw StructError("bubble_path: sort missed the target");
    return walk;
}

RatVec path_vector(const LabelledGraph& g, const TupleWalk& walk) {
    RatVec vec;
    for (size_t i = 0; i + 1 < walk.size(); ++i)
        vec.axpy(Rat(1), edge_vector(g.diagram_at(walk[i]), site_between(walk[i], walk[i + 1])));
    return vec;
}

// ---------------------------------------------------------------------------
// The graph of forests.

SlidePath forest_path(const Diagram& from, const Diagram& to, long long cap) {
    DiagramClass src = canonicalize(from);
    DiagramClass dst = canonicalize(to);
    if (!src.forest || !dst.forest) throw StructError("forest_path: not a forest");

    struct Hop {
        std::string parent;
        SlideSite site;
    };
    std::map<std::string, Hop> hops;
    std::map<std::string, DiagramClass> classes;
    std::vector<std::string> order{src.encoding};
    classes.emplace(src.encoding, src);
    hops.emplace(src.encoding, Hop{"", {-1, -1}});
    bool found = src.encoding == dst.encoding;
    for (size_t head = 0; head < order.size() && !found; ++head) {
        const DiagramClass cur = classes.at(order[head]);
        for (int j = 0; j < cur.canon.strands && !found; ++j)
            for (int p = 0; p + 1 < cur.canon.leg_count[j] && !found; ++p) {
                if (!slidable(cur.canon, j, p)) continue;
                DiagramClass next = canonicalize(slide(cur.canon, j, p));
                if (hops.count(next.encoding)) continue;
                if ((long long)order.size() + 1 > cap)
                    throw ResourceError("forest_path: vertex cap exceeded",
                                        (long long)order.size());
                hops.emplace(next.encoding, Hop{cur.encoding, {j, p}});
                classes.emplace(next.encoding, next);
                order.push_back(next.encoding);
                found = next.encoding == dst.encoding;
            }
    }
    if (!found) throw StructError("forest_path: no slide path between the forests");

    SlidePath path;
    std::string at = dst.encoding;
    while (!at.empty()) {
        path.verts.push_back(classes.at(at));
        const Hop& h = hops.at(at);
        if (!h.parent.empty()) path.sites.push_back(h.site);
        at = h.parent;
    }
    std::reverse(path.verts.begin(), path.verts.end());
    std::reverse(path.sites.begin(), path.sites.end());
    return path;
}

RatVec slide_path_vector(const SlidePath& p) {
    RatVec vec;
    for (size_t i = 0; i < p.sites.size(); ++i)
        vec.axpy(Rat(1), edge_vector(p.verts[i].canon, p.sites[i]));
    return vec;
}

RatVec vector_between(const Diagram& from, const Diagram& to, long long cap) {
    return slide_path_vector(forest_path(from, to, cap));
}

LabelledPath lift_path(const SlidePath& p, const LabelledForest& start) {
    if (p.verts.empty()) throw StructError("lift_path: empty path");
    if (canonicalize(start.d).encoding != p.verts.front().encoding)
        throw StructError("lift_path: start labelling does not sit over the path");
    LabelledPath lifted{start, p.sites, {word_tuple(start)}};
    for (const SlideSite& site : p.sites)
        lifted.tuples.push_back(apply_swap(lifted.tuples.back(), site));
    return lifted;
}

// ---------------------------------------------------------------------------
// Barycenters and the merge/split maps.

WordTuple stacked_tuple(const LabelledGraph& g, const std::vector<int>& sigma) {
    if ((int)sigma.size() != g.tree_count)
        throw StructError("stacked_tuple: order must list every label");
    std::vector<Permutograph> factors = g.strand_factors();
    WordTuple v;
    for (const auto& f : factors) {
        Word w;
        for (int label : sigma) w.insert(w.end(), f.mult[label - 1], label);
        v.words.push_back(std::move(w));
    }
    return v;
}

Diagram stacked(const LabelledForest& f, const std::vector<int>& sigma) {
    Diagram d = tree_of(f, sigma.at(0));
    for (size_t i = 1; i < sigma.size(); ++i) d = stack(tree_of(f, sigma[i]), d);
    return d;
}

Barycenter avg_barycenter(const LabelledGraph& g) {
    std::vector<int> sigma(g.tree_count);
    std::iota(sigma.begin(), sigma.end(), 1);
    Rat fac = rat_factorial(g.tree_count);
    std::map<WordTuple, Rat> acc;
    do {
        acc[stacked_tuple(g, sigma)] += Rat(1) / fac;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    Barycenter b;
    for (auto& [tuple, weight] : acc) b.terms.push_back({weight, tuple});
    return b;
}

RatVec vector_between(const LabelledGraph& g, const Barycenter& from,
                      const Barycenter& to, const WordTuple& origin) {
    RatVec vec;
    for (const auto& [weight, tuple] : to.terms)
        vec.axpy(weight, path_vector(g, bubble_path(origin, tuple)));
    for (const auto& [weight, tuple] : from.terms)
        vec.axpy(-weight, path_vector(g, bubble_path(origin, tuple)));
    return vec;
}

RatVec vector_between(const LabelledGraph& g, const Barycenter& from,
                      const Barycenter& to) {
    return vector_between(g, from, to, g.origin);
}

RatVec pi_tilde(const Diagram& forest) {
    DiagramClass dc = canonicalize(forest);
    if (!dc.forest) throw StructError("pi_tilde: not a forest");
    if (dc.size < 2) throw StructError("pi_tilde: merging needs at least two trees");
    LabelledForest lf = canonical_labelling(dc.canon);
    LabelledGraph g = build_labelled_graph(lf);
    Barycenter point{{{Rat(1), word_tuple(lf)}}};
    return vector_between(g, avg_barycenter(g), point);
}

RatVec iota_at(const Diagram& forest, int node, int slot) {
    auto [eq, cr] = resolve_node(forest, node, slot);
    RatVec vec = fold_as(eq);
    vec.axpy(Rat(-1), fold_as(cr));
    return vec;
}

RatVec iota(const Diagram& forest) {
    DiagramClass dc = canonicalize(forest);
    if (!dc.forest) throw StructError("iota: not a forest");
    for (int k = 0; k < dc.canon.node_count(); ++k)
        for (int i = 0; i < 3; ++i)
            if (dc.canon.is_leaf_ref(dc.canon.nodes[k][i])) return iota_at(dc.canon, k, i);
    throw StructError("iota: no node next to a strand to break");
}

} // namespace jdiag
