#include "jdiag/enumerate.hpp"

#include <functional>
#include <map>

namespace jdiag {

namespace {

// Builds the port matching into a Diagram; ports use the same numbering as
// node references (leaf i, then L + 3k + s), so the struct falls out direct.
Diagram from_matching(int strands, const std::vector<int>& leg_count, int t,
                      const std::vector<int>& match) {
    Diagram d;
    d.strands = strands;
    d.leg_count = leg_count;
    const int L = d.leaf_total();
    d.nodes.resize(t);
    for (int k = 0; k < t; ++k)
        for (int s = 0; s < 3; ++s) d.nodes[k][s] = match[L + 3 * k + s];
    for (int leaf = 0; leaf < L; ++leaf)
        if (match[leaf] < L && leaf < match[leaf]) d.chords.emplace_back(leaf, match[leaf]);
    return d;
}

bool has_leafless_component(const Diagram& d) {
    if (d.node_count() == 0) return false;
    auto comp = component_of(d);
    int nc = component_count(d);
    std::vector<char> has_leaf(nc, 0);
    for (int leaf = 0; leaf < d.leaf_total(); ++leaf) has_leaf[comp[leaf]] = 1;
    for (int c = 0; c < nc; ++c)
        if (!has_leaf[c]) return true;
    return false;
}

struct Enumerator {
    const EnumSpec& spec;
    int t = 0, L = 0, P = 0;
    std::vector<int> leg_count;
    std::vector<int> match;
    std::map<std::string, DiagramClass> found;

    explicit Enumerator(const EnumSpec& s) : spec(s) {}

    void emit() {
        Diagram d = from_matching(spec.strands, leg_count, t, match);
        if (has_leafless_component(d)) return;
        switch (spec.filter) {
            case DiagramFilter::Chords: break; // t == 0 by construction
            case DiagramFilter::Trees:
                if (!is_tree(d)) return;
                break;
            case DiagramFilter::Forests:
                if (!is_forest(d)) return;
                break;
            case DiagramFilter::OneCycle:
                if (cycle_rank(d) != 1) return;
                break;
            case DiagramFilter::All: break;
        }
        if (spec.size && component_count(d) != *spec.size) return;
        DiagramClass dc = canonicalize(d);
        auto [it, fresh] = found.emplace(dc.encoding, std::move(dc));
        (void)it;
        if (fresh && (long long)found.size() > spec.cap)
            throw ResourceError("enumeration exceeded its cap", (long long)found.size());
    }

    // Matches the smallest open port against every admissible partner.  A
    // node enters play through its slot 0, nodes in index order; that kills
    // the pure relabelling duplicates while reaching every class.
    void rec(int from, int next_fresh) {
        int pos = from;
        while (pos < P && match[pos] >= 0) ++pos;
        if (pos == P) {
            emit();
            return;
        }
        int nf = next_fresh;
        if (pos >= L && pos == L + 3 * nf) ++nf; // pos first-uses its own node
        for (int q = pos + 1; q < P; ++q) {
            if (match[q] >= 0) continue;
            int used_nf = nf;
            if (q >= L) {
                int k = (q - L) / 3;
                if (pos >= L && k == (pos - L) / 3) continue; // tadpole
                if (k >= nf) {
                    if (q != L + 3 * nf) break; // only a fresh slot 0 can follow
                    used_nf = nf + 1;
                }
            }
            match[pos] = q;
            match[q] = pos;
            rec(pos + 1, used_nf);
            match[pos] = -1;
            match[q] = -1;
        }
    }

    void run_phase(int nodes, const std::vector<int>& legs) {
        t = nodes;
        leg_count = legs;
        L = 0;
        for (int c : legs) L += c;
        P = L + 3 * t;
        match.assign(P, -1);
        rec(0, 0);
    }
};

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if ((int)cur.size() == parts - 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int c = 0; c <= total; ++c) {
        cur.push_back(c);
        compositions(total - c, parts, cur, fn);
        cur.pop_back();
    }
}

} // namespace

std::vector<DiagramClass> enumerate_diagrams(const EnumSpec& spec) {
    if (spec.strands < 1) throw StructError("enumerate: needs at least one strand");
    std::vector<DiagramClass> out;
    if (spec.degree < 1) return out;
    const int n = spec.degree;

    std::vector<int> node_counts;
    switch (spec.filter) {
        case DiagramFilter::Chords: node_counts = {0}; break;
        case DiagramFilter::Trees: node_counts = {n - 1}; break;
        case DiagramFilter::Forests:
            // a forest of size s and degree n has exactly n - s nodes
            if (spec.size) {
                if (*spec.size >= 1 && *spec.size <= n) node_counts = {n - *spec.size};
            } else {
                for (int t = 0; t <= n - 1; ++t) node_counts.push_back(t);
            }
            break;
        case DiagramFilter::OneCycle:
            // one cycle and size s force n - s + 1 nodes
            if (spec.size) {
                int t = n - *spec.size + 1;
                if (t >= 2) node_counts = {t};
            } else {
                for (int t = 2; t <= n; ++t) node_counts.push_back(t);
            }
            break;
        case DiagramFilter::All:
            for (int t = 0; t <= 2 * n - 1; ++t) node_counts.push_back(t);
            break;
    }

    Enumerator en(spec);
    for (int t : node_counts) {
        int L = 2 * n - t;
        if (L < 1) continue;
        std::vector<int> cur;
        compositions(L, spec.strands, cur,
                     [&](const std::vector<int>& legs) { en.run_phase(t, legs); });
    }
    for (auto& [enc, dc] : en.found) out.push_back(dc);
    return out;
}

} // namespace jdiag
