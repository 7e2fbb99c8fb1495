#include "jdiag/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace jdiag {

namespace {

std::vector<int> leg_offsets(const Diagram& d) {
    std::vector<int> off(d.strands + 1, 0);
    for (int j = 0; j < d.strands; ++j) off[j + 1] = off[j] + d.leg_count[j];
    return off;
}

Diagram tidy(Diagram d) {
    std::sort(d.chords.begin(), d.chords.end());
    return d;
}

// Explicit port form: node k owns ports 3k..3k+2 in slot order, leaf j owns
// port 3t+j.  match is the perfect pairing of ports.  Surgeries are edits of
// this pairing.
struct Ports {
    int strands = 1;
    std::vector<int> leg_count;
    int t = 0;
    std::vector<int> match;

    int leaf_port(int leaf) const { return 3 * t + leaf; }
    int L() const {
        int s = 0;
        for (int c : leg_count) s += c;
        return s;
    }
    void pair(int a, int b) { match[a] = b; match[b] = a; }
};

Ports to_ports(const Diagram& d) {
    Ports p;
    p.strands = d.strands;
    p.leg_count = d.leg_count;
    p.t = d.node_count();
    const int L = d.leaf_total();
    p.match.assign(3 * p.t + L, -1);
    for (auto& c : d.chords) p.pair(p.leaf_port(c.first), p.leaf_port(c.second));
    for (int k = 0; k < p.t; ++k)
        for (int i = 0; i < 3; ++i) {
            int r = d.nodes[k][i];
            if (d.is_leaf_ref(r)) p.pair(3 * k + i, p.leaf_port(r));
            else p.pair(3 * k + i, 3 * d.port_node(r) + d.port_slot(r));
        }
    return p;
}

Diagram from_ports(const Ports& p) {
    Diagram d;
    d.strands = p.strands;
    d.leg_count = p.leg_count;
    const int L = p.L();
    d.nodes.resize(p.t);
    for (int k = 0; k < p.t; ++k)
        for (int i = 0; i < 3; ++i) {
            int q = p.match[3 * k + i];
            d.nodes[k][i] = q < 3 * p.t ? L + q : q - 3 * p.t;
        }
    for (int leaf = 0; leaf < L; ++leaf) {
        int q = p.match[p.leaf_port(leaf)];
        if (q >= 3 * p.t) {
            int other = q - 3 * p.t;
            if (leaf < other) d.chords.emplace_back(leaf, other);
        }
    }
    return tidy(d);
}

} // namespace

std::pair<int, int> Diagram::leaf_strand_pos(int leaf) const {
    for (int j = 0; j < strands; ++j) {
        if (leaf < leg_count[j]) return {j, leaf};
        leaf -= leg_count[j];
    }
    throw StructError("leaf index out of range");
}

int Diagram::leaf_at(int strand, int pos) const {
    int off = 0;
    for (int j = 0; j < strand; ++j) off += leg_count[j];
    return off + pos;
}

int Diagram::leaf_peer(int leaf) const {
    for (auto& c : chords) {
        if (c.first == leaf) return c.second;
        if (c.second == leaf) return c.first;
    }
    const int L = leaf_total();
    for (int k = 0; k < node_count(); ++k)
        for (int i = 0; i < 3; ++i)
            if (nodes[k][i] == leaf) return L + k;
    throw StructError("leaf " + std::to_string(leaf) + " is unattached");
}

void Diagram::validate() const {
    if (strands < 1) throw StructError("diagram needs at least one strand");
    if ((int)leg_count.size() != strands)
        throw StructError("leg_count size does not match strand count");
    for (int c : leg_count)
        if (c < 0) throw StructError("negative leg count");
    const int L = leaf_total();
    const int t = node_count();
    std::vector<int> leaf_use(L, 0);
    for (auto& c : chords) {
        if (c.first < 0 || c.first >= L || c.second < 0 || c.second >= L)
            throw StructError("chord endpoint is not a leaf");
        if (c.first == c.second)
            throw StructError("chord at leaf " + std::to_string(c.first) + " loops");
        ++leaf_use[c.first];
        ++leaf_use[c.second];
    }
    for (int k = 0; k < t; ++k)
        for (int i = 0; i < 3; ++i) {
            int r = nodes[k][i];
            if (r < 0 || r >= L + 3 * t)
                throw StructError("node n" + std::to_string(k) + " has a dangling edge");
            if (is_leaf_ref(r)) {
                ++leaf_use[r];
                continue;
            }
            int w = port_node(r), s = port_slot(r);
            if (w == k)
                throw StructError("node n" + std::to_string(k) + " joins itself (tadpole)");
            if (nodes[w][s] != make_port(k, i))
                throw StructError("edge records of nodes n" + std::to_string(k) + " and n" +
                                  std::to_string(w) + " do not pair up");
        }
    for (int leaf = 0; leaf < L; ++leaf)
        if (leaf_use[leaf] != 1)
            throw StructError("leaf " + std::to_string(leaf) + " attached " +
                              std::to_string(leaf_use[leaf]) + " times");
    auto comp = component_of(*this);
    int nc = component_count(*this);
    std::vector<char> has_leaf(nc, 0);
    for (int leaf = 0; leaf < L; ++leaf) has_leaf[comp[leaf]] = 1;
    for (int k = 0; k < t; ++k)
        if (!has_leaf[comp[L + k]])
            throw StructError("node n" + std::to_string(k) + " lies in a closed component");
}

Diagram empty_diagram(int strands) {
    Diagram d;
    d.strands = strands;
    d.leg_count.assign(strands, 0);
    return d;
}

namespace {
struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
} // namespace

std::vector<int> component_of(const Diagram& d) {
    const int L = d.leaf_total(), V = d.vertex_count();
    UF uf(V);
    for (auto& c : d.chords) uf.unite(c.first, c.second);
    for (int k = 0; k < d.node_count(); ++k)
        for (int i = 0; i < 3; ++i) uf.unite(L + k, d.far_vertex(d.nodes[k][i]));
    std::vector<int> id(V, -1);
    int next = 0;
    for (int v = 0; v < V; ++v) {
        int r = uf.find(v);
        if (id[r] < 0) id[r] = next++;
        id[v] = id[r];
    }
    return id;
}

int component_count(const Diagram& d) {
    auto c = component_of(d);
    return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

bool is_connected_nonempty(const Diagram& d) { return component_count(d) == 1; }

int cycle_rank(const Diagram& d) {
    long long edges = (long long)d.chords.size();
    long long leaf_ends = 0, port_ends = 0;
    for (auto& t : d.nodes)
        for (int r : t) (d.is_leaf_ref(r) ? leaf_ends : port_ends)++;
    edges += leaf_ends + port_ends / 2;
    return (int)(edges - d.vertex_count() + component_count(d));
}

bool is_forest(const Diagram& d) { return cycle_rank(d) == 0; }

bool is_tree(const Diagram& d) {
    return d.degree() >= 1 && is_forest(d) && component_count(d) == 1;
}

bool is_chord_diagram(const Diagram& d) { return d.nodes.empty(); }

bool has_isolated_chord(const Diagram& d) {
    for (auto& c : d.chords) {
        auto [s1, p1] = d.leaf_strand_pos(c.first);
        auto [s2, p2] = d.leaf_strand_pos(c.second);
        if (s1 == s2 && (p2 - p1 == 1 || p1 - p2 == 1)) return true;
    }
    return false;
}

Diagram subdiagram(const Diagram& d, const std::vector<int>& comps) {
    auto comp = component_of(d);
    std::vector<char> keep_comp(component_count(d), 0);
    for (int c : comps) keep_comp[c] = 1;
    const int L = d.leaf_total();

    Diagram out;
    out.strands = d.strands;
    out.leg_count.assign(d.strands, 0);
    std::vector<int> leaf_map(L, -1);
    int next = 0;
    for (int j = 0, leaf = 0; j < d.strands; ++j)
        for (int q = 0; q < d.leg_count[j]; ++q, ++leaf)
            if (keep_comp[comp[leaf]]) {
                leaf_map[leaf] = next++;
                out.leg_count[j]++;
            }
    std::vector<int> node_map(d.node_count(), -1);
    int nn = 0;
    for (int k = 0; k < d.node_count(); ++k)
        if (keep_comp[comp[L + k]]) node_map[k] = nn++;
    const int newL = next;
    for (auto& c : d.chords)
        if (keep_comp[comp[c.first]]) {
            int a = leaf_map[c.first], b = leaf_map[c.second];
            out.chords.emplace_back(std::min(a, b), std::max(a, b));
        }
    out.nodes.resize(nn);
    for (int k = 0; k < d.node_count(); ++k)
        if (node_map[k] >= 0)
            for (int i = 0; i < 3; ++i) {
                int r = d.nodes[k][i];
                out.nodes[node_map[k]][i] =
                    d.is_leaf_ref(r) ? leaf_map[r]
                                     : newL + 3 * node_map[d.port_node(r)] + d.port_slot(r);
            }
    return tidy(out);
}

std::vector<Diagram> split_components(const Diagram& d) {
    std::vector<Diagram> out;
    for (int c = 0; c < component_count(d); ++c) out.push_back(subdiagram(d, {c}));
    return out;
}

Diagram stack(const Diagram& upper, const Diagram& lower) {
    if (upper.strands != lower.strands)
        throw StructError("stack: strand counts differ");
    Diagram out;
    out.strands = lower.strands;
    out.leg_count.resize(out.strands);
    for (int j = 0; j < out.strands; ++j)
        out.leg_count[j] = lower.leg_count[j] + upper.leg_count[j];
    auto off_out = leg_offsets(out);
    const int Lout = out.leaf_total();
    const int tLo = lower.node_count();
    auto map_lo = [&](int leaf) {
        auto [j, q] = lower.leaf_strand_pos(leaf);
        return off_out[j] + q;
    };
    auto map_up = [&](int leaf) {
        auto [j, q] = upper.leaf_strand_pos(leaf);
        return off_out[j] + lower.leg_count[j] + q;
    };
    auto ref_lo = [&](int r) {
        return lower.is_leaf_ref(r)
                   ? map_lo(r)
                   : Lout + 3 * lower.port_node(r) + lower.port_slot(r);
    };
    auto ref_up = [&](int r) {
        return upper.is_leaf_ref(r)
                   ? map_up(r)
                   : Lout + 3 * (tLo + upper.port_node(r)) + upper.port_slot(r);
    };
    for (auto& c : lower.chords) {
        int a = ref_lo(c.first), b = ref_lo(c.second);
        out.chords.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (auto& c : upper.chords) {
        int a = ref_up(c.first), b = ref_up(c.second);
        out.chords.emplace_back(std::min(a, b), std::max(a, b));
    }
    for (auto& t : lower.nodes) out.nodes.push_back({ref_lo(t[0]), ref_lo(t[1]), ref_lo(t[2])});
    for (auto& t : upper.nodes) out.nodes.push_back({ref_up(t[0]), ref_up(t[1]), ref_up(t[2])});
    return tidy(out);
}

Diagram flip_node(const Diagram& d, int node_idx) {
    Ports p = to_ports(d);
    int a = 3 * node_idx + 1, b = 3 * node_idx + 2;
    int ma = p.match[a], mb = p.match[b];
    p.pair(a, mb);
    p.pair(b, ma);
    return from_ports(p);
}

std::pair<Diagram, Diagram> resolve_node(const Diagram& d, int node, int slot) {
    const int L = d.leaf_total();
    int leg = d.nodes[node][slot];
    if (!d.is_leaf_ref(leg))
        throw StructError("resolve_node: slot does not hold a leaf");
    auto [j, p] = d.leaf_strand_pos(leg);
    Ports in = to_ports(d);
    int c1 = in.match[3 * node + (slot + 1) % 3];
    int c2 = in.match[3 * node + (slot + 2) % 3];

    Ports out;
    out.strands = d.strands;
    out.leg_count = d.leg_count;
    out.leg_count[j] += 1;
    out.t = in.t - 1;
    const int newL = L + 1;
    out.match.assign(3 * out.t + newL, -1);

    std::vector<int> off_out(d.strands + 1, 0);
    for (int s = 0; s < d.strands; ++s) off_out[s + 1] = off_out[s] + out.leg_count[s];
    auto map_leaf = [&](int leaf2) {
        auto [s, q] = d.leaf_strand_pos(leaf2);
        if (s == j && q > p) ++q;
        return off_out[s] + q;
    };
    auto map_port = [&](int q) {
        if (q >= 3 * in.t) return out.leaf_port(map_leaf(q - 3 * in.t));
        int k = q / 3, i = q % 3;
        return 3 * (k < node ? k : k - 1) + i;
    };
    for (int q = 0; q < (int)in.match.size(); ++q) {
        int r = in.match[q];
        if (r < q) continue;
        if (q < 3 * in.t && q / 3 == node) continue;
        if (r < 3 * in.t && r / 3 == node) continue;
        if (q == in.leaf_port(leg) || r == in.leaf_port(leg)) continue;
        out.pair(map_port(q), map_port(r));
    }
    int la = out.leaf_port(off_out[j] + p);
    int lb = out.leaf_port(off_out[j] + p + 1);
    Ports eq = out, cr = out;
    eq.pair(map_port(c1), la);
    eq.pair(map_port(c2), lb);
    cr.pair(map_port(c1), lb);
    cr.pair(map_port(c2), la);
    return {from_ports(eq), from_ports(cr)};
}

bool slidable(const Diagram& d, int strand, int pos) {
    auto comp = component_of(d);
    return comp[d.leaf_at(strand, pos)] != comp[d.leaf_at(strand, pos + 1)];
}

Diagram join_legs(const Diagram& d, int strand, int pos) {
    if (!slidable(d, strand, pos))
        throw StructError("join_legs: legs lie in the same component");
    const int L = d.leaf_total();
    int la = d.leaf_at(strand, pos), lb = d.leaf_at(strand, pos + 1);
    Ports in = to_ports(d);
    int xa = in.match[in.leaf_port(la)];
    int xb = in.match[in.leaf_port(lb)];

    Ports out;
    out.strands = d.strands;
    out.leg_count = d.leg_count;
    out.leg_count[strand] -= 1;
    out.t = in.t + 1;
    const int newL = L - 1;
    out.match.assign(3 * out.t + newL, -1);

    std::vector<int> off_out(d.strands + 1, 0);
    for (int s = 0; s < d.strands; ++s) off_out[s + 1] = off_out[s] + out.leg_count[s];
    auto map_leaf = [&](int leaf2) {
        auto [s, q] = d.leaf_strand_pos(leaf2);
        if (s == strand && q > pos + 1) --q;
        return off_out[s] + q;
    };
    auto map_port = [&](int q) {
        if (q >= 3 * in.t) return out.leaf_port(map_leaf(q - 3 * in.t));
        return q; // node ports keep their ids; the new node is appended
    };
    for (int q = 0; q < (int)in.match.size(); ++q) {
        int r = in.match[q];
        if (r < q) continue;
        if (q == in.leaf_port(la) || q == in.leaf_port(lb)) continue;
        if (r == in.leaf_port(la) || r == in.leaf_port(lb)) continue;
        out.pair(map_port(q), map_port(r));
    }
    int w = in.t; // new node index
    out.pair(3 * w + 0, out.leaf_port(off_out[strand] + pos));
    out.pair(3 * w + 1, map_port(xb));
    out.pair(3 * w + 2, map_port(xa));
    return from_ports(out);
}

Diagram slide(const Diagram& d, int strand, int pos) {
    int la = d.leaf_at(strand, pos), lb = d.leaf_at(strand, pos + 1);
    Ports p = to_ports(d);
    int ma = p.match[p.leaf_port(la)], mb = p.match[p.leaf_port(lb)];
    if (ma == p.leaf_port(lb)) return tidy(d); // one chord's two ends
    p.pair(p.leaf_port(la), mb);
    p.pair(p.leaf_port(lb), ma);
    return from_ports(p);
}

std::string encode(const Diagram& d) {
    std::ostringstream os;
    os << "m=" << d.strands << ";l=";
    for (int j = 0; j < d.strands; ++j) os << (j ? "," : "") << d.leg_count[j];
    os << ";c=";
    auto chords = d.chords;
    std::sort(chords.begin(), chords.end());
    for (size_t i = 0; i < chords.size(); ++i)
        os << (i ? "," : "") << chords[i].first << "-" << chords[i].second;
    os << ";n=";
    for (size_t k = 0; k < d.nodes.size(); ++k)
        os << (k ? "," : "") << "(" << d.nodes[k][0] << "," << d.nodes[k][1] << ","
           << d.nodes[k][2] << ")";
    return os.str();
}

Diagram decode(const std::string& s) {
    auto expect = [&](bool ok, const std::string& why) {
        if (!ok) throw StructError("decode: " + why + " in \"" + s + "\"");
    };
    Diagram d;
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : s) {
            if (ch == ';') {
                parts.push_back(cur);
                cur.clear();
            } else cur += ch;
        }
        parts.push_back(cur);
    }
    expect(parts.size() == 4, "expected four fields");
    expect(parts[0].rfind("m=", 0) == 0, "missing m=");
    d.strands = std::stoi(parts[0].substr(2));
    expect(parts[1].rfind("l=", 0) == 0, "missing l=");
    {
        std::stringstream ss(parts[1].substr(2));
        std::string tok;
        while (std::getline(ss, tok, ',')) d.leg_count.push_back(std::stoi(tok));
    }
    expect(parts[2].rfind("c=", 0) == 0, "missing c=");
    {
        std::stringstream ss(parts[2].substr(2));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto dash = tok.find('-');
            expect(dash != std::string::npos, "bad chord");
            d.chords.emplace_back(std::stoi(tok.substr(0, dash)),
                                  std::stoi(tok.substr(dash + 1)));
        }
    }
    expect(parts[3].rfind("n=", 0) == 0, "missing n=");
    {
        std::string body = parts[3].substr(2);
        size_t i = 0;
        while (i < body.size()) {
            if (body[i] == ',') ++i;
            expect(i < body.size() && body[i] == '(', "bad triple");
            auto close = body.find(')', i);
            expect(close != std::string::npos, "unclosed triple");
            std::stringstream ss(body.substr(i + 1, close - i - 1));
            std::string tok;
            std::array<int, 3> tr{};
            int k = 0;
            while (std::getline(ss, tok, ',')) {
                expect(k < 3, "triple too long");
                tr[k++] = std::stoi(tok);
            }
            expect(k == 3, "triple too short");
            d.nodes.push_back(tr);
            i = close + 1;
        }
    }
    d.validate();
    return tidy(d);
}

DiagramClass canonicalize(const Diagram& d0) {
    Diagram d = tidy(d0);
    d.validate();
    const int t = d.node_count();
    const int L = d.leaf_total();

    // Search over node relabellings and per-node rotations, restricted to
    // permutations compatible with an isomorphism-invariant colouring
    // (pinned leaf entries refined by neighbour colours).  Restricting to an
    // invariant class keeps the minimum a complete invariant while pruning
    // the search on diagrams with many interior nodes.
    std::vector<int> sig(t, 0);
    {
        int classes = 1;
        for (int round = 0; round < t; ++round) {
            std::vector<std::array<int, 4>> key(t);
            for (int k = 0; k < t; ++k) {
                for (int i = 0; i < 3; ++i) {
                    int e = d.nodes[k][i];
                    key[k][i] = d.is_leaf_ref(e) ? (1 << 28) + e : sig[d.port_node(e)];
                }
                std::sort(key[k].begin(), key[k].begin() + 3);
                key[k][3] = sig[k];
            }
            // colour ids ranked by key so the values themselves are invariant
            std::map<std::array<int, 4>, int> palette;
            for (int k = 0; k < t; ++k) palette.emplace(key[k], 0);
            int rank = 0;
            for (auto& [kk, id] : palette) id = rank++;
            for (int k = 0; k < t; ++k) sig[k] = palette.at(key[k]);
            if (rank == classes) break;
            classes = rank;
        }
    }
    std::vector<int> order(t);
    std::iota(order.begin(), order.end(), 0);
    // index tiebreak makes `order` the lex-min of the sig-preserving perms,
    // so next_permutation starting there visits all of them
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] != sig[b] ? sig[a] < sig[b] : a < b; });

    std::vector<int> inv(t), rot(t, 0), seq;
    auto render = [&](const std::vector<int>& old_of_new, std::vector<int>& out) {
        for (int k = 0; k < t; ++k) inv[old_of_new[k]] = k;
        out.clear();
        for (int k = 0; k < t; ++k) {
            int old = old_of_new[k];
            for (int i = 0; i < 3; ++i) {
                int e = d.nodes[old][(rot[old] + i) % 3];
                if (d.is_leaf_ref(e)) {
                    out.push_back(e);
                } else {
                    int w = d.port_node(e), sl = d.port_slot(e);
                    out.push_back(L + 3 * inv[w] + (sl - rot[w] + 3) % 3);
                }
            }
        }
    };

    std::vector<int> best, best_perm, best_rot, cand;
    auto perm = order;
    do {
        bool ok = true;
        for (int k = 0; k < t && ok; ++k) ok = sig[perm[k]] == sig[order[k]];
        if (!ok) continue;
        std::fill(rot.begin(), rot.end(), 0);
        for (;;) {
            render(perm, cand);
            if (best.empty() || cand < best) {
                best = cand;
                best_perm = perm;
                best_rot = rot;
            }
            int i = 0;
            while (i < t && rot[i] == 2) rot[i++] = 0;
            if (i == t) break;
            ++rot[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Diagram canon;
    canon.strands = d.strands;
    canon.leg_count = d.leg_count;
    canon.chords = d.chords;
    canon.nodes.resize(t);
    if (t > 0) {
        rot = best_rot;
        render(best_perm, best);
        for (int k = 0; k < t; ++k)
            for (int i = 0; i < 3; ++i) canon.nodes[k][i] = best[3 * k + i];
    }
    DiagramClass dc;
    dc.canon = canon;
    dc.encoding = encode(canon);
    dc.degree = canon.degree();
    dc.size = component_count(canon);
    dc.forest = is_forest(canon);
    dc.tree = dc.forest && dc.size == 1 && dc.degree >= 1;
    dc.chord = is_chord_diagram(canon);
    return dc;
}

std::string to_json(const Diagram& d) {
    nlohmann::ordered_json j;
    j["strands"] = d.strands;
    auto legs = nlohmann::ordered_json::array();
    for (int s = 0; s < d.strands; ++s) {
        auto row = nlohmann::ordered_json::array();
        for (int q = 0; q < d.leg_count[s]; ++q)
            row.push_back(d.leaf_peer(d.leaf_at(s, q)));
        legs.push_back(row);
    }
    j["legs"] = legs;
    auto nodes = nlohmann::ordered_json::array();
    for (auto& t : d.nodes) nodes.push_back(std::vector<int>{t[0], t[1], t[2]});
    j["nodes"] = nodes;
    return j.dump();
}

Diagram from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Diagram d;
    d.strands = j.at("strands").get<int>();
    auto legs = j.at("legs");
    if ((int)legs.size() != d.strands) throw StructError("from_json: legs/strands mismatch");
    std::vector<int> peer;
    for (auto& row : legs) {
        d.leg_count.push_back((int)row.size());
        for (auto& v : row) peer.push_back(v.get<int>());
    }
    for (auto& tr : j.at("nodes")) {
        if (tr.size() != 3) throw StructError("from_json: node triple arity");
        d.nodes.push_back({tr[0].get<int>(), tr[1].get<int>(), tr[2].get<int>()});
    }
    const int L = d.leaf_total();
    for (int leaf = 0; leaf < L; ++leaf) {
        int p = peer[leaf];
        if (p < L) {
            if (peer[p] != leaf)
                throw StructError("from_json: chord peers disagree at leaf " + std::to_string(leaf));
            if (leaf < p) d.chords.emplace_back(leaf, p);
        } else {
            bool found = false;
            for (int i = 0; i < 3 && !found; ++i) found = d.nodes[p - L][i] == leaf;
            if (!found)
                throw StructError("from_json: node n" + std::to_string(p - L) +
                                  " does not list leaf " + std::to_string(leaf));
        }
    }
    d.validate();
    return tidy(d);
}

namespace {
struct InternTable {
    std::unordered_map<std::string, DiagId> by_encoding;
    std::vector<DiagramClass> info;
};
InternTable& table() {
    static InternTable t;
    return t;
}
} // namespace

DiagId intern_class(const DiagramClass& dc) {
    auto& t = table();
    auto it = t.by_encoding.find(dc.encoding);
    if (it != t.by_encoding.end()) return it->second;
    DiagId id = (DiagId)t.info.size();
    t.info.push_back(dc);
    t.by_encoding.emplace(dc.encoding, id);
    return id;
}

DiagId intern(const Diagram& d) { return intern_class(canonicalize(d)); }

const DiagramClass& diag_info(DiagId id) { return table().info.at(id); }

DiagId intern_encoding(const std::string& enc) {
    auto& t = table();
    auto it = t.by_encoding.find(enc);
    if (it != t.by_encoding.end()) return it->second;
    return intern(decode(enc));
}

} // namespace jdiag
