#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jdiag {

// Malformed diagram data (dangling edges, reused leaves, tadpoles, ...).
struct StructError : std::runtime_error {
    explicit StructError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or expansion exceeded its configured cap.  `partial` is how
// far the computation got before giving up.
struct ResourceError : std::runtime_error {
    long long partial;
    ResourceError(const std::string& what, long long done)
        : std::runtime_error(what), partial(done) {}
};

// A uni-trivalent diagram on `strands` oriented strands.
//
// Leaves (legs) sit on the strands and are numbered strand-major: all of
// strand 0 first, in order of increasing position along the strand's
// orientation, then strand 1, and so on.  Leaf `leaf_at(j, 0)` is the
// earliest leg of strand j.
//
// Internal trivalent nodes carry a counterclockwise cyclic order of their
// three edge ends.  `nodes[k][i]` describes the far end of the edge leaving
// node k through slot i:
//   - a value in [0, leaf_total()) is a leaf index;
//   - a value L + 3*w + s (L = leaf_total()) addresses slot s of node w.
// Node-to-node edges are therefore recorded once from each side, and the two
// records must point at each other.  Addressing slots rather than vertices
// keeps parallel edges unambiguous: the two ways of pairing a double edge
// differ by an orientation flip and are genuinely different diagrams.
//
// Leaf-to-leaf edges (chords) are kept separately in `chords` as (lo, hi)
// index pairs.
struct Diagram {
    int strands = 1;
    std::vector<int> leg_count;
    std::vector<std::pair<int, int>> chords;
    std::vector<std::array<int, 3>> nodes;

    int leaf_total() const {
        int s = 0;
        for (int c : leg_count) s += c;
        return s;
    }
    int node_count() const { return (int)nodes.size(); }

    // Vertices are leaves then nodes: vertex L + k is node k.
    int vertex_count() const { return leaf_total() + node_count(); }
    int node_base() const { return leaf_total(); }

    bool is_leaf_ref(int r) const { return r < leaf_total(); }
    bool is_port_ref(int r) const { return r >= leaf_total(); }
    int make_port(int node, int slot) const { return leaf_total() + 3 * node + slot; }
    int port_node(int r) const { return (r - leaf_total()) / 3; }
    int port_slot(int r) const { return (r - leaf_total()) % 3; }
    // Collapses a far-end reference to its vertex (leaf index, or L + node).
    int far_vertex(int r) const { return is_leaf_ref(r) ? r : leaf_total() + port_node(r); }

    // Half the number of vertices.
    int degree() const { return vertex_count() / 2; }

    std::pair<int, int> leaf_strand_pos(int leaf) const;
    int leaf_at(int strand, int pos) const;
    // Vertex at the other end of the leaf's edge (leaf index or L + node).
    int leaf_peer(int leaf) const;

    // Throws StructError naming the offending vertex.  Checks: ref ranges,
    // every leaf attached exactly once, node records pairing up, no tadpoles,
    // no leafless (closed) components.
    void validate() const;

    bool operator==(const Diagram&) const = default;
};

Diagram empty_diagram(int strands);

// Component id per vertex (leaves then nodes), ids dense from 0 in order of
// first appearance.
std::vector<int> component_of(const Diagram& d);
int component_count(const Diagram& d);
bool is_connected_nonempty(const Diagram& d);

// Number of independent cycles (edges - vertices + components).
int cycle_rank(const Diagram& d);
bool is_forest(const Diagram& d);
bool is_tree(const Diagram& d);
bool is_chord_diagram(const Diagram& d);
// True when some chord's two legs are adjacent on the same strand.
bool has_isolated_chord(const Diagram& d);

// Restriction to the named components (legs keep their strand order).
Diagram subdiagram(const Diagram& d, const std::vector<int>& comps);
std::vector<Diagram> split_components(const Diagram& d);

// Concatenation along the strands: lower's legs come first on every strand.
Diagram stack(const Diagram& upper, const Diagram& lower);

// Reverses the cyclic order at one node (swaps slots 1 and 2, rewriting the
// slot-addressed references held by neighbours).
Diagram flip_node(const Diagram& d, int node_idx);

// `slot` of `node` must hold a leaf, at strand position (j, p).  Removes the
// node and its leg and reattaches the two remaining edges to fresh legs at
// positions p and p+1 of strand j.  First result: the counterclockwise
// successor of the leg lands at p ("="); second: the other way around ("x").
std::pair<Diagram, Diagram> resolve_node(const Diagram& d, int node, int slot);

// Legs at positions pos, pos+1 of `strand` must lie in different components.
// Replaces them by a single leg at pos attached to a new node whose ccw
// order is (new leg, far end of the upper leg, far end of the lower leg), so
// resolve_node on that node returns (slide(d, strand, pos), d).
Diagram join_legs(const Diagram& d, int strand, int pos);

// Swaps what the legs at positions pos, pos+1 of `strand` are attached to.
Diagram slide(const Diagram& d, int strand, int pos);
bool slidable(const Diagram& d, int strand, int pos);

// Canonical representative of a diagram under relabelling of internal nodes
// and rotation of their cyclic triples (leaves are pinned to their strand
// positions).  `encoding` is the canonical text form; equal encodings mean
// equal diagrams.
struct DiagramClass {
    Diagram canon;
    std::string encoding;
    int degree = 0;
    int size = 0;
    bool tree = false;
    bool forest = false;
    bool chord = false;
};
DiagramClass canonicalize(const Diagram& d);

// Text form "m=<strands>;l=<c0>,<c1>,...;c=<a>-<b>,...;n=(<a>,<b>,<c>)...".
// encode emits the struct as-is; decode validates.  Representation-faithful:
// decode(encode(d)) == d up to chord ordering.
std::string encode(const Diagram& d);
Diagram decode(const std::string& s);

// JSON object {"strands": m, "legs": [[peer,...] per strand], "nodes":
// [[a,b,c],...]} where legs list each leg's far-end vertex and node entries
// are the slot-addressed references described above.
std::string to_json(const Diagram& d);
Diagram from_json(const std::string& text);

// Process-wide table of canonical diagrams.  Ids are dense and stable for
// the lifetime of the process; use encodings for anything persistent.
using DiagId = int;
DiagId intern(const Diagram& d);
DiagId intern_class(const DiagramClass& dc);
const DiagramClass& diag_info(DiagId id);
DiagId intern_encoding(const std::string& enc);

} // namespace jdiag
