#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jdiag/diagram.hpp"
#include "jdiag/linalg.hpp"

namespace jdiag {

// ---------------------------------------------------------------------------
// Words and permutographs.
//
// A word is a sequence of positive letters; the permutograph on a
// multiplicity vector has one vertex per arrangement of the multiset and one
// edge per swap of two adjacent unequal letters.  Every edge changes the
// inversion count by exactly 1.

using Word = std::vector<int>;

int inversions(const Word& w);
// Letter i+1 repeated mult[i] times, ascending (the unique height-0 word).
Word ascending_word(const std::vector<int>& mult);
Word descending_word(const std::vector<int>& mult);

struct Permutograph {
    std::vector<int> mult;

    long long vertex_count() const; // multinomial
    Word bottom() const { return ascending_word(mult); }
    Word top() const { return descending_word(mult); }
    // All arrangements, lexicographic.  Throws ResourceError beyond cap.
    std::vector<Word> vertices(long long cap = 200000) const;
};

// Vertex of a box product of permutographs: one word per factor.  A plain
// permutograph is the single-factor case.  The graph structure is implicit:
// vertices sharing all but one factor, differing there by an adjacent swap.
struct WordTuple {
    std::vector<Word> words;

    auto operator<=>(const WordTuple&) const = default;
};

// Sum of the factor inversion counts.
int height(const WordTuple& v);

// Where a swap happens: positions pos, pos+1 of factor `factor`.  For graphs
// of forests the factor is the strand.
struct SlideSite {
    int factor = 0;
    int pos = 0;

    auto operator<=>(const SlideSite&) const = default;
};

// Swaps the two letters; they must be unequal (equal letters are the same
// vertex, not an edge).
WordTuple apply_swap(const WordTuple& v, const SlideSite& site);
std::vector<std::pair<SlideSite, WordTuple>> slide_neighbors(const WordTuple& v);
// The unique site with apply_swap(u, site) == v.
SlideSite site_between(const WordTuple& u, const WordTuple& v);

// Cartesian product of the factor vertex sets.  Throws ResourceError beyond
// cap.
std::vector<WordTuple> box_vertices(const std::vector<Permutograph>& factors,
                                    long long cap = 200000);

// ---------------------------------------------------------------------------
// Cycles and their decomposition.
//
// A walk is a vertex sequence with consecutive entries adjacent; a cycle
// additionally starts and ends at the same vertex.  Every cycle is a sum of
// three kinds of atomic cycles: backtracks (an edge traversed both ways),
// far-commuting squares, and braiding hexagons.  An atom is stored as its
// top vertex plus the two alternating sites; its walk has 2*period steps.

using TupleWalk = std::vector<WordTuple>;

// Throws StructError on non-adjacent consecutive vertices; `closed` also
// requires front() == back().
void validate_walk(const TupleWalk& w, bool closed);

// 1-chain of a walk: undirected edge keys (smaller endpoint first), signed
// +1 per traversal in key order, -1 against it.
using EdgeChain = std::map<std::pair<WordTuple, WordTuple>, Rat>;
EdgeChain walk_chain(const TupleWalk& w);
EdgeChain& chain_axpy(EdgeChain& acc, const Rat& c, const EdgeChain& other);

// period 1 = backtrack (first == second), 2 = square, 3 = hexagon.
struct CycleAtom {
    WordTuple base;
    SlideSite first;
    SlideSite second;
    int period = 1;
    Rat coeff = Rat(1);
};

// The closed walk of the atom: from base, alternate first/second for
// 2*period steps.
TupleWalk atom_walk(const CycleAtom& a);

// Morse scan: repeatedly cancel backtracks, split at repeated vertices, and
// rewrite the walk at a maximum-height vertex, emitting a square when the
// two incident sites commute and a hexagon when they braid.  The input
// 1-chain equals the coefficient-weighted sum of the atom 1-chains.
std::vector<CycleAtom> decompose_cycle(const TupleWalk& cycle);

// Fundamental cycles of a BFS spanning tree of the component of `start`:
// one closed walk per non-tree edge, based at the endpoints' meet.  Throws
// ResourceError if the component exceeds cap vertices.
std::vector<TupleWalk> fundamental_cycles(const WordTuple& start,
                                          long long cap = 200000);

// ---------------------------------------------------------------------------
// Labelled forests and their graphs.

// A forest diagram together with a bijection components -> {1..size}.
// `label[leaf]` is the label of the leaf's component.
struct LabelledForest {
    Diagram d;
    std::vector<int> label;
};

// Labels components 1..s in order of (canonical encoding of the component,
// first leaf index); ties beyond that cannot occur.
LabelledForest canonical_labelling(const Diagram& forest);
// The component with the given label, extracted as a standalone diagram.
Diagram tree_of(const LabelledForest& f, int label);
// Per strand, the labels of the legs in position order.
WordTuple word_tuple(const LabelledForest& f);

// Graph of labelled forests on the trees of `base`: vertices are exactly
// the word tuples with base's per-strand label multiplicities (the box
// product of one permutograph per strand), edges are slide moves of
// adjacent legs in distinct trees.
struct LabelledGraph {
    LabelledForest base;
    WordTuple origin; // word_tuple(base)
    int tree_count = 0;

    std::vector<Permutograph> strand_factors() const;
    long long vertex_count() const;
    std::vector<WordTuple> vertices(long long cap = 200000) const;
    // Reorders base's legs to match the tuple (same-label legs keep their
    // relative order, which no slide can change).
    Diagram diagram_at(const WordTuple& v) const;
    LabelledForest labelled_at(const WordTuple& v) const;
};

LabelledGraph build_labelled_graph(const LabelledForest& base);
// Stacks the trees in list order (first tree earliest on every strand) with
// labels 1..s.
LabelledGraph build_labelled_graph(const std::vector<Diagram>& trees);

// ---------------------------------------------------------------------------
// Edge vectors and path vectors.
//
// A slide move at (j, p) and the diagram joining the two slid legs at a node
// form an STU triple, so the directed edge d -> slide(d, j, p) is assigned
// the fold of the join; in the quotient that vector equals target minus
// source.  Reversal negates the vector.

RatVec edge_vector(const Diagram& d, const SlideSite& site);

// Deterministic walk from one tuple to another with the same per-factor
// letter multisets: repeatedly swaps, at the lowest factor and position, an
// adjacent pair that is inverted relative to `to` (occurrences of equal
// letters never cross).  Length = number of inversions between the tuples.
TupleWalk bubble_path(const WordTuple& from, const WordTuple& to);

// Sum of edge vectors along the walk, diagrams taken from the graph.
RatVec path_vector(const LabelledGraph& g, const TupleWalk& walk);

// ---------------------------------------------------------------------------
// The (unlabelled) graph of forests: vertices are canonical forest classes,
// edges are slides of adjacent legs in distinct components.  Multiple edges
// between two classes are possible, so a path records its sites.

struct SlidePath {
    std::vector<DiagramClass> verts;
    std::vector<SlideSite> sites; // verts[k] --sites[k]--> verts[k+1]
};

// BFS shortest path between the classes (neighbor expansion ordered by
// site).  Throws StructError when unreachable within cap vertices.
SlidePath forest_path(const Diagram& from, const Diagram& to,
                      long long cap = 200000);
RatVec slide_path_vector(const SlidePath& p);

// The canonical-path vector from one forest to another in their common
// graph of forests.  Path-independent after reduction by the flip, square
// and hexagon relations; callers reduce in the target quotient.
RatVec vector_between(const Diagram& from, const Diagram& to,
                      long long cap = 200000);

// Unique lift of an unlabelled path through the labelling cover: the same
// slides applied to the labelled start, which must sit over the first
// vertex.  Edge vectors agree with the unlabelled path's termwise.
struct LabelledPath {
    LabelledForest start;
    std::vector<SlideSite> sites;
    std::vector<WordTuple> tuples; // one per vertex
};
LabelledPath lift_path(const SlidePath& p, const LabelledForest& start);

// ---------------------------------------------------------------------------
// Barycenters, the merge map, and the split map.

// Formal rational combination of vertices of one labelled graph with weight
// sum 1.
struct Barycenter {
    std::vector<std::pair<Rat, WordTuple>> terms;
};

// The vertex stacking the trees in the order sigma (a permutation of
// {1..s}): all legs of tree sigma[0] first on every strand, and so on.
WordTuple stacked_tuple(const LabelledGraph& g, const std::vector<int>& sigma);
// Same stacking as a diagram built from the extracted trees.
Diagram stacked(const LabelledForest& f, const std::vector<int>& sigma);

// Average of the s! stackings, weight 1/s! each; coinciding stackings merge.
// Depends only on the tree multiset, not on the base forest.
Barycenter avg_barycenter(const LabelledGraph& g);

// Vector from B to B': sum of weighted bubble-path vectors through the
// common origin.  Well defined modulo the flip, square and hexagon
// relations whenever both weight sums are 1.
RatVec vector_between(const LabelledGraph& g, const Barycenter& from,
                      const Barycenter& to, const WordTuple& origin);
RatVec vector_between(const LabelledGraph& g, const Barycenter& from,
                      const Barycenter& to);

// Merge map: F |-> the vector from (F)_avg to F, a combination of forests
// one size smaller.  Requires size >= 2.  In the quotient by the one-size-
// down relations this descends to the section of iota.
RatVec pi_tilde(const Diagram& forest);

// Split map: breaks the first node carrying a leg into the two leg
// orderings, fold("=") - fold("x").  Requires a node (size < degree).
// Node choice is irrelevant modulo second resolutions.
RatVec iota(const Diagram& forest);
RatVec iota_at(const Diagram& forest, int node, int slot);

} // namespace jdiag
