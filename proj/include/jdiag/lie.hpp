#pragma once

#include <string>
#include <vector>

#include "jdiag/diagram.hpp"
#include "jdiag/linalg.hpp"

namespace jdiag {

// The graded Lie algebra of trees.  Degree-n coordinates live in the size-1
// graded space (trees modulo flips, IHX, the slide relation and isolated
// chords); elements are reduced vectors there.

// Ids of the degree-n quotient basis, in ambient (encoding) order.
std::vector<DiagId> lie_basis(int strands, int degree);

// dim per degree 1..max_degree.
std::vector<int> lie_graded_dims(int strands, int max_degree);

// Bracket of two trees: the slide-path vector from the stack with b's legs
// first to the stack with a's legs first, reduced in degree deg a + deg b.
// Both walks live in the two-component graph of forests on {a, b}.
RatVec tree_bracket(const Diagram& a, const Diagram& b);

// Bilinear extension to homogeneous reduced vectors; degrees are read off
// the supports.  Either argument may be zero (result zero, degree moot).
RatVec bracket(const RatVec& x, const RatVec& y, int strands);

struct JacobiReport {
    int strands = 0;
    int max_degree = 0;
    long long triples = 0;
    std::vector<std::string> failures; // witness basis encodings
    bool ok() const { return failures.empty(); }
};

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] over all basis triples with degree sum
// up to max_degree.
JacobiReport jacobi_check(int strands, int max_degree);

// Structure constants on the basis trees, keyed by canonical encodings.
std::string bracket_table_json(int strands, int max_degree);

} // namespace jdiag
