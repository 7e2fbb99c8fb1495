#pragma once

#include <string>
#include <vector>

#include "jdiag/diagram.hpp"
#include "jdiag/linalg.hpp"

namespace jdiag {

// Named quotient presentations shared by the CLI, the verification checks
// and the tests.  Columns of every space are intern ids of the classes in
// the matching ambient list.  Builds are memoized per process; when
// JDIAG_CACHE_DIR is set, the echelonized rows are also stored on disk,
// re-keyed to positions in the encoding-sorted ambient so they survive
// restarts.  Cache files are written once, via a temp file and rename.

// Degree-n forests with exactly `size` components, sorted by encoding.
std::vector<DiagramClass> forest_ambient(int strands, int degree, int size);
// The same over all component counts.
std::vector<DiagramClass> forest_ambient(int strands, int degree);
std::vector<DiagramClass> chord_ambient(int strands, int degree);
std::vector<DiagramClass> tree_ambient(int strands, int degree);

// Size-graded piece: size-k degree-n forests modulo node flips, IHX, the
// two-term slide relation and the hexagon relation; fi adds the isolated
// chord relation.  k=1 carries the Lie algebra of trees, k=n the chord end.
const QuotientSpace& graded_space(int strands, int degree, int size,
                                  bool fi = true);

// Forest presentation of the diagram algebra in one degree: forests of all
// sizes modulo node resolution (and isolated chords).
const QuotientSpace& algebra_space(int strands, int degree, bool fi = true);

// Chord presentation of the same algebra: chord diagrams modulo the
// four-term relation (and isolated chords).
const QuotientSpace& chord_space(int strands, int degree, bool fi = true);

// Ambient ids that are not pivots of q; their unit vectors descend to a
// basis of the quotient.
std::vector<DiagId> quotient_basis(const std::vector<DiagramClass>& ambient,
                                   const QuotientSpace& q);

int space_dim(const std::vector<DiagramClass>& ambient, const QuotientSpace& q);

// Resolved cache directory; empty when JDIAG_CACHE_DIR is unset or empty.
std::string cache_dir();

// Drops the in-process memo (disk files stay).  Lets tests exercise cold
// loads.
void reset_space_memo();

} // namespace jdiag
