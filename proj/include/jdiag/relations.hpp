#pragma once

#include <string>
#include <vector>

#include "jdiag/diagram.hpp"
#include "jdiag/linalg.hpp"

namespace jdiag {

// Linear relation among interned diagram classes.  Vectors are keyed by
// DiagId; spaces re-key them into a stable ambient order when persisting.
enum class RelKind { OneT, AS, STU, IHX, FourT, STU2, Hex, Square };

const char* rel_kind_name(RelKind k);

struct Relation {
    RatVec vec;
    RelKind kind;
    std::string site; // where the relation was generated, for reports
};

// Signed orientation-orbit normal form: +-1 times the orbit-minimal class,
// or zero when the orbit reaches its minimum with both signs.  Linear
// extension over a vector; the kernel of the extension is exactly the span
// of the orientation-flip sums.
RatVec fold_as(const Diagram& d);
RatVec fold_vec(const RatVec& v);

// Diagrams containing a chord with adjacent legs on one strand die.
std::vector<Relation> gen_1T(const std::vector<DiagramClass>& ambient);

// D plus its flip at each node.
std::vector<Relation> gen_AS(const std::vector<DiagramClass>& ambient);

// D - eq + cr for every node resolution site of every diagram in the
// ambient.  Unfolded; resolutions must stay inside the ambient family.
std::vector<Relation> gen_STU(const std::vector<DiagramClass>& ambient);

// Folded three-term rearrangement around every single internal edge.
std::vector<Relation> gen_IHX(const std::vector<DiagramClass>& ambient);

// Four-term relations among chord diagrams of the given degree, from
// resolving the unique node of a one-node forest at two different legs.
std::vector<Relation> gen_4T(int strands, int degree);

// Folded four-term second-resolution relations supported on size-`size`
// forests of the given degree.  Templates: forests one size smaller with two
// marked node legs, and one-cycle diagrams of the same size with both marks
// on cycle nodes (resolving a cycle node keeps the size).
std::vector<Relation> gen_STU2(int strands, int degree, int size);

// Folded sums around braid hexagons: three consecutive legs of one strand in
// pairwise distinct components of a size-(size+1) forest.
std::vector<Relation> gen_HEX(int strands, int degree, int size);

// Folded sums around far-commuting slide squares of size-(size+1) forests.
std::vector<Relation> gen_squares(int strands, int degree, int size);

// Drops zero vectors and duplicates (up to scale), keeping first sites.
std::vector<Relation> dedupe_relations(std::vector<Relation> rels);

} // namespace jdiag
