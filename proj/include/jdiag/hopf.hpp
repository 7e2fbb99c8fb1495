#pragma once

#include <map>
#include <string>
#include <vector>

#include "jdiag/diagram.hpp"
#include "jdiag/linalg.hpp"

namespace jdiag {

// ---------------------------------------------------------------------------
// Tensors of diagram classes.
//
// A key lists the factors in order; all keys of one vector carry the same
// factor count.  Coefficients are exact rationals and zero terms are never
// stored.

struct TensorVector {
    std::map<std::vector<DiagId>, Rat> terms;

    bool zero() const { return terms.empty(); }
    TensorVector& axpy(const Rat& c, const TensorVector& other);
    bool operator==(const TensorVector&) const = default;
};

TensorVector tensor_unit(std::vector<DiagId> factors, const Rat& c = Rat(1));

// Product of diagram vectors: bilinear extension of stacking, the left
// factor's legs earliest on every strand.
DiagId mul_id(DiagId x, DiagId y);
RatVec mul_vec(const RatVec& x, const RatVec& y);

// Factorwise product of tensors with equal factor counts.
TensorVector tensor_mul(const TensorVector& x, const TensorVector& y);

// ---------------------------------------------------------------------------
// Comultiplication.

// Splits a class along every subset of its components, the subset on the
// left: 2^size terms; the empty subset contributes 1 (x) D.
TensorVector comult(DiagId d);
TensorVector comult_vec(const RatVec& v);

// Drops the two trivial terms (proper nonempty subsets only), extended
// linearly.  Kills every size-1 class.
TensorVector reduced_comult(const RatVec& v);

// k+1 factors, one term per ordered partition of the components into k+1
// nonempty blocks; equals the (k-1)-fold applied to the left factor.  k=0 is
// the identity; vanishes on classes of size <= k.
TensorVector reduced_comult_power(const RatVec& v, int k);

// Collapses every term to the product of its factors, left to right.
RatVec mu(const TensorVector& t);

// Reduces each factor to its quotient coordinates in the algebra of the
// factor's degree (degree-0 factors are left alone).  Terms that survive
// have the original factor counts.
TensorVector reduce_tensor(const TensorVector& t, int strands, bool fi = true);

// ---------------------------------------------------------------------------
// The section of the size filtration and the filtration comparison.

// F - (1/(k+1)!) mu Delta-bar^k(F), unreduced.  Requires size(F) <= k+1.
// Fixes forests of size <= k on the nose.
RatVec section_s(const Diagram& forest, int k);
// The same element via stackings: (1/(k+1)!) sum over orderings sigma of
// (F - (F)_sigma); identical term by term when size(F) = k+1.
RatVec section_s_stacked(const Diagram& forest, int k);

// Basis of the kernel of the reduced comultiplication in one degree, as
// quotient-reduced vectors on the forest presentation.
std::vector<RatVec> primitive_basis(int strands, int degree, bool fi = true);

// Row space of the images of forests of size <= k.
std::vector<RatVec> size_filtration_basis(int strands, int degree, int k,
                                          bool fi = true);

// Row space of all products of at most k primitive basis elements with the
// given total degree (every ordering of every degree composition).
std::vector<RatVec> product_filtration_basis(int strands, int degree, int k,
                                             bool fi = true);

// Side-by-side dimensions of the three filtrations in one degree, with the
// subspace and ladder verdicts.  dim_* are indexed by k-1, k = 1..degree.
struct FiltrationReport {
    int strands = 0;
    int degree = 0;
    bool fi = true;
    std::vector<int> dim_size;     // images of size-<=k forests
    std::vector<int> dim_product;  // products of <=k primitives
    std::vector<int> dim_graded;   // the size-k presentations
    bool size_eq_product = false;  // equal subspaces at every k
    bool graded_matches = false;   // dim_graded == dim_size throughout
    bool ladder_commutes = false;  // node splitting agrees with inclusion
    bool top_full = false;         // k = degree reaches the whole algebra
};

FiltrationReport compare_filtrations(int strands, int degree, bool fi = true);
std::string filtration_report_json(const FiltrationReport& r);

} // namespace jdiag
