#pragma once

#include <map>
#include <string>
#include <vector>

#include "jdiag/rational.hpp"

namespace jdiag {

// Sparse rational vector over integer-indexed columns.  Entries are nonzero.
struct RatVec {
    std::map<int, Rat> entries;

    bool zero() const { return entries.empty(); }
    int lead() const; // smallest column, vector must be nonzero
    Rat get(int col) const;
    void set(int col, const Rat& v);
    RatVec& axpy(const Rat& c, const RatVec& other); // *this += c * other
    RatVec& scale(const Rat& c);
    // divides by the leading coefficient
    RatVec& normalize();

    bool operator==(const RatVec&) const = default;
};

RatVec operator+(RatVec a, const RatVec& b);
RatVec operator-(RatVec a, const RatVec& b);
RatVec operator*(const Rat& c, RatVec v);
RatVec unit_vec(int col);

// Row space in echelon form over exact rationals.  Rows are indexed by their
// pivot (first nonzero) column and keep pivot coefficient 1.  reduce() maps a
// vector to the unique representative of its coset supported on non-pivot
// columns, so residuals are canonical whether or not finalize() has run.
class QuotientSpace {
public:
    // Reduces v against the current rows; if nonzero, installs it as a new
    // row and returns true.
    bool add_relation(RatVec v);
    int rank() const { return (int)rows_.size(); }
    RatVec reduce(RatVec v) const;
    bool in_span(const RatVec& v) const { return reduce(v).zero(); }
    bool is_pivot(int col) const { return rows_.count(col) != 0; }
    // Back-eliminates pivot columns from row tails (reduced echelon form).
    void finalize();
    const std::map<int, RatVec>& rows() const { return rows_; }

    std::string to_json() const;
    static QuotientSpace from_json(const std::string& text);

private:
    std::map<int, RatVec> rows_;
};

// Rational combinations c with sum_i c_i vecs[i] = 0, echelonized over the
// input indices.  Column indices in vecs must stay below 2^30.
std::vector<RatVec> left_kernel(const std::vector<RatVec>& vecs);

bool same_row_space(const std::vector<RatVec>& a, const std::vector<RatVec>& b);

} // namespace jdiag
