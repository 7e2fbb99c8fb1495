#pragma once

#include <optional>
#include <vector>

#include "jdiag/diagram.hpp"

namespace jdiag {

enum class DiagramFilter { Chords, Trees, Forests, OneCycle, All };

struct EnumSpec {
    int strands = 1;
    int degree = 1;
    DiagramFilter filter = DiagramFilter::Forests;
    std::optional<int> size;        // component count; unset = any
    long long cap = 2'000'000;      // throws ResourceError beyond this many results
};

// All canonical diagrams matching the spec, sorted by encoding.  Diagrams
// with isolated chords are included; killing them is a quotient's business.
std::vector<DiagramClass> enumerate_diagrams(const EnumSpec& spec);

} // namespace jdiag
