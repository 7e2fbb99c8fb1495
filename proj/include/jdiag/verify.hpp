#pragma once

#include <string>
#include <vector>

namespace jdiag {

// One verification run is a named check at one (strands, degree)
// configuration.  The same checks back the CLI `verify` subcommand and the
// acceptance binary.

struct CheckConfig {
    int strands = 1;
    int degree = 2;
    unsigned seed = 20260816;
    int sample_pairs = 10;    // endpoint pairs per size for path independence
    int sample_paths = 10;    // path pairs per endpoint pair
    int sample_diagrams = 50; // diagram pairs per degree for the Hopf axioms
    long long cap = 200000;   // vertex cap for graph expansions
};

struct CheckResult {
    std::string name;
    int strands = 0;
    int degree = 0;
    bool pass = false;
    std::string summary;      // one line, includes the seed when sampling
    std::string witness_json; // structured detail; always set on failure
};

const std::vector<std::string>& check_names();

// Throws StructError for unknown names.  Checks whose scope is empty at the
// given configuration pass vacuously and say so in the summary.
CheckResult run_check(const std::string& name, const CheckConfig& cfg);

} // namespace jdiag
