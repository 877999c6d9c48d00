#pragma once

// Independent reference implementations. They deliberately avoid the library's
// algebra, complex and elimination code and work from the raw presentation.

#include "gentle/linalg.hpp"
#include "gentle/presentation.hpp"
#include "gentle/walk.hpp"

#include <map>
#include <string>
#include <vector>

namespace testkit {

using ArrowSeq = std::vector<std::string>;

// Paths from each vertex (by name) found by exhaustive extension, trivial path first.
std::map<std::string, std::vector<ArrowSeq>> brute_force_paths(const gentle::Presentation& p);

// Plain Gauss-Jordan elimination over the rationals.
std::size_t gauss_rank(const gentle::Matrix& m);

struct OracleLetter {
    ArrowSeq arrows;
    bool direct = true;
};
using OracleWalk = std::vector<OracleLetter>;

// Strips a library walk down to arrow names and directions.
OracleWalk to_oracle(const gentle::GentleAlgebra& alg, const gentle::Walk& w);

// Cohomology of the string complex (band = false) or band complex with parameters
// (lambda, d), built node by node from the walk with its own path multiplication.
// For bands the walk is used in the rotation given.
std::map<int, std::size_t> oracle_cohomology(const gentle::Presentation& p, const OracleWalk& w, bool band = false,
                                             const gentle::Rational& lambda = gentle::Rational(1), std::size_t d = 1);

// Generalized-string and band conditions re-implemented on arrow names.
bool oracle_is_gst(const gentle::Presentation& p, const OracleWalk& w);
bool oracle_is_band(const gentle::Presentation& p, const OracleWalk& w);

// All generalized strings with total arrow count <= bound, both orientations.
std::vector<OracleWalk> oracle_enumerate_gst(const gentle::Presentation& p, std::size_t bound);

// Walk literal in the CLI syntax, e.g. "a1, ~a2.a3".
std::string format_oracle(const OracleWalk& w);

// Every closed zero-degree walk with total arrow count <= bound (not canonicalized).
// Stops as soon as `limit` bands were found.
std::size_t oracle_count_bands(const gentle::Presentation& p, std::size_t bound, std::size_t limit = 1);

}  // namespace testkit
