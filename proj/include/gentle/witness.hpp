#pragma once

#include "gentle/cohomology.hpp"

#include <string>

namespace gentle {

enum class WitnessKind : std::uint8_t { stalk, string, beta, band };
std::string to_string(WitnessKind k);

// A named indecomposable object, up to the shift X[shift].
struct Witness {
    WitnessKind kind = WitnessKind::string;
    VertexId vertex{};    // stalk only
    Walk walk;            // string, beta, band
    Rational lambda{1};   // band only
    std::size_t d = 1;    // band only
    int shift = 0;

    static Witness stalk(VertexId v, int shift = 0);
    static Witness string(Walk w, int shift = 0);
    static Witness beta(Walk w, int shift = 0);
    static Witness band(Walk w, Rational lambda, std::size_t d, int shift = 0);
};

std::string describe(const GentleAlgebra& alg, const Witness& w);

// Fast path: closed-form node formula for strings and beta objects, exact ranks for
// bands (which have no closed form here).
CohVector cohomology_fast(const GentleAlgebra& alg, const Witness& w);
// Rank oracle: exact ranks on the complex itself, or on a two-step resolution window
// for beta objects (degrees above the window cut are compared).
CohVector cohomology_rank(const GentleAlgebra& alg, const Witness& w);

}  // namespace gentle
