#include "gentle/witness.hpp"

namespace gentle {

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::stalk: return "stalk";
        case WitnessKind::string: return "string";
        case WitnessKind::beta: return "beta";
        case WitnessKind::band: return "band";
    }
    return "?";
}

Witness Witness::stalk(VertexId v, int shift) {
    Witness w;
    w.kind = WitnessKind::stalk;
    w.vertex = v;
    w.shift = shift;
    return w;
}

Witness Witness::string(Walk walk, int shift) {
    Witness w;
    w.kind = WitnessKind::string;
    w.walk = std::move(walk);
    w.shift = shift;
    return w;
}

Witness Witness::beta(Walk walk, int shift) {
    Witness w = string(std::move(walk), shift);
    w.kind = WitnessKind::beta;
    return w;
}

Witness Witness::band(Walk walk, Rational lambda, std::size_t d, int shift) {
    Witness w = string(std::move(walk), shift);
    w.kind = WitnessKind::band;
    w.lambda = std::move(lambda);
    w.d = d;
    return w;
}

std::string describe(const GentleAlgebra& alg, const Witness& w) {
    std::string s;
    switch (w.kind) {
        case WitnessKind::stalk: s = "P_" + alg.presentation().vertex_name(w.vertex); break;
        case WitnessKind::string: s = "P(" + format_walk(alg, w.walk) + ")"; break;
        case WitnessKind::beta: s = "beta(P(" + format_walk(alg, w.walk) + "))"; break;
        case WitnessKind::band:
            s = "P(" + format_walk(alg, w.walk) + "; lambda=" + to_string(w.lambda) + ", d=" + std::to_string(w.d) + ")";
            break;
    }
    if (w.shift) s += "[" + std::to_string(w.shift) + "]";
    return s;
}

namespace {

GenWalk checked(const GentleAlgebra& alg, const Walk& w) {
    GenWalk g = classify_walk(alg, w);
    if (g.kind == WalkKind::invalid) throw InputError("witness walk is not a generalized string: " + g.reason);
    return g;
}

}  // namespace

CohVector cohomology_fast(const GentleAlgebra& alg, const Witness& w) {
    switch (w.kind) {
        case WitnessKind::stalk:
            return CohVector::from({{-w.shift, alg.dim_projective(w.vertex)}});
        case WitnessKind::string:
            checked(alg, w.walk);
            return formula_dims(alg, w.walk).shifted(w.shift);
        case WitnessKind::beta:
            checked(alg, w.walk);
            return beta_of(formula_dims(alg, w.walk), w.walk).shifted(w.shift);
        case WitnessKind::band:
            return cohomology_rank(alg, w);
    }
    return {};
}

CohVector cohomology_rank(const GentleAlgebra& alg, const Witness& w) {
    switch (w.kind) {
        case WitnessKind::stalk:
            return cohomology_dims(alg, stalk_complex(alg, w.vertex)).shifted(w.shift);
        case WitnessKind::string:
            return cohomology_dims(alg, string_complex(alg, checked(alg, w.walk))).shifted(w.shift);
        case WitnessKind::beta: {
            BetaWindow win = beta_window(alg, checked(alg, w.walk), 2);
            CohVector h = cohomology_dims(alg, win.complex);
            if (win.open) {
                // The cut degree of an open window still carries the next kernel.
                h.dims.erase(win.cut_degree);
            }
            return h.shifted(w.shift);
        }
        case WitnessKind::band: {
            GenWalk g = checked(alg, w.walk);
            return cohomology_dims(alg, band_complex(alg, g, w.lambda, w.d)).shifted(w.shift);
        }
    }
    return {};
}

}  // namespace gentle
