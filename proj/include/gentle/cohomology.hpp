#pragma once

#include "gentle/complex.hpp"

#include <map>
#include <vector>

namespace gentle {

struct CohVector {
    std::map<int, std::size_t> dims;  // only nonzero entries are stored

    static CohVector from(std::map<int, std::size_t> raw);
    std::size_t hl() const;
    std::size_t hw() const;
    std::size_t hr() const { return hl() * hw(); }
    std::size_t at(int degree) const;
    // Cohomology of X[k]: H^i(X[k]) = H^{i+k}(X).
    CohVector shifted(int k) const;
    CohVector erased(int degree) const;

    friend bool operator==(const CohVector&, const CohVector&) = default;
};

std::string to_string(const CohVector& h);

// dim H^i = dim X^i - rank d^i - rank d^{i-1}, with ranks computed exactly.
CohVector cohomology_dims(const GentleAlgebra& alg, const ProjComplex& c);

struct NodeContribution {
    int degree = 0;
    std::size_t dim = 0;
};

// Closed-form local cohomology per walk node. A forward turning point (both incident
// letters map out of the node) carries nothing in its own degree, but the diagonal
// image of its generator adds one dimension one degree higher; that extra dimension
// is credited to the walk-earlier neighbour, which sits in exactly that degree.
std::vector<NodeContribution> node_contributions(const GentleAlgebra& alg, const GenWalk& w);
CohVector formula_dims(const GentleAlgebra& alg, const Walk& w);
// Same as formula_dims but raw per-node values before the forward-turning-point credit.
enum class NodeType : std::uint8_t { endpoint_in, endpoint_out, backward_turn, direct_run, inverse_run, forward_turn };
NodeType node_type(const Walk& w, std::size_t j);
std::string to_string(NodeType t);

// The minimal degree carrying a projective summand of P_w.
int min_component_degree(const Walk& w);

// Cohomology of beta(P_w): the entry in the minimal component degree is removed (the
// glued resolution kills exactly the kernel there) and every other degree is kept.
CohVector beta_cohomology(const GentleAlgebra& alg, const GenWalk& w);
CohVector beta_of(const CohVector& string_coh, const Walk& w);

struct BetaWindow {
    ProjComplex complex;
    Walk walk;              // w with the resolution letters attached
    int shift = 0;          // window walk node 0 sits at this degree of the original frame
    int cut_degree = 0;     // lowest degree of the window
    bool open = false;      // the resolution continues past the cut
};

BetaWindow beta_window(const GentleAlgebra& alg, const GenWalk& w, std::size_t steps);

}  // namespace gentle
