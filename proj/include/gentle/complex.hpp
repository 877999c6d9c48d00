#pragma once

#include "gentle/linalg.hpp"
#include "gentle/rational.hpp"
#include "gentle/walk.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gentle {

// One indecomposable projective P_v; copy is 1-based and distinguishes the d copies
// of a band node.
struct Summand {
    VertexId vertex;
    std::uint32_t copy = 1;
    friend bool operator==(const Summand&, const Summand&) = default;
};

// The map P(path): P_{t(path)} -> P_{s(path)}, u -> path * u, scaled.
struct Term {
    Path path;
    Rational scalar{1};
};

// Differential block from column summand `col` (degree i) to row summand `row`
// (degree i + 1).
struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::vector<Term> terms;
};

struct NodePosition {
    int degree = 0;
    std::size_t position = 0;
};

struct ProjComplex {
    std::map<int, std::vector<Summand>> summands;
    std::map<int, std::vector<Entry>> diffs;  // diffs[i] : degree i -> degree i + 1
    std::vector<NodePosition> node_index;     // walk node -> first summand of that node
    std::string origin;                       // human-readable description of the source witness

    bool empty() const noexcept { return summands.empty(); }
    std::size_t summand_count() const;
    int min_degree() const { return summands.begin()->first; }
    int max_degree() const { return summands.rbegin()->first; }
};

ProjComplex stalk_complex(const GentleAlgebra& alg, VertexId v);
ProjComplex string_complex(const GentleAlgebra& alg, const GenWalk& w);
// Accepts any rotation of a band and rotates it internally so that the minimum of the
// degree profile sits at node 0. The closing map through the last letter carries the
// upper-triangular Jordan block with eigenvalue lambda.
ProjComplex band_complex(const GentleAlgebra& alg, const GenWalk& w, const Rational& lambda, std::size_t d);
// Rotation of a band with the minimal degree at node 0 (first such rotation).
Walk mu_minimal_rotation(const Walk& band);

ProjComplex shift(const ProjComplex& c, int k);
ProjComplex brutal_truncate(const ProjComplex& c, int j);
bool check_minimal(const ProjComplex& c);
bool check_d_squared_zero(const GentleAlgebra& alg, const ProjComplex& c);

std::size_t degree_dimension(const GentleAlgebra& alg, const ProjComplex& c, int degree);
Matrix differential_matrix(const GentleAlgebra& alg, const ProjComplex& c, int degree);

}  // namespace gentle
