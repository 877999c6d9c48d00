#pragma once

#include "gentle/presentation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace testkit {

struct NamedAlgebra {
    std::string name;
    gentle::Presentation presentation;
};

// Hand-written algebras covering the interesting shapes: the counterexample, the
// Kronecker quiver, a periodic relation chain, a vertex with two maximal paths, etc.
std::vector<NamedAlgebra> fixed_algebras();

// Random gentle presentation on at most max_vertices vertices. Bases are capped so
// that exact-rank checks stay fast.
gentle::Presentation random_gentle(std::uint64_t seed, std::size_t max_vertices, std::size_t max_projective = 40);

// fixed_algebras() followed by `random_count` random ones (seeds 1, 2, ...).
std::vector<NamedAlgebra> corpus(std::size_t random_count, std::size_t max_vertices = 8);

}  // namespace testkit
