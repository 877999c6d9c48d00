#pragma once

#include "gentle/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gentle {

enum class Direction : std::uint8_t { direct, inverse };

struct Letter {
    Path path;
    Direction dir = Direction::direct;

    bool is_direct() const noexcept { return dir == Direction::direct; }
    VertexId source() const noexcept { return is_direct() ? path.source : path.target; }
    VertexId target() const noexcept { return is_direct() ? path.target : path.source; }
    // Each direct letter lowers the degree by one, each inverse letter raises it by one.
    int mu_step() const noexcept { return is_direct() ? -1 : 1; }

    friend bool operator==(const Letter&, const Letter&) = default;
};

// Total order used for canonical forms: direct before inverse, then path length,
// then the arrow id sequence.
bool letter_less(const Letter& x, const Letter& y);
bool walk_less(const std::vector<Letter>& x, const std::vector<Letter>& y);

using Walk = std::vector<Letter>;

struct WalkLess {
    bool operator()(const Walk& x, const Walk& y) const { return walk_less(x, y); }
};

Letter inverse(const Letter& l);
Walk inverse(const Walk& w);
std::vector<int> mu_profile(const Walk& w);
std::vector<VertexId> node_vertices(const Walk& w);
std::size_t arrow_total(const Walk& w);

// Whether w_i w_{i+1} is an admissible junction inside a generalized string:
// direct/direct must compose into I, inverse/inverse likewise after inverting, and
// mixed junctions must neither backtrack nor hit a relation.
bool legal_junction(const GentleAlgebra& alg, const Letter& left, const Letter& right);

enum class WalkKind : std::uint8_t { gst, gba, invalid };
std::string to_string(WalkKind k);

struct GenWalk {
    Walk letters;
    WalkKind kind = WalkKind::invalid;
    std::vector<int> mu;
    std::string reason;   // first failed condition when invalid
    bool in_st = false;   // arrow letters only, no backtrack, no relation subword

    std::size_t width() const noexcept { return letters.size(); }
};

GenWalk classify_walk(const GentleAlgebra& alg, const Walk& letters);

// Both accept GST or GBA walks (a band is in particular a generalized string).
GenWalk canonical_string(const GentleAlgebra& alg, const GenWalk& w);
GenWalk canonical_band(const GentleAlgebra& alg, const GenWalk& w);
Walk canonical_string_form(const Walk& w);
Walk canonical_band_form(const Walk& w);
// Shortest u with w = u^k.
Walk primitive_root(const Walk& w);
Walk rotate(const Walk& w, std::size_t k);

struct Enumeration {
    std::vector<Walk> walks;  // canonical forms, sorted
    bool complete = true;     // no extension was cut off by the bound
};

Enumeration enumerate_gst(const GentleAlgebra& alg, std::size_t max_arrows);
Enumeration enumerate_gba(const GentleAlgebra& alg, std::size_t max_arrows);

struct DiscretenessReport {
    bool discrete = true;
    std::optional<Walk> band;
    std::size_t letters = 0;
    std::size_t components = 0;
    std::size_t cyclic_components = 0;
    std::string certificate;
};

DiscretenessReport is_derived_discrete(const GentleAlgebra& alg);

// Remove j arrows from the start (resp. end) of the walk; acts inside the first (last)
// letter and drops it when j equals its length.
GenWalk truncate_first(const GentleAlgebra& alg, const Walk& w, std::size_t j);
GenWalk truncate_last(const GentleAlgebra& alg, const Walk& w, std::size_t j);

// The relation chain alpha, a1, a2, ... with each consecutive pair in I.
struct BarDescriptor {
    Path alpha;
    std::vector<ArrowId> preperiod;
    std::vector<ArrowId> period;  // empty when the chain terminates
    bool periodic() const noexcept { return !period.empty(); }
    std::size_t finite_length() const noexcept { return preperiod.size(); }
    // First k chain arrows after alpha (cycling through the period if needed).
    std::vector<ArrowId> chain(std::size_t k) const;
};

BarDescriptor glue_bar(const GentleAlgebra& alg, const Path& alpha);

Walk parse_walk(const GentleAlgebra& alg, const std::string& literal);
std::string format_walk(const GentleAlgebra& alg, const Walk& w);
std::string format_letter(const GentleAlgebra& alg, const Letter& l);

}  // namespace gentle
