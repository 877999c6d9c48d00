#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gentle {

enum class VertexId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};

constexpr std::size_t idx(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t idx(ArrowId a) noexcept { return static_cast<std::size_t>(a); }

// Malformed user input: DSL syntax, unknown identifiers, bad walk literals.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Raised when an operation needs a validated gentle algebra but got something else.
class NotGentleError : public InputError {
public:
    using InputError::InputError;
};

struct Arrow {
    std::string name;
    VertexId source;
    VertexId target;
};

// Quiver plus length-two monomial relations. Structural checks only; gentleness is
// checked separately by validate_gentle so that violations can be reported as data.
class Presentation {
public:
    std::string name = "unnamed";

    VertexId add_vertex(const std::string& id);
    ArrowId add_arrow(const std::string& id, VertexId source, VertexId target);
    void add_relation(ArrowId first, ArrowId second);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::string& vertex_name(VertexId v) const { return vertices_.at(idx(v)); }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(idx(a)); }
    const std::vector<std::pair<ArrowId, ArrowId>>& relations() const noexcept { return relations_; }

    std::optional<VertexId> find_vertex(std::string_view id) const;
    std::optional<ArrowId> find_arrow(std::string_view id) const;
    bool is_relation(ArrowId first, ArrowId second) const;

    std::vector<ArrowId> outgoing(VertexId v) const;
    std::vector<ArrowId> incoming(VertexId v) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::pair<ArrowId, ArrowId>> relations_;
    std::set<std::pair<ArrowId, ArrowId>> relation_set_;
};

// Parses the line-oriented DSL:
//   algebra <name> / vertices <id>... / arrow <id> : <v> -> <w> / rel <a> <b>
// with '#' comments. Throws ParseError carrying the offending line.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& file);
std::string format_presentation(const Presentation& p);

struct Violation {
    std::string axiom;  // "1", "2", "3", "4" or "finite-dimension"
    std::string message;
    std::vector<std::string> vertices;
    std::vector<std::string> arrows;
};

struct GentleReport {
    bool pass = true;
    std::vector<Violation> violations;
};

GentleReport validate_gentle(const Presentation& p);

// A nonzero path of kQ/I. Trivial paths have no arrows and source == target.
struct Path {
    VertexId source{};
    VertexId target{};
    std::vector<ArrowId> arrows;

    std::size_t length() const noexcept { return arrows.size(); }
    bool trivial() const noexcept { return arrows.empty(); }
    ArrowId first() const { return arrows.front(); }
    ArrowId last() const { return arrows.back(); }

    friend bool operator==(const Path&, const Path&) = default;
};

struct MaximalExtension {
    Path tilde;
    Path hat;
    std::optional<Path> check;
    std::size_t check_length() const noexcept { return check ? check->length() : 0; }
};

// A presentation that passed validate_gentle. Path bases are precomputed, which is
// what every downstream computation needs; the object is immutable afterwards and
// may be shared freely between threads.
class GentleAlgebra {
public:
    explicit GentleAlgebra(Presentation p);

    const Presentation& presentation() const noexcept { return pres_; }
    std::size_t vertex_count() const noexcept { return pres_.vertex_count(); }
    std::size_t arrow_count() const noexcept { return pres_.arrow_count(); }
    const Arrow& arrow(ArrowId a) const { return pres_.arrow(a); }
    std::string arrow_name(ArrowId a) const { return pres_.arrow(a).name; }
    bool is_relation(ArrowId a, ArrowId b) const { return pres_.is_relation(a, b); }

    // Basis paths e_v A in deterministic order (length, then arrow ids).
    const std::vector<Path>& paths_from(VertexId v) const { return basis_.at(idx(v)); }
    // Position of a path inside paths_from(p.source).
    std::size_t basis_index(const Path& p) const;
    std::vector<Path> path_basis() const;
    std::size_t dim_projective(VertexId v) const;

    Path arrow_path(ArrowId a) const;
    Path trivial_path(VertexId v) const;
    Path make_path(const std::vector<ArrowId>& arrows) const;  // throws on zero or non-composable
    bool is_nonzero(const std::vector<ArrowId>& arrows) const;

    // nullopt means the product is zero in kQ/I. Throws InputError if t(p) != s(q).
    std::optional<Path> compose(const Path& p, const Path& q) const;

    MaximalExtension maximal_extension(const Path& p) const;
    // Maximal nonzero path starting with the arrow a.
    Path maximal_path_from(ArrowId a) const;
    // The arrow b with (a, b) in I, if any (unique by gentleness).
    std::optional<ArrowId> relation_continuation(ArrowId a) const;
    // The arrow b with (b, a) in I, if any.
    std::optional<ArrowId> relation_predecessor(ArrowId a) const;
    // The arrow leaving s(a) other than a, if any.
    std::optional<ArrowId> other_outgoing(ArrowId a) const;

private:
    Presentation pres_;
    std::vector<std::vector<Path>> basis_;
    std::vector<std::map<std::vector<ArrowId>, std::size_t>> index_;
};

std::string format_path(const GentleAlgebra& alg, const Path& p);

}  // namespace gentle
