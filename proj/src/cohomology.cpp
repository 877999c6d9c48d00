#include "gentle/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace gentle {

CohVector CohVector::from(std::map<int, std::size_t> raw) {
    CohVector h;
    for (auto [deg, d] : raw)
        if (d) h.dims[deg] = d;
    return h;
}

std::size_t CohVector::hl() const {
    std::size_t m = 0;
    for (auto [deg, d] : dims) m = std::max(m, d);
    return m;
}

std::size_t CohVector::hw() const {
    if (dims.empty()) return 0;
    return static_cast<std::size_t>(dims.rbegin()->first - dims.begin()->first + 1);
}

std::size_t CohVector::at(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
}

CohVector CohVector::shifted(int k) const {
    CohVector h;
    for (auto [deg, d] : dims) h.dims[deg - k] = d;
    return h;
}

CohVector CohVector::erased(int degree) const {
    CohVector h = *this;
    h.dims.erase(degree);
    return h;
}

std::string to_string(const CohVector& h) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto [deg, d] : h.dims) {
        if (!first) out << ", ";
        first = false;
        out << deg << ':' << d;
    }
    out << '}';
    return out.str();
}

CohVector cohomology_dims(const GentleAlgebra& alg, const ProjComplex& c) {
    if (c.empty()) return {};
    std::map<int, std::size_t> rank;
    for (const auto& [deg, entries] : c.diffs)
        if (!entries.empty()) rank[deg] = exact_rank(differential_matrix(alg, c, deg));
    std::map<int, std::size_t> raw;
    for (const auto& [deg, list] : c.summands) {
        std::size_t dim = degree_dimension(alg, c, deg);
        std::size_t r_out = rank.contains(deg) ? rank[deg] : 0;
        std::size_t r_in = rank.contains(deg - 1) ? rank[deg - 1] : 0;
        raw[deg] = dim - r_out - r_in;
    }
    return CohVector::from(std::move(raw));
}

namespace {

enum class Side : std::uint8_t { none, in, out };

// "in": the letter's map lands in this node; "out": the letter's map leaves it.
Side left_side(const Walk& w, std::size_t j) {
    if (j == 0) return Side::none;
    return w[j - 1].is_direct() ? Side::out : Side::in;
}

Side right_side(const Walk& w, std::size_t j) {
    if (j == w.size()) return Side::none;
    return w[j].is_direct() ? Side::in : Side::out;
}

std::size_t check_length(const GentleAlgebra& alg, const Path& p) {
    auto other = alg.other_outgoing(p.first());
    return other ? alg.maximal_path_from(*other).length() : 0;
}

std::size_t kernel_length(const GentleAlgebra& alg, const Path& q) {
    auto a = alg.relation_continuation(q.last());
    return a ? alg.maximal_path_from(*a).length() : 0;
}

}  // namespace

NodeType node_type(const Walk& w, std::size_t j) {
    Side l = left_side(w, j), r = right_side(w, j);
    if (l == Side::none) return r == Side::in ? NodeType::endpoint_in : NodeType::endpoint_out;
    if (r == Side::none) return l == Side::in ? NodeType::endpoint_in : NodeType::endpoint_out;
    if (l == Side::in && r == Side::in) return NodeType::backward_turn;
    if (l == Side::out && r == Side::in) return NodeType::direct_run;
    if (l == Side::in && r == Side::out) return NodeType::inverse_run;
    return NodeType::forward_turn;
}

std::string to_string(NodeType t) {
    switch (t) {
        case NodeType::endpoint_in: return "endpoint-in";
        case NodeType::endpoint_out: return "endpoint-out";
        case NodeType::backward_turn: return "backward-turn";
        case NodeType::direct_run: return "direct-run";
        case NodeType::inverse_run: return "inverse-run";
        case NodeType::forward_turn: return "forward-turn";
    }
    return "?";
}

std::vector<NodeContribution> node_contributions(const GentleAlgebra& alg, const GenWalk& w) {
    if (w.kind == WalkKind::invalid) throw InputError("node_contributions needs a generalized string");
    const Walk& L = w.letters;
    const auto mu = mu_profile(L);
    const std::size_t n = L.size();
    std::vector<NodeContribution> out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        out[j].degree = mu[j];
        const Path* left = j > 0 ? &L[j - 1].path : nullptr;
        const Path* right = j < n ? &L[j].path : nullptr;
        switch (node_type(L, j)) {
            case NodeType::endpoint_in: {
                const Path& p = left ? *left : *right;
                out[j].dim += p.length() + check_length(alg, p);
                break;
            }
            case NodeType::endpoint_out:
                out[j].dim += kernel_length(alg, left ? *left : *right);
                break;
            case NodeType::backward_turn:
                out[j].dim += left->length() + right->length() - 1;
                break;
            case NodeType::direct_run:
                out[j].dim += right->length() - 1;
                break;
            case NodeType::inverse_run:
                out[j].dim += left->length() - 1;
                break;
            case NodeType::forward_turn:
                out[j - 1].dim += 1;
                break;
        }
    }
    return out;
}

CohVector formula_dims(const GentleAlgebra& alg, const Walk& w) {
    GenWalk g{w, WalkKind::gst, mu_profile(w), {}, false};
    std::map<int, std::size_t> raw;
    for (const NodeContribution& c : node_contributions(alg, g)) raw[c.degree] += c.dim;
    return CohVector::from(std::move(raw));
}

int min_component_degree(const Walk& w) {
    auto mu = mu_profile(w);
    return *std::min_element(mu.begin(), mu.end());
}

CohVector beta_of(const CohVector& string_coh, const Walk& w) { return string_coh.erased(min_component_degree(w)); }

CohVector beta_cohomology(const GentleAlgebra& alg, const GenWalk& w) {
    if (w.kind == WalkKind::invalid) throw InputError("beta_cohomology needs a generalized string");
    return beta_of(cohomology_dims(alg, string_complex(alg, w)), w.letters);
}

BetaWindow beta_window(const GentleAlgebra& alg, const GenWalk& w, std::size_t steps) {
    if (w.kind == WalkKind::invalid) throw InputError("beta_window needs a generalized string");
    const Walk& L = w.letters;
    const auto mu = mu_profile(L);
    const int m0 = *std::min_element(mu.begin(), mu.end());
    BetaWindow win;
    win.walk = L;
    win.cut_degree = m0;

    // The kernel of the lowest differential lives at the walk ends sitting in the
    // minimal degree; a forward turning point there is injective on its own.
    std::vector<Letter> front, back;
    bool open = false;
    auto resolve = [&](const Path& last_path, std::vector<Letter>& out) {
        auto alpha = alg.relation_continuation(last_path.last());
        if (!alpha) return;
        BarDescriptor bar = glue_bar(alg, alg.arrow_path(*alpha));
        std::vector<ArrowId> arrows{*alpha};
        for (ArrowId a : bar.chain(steps)) arrows.push_back(a);
        if (arrows.size() > steps) {
            open = true;
            arrows.resize(steps);
        }
        for (ArrowId a : arrows) out.push_back(Letter{alg.arrow_path(a), Direction::direct});
    };
    if (mu.front() == m0 && !L.front().is_direct()) resolve(L.front().path, front);
    if (mu.back() == m0 && L.back().is_direct()) resolve(L.back().path, back);

    Walk ext;
    for (auto it = front.rbegin(); it != front.rend(); ++it) ext.push_back(inverse(*it));
    ext.insert(ext.end(), L.begin(), L.end());
    ext.insert(ext.end(), back.begin(), back.end());
    win.walk = ext;
    win.shift = static_cast<int>(front.size());  // each prepended inverse letter lowers node 0 by one
    GenWalk g = classify_walk(alg, ext);
    if (g.kind == WalkKind::invalid) throw std::logic_error("beta window is not a generalized string: " + g.reason);
    win.complex = shift(string_complex(alg, g), win.shift);
    win.cut_degree = win.complex.min_degree();
    win.open = open && (!front.empty() || !back.empty());
    return win;
}

}  // namespace gentle
