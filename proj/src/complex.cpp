#include "gentle/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gentle {

std::size_t ProjComplex::summand_count() const {
    std::size_t n = 0;
    for (const auto& [deg, list] : summands) n += list.size();
    return n;
}

ProjComplex stalk_complex(const GentleAlgebra& alg, VertexId v) {
    if (idx(v) >= alg.vertex_count()) throw InputError("unknown vertex");
    ProjComplex c;
    c.summands[0].push_back(Summand{v, 1});
    c.node_index.push_back(NodePosition{0, 0});
    c.origin = "stalk P_" + alg.presentation().vertex_name(v);
    return c;
}

namespace {

void add_term(ProjComplex& c, int degree, std::size_t row, std::size_t col, Term t) {
    auto& entries = c.diffs[degree];
    for (Entry& e : entries)
        if (e.row == row && e.col == col) {
            e.terms.push_back(std::move(t));
            return;
        }
    entries.push_back(Entry{row, col, {std::move(t)}});
}

// Places letter j of the walk between the summands of nodes j-1 and j (with the node
// after the last identified with node 0 for bands). A direct letter maps its right
// node into its left node, an inverse letter the other way round.
struct Placement {
    std::size_t from_node;
    std::size_t to_node;
};

Placement place(const Walk& w, std::size_t j, std::size_t node_count) {
    std::size_t left = j;
    std::size_t right = (j + 1) % node_count;
    return w[j].is_direct() ? Placement{right, left} : Placement{left, right};
}

}  // namespace

ProjComplex string_complex(const GentleAlgebra& alg, const GenWalk& w) {
    if (w.kind == WalkKind::invalid) throw InputError("string_complex needs a generalized string: " + w.reason);
    ProjComplex c;
    const auto nodes = node_vertices(w.letters);
    const auto mu = mu_profile(w.letters);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        auto& list = c.summands[mu[j]];
        c.node_index.push_back(NodePosition{mu[j], list.size()});
        list.push_back(Summand{nodes[j], 1});
    }
    for (std::size_t j = 0; j < w.letters.size(); ++j) {
        Placement pl = place(w.letters, j, nodes.size());
        const NodePosition& from = c.node_index[pl.from_node];
        const NodePosition& to = c.node_index[pl.to_node];
        add_term(c, from.degree, to.position, from.position, Term{w.letters[j].path, Rational(1)});
    }
    c.origin = "string " + format_walk(alg, w.letters);
    return c;
}

Walk mu_minimal_rotation(const Walk& band) {
    auto mu = mu_profile(band);
    auto it = std::min_element(mu.begin(), mu.end() - 1);
    return rotate(band, static_cast<std::size_t>(it - mu.begin()));
}

ProjComplex band_complex(const GentleAlgebra& alg, const GenWalk& w, const Rational& lambda, std::size_t d) {
    if (w.kind != WalkKind::gba) throw InputError("band_complex needs a generalized band");
    if (lambda == 0) throw InputError("band parameter lambda must be nonzero");
    if (d == 0) throw InputError("band multiplicity must be at least 1");
    const Walk letters = mu_minimal_rotation(w.letters);
    const auto nodes = node_vertices(letters);
    const auto mu = mu_profile(letters);
    const std::size_t n = letters.size();
    ProjComplex c;
    for (std::size_t j = 0; j < n; ++j) {
        auto& list = c.summands[mu[j]];
        c.node_index.push_back(NodePosition{mu[j], list.size()});
        for (std::size_t k = 1; k <= d; ++k) list.push_back(Summand{nodes[j], static_cast<std::uint32_t>(k)});
    }
    for (std::size_t j = 0; j < n; ++j) {
        Placement pl = place(letters, j, n);
        const NodePosition& from = c.node_index[pl.from_node];
        const NodePosition& to = c.node_index[pl.to_node];
        const Path& p = letters[j].path;
        const bool closing = j + 1 == n;
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t s = 0; s < d; ++s) {
                // Identity on interior letters; J_{lambda,d} with (J x)_r = lambda x_r + x_{r+1}
                // on the closing letter.
                Rational v = 0;
                if (r == s) v = closing ? lambda : Rational(1);
                else if (closing && s == r + 1) v = 1;
                if (v != 0) add_term(c, from.degree, to.position + r, from.position + s, Term{p, v});
            }
        }
    }
    c.origin = "band " + format_walk(alg, letters) + " lambda=" + to_string(lambda) + " d=" + std::to_string(d);
    return c;
}

ProjComplex shift(const ProjComplex& c, int k) {
    // (X[k])^i = X^{i+k}, differentials negated once per unit shift.
    ProjComplex out;
    out.origin = c.origin + (k ? " [" + std::to_string(k) + "]" : "");
    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    for (const auto& [deg, list] : c.summands) out.summands[deg - k] = list;
    for (const auto& [deg, entries] : c.diffs) {
        auto& dst = out.diffs[deg - k];
        for (Entry e : entries) {
            for (Term& t : e.terms) t.scalar *= sign;
            dst.push_back(std::move(e));
        }
    }
    for (NodePosition np : c.node_index) out.node_index.push_back(NodePosition{np.degree - k, np.position});
    return out;
}

ProjComplex brutal_truncate(const ProjComplex& c, int j) {
    ProjComplex out;
    out.origin = c.origin + " truncated at " + std::to_string(j);
    for (const auto& [deg, list] : c.summands)
        if (deg >= j) out.summands[deg] = list;
    for (const auto& [deg, entries] : c.diffs)
        if (deg >= j) out.diffs[deg] = entries;
    return out;
}

bool check_minimal(const ProjComplex& c) {
    for (const auto& [deg, entries] : c.diffs)
        for (const Entry& e : entries)
            for (const Term& t : e.terms)
                if (t.scalar != 0 && t.path.trivial()) return false;
    return true;
}

bool check_d_squared_zero(const GentleAlgebra& alg, const ProjComplex& c) {
    for (const auto& [deg, first] : c.diffs) {
        auto second = c.diffs.find(deg + 1);
        if (second == c.diffs.end()) continue;
        // (d^{i+1} d^i)(row, col) = sum over middle summands of P(q) P(p) = P(q p).
        std::map<std::pair<std::size_t, std::size_t>, std::map<std::vector<ArrowId>, Rational>> acc;
        for (const Entry& e1 : first)
            for (const Entry& e2 : second->second) {
                if (e2.col != e1.row) continue;
                for (const Term& p : e1.terms)
                    for (const Term& q : e2.terms)
                        if (auto qp = alg.compose(q.path, p.path))
                            acc[{e2.row, e1.col}][qp->arrows] += q.scalar * p.scalar;
            }
        for (const auto& [pos, sums] : acc)
            for (const auto& [path, value] : sums)
                if (value != 0) return false;
    }
    return true;
}

std::size_t degree_dimension(const GentleAlgebra& alg, const ProjComplex& c, int degree) {
    auto it = c.summands.find(degree);
    if (it == c.summands.end()) return 0;
    std::size_t n = 0;
    for (const Summand& s : it->second) n += alg.dim_projective(s.vertex);
    return n;
}

Matrix differential_matrix(const GentleAlgebra& alg, const ProjComplex& c, int degree) {
    const std::size_t rows = degree_dimension(alg, c, degree + 1);
    const std::size_t cols = degree_dimension(alg, c, degree);
    Matrix m(rows, cols);
    auto dit = c.diffs.find(degree);
    if (dit == c.diffs.end()) return m;
    auto offsets = [&](int deg) {
        std::vector<std::size_t> off;
        std::size_t acc = 0;
        if (auto it = c.summands.find(deg); it != c.summands.end())
            for (const Summand& s : it->second) {
                off.push_back(acc);
                acc += alg.dim_projective(s.vertex);
            }
        return off;
    };
    const auto row_off = offsets(degree + 1);
    const auto col_off = offsets(degree);
    const auto& col_summands = c.summands.at(degree);
    for (const Entry& e : dit->second) {
        const VertexId v = col_summands.at(e.col).vertex;
        const auto& basis = alg.paths_from(v);
        for (const Term& t : e.terms) {
            if (t.path.target != v) throw std::logic_error("differential term does not match its summand");
            for (std::size_t u = 0; u < basis.size(); ++u) {
                auto pu = alg.compose(t.path, basis[u]);
                if (!pu) continue;
                m.at(row_off.at(e.row) + alg.basis_index(*pu), col_off.at(e.col) + u) += t.scalar;
            }
        }
    }
    return m;
}

}  // namespace gentle
