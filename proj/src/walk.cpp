#include "gentle/walk.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace gentle {

bool letter_less(const Letter& x, const Letter& y) {
    if (x.dir != y.dir) return x.is_direct();
    if (x.path.length() != y.path.length()) return x.path.length() < y.path.length();
    return x.path.arrows < y.path.arrows;
}

bool walk_less(const Walk& x, const Walk& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), letter_less);
}

Letter inverse(const Letter& l) {
    return Letter{l.path, l.is_direct() ? Direction::inverse : Direction::direct};
}

Walk inverse(const Walk& w) {
    Walk out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

std::vector<int> mu_profile(const Walk& w) {
    std::vector<int> mu{0};
    for (const Letter& l : w) mu.push_back(mu.back() + l.mu_step());
    return mu;
}

std::vector<VertexId> node_vertices(const Walk& w) {
    std::vector<VertexId> c;
    if (w.empty()) return c;
    c.push_back(w.front().source());
    for (const Letter& l : w) c.push_back(l.target());
    return c;
}

std::size_t arrow_total(const Walk& w) {
    std::size_t n = 0;
    for (const Letter& l : w) n += l.path.length();
    return n;
}

bool legal_junction(const GentleAlgebra& alg, const Letter& left, const Letter& right) {
    if (left.target() != right.source()) return false;
    const Path& p = left.path;
    const Path& q = right.path;
    if (left.is_direct() && right.is_direct()) return alg.is_relation(p.last(), q.first());
    if (!left.is_direct() && !right.is_direct()) return alg.is_relation(q.last(), p.first());
    if (left.is_direct()) return p.last() != q.last();
    return p.first() != q.first();
}

std::string to_string(WalkKind k) {
    switch (k) {
        case WalkKind::gst: return "GST";
        case WalkKind::gba: return "GBA";
        case WalkKind::invalid: return "INVALID";
    }
    return "INVALID";
}

namespace {

void require_letter(const GentleAlgebra& alg, const Letter& l) {
    if (l.path.trivial()) throw InputError("letters must be paths of length at least one");
    Path checked = alg.make_path(l.path.arrows);
    if (checked.source != l.path.source || checked.target != l.path.target)
        throw InputError("letter endpoints do not match its arrows");
}

bool is_string_walk(const GentleAlgebra& alg, const Walk& w) {
    for (const Letter& l : w)
        if (l.path.length() != 1) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Letter& a = w[i];
        const Letter& b = w[i + 1];
        if (b == inverse(a)) return false;
        if (a.is_direct() && b.is_direct() && alg.is_relation(a.path.first(), b.path.first())) return false;
        if (!a.is_direct() && !b.is_direct() && alg.is_relation(b.path.first(), a.path.first())) return false;
    }
    return true;
}

std::string junction_reason(const GentleAlgebra& alg, const Walk& w, std::size_t i) {
    const Letter& a = w[i];
    const Letter& b = w[i + 1];
    std::string where = "junction " + std::to_string(i + 1) + " (" + format_letter(alg, a) + " | " + format_letter(alg, b) + "): ";
    if (a.is_direct() && b.is_direct()) return where + "consecutive direct letters must compose into I";
    if (!a.is_direct() && !b.is_direct()) return where + "consecutive inverse letters must compose into I";
    return where + "mixed junction is not a string";
}

}  // namespace

GenWalk classify_walk(const GentleAlgebra& alg, const Walk& letters) {
    GenWalk g;
    g.letters = letters;
    if (letters.empty()) {
        g.reason = "empty walk";
        return g;
    }
    for (const Letter& l : letters) require_letter(alg, l);
    g.mu = mu_profile(letters);
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i].target() != letters[i + 1].source()) {
            g.reason = "letters " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " are not composable";
            return g;
        }
    }
    g.in_st = is_string_walk(alg, letters);
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (!legal_junction(alg, letters[i], letters[i + 1])) {
            g.reason = junction_reason(alg, letters, i);
            return g;
        }
    }
    g.kind = WalkKind::gst;
    if (letters.front().source() == letters.back().target() && g.mu.back() == 0 &&
        legal_junction(alg, letters.back(), letters.front()))
        g.kind = WalkKind::gba;
    return g;
}

Walk canonical_string_form(const Walk& w) {
    Walk v = inverse(w);
    return walk_less(v, w) ? v : w;
}

Walk rotate(const Walk& w, std::size_t k) {
    Walk out(w.begin() + static_cast<std::ptrdiff_t>(k % w.size()), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k % w.size()));
    return out;
}

Walk canonical_band_form(const Walk& w) {
    Walk best = w;
    Walk v = inverse(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
        Walk a = rotate(w, k);
        Walk b = rotate(v, k);
        if (walk_less(a, best)) best = a;
        if (walk_less(b, best)) best = b;
    }
    return best;
}

Walk primitive_root(const Walk& w) {
    const std::size_t n = w.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len) continue;
        bool periodic = true;
        for (std::size_t i = len; i < n && periodic; ++i) periodic = w[i] == w[i - len];
        if (periodic) return Walk(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
    }
    return w;
}

GenWalk canonical_string(const GentleAlgebra& alg, const GenWalk& w) {
    if (w.kind == WalkKind::invalid) throw InputError("canonical_string needs a generalized string");
    return classify_walk(alg, canonical_string_form(w.letters));
}

GenWalk canonical_band(const GentleAlgebra& alg, const GenWalk& w) {
    if (w.kind != WalkKind::gba) throw InputError("canonical_band needs a generalized band");
    return classify_walk(alg, canonical_band_form(w.letters));
}

namespace {

// All letters of the algebra with their legal successors.
struct LetterGraph {
    std::vector<Letter> letters;
    std::vector<std::vector<std::size_t>> next;

    explicit LetterGraph(const GentleAlgebra& alg) {
        for (const Path& p : alg.path_basis()) {
            if (p.trivial()) continue;
            letters.push_back(Letter{p, Direction::direct});
            letters.push_back(Letter{p, Direction::inverse});
        }
        std::sort(letters.begin(), letters.end(), letter_less);
        next.resize(letters.size());
        for (std::size_t i = 0; i < letters.size(); ++i)
            for (std::size_t j = 0; j < letters.size(); ++j)
                if (legal_junction(alg, letters[i], letters[j])) next[i].push_back(j);
    }
};

}  // namespace

Enumeration enumerate_gst(const GentleAlgebra& alg, std::size_t max_arrows) {
    LetterGraph g(alg);
    Enumeration result;
    std::set<Walk, WalkLess> seen;
    Walk cur;
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t li, std::size_t total) {
        cur.push_back(g.letters[li]);
        seen.insert(canonical_string_form(cur));
        for (std::size_t nj : g.next[li]) {
            std::size_t t = total + g.letters[nj].path.length();
            if (t <= max_arrows)
                dfs(nj, t);
            else
                result.complete = false;
        }
        cur.pop_back();
    };
    for (std::size_t i = 0; i < g.letters.size(); ++i) {
        if (g.letters[i].path.length() <= max_arrows)
            dfs(i, g.letters[i].path.length());
        else
            result.complete = false;
    }
    result.walks.assign(seen.begin(), seen.end());
    return result;
}

Enumeration enumerate_gba(const GentleAlgebra& alg, std::size_t max_arrows) {
    LetterGraph g(alg);
    Enumeration result;
    std::set<Walk, WalkLess> seen;
    Walk cur;
    std::function<void(std::size_t, std::size_t, std::size_t, int)> dfs =
        [&](std::size_t start, std::size_t li, std::size_t total, int mu) {
            cur.push_back(g.letters[li]);
            mu += g.letters[li].mu_step();
            if (mu == 0 && legal_junction(alg, g.letters[li], g.letters[start]))
                seen.insert(canonical_band_form(primitive_root(cur)));
            for (std::size_t nj : g.next[li]) {
                std::size_t t = total + g.letters[nj].path.length();
                if (t <= max_arrows)
                    dfs(start, nj, t, mu);
                else
                    result.complete = false;
            }
            cur.pop_back();
        };
    for (std::size_t i = 0; i < g.letters.size(); ++i) {
        if (g.letters[i].path.length() <= max_arrows)
            dfs(i, i, g.letters[i].path.length(), 0);
        else
            result.complete = false;
    }
    result.walks.assign(seen.begin(), seen.end());
    return result;
}

namespace {

// Tarjan's algorithm; returns a component id per node.
std::vector<std::size_t> strongly_connected(const std::vector<std::vector<std::size_t>>& adj, std::size_t& count) {
    const std::size_t n = adj.size();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;
    count = 0;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : adj[v]) {
            if (index[w] == unvisited) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            for (;;) {
                std::size_t w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = count;
                if (w == v) break;
            }
            ++count;
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] == unvisited) visit(v);
    return comp;
}

// Bellman-Ford style longest-path potentials on one component. Returns nullopt if a
// cycle of positive weight (after multiplying weights by sign) exists.
std::optional<std::vector<long>> potentials(const std::vector<std::size_t>& nodes,
                                            const std::vector<std::vector<std::size_t>>& adj,
                                            const std::vector<std::size_t>& comp, std::size_t c,
                                            const std::vector<int>& weight, int sign) {
    std::map<std::size_t, long> phi;
    for (std::size_t v : nodes) phi[v] = 0;
    for (std::size_t round = 0; round <= nodes.size(); ++round) {
        bool changed = false;
        for (std::size_t u : nodes)
            for (std::size_t v : adj[u]) {
                if (comp[v] != c) continue;
                long cand = phi[u] + sign * weight[v];
                if (cand > phi[v]) {
                    phi[v] = cand;
                    changed = true;
                }
            }
        if (!changed) {
            std::vector<long> out;
            for (std::size_t v : nodes) out.push_back(phi[v]);
            return out;
        }
    }
    return std::nullopt;
}

// Shortest path (in letters) from a to b inside component c, as a node list a..b
// excluding a.
std::vector<std::size_t> path_within(const std::vector<std::vector<std::size_t>>& adj,
                                     const std::vector<std::size_t>& comp, std::size_t c,
                                     std::size_t a, std::size_t b,
                                     const std::function<bool(std::size_t, std::size_t)>& allowed) {
    std::map<std::size_t, std::size_t> parent;
    std::deque<std::size_t> q{a};
    std::set<std::size_t> seen{a};
    bool found = false;
    while (!q.empty() && !found) {
        std::size_t u = q.front();
        q.pop_front();
        for (std::size_t v : adj[u]) {
            if (comp[v] != c || !allowed(u, v)) continue;
            if (v == b) {
                parent[v] = u;
                found = true;
                break;
            }
            if (seen.insert(v).second) {
                parent[v] = u;
                q.push_back(v);
            }
        }
    }
    if (!found) return {};
    std::vector<std::size_t> rev{b};
    for (std::size_t x = parent[b]; x != a; x = parent[x]) rev.push_back(x);
    return {rev.rbegin(), rev.rend()};
}

// Breadth-first search over (letter, running weight) for a closed walk of weight zero
// starting and ending at `start`.
std::vector<std::size_t> zero_closed_walk(const std::vector<std::vector<std::size_t>>& adj,
                                          const std::vector<std::size_t>& comp, std::size_t c,
                                          std::size_t start, const std::vector<int>& weight) {
    for (long bound = 4;; bound *= 2) {
        using State = std::pair<std::size_t, long>;
        std::map<State, State> parent;
        std::deque<State> q;
        State s0{start, weight[start]};
        q.push_back(s0);
        parent[s0] = s0;
        std::optional<State> hit;
        bool clipped = false;
        while (!q.empty() && !hit) {
            State cur = q.front();
            q.pop_front();
            for (std::size_t v : adj[cur.first]) {
                if (comp[v] != c) continue;
                if (v == start && cur.second == 0) {
                    hit = cur;
                    break;
                }
                State nx{v, cur.second + weight[v]};
                if (std::labs(nx.second) > bound) {
                    clipped = true;
                    continue;
                }
                if (parent.emplace(nx, cur).second) q.push_back(nx);
            }
        }
        if (hit) {
            std::vector<std::size_t> rev;
            for (State x = *hit; x != s0; x = parent[x]) rev.push_back(x.first);
            rev.push_back(start);
            return {rev.rbegin(), rev.rend()};
        }
        if (!clipped) return {};
    }
}

}  // namespace

DiscretenessReport is_derived_discrete(const GentleAlgebra& alg) {
    LetterGraph g(alg);
    DiscretenessReport rep;
    rep.letters = g.letters.size();
    std::size_t ncomp = 0;
    auto comp = strongly_connected(g.next, ncomp);
    rep.components = ncomp;
    std::vector<int> weight;
    for (const Letter& l : g.letters) weight.push_back(l.mu_step());

    std::vector<std::vector<std::size_t>> members(ncomp);
    for (std::size_t v = 0; v < comp.size(); ++v) members[comp[v]].push_back(v);

    auto cycle_through = [&](std::size_t c, std::size_t v,
                             const std::function<bool(std::size_t, std::size_t)>& allowed) {
        std::vector<std::size_t> cyc = path_within(g.next, comp, c, v, v, allowed);
        return cyc;  // ends with v
    };
    auto walk_of = [&](const std::vector<std::size_t>& ids) {
        Walk w;
        for (std::size_t i : ids) w.push_back(g.letters[i]);
        return w;
    };
    std::ostringstream cert;
    for (std::size_t c = 0; c < ncomp && !rep.band; ++c) {
        const auto& nodes = members[c];
        bool cyclic = nodes.size() > 1;
        if (!cyclic)
            for (std::size_t v : g.next[nodes[0]]) cyclic |= v == nodes[0];
        if (!cyclic) continue;
        ++rep.cyclic_components;
        auto no_pos = potentials(nodes, g.next, comp, c, weight, +1);
        auto no_neg = potentials(nodes, g.next, comp, c, weight, -1);
        std::vector<std::size_t> closed;
        if (!no_pos && !no_neg) {
            // Cycles of both signs: a zero-weight closed walk passes through every
            // letter of the component. Search (letter, running weight) states with a
            // growing weight window until one returns to the start at weight zero.
            closed = zero_closed_walk(g.next, comp, c, nodes.front(), weight);
        } else {
            // Only one sign (or none): a zero-weight cycle must use tight edges only.
            const auto& phi = no_pos ? *no_pos : *no_neg;
            int sign = no_pos ? +1 : -1;
            std::map<std::size_t, long> pot;
            for (std::size_t i = 0; i < nodes.size(); ++i) pot[nodes[i]] = phi[i];
            auto tight = [&](std::size_t u, std::size_t v) { return pot[u] + sign * weight[v] == pot[v]; };
            for (std::size_t v : nodes) {
                closed = cycle_through(c, v, tight);
                if (!closed.empty()) break;
            }
        }
        if (!closed.empty()) {
            Walk w = walk_of(closed);
            if (classify_walk(alg, w).kind != WalkKind::gba)
                throw std::logic_error("band certificate failed classification");
            rep.band = canonical_band_form(primitive_root(w));
        }
    }
    rep.discrete = !rep.band;
    if (rep.discrete) {
        cert << "letter graph has " << rep.letters << " letters in " << rep.components << " strongly connected components; "
             << rep.cyclic_components << " are cyclic and none carries a zero-weight closed walk";
    } else {
        cert << "zero-weight closed walk in the letter graph yields the band " << format_walk(alg, *rep.band);
    }
    rep.certificate = cert.str();
    return rep;
}

GenWalk truncate_first(const GentleAlgebra& alg, const Walk& w, std::size_t j) {
    if (w.empty()) throw InputError("cannot truncate an empty walk");
    if (j == 0) return classify_walk(alg, w);
    const Letter& f = w.front();
    if (j > f.path.length()) throw InputError("truncation exceeds the first letter");
    Walk out(w.begin() + 1, w.end());
    if (j < f.path.length()) {
        std::vector<ArrowId> arrows = f.path.arrows;
        if (f.is_direct())
            arrows.erase(arrows.begin(), arrows.begin() + static_cast<std::ptrdiff_t>(j));
        else
            arrows.resize(arrows.size() - j);
        out.insert(out.begin(), Letter{alg.make_path(arrows), f.dir});
    }
    if (out.empty()) throw InputError("truncation leaves an empty walk");
    return classify_walk(alg, out);
}

GenWalk truncate_last(const GentleAlgebra& alg, const Walk& w, std::size_t j) {
    GenWalk r = truncate_first(alg, inverse(w), j);
    return classify_walk(alg, inverse(r.letters));
}

std::vector<ArrowId> BarDescriptor::chain(std::size_t k) const {
    std::vector<ArrowId> out;
    for (std::size_t i = 0; i < k; ++i) {
        if (i < preperiod.size())
            out.push_back(preperiod[i]);
        else if (!period.empty())
            out.push_back(period[(i - preperiod.size()) % period.size()]);
        else
            break;
    }
    return out;
}

BarDescriptor glue_bar(const GentleAlgebra& alg, const Path& alpha) {
    if (alpha.trivial()) throw InputError("glue_bar needs a nonzero path of positive length");
    BarDescriptor bar{alpha, {}, {}};
    std::vector<ArrowId> seq;
    ArrowId last = alpha.last();
    for (;;) {
        auto next = alg.relation_continuation(last);
        if (!next) {
            bar.preperiod = seq;
            return bar;
        }
        auto it = std::find(seq.begin(), seq.end(), *next);
        if (it != seq.end()) {
            bar.preperiod.assign(seq.begin(), it);
            bar.period.assign(it, seq.end());
            return bar;
        }
        seq.push_back(*next);
        last = *next;
    }
}

std::string format_letter(const GentleAlgebra& alg, const Letter& l) {
    return (l.is_direct() ? "" : "~") + format_path(alg, l.path);
}

std::string format_walk(const GentleAlgebra& alg, const Walk& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += format_letter(alg, w[i]);
    }
    return out;
}

Walk parse_walk(const GentleAlgebra& alg, const std::string& literal) {
    Walk w;
    std::stringstream in(literal);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
        if (item.empty()) throw InputError("empty letter in walk literal '" + literal + "'");
        Direction dir = Direction::direct;
        if (item.front() == '~') {
            dir = Direction::inverse;
            item.erase(0, 1);
        }
        std::vector<ArrowId> arrows;
        std::stringstream parts(item);
        std::string name;
        while (std::getline(parts, name, '.')) {
            auto a = alg.presentation().find_arrow(name);
            if (!a) throw InputError("unknown arrow '" + name + "' in walk literal");
            arrows.push_back(*a);
        }
        if (arrows.empty()) throw InputError("empty letter in walk literal '" + literal + "'");
        w.push_back(Letter{alg.make_path(arrows), dir});
    }
    if (w.empty()) throw InputError("empty walk literal");
    return w;
}

}  // namespace gentle
