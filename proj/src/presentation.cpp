#include "gentle/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace gentle {

VertexId Presentation::add_vertex(const std::string& id) {
    if (id.empty()) throw InputError("empty vertex id");
    if (find_vertex(id)) throw InputError("duplicate vertex id '" + id + "'");
    vertices_.push_back(id);
    return VertexId{static_cast<std::uint32_t>(vertices_.size() - 1)};
}

ArrowId Presentation::add_arrow(const std::string& id, VertexId source, VertexId target) {
    if (id.empty()) throw InputError("empty arrow id");
    if (find_arrow(id)) throw InputError("duplicate arrow id '" + id + "'");
    if (idx(source) >= vertices_.size() || idx(target) >= vertices_.size())
        throw InputError("arrow '" + id + "' uses an unknown vertex");
    arrows_.push_back(Arrow{id, source, target});
    return ArrowId{static_cast<std::uint32_t>(arrows_.size() - 1)};
}

void Presentation::add_relation(ArrowId first, ArrowId second) {
    const Arrow& a = arrow(first);
    const Arrow& b = arrow(second);
    if (a.target != b.source)
        throw InputError("relation " + a.name + " " + b.name + " is not composable");
    if (relation_set_.insert({first, second}).second) relations_.emplace_back(first, second);
}

std::optional<VertexId> Presentation::find_vertex(std::string_view id) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) return std::nullopt;
    return VertexId{static_cast<std::uint32_t>(it - vertices_.begin())};
}

std::optional<ArrowId> Presentation::find_arrow(std::string_view id) const {
    auto it = std::find_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.name == id; });
    if (it == arrows_.end()) return std::nullopt;
    return ArrowId{static_cast<std::uint32_t>(it - arrows_.begin())};
}

bool Presentation::is_relation(ArrowId first, ArrowId second) const {
    return relation_set_.contains({first, second});
}

std::vector<ArrowId> Presentation::outgoing(VertexId v) const {
    std::vector<ArrowId> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].source == v) out.push_back(ArrowId{static_cast<std::uint32_t>(i)});
    return out;
}

std::vector<ArrowId> Presentation::incoming(VertexId v) const {
    std::vector<ArrowId> in;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].target == v) in.push_back(ArrowId{static_cast<std::uint32_t>(i)});
    return in;
}

namespace {

std::vector<std::string> tokenize(std::string line) {
    // "a:1->2" and "a : 1 -> 2" are both accepted.
    std::string spaced;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line.compare(i, 2, "->") == 0) {
            spaced += " -> ";
            ++i;
        } else if (line[i] == ':') {
            spaced += " : ";
        } else {
            spaced += line[i];
        }
    }
    std::istringstream in(spaced);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    return tokens;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    Presentation p;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool named = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto tok = tokenize(raw);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        try {
            if (kw == "algebra") {
                if (tok.size() != 2) throw ParseError(line_no, "expected 'algebra <name>'");
                if (named) throw ParseError(line_no, "algebra name given twice");
                p.name = tok[1];
                named = true;
            } else if (kw == "vertices") {
                for (std::size_t i = 1; i < tok.size(); ++i) p.add_vertex(tok[i]);
            } else if (kw == "arrow") {
                if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->")
                    throw ParseError(line_no, "expected 'arrow <id> : <v> -> <w>'");
                auto s = p.find_vertex(tok[3]);
                auto t = p.find_vertex(tok[5]);
                if (!s) throw ParseError(line_no, "unknown vertex '" + tok[3] + "'");
                if (!t) throw ParseError(line_no, "unknown vertex '" + tok[5] + "'");
                p.add_arrow(tok[1], *s, *t);
            } else if (kw == "rel") {
                if (tok.size() != 3) throw ParseError(line_no, "expected 'rel <arrow> <arrow>'");
                auto a = p.find_arrow(tok[1]);
                auto b = p.find_arrow(tok[2]);
                if (!a) throw ParseError(line_no, "unknown arrow '" + tok[1] + "'");
                if (!b) throw ParseError(line_no, "unknown arrow '" + tok[2] + "'");
                p.add_relation(*a, *b);
            } else {
                throw ParseError(line_no, "unknown keyword '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (p.vertex_count() == 0) throw ParseError(line_no, "presentation declares no vertices");
    return p;
}

Presentation load_presentation(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream out;
    out << "algebra " << p.name << "\nvertices";
    for (std::size_t i = 0; i < p.vertex_count(); ++i) out << ' ' << p.vertex_name(VertexId{static_cast<std::uint32_t>(i)});
    out << '\n';
    for (std::size_t i = 0; i < p.arrow_count(); ++i) {
        const Arrow& a = p.arrow(ArrowId{static_cast<std::uint32_t>(i)});
        out << "arrow " << a.name << " : " << p.vertex_name(a.source) << " -> " << p.vertex_name(a.target) << '\n';
    }
    for (auto [a, b] : p.relations()) out << "rel " << p.arrow(a).name << ' ' << p.arrow(b).name << '\n';
    return out.str();
}

GentleReport validate_gentle(const Presentation& p) {
    GentleReport report;
    auto violate = [&](std::string axiom, std::string msg, std::vector<std::string> vs, std::vector<std::string> as) {
        report.pass = false;
        report.violations.push_back(Violation{std::move(axiom), std::move(msg), std::move(vs), std::move(as)});
    };
    auto names = [&](const std::vector<ArrowId>& ids) {
        std::vector<std::string> out;
        for (ArrowId a : ids) out.push_back(p.arrow(a).name);
        return out;
    };

    for (std::size_t i = 0; i < p.vertex_count(); ++i) {
        VertexId v{static_cast<std::uint32_t>(i)};
        auto out = p.outgoing(v);
        auto in = p.incoming(v);
        if (out.size() > 2) violate("1", "more than two arrows start at a vertex", {p.vertex_name(v)}, names(out));
        if (in.size() > 2) violate("1", "more than two arrows end at a vertex", {p.vertex_name(v)}, names(in));
    }

    for (std::size_t i = 0; i < p.arrow_count(); ++i) {
        ArrowId a{static_cast<std::uint32_t>(i)};
        const Arrow& ar = p.arrow(a);
        std::vector<ArrowId> rel_after, free_after, rel_before, free_before;
        for (ArrowId b : p.outgoing(ar.target)) (p.is_relation(a, b) ? rel_after : free_after).push_back(b);
        for (ArrowId b : p.incoming(ar.source)) (p.is_relation(b, a) ? rel_before : free_before).push_back(b);
        if (rel_after.size() > 1)
            violate("2", "more than one arrow b with " + ar.name + "b in I", {p.vertex_name(ar.target)}, names(rel_after));
        if (rel_before.size() > 1)
            violate("2", "more than one arrow c with c" + ar.name + " in I", {p.vertex_name(ar.source)}, names(rel_before));
        if (free_after.size() > 1)
            violate("3", "more than one arrow b with " + ar.name + "b not in I", {p.vertex_name(ar.target)}, names(free_after));
        if (free_before.size() > 1)
            violate("3", "more than one arrow c with c" + ar.name + " not in I", {p.vertex_name(ar.source)}, names(free_before));
    }

    // Relation-free oriented cycles make kQ/I infinite-dimensional. Detect them as
    // cycles in the graph on arrows with an edge a -> b whenever ab is a nonzero path.
    const std::size_t n = p.arrow_count();
    std::vector<int> state(n, 0);
    std::vector<ArrowId> stack;
    std::optional<std::vector<ArrowId>> cycle;
    std::function<void(std::size_t)> dfs = [&](std::size_t u) {
        state[u] = 1;
        stack.push_back(ArrowId{static_cast<std::uint32_t>(u)});
        ArrowId a{static_cast<std::uint32_t>(u)};
        for (ArrowId b : p.outgoing(p.arrow(a).target)) {
            if (cycle || p.is_relation(a, b)) continue;
            if (state[idx(b)] == 1) {
                auto from = std::find(stack.begin(), stack.end(), b);
                cycle = std::vector<ArrowId>(from, stack.end());
            } else if (state[idx(b)] == 0) {
                dfs(idx(b));
            }
        }
        stack.pop_back();
        state[u] = 2;
    };
    for (std::size_t i = 0; i < n && !cycle; ++i)
        if (state[i] == 0) dfs(i);
    if (cycle) {
        std::vector<std::string> vs;
        for (ArrowId a : *cycle) vs.push_back(p.vertex_name(p.arrow(a).source));
        violate("finite-dimension", "relation-free oriented cycle", vs, names(*cycle));
    }
    return report;
}

GentleAlgebra::GentleAlgebra(Presentation p) : pres_(std::move(p)) {
    auto report = validate_gentle(pres_);
    if (!report.pass) {
        const Violation& v = report.violations.front();
        throw NotGentleError("presentation '" + pres_.name + "' is not gentle: axiom " + v.axiom + ": " + v.message);
    }
    basis_.resize(pres_.vertex_count());
    index_.resize(pres_.vertex_count());
    for (std::size_t i = 0; i < pres_.vertex_count(); ++i) {
        VertexId v{static_cast<std::uint32_t>(i)};
        std::vector<Path>& paths = basis_[i];
        paths.push_back(Path{v, v, {}});
        // Breadth-first, so paths come out ordered by length; within one length the
        // arrow-id order of extensions keeps the listing lexicographic.
        for (std::size_t k = 0; k < paths.size(); ++k) {
            Path cur = paths[k];
            for (ArrowId a : pres_.outgoing(cur.target)) {
                if (!cur.trivial() && pres_.is_relation(cur.last(), a)) continue;
                Path next = cur;
                next.arrows.push_back(a);
                next.target = pres_.arrow(a).target;
                paths.push_back(std::move(next));
            }
        }
        std::stable_sort(paths.begin(), paths.end(), [](const Path& x, const Path& y) {
            if (x.length() != y.length()) return x.length() < y.length();
            return x.arrows < y.arrows;
        });
        for (std::size_t k = 0; k < paths.size(); ++k) index_[i].emplace(paths[k].arrows, k);
    }
}

std::size_t GentleAlgebra::basis_index(const Path& p) const {
    const auto& m = index_.at(idx(p.source));
    auto it = m.find(p.arrows);
    if (it == m.end()) throw InputError("path is not a basis path of the algebra");
    return it->second;
}

std::vector<Path> GentleAlgebra::path_basis() const {
    std::vector<Path> all;
    for (const auto& ps : basis_) all.insert(all.end(), ps.begin(), ps.end());
    return all;
}

std::size_t GentleAlgebra::dim_projective(VertexId v) const {
    if (idx(v) >= basis_.size()) throw InputError("unknown vertex");
    return basis_[idx(v)].size();
}

Path GentleAlgebra::arrow_path(ArrowId a) const {
    const Arrow& ar = pres_.arrow(a);
    return Path{ar.source, ar.target, {a}};
}

Path GentleAlgebra::trivial_path(VertexId v) const { return Path{v, v, {}}; }

bool GentleAlgebra::is_nonzero(const std::vector<ArrowId>& arrows) const {
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
        if (pres_.arrow(arrows[i]).target != pres_.arrow(arrows[i + 1]).source) return false;
        if (pres_.is_relation(arrows[i], arrows[i + 1])) return false;
    }
    return true;
}

Path GentleAlgebra::make_path(const std::vector<ArrowId>& arrows) const {
    if (arrows.empty()) throw InputError("empty arrow list");
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
        if (pres_.arrow(arrows[i]).target != pres_.arrow(arrows[i + 1]).source)
            throw InputError("arrows " + arrow_name(arrows[i]) + " and " + arrow_name(arrows[i + 1]) + " are not composable");
        if (pres_.is_relation(arrows[i], arrows[i + 1]))
            throw InputError("path contains the relation " + arrow_name(arrows[i]) + " " + arrow_name(arrows[i + 1]));
    }
    return Path{pres_.arrow(arrows.front()).source, pres_.arrow(arrows.back()).target, arrows};
}

std::optional<Path> GentleAlgebra::compose(const Path& p, const Path& q) const {
    if (p.target != q.source) throw InputError("paths are not composable");
    if (p.trivial()) return q;
    if (q.trivial()) return p;
    if (pres_.is_relation(p.last(), q.first())) return std::nullopt;
    Path r = p;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    r.target = q.target;
    return r;
}

std::optional<ArrowId> GentleAlgebra::relation_continuation(ArrowId a) const {
    for (ArrowId b : pres_.outgoing(pres_.arrow(a).target))
        if (pres_.is_relation(a, b)) return b;
    return std::nullopt;
}

std::optional<ArrowId> GentleAlgebra::relation_predecessor(ArrowId a) const {
    for (ArrowId b : pres_.incoming(pres_.arrow(a).source))
        if (pres_.is_relation(b, a)) return b;
    return std::nullopt;
}

std::optional<ArrowId> GentleAlgebra::other_outgoing(ArrowId a) const {
    for (ArrowId b : pres_.outgoing(pres_.arrow(a).source))
        if (b != a) return b;
    return std::nullopt;
}

Path GentleAlgebra::maximal_path_from(ArrowId a) const {
    Path t = arrow_path(a);
    for (;;) {
        std::optional<ArrowId> next;
        for (ArrowId b : pres_.outgoing(t.target))
            if (!pres_.is_relation(t.last(), b)) next = b;
        if (!next) return t;
        t.arrows.push_back(*next);
        t.target = pres_.arrow(*next).target;
    }
}

MaximalExtension GentleAlgebra::maximal_extension(const Path& p) const {
    if (p.trivial()) throw InputError("maximal extension needs a path of length at least one");
    make_path(p.arrows);  // validates
    // Extending the last arrow of p is the same as extending p, since p is nonzero.
    Path tail = maximal_path_from(p.last());
    MaximalExtension ext{p, trivial_path(p.target), std::nullopt};
    for (std::size_t i = 1; i < tail.arrows.size(); ++i) {
        ext.tilde.arrows.push_back(tail.arrows[i]);
        ext.hat.arrows.push_back(tail.arrows[i]);
    }
    ext.tilde.target = tail.target;
    ext.hat.target = tail.target;
    if (auto other = other_outgoing(p.first())) ext.check = maximal_path_from(*other);
    return ext;
}

std::string format_path(const GentleAlgebra& alg, const Path& p) {
    if (p.trivial()) return "e_" + alg.presentation().vertex_name(p.source);
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) out += '.';
        out += alg.arrow_name(p.arrows[i]);
    }
    return out;
}

}  // namespace gentle
