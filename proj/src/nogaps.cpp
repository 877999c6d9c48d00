#include "gentle/nogaps.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace gentle {

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::one_sided_i0: return "ONE_SIDED_i0";
        case CaseTag::one_sided_mid: return "ONE_SIDED_MID";
        case CaseTag::one_sided_end: return "ONE_SIDED_END";
        case CaseTag::general_q: return "GENERAL_Q";
        case CaseTag::backward_turn: return "BACKWARD_TURN";
        case CaseTag::beta_truncation: return "BETA_TRUNCATION";
        case CaseTag::band_unwind: return "BAND_UNWIND";
    }
    return "?";
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::peeling: return "peeling";
        case Strategy::window_search: return "window-search";
        case Strategy::global_search: return "global-search";
    }
    return "?";
}

std::size_t worker_count(std::size_t requested) {
    if (requested == 0) {
        if (const char* env = std::getenv("GENTLE_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) requested = static_cast<std::size_t>(v);
        }
    }
    if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
    return requested;
}

namespace {

// Runs f(i) for i in [0, n) on a small pool. Results are written by index, so the
// outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, std::size_t threads, F f) {
    threads = std::min(threads, std::max<std::size_t>(n, 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

Path prefix(const GentleAlgebra& alg, const Path& p, std::size_t j) {
    return alg.make_path(std::vector<ArrowId>(p.arrows.begin(), p.arrows.begin() + static_cast<std::ptrdiff_t>(j)));
}

std::vector<Path> prefixes_longest_first(const GentleAlgebra& alg, const Path& p) {
    std::vector<Path> out;
    for (std::size_t j = p.length(); j >= 1; --j) out.push_back(prefix(alg, p, j));
    return out;
}

// A walk segment of the input with optional zero-valued runs glued to either end.
// A front cap x contributes the letters (chain of x)^{-1} x^{-1} before the core, a
// back cap z contributes z followed by its relation chain. The chain is the glue_bar
// of the cap; when it is periodic the object is the beta construction of the
// truncated walk.
struct CappedState {
    Walk core;
    std::optional<Path> front;
    std::optional<Path> back;
    int core_degree = 0;  // degree of the first core node in the input's frame
    std::string step;
};

struct Materialized {
    Walk walk;
    std::size_t offset = 0;  // index of the first core node
    bool beta = false;
};

Materialized materialize(const GentleAlgebra& alg, const CappedState& st) {
    std::optional<BarDescriptor> fbar, bbar;
    if (st.front) fbar = glue_bar(alg, *st.front);
    if (st.back) bbar = glue_bar(alg, *st.back);
    const bool finf = fbar && fbar->periodic();
    const bool binf = bbar && bbar->periodic();
    auto assemble = [&](std::size_t df, std::size_t db) {
        Materialized m;
        if (st.front) {
            auto chain = fbar->chain(df);
            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                m.walk.push_back(Letter{alg.arrow_path(*it), Direction::inverse});
            m.walk.push_back(Letter{*st.front, Direction::inverse});
        }
        m.offset = m.walk.size();
        m.walk.insert(m.walk.end(), st.core.begin(), st.core.end());
        if (st.back) {
            m.walk.push_back(Letter{*st.back, Direction::direct});
            for (ArrowId a : bbar->chain(db)) m.walk.push_back(Letter{alg.arrow_path(a), Direction::direct});
        }
        return m;
    };
    std::size_t df = fbar ? fbar->finite_length() : 0;
    std::size_t db = bbar ? bbar->finite_length() : 0;
    Materialized m = assemble(df, db);
    if (!finf && !binf) return m;
    // Push every infinite chain down to one common degree strictly below the rest;
    // beta of the truncated walk then resolves exactly those far ends.
    auto mu = mu_profile(m.walk);
    const int floor = *std::min_element(mu.begin(), mu.end()) - 1;
    if (finf) df += static_cast<std::size_t>(mu.front() - floor);
    if (binf) db += static_cast<std::size_t>(mu.back() - floor);
    m = assemble(df, db);
    m.beta = true;
    return m;
}

struct Evaluated {
    Witness witness;
    CohVector coh;
};

std::optional<Evaluated> evaluate(const GentleAlgebra& alg, const CappedState& st, bool as_beta = false) {
    if (st.core.empty()) return std::nullopt;
    Materialized m = materialize(alg, st);
    if (classify_walk(alg, m.walk).kind == WalkKind::invalid) return std::nullopt;
    const int k = mu_profile(m.walk)[m.offset] - st.core_degree;
    Witness w = (m.beta || as_beta) ? Witness::beta(m.walk, k) : Witness::string(m.walk, k);
    return Evaluated{w, cohomology_fast(alg, w)};
}

std::vector<Path> front_caps(const GentleAlgebra& alg, const Walk& core) {
    const Letter& f = core.front();
    std::optional<ArrowId> start = f.is_direct() ? alg.other_outgoing(f.path.first())
                                                 : alg.relation_continuation(f.path.last());
    if (!start) return {};
    return prefixes_longest_first(alg, alg.maximal_path_from(*start));
}

std::vector<Path> back_caps(const GentleAlgebra& alg, const Walk& core) {
    const Letter& b = core.back();
    std::optional<ArrowId> start = b.is_direct() ? alg.relation_continuation(b.path.last())
                                                 : alg.other_outgoing(b.path.first());
    if (!start) return {};
    return prefixes_longest_first(alg, alg.maximal_path_from(*start));
}

// Removes one arrow from the start of the walk.
CappedState peel_front(const GentleAlgebra& alg, CappedState st) {
    Letter f = st.core.front();
    st.core.erase(st.core.begin());
    if (f.path.length() > 1) {
        std::vector<ArrowId> arrows = f.path.arrows;
        if (f.is_direct())
            arrows.erase(arrows.begin());
        else
            arrows.pop_back();
        st.core.insert(st.core.begin(), Letter{alg.make_path(arrows), f.dir});
    } else {
        st.core_degree += f.mu_step();
    }
    st.front.reset();
    st.step = "peel one arrow from the front";
    return st;
}

CappedState peel_back(const GentleAlgebra& alg, CappedState st) {
    Letter b = st.core.back();
    st.core.pop_back();
    if (b.path.length() > 1) {
        std::vector<ArrowId> arrows = b.path.arrows;
        if (b.is_direct())
            arrows.pop_back();
        else
            arrows.erase(arrows.begin());
        st.core.push_back(Letter{alg.make_path(arrows), b.dir});
    }
    st.back.reset();
    st.step = "peel one arrow from the back";
    return st;
}

std::string describe_cap(const GentleAlgebra& alg, const char* side, const Path& p) {
    return std::string(side) + " cap " + format_path(alg, p) + " with its relation chain";
}

// The unit-step sequence: minimise the back cap, then alternately minimise the front
// cap and peel one arrow. Every transition changes each degree by at most one, except
// across a forward turning point, where a relation predecessor (when it exists) is
// inserted to keep the step small.
std::vector<CappedState> peeling_sequence(const GentleAlgebra& alg, CappedState st) {
    std::vector<CappedState> seq;
    st.step = "start";
    seq.push_back(st);
    if (!st.back) {
        for (const Path& z : back_caps(alg, st.core)) {
            st.back = z;
            st.step = describe_cap(alg, "back", z);
            seq.push_back(st);
        }
    }
    for (;;) {
        if (!st.front) {
            for (const Path& x : front_caps(alg, st.core)) {
                st.front = x;
                st.step = describe_cap(alg, "front", x);
                seq.push_back(st);
            }
        }
        const Letter& f = st.core.front();
        if (st.core.size() == 1 && f.path.length() == 1) break;
        if (f.path.length() == 1 && f.is_direct() && st.core.size() > 1 && !st.core[1].is_direct()) {
            if (auto b = alg.relation_predecessor(f.path.first())) {
                CappedState ins = st;
                ins.core.insert(ins.core.begin(), Letter{alg.arrow_path(*b), Direction::direct});
                ins.core_degree += 1;
                ins.front.reset();
                if (auto o = alg.other_outgoing(*b)) ins.front = alg.arrow_path(*o);
                ins.step = "insert relation predecessor " + alg.arrow_name(*b) + " before the forward turn";
                seq.push_back(ins);
            }
        }
        st = peel_front(alg, st);
        seq.push_back(st);
    }
    return seq;
}

// Every sub-walk (front and back peeled independently) with every admissible pair
// of caps, including none.
std::vector<CappedState> window_states(const GentleAlgebra& alg, const Walk& w, int degree) {
    std::vector<CappedState> out;
    CappedState f{w, std::nullopt, std::nullopt, degree, {}};
    for (;;) {
        CappedState b = f;
        for (;;) {
            std::vector<std::optional<Path>> fcs{std::nullopt}, bcs{std::nullopt};
            for (Path& p : front_caps(alg, b.core)) fcs.emplace_back(std::move(p));
            for (Path& p : back_caps(alg, b.core)) bcs.emplace_back(std::move(p));
            for (const auto& x : fcs)
                for (const auto& z : bcs) {
                    CappedState s = b;
                    s.front = x;
                    s.back = z;
                    s.step = "window " + format_walk(alg, b.core) + (x ? "; " + describe_cap(alg, "front", *x) : "") +
                             (z ? "; " + describe_cap(alg, "back", *z) : "");
                    out.push_back(std::move(s));
                }
            if (b.core.size() == 1 && b.core.front().path.length() == 1) break;
            b = peel_back(alg, b);
        }
        if (f.core.size() == 1 && f.core.front().path.length() == 1) break;
        f = peel_front(alg, f);
    }
    return out;
}

using Pool = std::vector<SpectrumItem>;

Pool build_pool(const GentleAlgebra& alg, std::size_t bound) {
    Pool pool;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
        Witness w = Witness::stalk(VertexId{static_cast<std::uint32_t>(v)});
        pool.push_back({w, cohomology_fast(alg, w)});
    }
    auto walks = enumerate_gst(alg, bound).walks;
    std::stable_sort(walks.begin(), walks.end(),
                     [](const Walk& a, const Walk& b) { return arrow_total(a) < arrow_total(b); });
    for (const Walk& w : walks) {
        Witness s = Witness::string(w);
        pool.push_back({s, cohomology_fast(alg, s)});
    }
    for (const Walk& w : walks) {
        Witness b = Witness::beta(w);
        pool.push_back({b, cohomology_fast(alg, b)});
    }
    return pool;
}

struct Search {
    const GentleAlgebra& alg;
    const ReduceOptions& opt;
    const Pool* pool;
    ReductionTrace& trace;
    std::size_t target;

    bool accept(const Witness& w, const CohVector& coh, Strategy s, std::vector<std::string> steps) {
        if (coh.hl() != target) return false;
        CohVector oracle = cohomology_rank(alg, w);
        if (!(oracle == coh)) {
            trace.surgery.push_back("rejected " + describe(alg, w) + ": closed form " + to_string(coh) +
                                    " disagrees with ranks " + to_string(oracle));
            return false;
        }
        trace.output = w;
        trace.output_coh = coh;
        trace.oracle_coh = oracle;
        trace.strategy = s;
        trace.verified = true;
        trace.surgery.insert(trace.surgery.end(), steps.begin(), steps.end());
        return true;
    }

    // Walks the unit-step sequence and stops at the first state whose hl drops below
    // the input's; success iff it dropped by exactly one.
    bool peel(const std::vector<CappedState>& seq, std::size_t l) {
        std::vector<std::string> steps;
        for (const CappedState& st : seq) {
            auto ev = evaluate(alg, st);
            if (!ev) continue;
            steps.push_back(st.step);
            if (ev->coh.hl() < l) {
                if (ev->coh.hl() + 1 == l) return accept(ev->witness, ev->coh, Strategy::peeling, steps);
                trace.surgery.push_back("peeling jumped from hl " + std::to_string(l) + " to " +
                                        std::to_string(ev->coh.hl()) + " at: " + st.step);
                return false;
            }
        }
        return false;
    }

    bool windows(const std::vector<CappedState>& states, bool with_beta) {
        for (const CappedState& st : states) {
            for (int variant = 0; variant < (with_beta ? 2 : 1); ++variant) {
                auto ev = evaluate(alg, st, variant == 1);
                if (!ev || ev->coh.hl() != target) continue;
                std::string s = st.step + (variant == 1 ? "; apply beta" : "");
                if (accept(ev->witness, ev->coh, Strategy::window_search, {s})) return true;
            }
        }
        return false;
    }

    bool stalks(const Walk& w) {
        std::set<std::size_t> seen;
        for (VertexId v : node_vertices(w)) {
            if (!seen.insert(idx(v)).second) continue;
            Witness s = Witness::stalk(v);
            if (accept(s, cohomology_fast(alg, s), Strategy::window_search, {"stalk at a walk vertex"})) return true;
        }
        return false;
    }

    bool global(std::size_t bound) {
        Pool local;
        const Pool* p = pool;
        if (!p) {
            local = build_pool(alg, opt.search_bound ? opt.search_bound : bound);
            p = &local;
        }
        for (const SpectrumItem& it : *p)
            if (it.coh.hl() == target && accept(it.witness, it.coh, Strategy::global_search, {"bounded search over witnesses"}))
                return true;
        return false;
    }
};

CaseTag string_tag(const Walk& w, std::size_t q) {
    const bool all_direct = std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.is_direct(); });
    const bool all_inverse = std::none_of(w.begin(), w.end(), [](const Letter& l) { return l.is_direct(); });
    if (all_direct || all_inverse) {
        std::size_t pos = all_direct ? q : w.size() - q;
        if (pos == 0) return CaseTag::one_sided_i0;
        if (pos == w.size()) return CaseTag::one_sided_end;
        return CaseTag::one_sided_mid;
    }
    return node_type(w, q) == NodeType::backward_turn ? CaseTag::backward_turn : CaseTag::general_q;
}

std::size_t default_bound(const Walk& w) { return std::max<std::size_t>(8, arrow_total(w) + 2); }

void require_reducible(std::size_t l) {
    if (l <= 1) throw ReductionError("cohomological length is " + std::to_string(l) + "; nothing to reduce");
}

}  // namespace

std::size_t select_target_summand(const GentleAlgebra& alg, const GenWalk& w) {
    auto contrib = node_contributions(alg, w);
    std::map<int, std::size_t> per_degree;
    for (const auto& c : contrib) per_degree[c.degree] += c.dim;
    std::size_t l = 0;
    for (auto [deg, d] : per_degree) l = std::max(l, d);
    require_reducible(l);
    for (std::size_t j = 0; j < contrib.size(); ++j)
        if (contrib[j].dim > 0 && per_degree[contrib[j].degree] == l) return j;
    throw std::logic_error("no node carries the maximal cohomology");
}

ReductionTrace reduce_string(const GentleAlgebra& alg, const GenWalk& w, const ReduceOptions& opt) {
    if (w.kind == WalkKind::invalid) throw InputError("reduce_string needs a generalized string: " + w.reason);
    ReductionTrace tr;
    tr.input = Witness::string(w.letters);
    tr.input_coh = formula_dims(alg, w.letters);
    const std::size_t l = tr.input_coh.hl();
    require_reducible(l);
    tr.target_node = select_target_summand(alg, w);
    tr.tag = string_tag(w.letters, *tr.target_node);
    Search s{alg, opt, opt.pool, tr, l - 1};
    const auto mu = mu_profile(w.letters);
    CappedState start = opt.negative ? CappedState{inverse(w.letters), std::nullopt, std::nullopt, mu.back(), {}}
                                     : CappedState{w.letters, std::nullopt, std::nullopt, 0, {}};
    if (opt.negative) tr.surgery.push_back("negative direction: peel from the end of the walk");
    if (s.peel(peeling_sequence(alg, start), l)) return tr;
    auto states = window_states(alg, w.letters, 0);
    if (s.windows(states, true) || s.stalks(w.letters) || s.global(default_bound(w.letters))) return tr;
    throw ReductionError("no witness with hl " + std::to_string(l - 1) + " found for " + format_walk(alg, w.letters));
}

ReductionTrace reduce_beta(const GentleAlgebra& alg, const GenWalk& w, const ReduceOptions& opt) {
    if (w.kind == WalkKind::invalid) throw InputError("reduce_beta needs a generalized string: " + w.reason);
    ReductionTrace tr;
    tr.input = Witness::beta(w.letters);
    tr.input_coh = cohomology_fast(alg, tr.input);
    tr.tag = CaseTag::beta_truncation;
    const std::size_t l = tr.input_coh.hl();
    require_reducible(l);
    Search s{alg, opt, opt.pool, tr, l - 1};

    // beta(P_w) is P_w with the relation chains resolving the kernels at the walk
    // ends in the minimal degree, i.e. a capped state with one-arrow caps.
    const auto mu = mu_profile(w.letters);
    const int m0 = *std::min_element(mu.begin(), mu.end());
    CappedState start{w.letters, std::nullopt, std::nullopt, 0, {}};
    if (mu.front() == m0 && !w.letters.front().is_direct())
        if (auto a = alg.relation_continuation(w.letters.front().path.last())) start.front = alg.arrow_path(*a);
    if (mu.back() == m0 && w.letters.back().is_direct())
        if (auto a = alg.relation_continuation(w.letters.back().path.last())) start.back = alg.arrow_path(*a);
    if (auto ev = evaluate(alg, start); ev && ev->coh == tr.input_coh) {
        tr.surgery.push_back("resolve the minimal-degree kernel with relation chains");
        if (s.peel(peeling_sequence(alg, start), l)) return tr;
    } else {
        tr.surgery.push_back("resolution state disagrees with the beta rule; skipping peeling");
    }
    auto states = window_states(alg, w.letters, 0);
    if (s.windows(states, true) || s.stalks(w.letters) || s.global(default_bound(w.letters))) return tr;
    throw ReductionError("no witness with hl " + std::to_string(l - 1) + " found for beta of " + format_walk(alg, w.letters));
}

ReductionTrace reduce_band(const GentleAlgebra& alg, const GenWalk& w, const Rational& lambda, std::size_t d,
                           const ReduceOptions& opt) {
    if (w.kind != WalkKind::gba) throw InputError("reduce_band needs a generalized band");
    ReductionTrace tr;
    tr.tag = CaseTag::band_unwind;
    const Walk u = mu_minimal_rotation(w.letters);
    tr.input = Witness::band(u, lambda, d);
    tr.input_coh = cohomology_rank(alg, tr.input);
    const std::size_t l = tr.input_coh.hl();
    require_reducible(l);
    Search s{alg, opt, opt.pool, tr, l - 1};

    Walk unwound;
    for (std::size_t i = 0; i < d; ++i) unwound.insert(unwound.end(), u.begin(), u.end());
    GenWalk g = classify_walk(alg, unwound);
    if (g.kind == WalkKind::invalid) throw std::logic_error("band power is not a generalized string: " + g.reason);
    tr.bridge_identity = cohomology_rank(alg, Witness::beta(unwound)) == tr.input_coh;
    tr.surgery.push_back("unwind the band into the string " + format_walk(alg, unwound) + " (bridge identity " +
                         (*tr.bridge_identity ? "holds" : "fails") + ")");

    // One extra period gives every window of the unwound string room on both sides.
    Walk longer = unwound;
    longer.insert(longer.end(), u.begin(), u.end());
    auto states = window_states(alg, longer, 0);
    if (s.windows(states, true) || s.stalks(u) || s.global(default_bound(longer))) return tr;
    throw ReductionError("no witness with hl " + std::to_string(l - 1) + " found for band " + format_walk(alg, u));
}

ReductionTrace reduce_stalk(const GentleAlgebra& alg, VertexId v, const ReduceOptions& opt) {
    ReductionTrace tr;
    tr.input = Witness::stalk(v);
    tr.input_coh = cohomology_fast(alg, tr.input);
    tr.tag = CaseTag::one_sided_i0;
    tr.target_node = 0;
    const std::size_t l = tr.input_coh.hl();
    require_reducible(l);
    Search s{alg, opt, opt.pool, tr, l - 1};
    // A maximal path y out of v glued to its relation chain loses exactly the
    // generator of P_v: its cohomology is l(y) + l(check y) = dim P_v - 1.
    for (ArrowId a : alg.presentation().outgoing(v)) {
        Path y = alg.maximal_path_from(a);
        CappedState st{{Letter{y, Direction::direct}}, std::nullopt, std::nullopt, 0, {}};
        if (auto c = alg.relation_continuation(y.last())) st.back = alg.arrow_path(*c);
        auto ev = evaluate(alg, st);
        if (ev && s.accept(ev->witness, ev->coh, Strategy::peeling,
                           {"maximal path " + format_path(alg, y) + " with its relation chain"}))
            return tr;
    }
    if (s.global(8)) return tr;
    throw ReductionError("no witness with hl " + std::to_string(l - 1) + " found for a stalk");
}

ReductionTrace reduce_witness(const GentleAlgebra& alg, const Witness& w, const ReduceOptions& opt) {
    ReductionTrace tr;
    switch (w.kind) {
        case WitnessKind::stalk: tr = reduce_stalk(alg, w.vertex, opt); break;
        case WitnessKind::string: tr = reduce_string(alg, classify_walk(alg, w.walk), opt); break;
        case WitnessKind::beta: tr = reduce_beta(alg, classify_walk(alg, w.walk), opt); break;
        case WitnessKind::band: tr = reduce_band(alg, classify_walk(alg, w.walk), w.lambda, w.d, opt); break;
    }
    tr.input.shift += w.shift;
    tr.output.shift += w.shift;
    tr.input_coh = tr.input_coh.shifted(w.shift);
    tr.output_coh = tr.output_coh.shifted(w.shift);
    tr.oracle_coh = tr.oracle_coh.shifted(w.shift);
    return tr;
}

namespace {

std::vector<std::size_t> gaps_in(const std::set<std::size_t>& values) {
    std::vector<std::size_t> gaps;
    if (values.empty()) return gaps;
    for (std::size_t v = 1; v < *values.rbegin(); ++v)
        if (!values.contains(v)) gaps.push_back(v);
    return gaps;
}

}  // namespace

SpectrumReport hl_spectrum(const GentleAlgebra& alg, const SpectrumOptions& opt) {
    SpectrumReport rep;
    const std::size_t threads = worker_count(opt.threads);
    Enumeration gst = enumerate_gst(alg, opt.max_arrows);
    DiscretenessReport disc = is_derived_discrete(alg);
    rep.derived_discrete = disc.discrete;
    rep.complete = gst.complete && disc.discrete;

    std::vector<Witness> family;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) family.push_back(Witness::stalk(VertexId{static_cast<std::uint32_t>(v)}));
    for (const Walk& w : gst.walks) family.push_back(Witness::string(w));
    rep.string_count = gst.walks.size();
    if (opt.include_bands && !disc.discrete) {
        for (const Walk& w : enumerate_gba(alg, opt.max_arrows).walks) family.push_back(Witness::band(w, Rational(1), 1));
    }
    std::vector<CohVector> cohs(family.size());
    parallel_for(family.size(), threads, [&](std::size_t i) { cohs[i] = cohomology_fast(alg, family[i]); });
    // Beta variants of strings whose minimal component degree carries cohomology.
    const std::size_t base = family.size();
    for (std::size_t i = 0; i < base; ++i) {
        if (family[i].kind != WitnessKind::string) continue;
        if (cohs[i].at(min_component_degree(family[i].walk)) == 0) continue;
        family.push_back(Witness::beta(family[i].walk));
        cohs.push_back(beta_of(cohs[i], family[i].walk));
        ++rep.beta_count;
    }
    for (const Witness& w : family) rep.band_count += w.kind == WitnessKind::band;
    rep.witness_count = family.size();

    std::set<std::size_t> achieved;
    std::map<std::size_t, std::size_t> first_with;
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::size_t h = cohs[i].hl();
        if (h == 0) continue;
        achieved.insert(h);
        first_with.emplace(h, i);
    }
    rep.enumeration_gaps = gaps_in(achieved);

    // Values reached only through reduction outputs join the spectrum with that
    // output as their representative.
    std::set<std::size_t> closure = achieved;
    std::map<std::size_t, SpectrumItem> extra;
    if (opt.reduce_check) {
        Pool pool;
        for (std::size_t i = 0; i < family.size(); ++i) pool.push_back({family[i], cohs[i]});
        std::vector<std::size_t> todo;
        for (std::size_t i = 0; i < family.size(); ++i)
            if (cohs[i].hl() > 1) todo.push_back(i);
        std::vector<std::optional<ReductionTrace>> traces(todo.size());
        std::vector<std::string> errors(todo.size());
        parallel_for(todo.size(), threads, [&](std::size_t k) {
            ReduceOptions ropt;
            ropt.pool = &pool;
            try {
                traces[k] = reduce_witness(alg, family[todo[k]], ropt);
            } catch (const ReductionError& e) {
                errors[k] = describe(alg, family[todo[k]]) + ": " + e.what();
            }
        });
        for (std::size_t k = 0; k < todo.size(); ++k) {
            ++rep.reductions;
            if (!traces[k] || !traces[k]->verified || traces[k]->oracle_coh.hl() + 1 != cohs[todo[k]].hl()) {
                ++rep.reduction_failures;
                rep.failures.push_back(errors[k].empty() ? describe(alg, family[todo[k]]) + ": unverified" : errors[k]);
                continue;
            }
            const std::size_t h = traces[k]->oracle_coh.hl();
            if (closure.insert(h).second) extra.emplace(h, SpectrumItem{traces[k]->output, traces[k]->oracle_coh});
            rep.traces.push_back(std::move(*traces[k]));
        }
        // A reduction output with a new value may itself sit above a value nothing
        // enumerated reaches, so keep walking down until the chain meets the spectrum.
        std::vector<SpectrumItem> frontier;
        for (const auto& [h, item] : extra) frontier.push_back(item);
        while (!frontier.empty()) {
            SpectrumItem item = std::move(frontier.back());
            frontier.pop_back();
            const std::size_t h = item.coh.hl();
            if (h <= 1 || closure.contains(h - 1)) continue;
            ++rep.reductions;
            ReduceOptions ropt;
            ropt.pool = &pool;
            try {
                ReductionTrace tr = reduce_witness(alg, item.witness, ropt);
                if (!tr.verified || tr.oracle_coh.hl() + 1 != h) throw ReductionError("unverified");
                closure.insert(h - 1);
                extra.emplace(h - 1, SpectrumItem{tr.output, tr.oracle_coh});
                frontier.push_back({tr.output, tr.oracle_coh});
                rep.traces.push_back(std::move(tr));
            } catch (const ReductionError& e) {
                ++rep.reduction_failures;
                rep.failures.push_back(describe(alg, item.witness) + ": " + e.what());
            }
        }
    }
    rep.achieved.assign(closure.begin(), closure.end());
    for (std::size_t h : closure) {
        if (auto it = first_with.find(h); it != first_with.end())
            rep.representatives.push_back({family[it->second], cohs[it->second]});
        else
            rep.representatives.push_back(extra.at(h));
    }
    rep.gaps = gaps_in(closure);
    return rep;
}

std::string a0_presentation_text() {
    return "algebra A0\n"
           "vertices 1 2 3 4 5 6 7\n"
           "arrow a1 : 1 -> 2\n"
           "arrow a2 : 2 -> 3\n"
           "arrow a3 : 2 -> 4\n"
           "arrow a4 : 4 -> 5\n"
           "arrow a5 : 5 -> 6\n"
           "arrow a6 : 6 -> 7\n"
           "rel a1 a3\n";
}

bool A0Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const A0Check& c) { return c.pass; });
}

A0Report verify_counterexample_a0() {
    A0Report rep;
    Presentation pres = parse_presentation(a0_presentation_text());
    GentleReport gentle = validate_gentle(pres);
    rep.checks.push_back({"gentle", gentle.pass, gentle.pass ? "all axioms hold" : gentle.violations.front().message});
    GentleAlgebra alg(pres);
    DiscretenessReport disc = is_derived_discrete(alg);
    rep.checks.push_back({"derived-discrete", disc.discrete, disc.certificate});
    Enumeration gst = enumerate_gst(alg, 12);
    rep.checks.push_back({"enumeration-complete", gst.complete,
                          std::to_string(gst.walks.size()) + " generalized strings up to 12 arrows"});

    // Every witness is evaluated with exact ranks; the family is small.
    std::vector<Witness> family;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) family.push_back(Witness::stalk(VertexId{static_cast<std::uint32_t>(v)}));
    for (const Walk& w : gst.walks) {
        family.push_back(Witness::string(w));
        family.push_back(Witness::beta(w));
    }
    std::vector<CohVector> cohs(family.size());
    parallel_for(family.size(), worker_count(0), [&](std::size_t i) {
        const Witness& w = family[i];
        cohs[i] = w.kind == WitnessKind::beta ? beta_cohomology(alg, classify_walk(alg, w.walk)) : cohomology_rank(alg, w);
    });
    std::set<std::size_t> hr, hl;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const CohVector& h = cohs[i];
        if (h.dims.empty()) continue;
        hr.insert(h.hr());
        hl.insert(h.hl());
        if (h.hw() > rep.max_hw) {
            rep.max_hw = h.hw();
            rep.hw_maximiser = family[i];
        }
        rep.max_hl = std::max(rep.max_hl, h.hl());
    }
    rep.witnesses = family.size();
    rep.hr_values.assign(hr.begin(), hr.end());
    rep.hl_values.assign(hl.begin(), hl.end());

    Walk a1 = parse_walk(alg, "a1");
    CohVector h = cohomology_rank(alg, Witness::string(a1));
    rep.checks.push_back({"hr-8-achieved", h.hr() == 8 && hr.contains(8), "P(a1) has cohomology " + to_string(h)});
    rep.checks.push_back({"hr-7-absent", !hr.contains(7), "no witness has hr 7"});
    rep.checks.push_back({"gl.hw=3", rep.max_hw == 3,
                          "maximal cohomological width observed: " + std::to_string(rep.max_hw) +
                              (rep.hw_maximiser ? " (" + describe(alg, *rep.hw_maximiser) + ")" : "")});
    rep.checks.push_back({"gl.hl<=6", rep.max_hl <= 6, "maximal cohomological length observed: " + std::to_string(rep.max_hl)});
    return rep;
}

}  // namespace gentle
