#include "doctest.h"

#include "corpus.hpp"
#include "oracles.hpp"

#include "gentle/nogaps.hpp"
#include "gentle/presentation.hpp"

#include <algorithm>

using namespace gentle;

namespace {

GentleAlgebra a0() { return GentleAlgebra(parse_presentation(a0_presentation_text())); }
GentleAlgebra kronecker() { return GentleAlgebra(parse_presentation("vertices 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\n")); }

Path path_of(const GentleAlgebra& alg, std::initializer_list<const char*> names) {
    std::vector<ArrowId> ids;
    for (const char* n : names) ids.push_back(*alg.presentation().find_arrow(n));
    return alg.make_path(ids);
}

std::vector<std::string> names_of(const GentleAlgebra& alg, const Path& p) {
    std::vector<std::string> out;
    for (ArrowId a : p.arrows) out.push_back(alg.arrow_name(a));
    return out;
}

bool has_axiom(const GentleReport& r, const std::string& axiom) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

}  // namespace

TEST_CASE("parsing the counterexample algebra") {
    Presentation p = parse_presentation(a0_presentation_text());
    CHECK(p.vertex_count() == 7);
    CHECK(p.arrow_count() == 6);
    CHECK(p.relations().size() == 1);
    CHECK(p.is_relation(*p.find_arrow("a1"), *p.find_arrow("a3")));
}

TEST_CASE("semisimple algebra parses and validates") {
    Presentation p = parse_presentation("vertices 1\n");
    CHECK(p.vertex_count() == 1);
    CHECK(validate_gentle(p).pass);
}

TEST_CASE("non-composable relation is rejected with its line") {
    const char* text = "vertices 1 2 3\narrow a1 : 1 -> 2\narrow a2 : 2 -> 3\nrel a2 a1\n";
    CHECK_THROWS_AS(parse_presentation(text), ParseError);
    try {
        parse_presentation(text);
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("malformed DSL input") {
    CHECK_THROWS_AS(parse_presentation("vertices 1\narrow a : 1 -> 9\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("vertices 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("bogus line\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("vertices 1 2\narrow a : 1 -> 2\nrel a\n"), ParseError);
}

TEST_CASE("format and parse round-trip") {
    for (const auto& [name, p] : testkit::corpus(5)) {
        Presentation q = parse_presentation(format_presentation(p));
        CHECK(format_presentation(q) == format_presentation(p));
    }
}

TEST_CASE("gentleness verdicts") {
    CHECK(validate_gentle(parse_presentation(a0_presentation_text())).pass);

    auto triple = validate_gentle(parse_presentation("vertices 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\narrow c : 1 -> 2\n"));
    CHECK_FALSE(triple.pass);
    CHECK(has_axiom(triple, "1"));

    auto loop = validate_gentle(parse_presentation("vertices 1\narrow c : 1 -> 1\n"));
    CHECK_FALSE(loop.pass);
    CHECK(has_axiom(loop, "finite-dimension"));

    CHECK_THROWS_AS(GentleAlgebra(parse_presentation("vertices 1\narrow c : 1 -> 1\n")), NotGentleError);
}

TEST_CASE("adding any arrow out of vertex 2 breaks axiom 1 on A0") {
    for (int x = 1; x <= 7; ++x) {
        Presentation p = parse_presentation(a0_presentation_text());
        p.add_arrow("extra", *p.find_vertex("2"), *p.find_vertex(std::to_string(x)));
        CAPTURE(x);
        CHECK(has_axiom(validate_gentle(p), "1"));
    }
}

TEST_CASE("path basis of A0") {
    GentleAlgebra alg = a0();
    // The basis has 20 elements: 3 + 6 + 1 + 4 + 3 + 2 + 1.
    CHECK(alg.path_basis().size() == 20);
    std::vector<std::string> from2;
    for (const Path& p : alg.paths_from(*alg.presentation().find_vertex("2"))) from2.push_back(format_path(alg, p));
    CHECK(from2 == std::vector<std::string>{"e_2", "a2", "a3", "a3.a4", "a3.a4.a5", "a3.a4.a5.a6"});
    CHECK(alg.dim_projective(*alg.presentation().find_vertex("2")) == 6);
    CHECK(alg.dim_projective(*alg.presentation().find_vertex("7")) == 1);
}

TEST_CASE("path basis of the Kronecker quiver and of a point") {
    GentleAlgebra k = kronecker();
    CHECK(k.path_basis().size() == 4);
    CHECK(k.dim_projective(*k.presentation().find_vertex("1")) == 3);
    CHECK(k.dim_projective(*k.presentation().find_vertex("2")) == 1);
    GentleAlgebra pt(parse_presentation("vertices 1\n"));
    REQUIRE(pt.path_basis().size() == 1);
    CHECK(pt.path_basis()[0].trivial());
}

TEST_CASE("basis agrees with brute-force enumeration on the corpus") {
    for (const auto& [name, p] : testkit::corpus(30)) {
        CAPTURE(name);
        GentleAlgebra alg(p);
        auto brute = testkit::brute_force_paths(p);
        for (std::size_t v = 0; v < p.vertex_count(); ++v) {
            VertexId vid{static_cast<std::uint32_t>(v)};
            std::vector<testkit::ArrowSeq> mine;
            for (const Path& q : alg.paths_from(vid)) mine.push_back(names_of(alg, q));
            auto expect = brute.at(p.vertex_name(vid));
            std::sort(mine.begin(), mine.end());
            std::sort(expect.begin(), expect.end());
            CHECK(mine == expect);
        }
    }
}

TEST_CASE("dim P_v is one plus the lengths of the maximal paths from v") {
    for (const auto& [name, p] : testkit::corpus(30)) {
        CAPTURE(name);
        GentleAlgebra alg(p);
        for (std::size_t v = 0; v < p.vertex_count(); ++v) {
            VertexId vid{static_cast<std::uint32_t>(v)};
            std::size_t total = 1;
            for (ArrowId a : p.outgoing(vid)) total += alg.maximal_path_from(a).length();
            CHECK(alg.dim_projective(vid) == total);
        }
    }
}

TEST_CASE("maximal extensions") {
    GentleAlgebra alg = a0();
    auto e1 = alg.maximal_extension(path_of(alg, {"a1"}));
    CHECK(format_path(alg, e1.tilde) == "a1.a2");
    CHECK(e1.tilde.length() == 2);
    CHECK(format_path(alg, e1.hat) == "a2");
    CHECK_FALSE(e1.check.has_value());
    CHECK(e1.check_length() == 0);

    auto e3 = alg.maximal_extension(path_of(alg, {"a3"}));
    CHECK(format_path(alg, e3.tilde) == "a3.a4.a5.a6");
    REQUIRE(e3.check.has_value());
    CHECK(format_path(alg, *e3.check) == "a2");

    GentleAlgebra k = kronecker();
    auto ea = k.maximal_extension(path_of(k, {"a"}));
    CHECK(format_path(k, ea.tilde) == "a");
    CHECK(ea.hat.trivial());
    REQUIRE(ea.check.has_value());
    CHECK(format_path(k, *ea.check) == "b");
}

TEST_CASE("maximal extension invariants on the corpus") {
    for (const auto& [name, p] : testkit::corpus(30)) {
        CAPTURE(name);
        GentleAlgebra alg(p);
        for (const Path& q : alg.path_basis()) {
            if (q.trivial()) continue;
            auto e = alg.maximal_extension(q);
            auto composed = alg.compose(q, e.hat);
            REQUIRE(composed.has_value());
            CHECK(*composed == e.tilde);
            for (ArrowId b : p.outgoing(e.tilde.target)) CHECK_FALSE(alg.compose(e.tilde, alg.arrow_path(b)).has_value());
            if (e.check) {
                CHECK(e.check->source == q.source);
                CHECK(e.check->first() != q.first());
            }
        }
    }
}

TEST_CASE("composition in A0") {
    GentleAlgebra alg = a0();
    CHECK_FALSE(alg.compose(path_of(alg, {"a1"}), path_of(alg, {"a3"})).has_value());
    auto p = alg.compose(path_of(alg, {"a1"}), path_of(alg, {"a2"}));
    REQUIRE(p.has_value());
    CHECK(format_path(alg, *p) == "a1.a2");
    Path a3 = path_of(alg, {"a3"});
    CHECK(alg.compose(alg.trivial_path(a3.source), a3) == a3);
    CHECK_THROWS_AS(alg.compose(path_of(alg, {"a2"}), path_of(alg, {"a1"})), InputError);
}

TEST_CASE("composition is associative and vanishes exactly on relation subwords") {
    for (const auto& [name, p] : testkit::corpus(12)) {
        CAPTURE(name);
        GentleAlgebra alg(p);
        auto basis = alg.path_basis();
        for (const Path& x : basis)
            for (const Path& y : basis) {
                if (x.target != y.source) continue;
                std::vector<ArrowId> cat = x.arrows;
                cat.insert(cat.end(), y.arrows.begin(), y.arrows.end());
                bool zero = false;
                for (std::size_t i = 0; i + 1 < cat.size(); ++i) zero |= p.is_relation(cat[i], cat[i + 1]);
                auto xy = alg.compose(x, y);
                CHECK(xy.has_value() == !zero);
                for (const Path& z : basis) {
                    if (y.target != z.source) continue;
                    auto yz = alg.compose(y, z);
                    auto left = xy ? alg.compose(*xy, z) : std::nullopt;
                    auto right = yz ? alg.compose(x, *yz) : std::nullopt;
                    CHECK(left == right);
                }
            }
    }
}

TEST_CASE("relation chains are unique") {
    for (const auto& [name, p] : testkit::corpus(30)) {
        GentleAlgebra alg(p);
        for (std::size_t i = 0; i < p.arrow_count(); ++i) {
            ArrowId a{static_cast<std::uint32_t>(i)};
            std::size_t continuing = 0;
            for (std::size_t j = 0; j < p.arrow_count(); ++j) continuing += p.is_relation(a, ArrowId{static_cast<std::uint32_t>(j)});
            CHECK(continuing <= 1);
            CHECK(alg.relation_continuation(a).has_value() == (continuing == 1));
        }
    }
}
