#include "doctest.h"

#include "corpus.hpp"

#include "gentle/cohomology.hpp"
#include "gentle/nogaps.hpp"

#include <algorithm>

using namespace gentle;

namespace {

long euler_of_chains(const GentleAlgebra& alg, const ProjComplex& c) {
    long chi = 0;
    for (const auto& [deg, list] : c.summands) {
        long dim = static_cast<long>(degree_dimension(alg, c, deg));
        chi += (deg % 2 == 0) ? dim : -dim;
    }
    return chi;
}

long euler_of_cohomology(const CohVector& h) {
    long chi = 0;
    for (auto [deg, d] : h.dims) chi += (deg % 2 == 0) ? static_cast<long>(d) : -static_cast<long>(d);
    return chi;
}

// Per-degree dimension profile, re-based at the lowest degree.
std::vector<std::size_t> profile(const GentleAlgebra& alg, const ProjComplex& c) {
    std::vector<std::size_t> out;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) out.push_back(degree_dimension(alg, c, d));
    return out;
}

struct Tally {
    std::size_t complexes = 0;
};

void check_complex(const GentleAlgebra& alg, const ProjComplex& c, Tally& t) {
    CHECK(check_d_squared_zero(alg, c));
    CHECK(check_minimal(c));
    CHECK(euler_of_chains(alg, c) == euler_of_cohomology(cohomology_dims(alg, c)));
    ++t.complexes;
}

}  // namespace

TEST_CASE("structural invariants of constructed complexes") {
    Tally t;
    for (const auto& [name, p] : testkit::corpus(30)) {
        CAPTURE(name);
        GentleAlgebra alg(p);
        for (std::size_t v = 0; v < p.vertex_count(); ++v) check_complex(alg, stalk_complex(alg, VertexId{static_cast<std::uint32_t>(v)}), t);
        for (const Walk& w : enumerate_gst(alg, 7).walks) {
            CAPTURE(format_walk(alg, w));
            GenWalk g = classify_walk(alg, w);
            ProjComplex c = string_complex(alg, g);
            check_complex(alg, c, t);
            CHECK(c.summand_count() == w.size() + 1);

            // P_w and P_{w^-1} agree up to a uniform shift.
            ProjComplex ci = string_complex(alg, classify_walk(alg, inverse(w)));
            CHECK(profile(alg, c) == profile(alg, ci));

            // Shifts move cohomology and nothing else.
            for (int k : {-2, 1, 3}) {
                ProjComplex s = shift(c, k);
                CHECK(check_d_squared_zero(alg, s));
                CHECK(cohomology_dims(alg, s) == cohomology_dims(alg, c).shifted(k));
            }
            // Brutal truncations stay complexes.
            for (int j = c.min_degree(); j <= c.max_degree(); ++j) {
                ProjComplex b = brutal_truncate(c, j);
                CHECK(check_d_squared_zero(alg, b));
                CHECK(check_minimal(b));
            }
        }
        for (const Walk& w : enumerate_gba(alg, 8).walks) {
            GenWalk g = classify_walk(alg, w);
            for (std::size_t d : {1u, 2u, 3u}) {
                ProjComplex c = band_complex(alg, g, Rational(-1, 2), d);
                check_complex(alg, c, t);
                CHECK(c.summand_count() == w.size() * d);
                for (const auto& [deg, list] : c.summands)
                    for (const Summand& s : list) CHECK((s.copy >= 1 && s.copy <= d));
            }
        }
    }
    MESSAGE("complexes checked: " << t.complexes);
    CHECK(t.complexes >= 1000);
}

TEST_CASE("enumerations are duplicate-free and canonical") {
    for (const auto& [name, p] : testkit::corpus(30)) {
        GentleAlgebra alg(p);
        auto gst = enumerate_gst(alg, 7).walks;
        CHECK(std::adjacent_find(gst.begin(), gst.end()) == gst.end());
        for (const Walk& w : gst) CHECK(canonical_string_form(w) == w);
        auto gba = enumerate_gba(alg, 8).walks;
        for (const Walk& w : gba) {
            CHECK(classify_walk(alg, w).kind == WalkKind::gba);
            CHECK(canonical_band_form(w) == w);
            CHECK(primitive_root(w) == w);
        }
    }
}

TEST_CASE("cohomological invariants are shift-invariant") {
    GentleAlgebra alg(parse_presentation(a0_presentation_text()));
    for (const Walk& w : enumerate_gst(alg, 12).walks) {
        CohVector h = formula_dims(alg, w);
        for (int k : {-3, 2}) {
            CHECK(h.shifted(k).hl() == h.hl());
            CHECK(h.shifted(k).hw() == h.hw());
            CHECK(h.shifted(k).hr() == h.hr());
        }
        CHECK(h.hr() == h.hl() * h.hw());
    }
}
