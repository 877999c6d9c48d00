#include "gentle/json_io.hpp"

namespace gentle {

Json to_json(const CohVector& h) {
    Json dims = Json::object();
    for (auto [deg, d] : h.dims) dims[std::to_string(deg)] = d;
    return Json{{"dims", dims}, {"hl", h.hl()}, {"hw", h.hw()}, {"hr", h.hr()}};
}

Json to_json(const GentleAlgebra& alg, const Witness& w) {
    Json j{{"kind", to_string(w.kind)}};
    if (w.kind == WitnessKind::stalk)
        j["vertex"] = alg.presentation().vertex_name(w.vertex);
    else
        j["walk"] = format_walk(alg, w.walk);
    if (w.kind == WitnessKind::band) {
        j["lambda"] = to_string(w.lambda);
        j["d"] = w.d;
    }
    j["shift"] = w.shift;
    return j;
}

Json to_json(const GentleAlgebra& alg, const ProjComplex& c) {
    Json degrees = Json::object();
    for (const auto& [deg, list] : c.summands) {
        Json arr = Json::array();
        for (const Summand& s : list) arr.push_back(Json::array({alg.presentation().vertex_name(s.vertex), s.copy}));
        degrees[std::to_string(deg)] = arr;
    }
    Json diffs = Json::object();
    for (const auto& [deg, entries] : c.diffs) {
        Json arr = Json::array();
        for (const Entry& e : entries) {
            Json terms = Json::array();
            for (const Term& t : e.terms) terms.push_back(Json::array({format_path(alg, t.path), to_string(t.scalar)}));
            arr.push_back(Json{{"row", e.row}, {"col", e.col}, {"terms", terms}});
        }
        diffs[std::to_string(deg)] = arr;
    }
    return Json{{"degrees", degrees}, {"diffs", diffs}};
}

Json to_json(const Presentation& p, const GentleReport& r) {
    Json v = Json::array();
    for (const Violation& x : r.violations)
        v.push_back(Json{{"axiom", x.axiom}, {"message", x.message}, {"vertices", x.vertices}, {"arrows", x.arrows}});
    return Json{{"algebra", p.name},
                {"vertices", p.vertex_count()},
                {"arrows", p.arrow_count()},
                {"relations", p.relations().size()},
                {"pass", r.pass},
                {"violations", v}};
}

Json to_json(const GentleAlgebra& alg, const DiscretenessReport& r) {
    return Json{{"derived_discrete", r.discrete},
                {"band", r.band ? Json(format_walk(alg, *r.band)) : Json(nullptr)},
                {"letters", r.letters},
                {"components", r.components},
                {"cyclic_components", r.cyclic_components},
                {"certificate", r.certificate}};
}

Json to_json(const GentleAlgebra& alg, const ReductionTrace& t) {
    Json j{{"case", to_string(t.tag)},
           {"strategy", to_string(t.strategy)},
           {"input", to_json(alg, t.input)},
           {"input_cohomology", to_json(t.input_coh)}};
    j["target_node"] = t.target_node ? Json(*t.target_node) : Json(nullptr);
    j["surgery"] = t.surgery;
    j["output"] = to_json(alg, t.output);
    j["output_cohomology"] = to_json(t.output_coh);
    j["oracle_cohomology"] = to_json(t.oracle_coh);
    j["verified"] = t.verified;
    if (t.bridge_identity) j["bridge_identity"] = *t.bridge_identity;
    return j;
}

Json to_json(const GentleAlgebra& alg, const SpectrumReport& r, bool with_traces) {
    Json reps = Json::array();
    for (const SpectrumItem& it : r.representatives)
        reps.push_back(Json{{"hl", it.coh.hl()}, {"witness", to_json(alg, it.witness)}, {"cohomology", to_json(it.coh)}});
    Json j{{"algebra", alg.presentation().name},
           {"achieved", r.achieved},
           {"witnesses", reps},
           {"enumeration_gaps", r.enumeration_gaps},
           {"gaps", r.gaps},
           {"complete", r.complete},
           {"derived_discrete", r.derived_discrete},
           {"counts",
            Json{{"total", r.witness_count}, {"strings", r.string_count}, {"beta", r.beta_count}, {"bands", r.band_count}}},
           {"reductions", Json{{"checked", r.reductions}, {"failed", r.reduction_failures}, {"failures", r.failures}}}};
    if (with_traces) {
        Json tr = Json::array();
        for (const ReductionTrace& t : r.traces) tr.push_back(to_json(alg, t));
        j["traces"] = tr;
    }
    return j;
}

Json to_json(const A0Report& r) {
    Json checks = Json::array();
    for (const A0Check& c : r.checks) checks.push_back(Json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"algebra", "A0"},
                {"pass", r.pass()},
                {"checks", checks},
                {"hr_values", r.hr_values},
                {"hl_values", r.hl_values},
                {"max_hw", r.max_hw},
                {"max_hl", r.max_hl},
                {"witnesses", r.witnesses}};
}

}  // namespace gentle
