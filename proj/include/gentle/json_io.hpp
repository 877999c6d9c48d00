#pragma once

#include "gentle/nogaps.hpp"

#include "json.hpp"

namespace gentle {

// Insertion-ordered so that every report is byte-stable across runs.
using Json = nlohmann::ordered_json;

Json to_json(const CohVector& h);
Json to_json(const GentleAlgebra& alg, const Witness& w);
Json to_json(const GentleAlgebra& alg, const ProjComplex& c);
Json to_json(const Presentation& p, const GentleReport& r);
Json to_json(const GentleAlgebra& alg, const DiscretenessReport& r);
Json to_json(const GentleAlgebra& alg, const ReductionTrace& t);
Json to_json(const GentleAlgebra& alg, const SpectrumReport& r, bool with_traces);
Json to_json(const A0Report& r);

}  // namespace gentle
