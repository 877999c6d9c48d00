#pragma once

#include "gentle/witness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gentle {

enum class CaseTag : std::uint8_t {
    one_sided_i0,
    one_sided_mid,
    one_sided_end,
    general_q,
    backward_turn,
    beta_truncation,
    band_unwind,
};
std::string to_string(CaseTag t);

// How the output witness was found. The unit-step peeling walk is the primary
// construction; the other two are verified fallbacks.
enum class Strategy : std::uint8_t { peeling, window_search, global_search };
std::string to_string(Strategy s);

struct ReductionTrace {
    Witness input;
    CohVector input_coh;
    CaseTag tag = CaseTag::general_q;
    std::optional<std::size_t> target_node;
    std::vector<std::string> surgery;
    Strategy strategy = Strategy::peeling;
    Witness output;
    CohVector output_coh;   // closed form
    CohVector oracle_coh;   // exact ranks
    bool verified = false;  // oracle agrees and hl(output) = hl(input) - 1
    std::optional<bool> bridge_identity;  // bands only
};

// Thrown when no witness with hl exactly l - 1 can be produced.
class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t select_target_summand(const GentleAlgebra& alg, const GenWalk& w);

struct SpectrumItem {
    Witness witness;
    CohVector coh;
};

struct ReduceOptions {
    bool negative = false;        // start peeling from the end of the walk
    std::size_t search_bound = 0;  // arrow bound for the global fallback; 0 picks one
    // Precomputed witnesses for the global fallback; built on demand when null.
    const std::vector<SpectrumItem>* pool = nullptr;
};

ReductionTrace reduce_string(const GentleAlgebra& alg, const GenWalk& w, const ReduceOptions& opt = {});
ReductionTrace reduce_beta(const GentleAlgebra& alg, const GenWalk& w, const ReduceOptions& opt = {});
ReductionTrace reduce_band(const GentleAlgebra& alg, const GenWalk& w, const Rational& lambda, std::size_t d,
                           const ReduceOptions& opt = {});
ReductionTrace reduce_stalk(const GentleAlgebra& alg, VertexId v, const ReduceOptions& opt = {});
ReductionTrace reduce_witness(const GentleAlgebra& alg, const Witness& w, const ReduceOptions& opt = {});

struct SpectrumOptions {
    std::size_t max_arrows = 8;
    bool include_bands = true;
    bool reduce_check = false;
    std::size_t threads = 0;  // 0 = hardware concurrency
};

struct SpectrumReport {
    std::vector<std::size_t> achieved;          // hl values, sorted; includes verified reduction outputs
    std::vector<SpectrumItem> representatives;  // one per achieved value
    std::vector<std::size_t> enumeration_gaps;  // gaps among enumerated witnesses only
    std::vector<std::size_t> gaps;              // gaps after adding reduction outputs
    bool complete = false;
    bool derived_discrete = true;
    std::size_t witness_count = 0;
    std::size_t string_count = 0;
    std::size_t beta_count = 0;
    std::size_t band_count = 0;
    std::vector<ReductionTrace> traces;
    std::size_t reductions = 0;
    std::size_t reduction_failures = 0;
    std::vector<std::string> failures;
};

SpectrumReport hl_spectrum(const GentleAlgebra& alg, const SpectrumOptions& opt);

struct A0Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct A0Report {
    std::vector<A0Check> checks;
    std::vector<std::size_t> hr_values;
    std::vector<std::size_t> hl_values;
    std::size_t max_hw = 0;
    std::size_t max_hl = 0;
    std::size_t witnesses = 0;
    std::optional<Witness> hw_maximiser;
    bool pass() const;
};

std::string a0_presentation_text();
A0Report verify_counterexample_a0();

std::size_t worker_count(std::size_t requested);

}  // namespace gentle
