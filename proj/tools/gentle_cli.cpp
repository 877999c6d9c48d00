// Command-line front end. Every verb prints one JSON document on stdout; diagnostics
// go to stderr. Exit codes: 0 ok, 1 input error, 2 spectrum gap or failed reduction,
// 3 counterexample assertion failed.
#include "gentle/json_io.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

using namespace gentle;

struct ObjectArgs {
    std::string walk;
    std::string stalk;
    bool band = false;
    bool beta = false;
    std::string lambda = "1";
    std::size_t mult = 1;
};

void add_object_options(CLI::App* cmd, ObjectArgs& a, bool allow_beta) {
    cmd->add_option("--walk", a.walk, "walk literal, e.g. \"a1, ~a2.a3\"");
    cmd->add_option("--stalk", a.stalk, "vertex id of a stalk complex P_v");
    cmd->add_flag("--band", a.band, "treat the walk as a generalized band");
    cmd->add_option("--lambda", a.lambda, "band parameter as an exact fraction, e.g. 1/2");
    cmd->add_option("--mult", a.mult, "band multiplicity d")->check(CLI::PositiveNumber);
    if (allow_beta) cmd->add_flag("--beta", a.beta, "apply the beta construction");
}

Witness object_from(const GentleAlgebra& alg, const ObjectArgs& a) {
    if (!a.stalk.empty()) {
        if (!a.walk.empty()) throw InputError("give either --walk or --stalk, not both");
        auto v = alg.presentation().find_vertex(a.stalk);
        if (!v) throw InputError("unknown vertex '" + a.stalk + "'");
        return Witness::stalk(*v);
    }
    if (a.walk.empty()) throw InputError("--walk or --stalk is required");
    Walk w = parse_walk(alg, a.walk);
    GenWalk g = classify_walk(alg, w);
    if (a.band) {
        if (g.kind != WalkKind::gba) throw InputError("walk is not a generalized band" + (g.reason.empty() ? "" : ": " + g.reason));
        if (a.beta) throw InputError("--beta does not apply to bands");
        Rational lambda = parse_rational(a.lambda);
        if (lambda == 0) throw InputError("lambda must be nonzero");
        return Witness::band(w, lambda, a.mult);
    }
    if (g.kind == WalkKind::invalid) throw InputError("walk is not a generalized string: " + g.reason);
    return a.beta ? Witness::beta(w) : Witness::string(w);
}

GentleAlgebra load(const std::string& file) { return GentleAlgebra(load_presentation(file)); }

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gentle algebras: generalized strings, bands, projective complexes and cohomological length"};
    app.require_subcommand(1);
    std::string file;
    std::size_t max_arrows = 8;
    bool with_bands = false;
    bool no_bands = false;
    bool reduce_check = false;
    bool traces = false;
    bool negative = false;
    std::string method = "rank";
    ObjectArgs obj;

    auto* validate = app.add_subcommand("validate", "check the gentle axioms and finite dimension");
    validate->add_option("file", file)->required();
    auto* basis = app.add_subcommand("basis", "list the path basis");
    basis->add_option("file", file)->required();
    auto* enumerate = app.add_subcommand("enumerate", "enumerate generalized strings (and bands)");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--max-arrows", max_arrows)->required();
    enumerate->add_flag("--bands", with_bands, "also enumerate primitive generalized bands");
    auto* complex = app.add_subcommand("complex", "materialize a projective complex");
    complex->add_option("file", file)->required();
    add_object_options(complex, obj, false);
    auto* cohomology = app.add_subcommand("cohomology", "cohomology dimension vector");
    cohomology->add_option("file", file)->required();
    add_object_options(cohomology, obj, true);
    cohomology->add_option("--method", method, "rank (exact elimination) or formula (closed form)")
        ->check(CLI::IsMember({"rank", "formula"}));
    auto* spectrum = app.add_subcommand("spectrum", "achieved cohomological lengths and gaps");
    spectrum->add_option("file", file)->required();
    spectrum->add_option("--max-arrows", max_arrows)->required();
    spectrum->add_flag("--reduce-check", reduce_check, "reduce every witness with hl > 1 and verify hl - 1");
    spectrum->add_flag("--no-bands", no_bands, "leave band complexes out of the witness family");
    spectrum->add_flag("--traces", traces, "include every reduction trace in the report");
    auto* reduce = app.add_subcommand("reduce", "produce a witness of cohomological length one less");
    reduce->add_option("file", file)->required();
    add_object_options(reduce, obj, true);
    reduce->add_flag("--negative", negative, "peel from the end of the walk instead of the start");
    auto* discrete = app.add_subcommand("discrete", "decide derived discreteness");
    discrete->add_option("file", file)->required();
    auto* demo = app.add_subcommand("demo-a0", "verify the cohomological range counterexample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*validate) {
            Presentation p = load_presentation(file);
            GentleReport r = validate_gentle(p);
            emit(to_json(p, r));
            return r.pass ? 0 : 1;
        }
        if (*demo) {
            A0Report r = verify_counterexample_a0();
            emit(to_json(r));
            return r.pass() ? 0 : 3;
        }
        GentleAlgebra alg = load(file);
        if (*basis) {
            Json dims = Json::object();
            Json paths = Json::array();
            for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
                VertexId id{static_cast<std::uint32_t>(v)};
                dims[alg.presentation().vertex_name(id)] = alg.dim_projective(id);
                for (const Path& p : alg.paths_from(id)) paths.push_back(format_path(alg, p));
            }
            emit(Json{{"algebra", alg.presentation().name}, {"size", paths.size()}, {"dim_projective", dims}, {"paths", paths}});
        } else if (*enumerate) {
            Enumeration e = enumerate_gst(alg, max_arrows);
            Json strings = Json::array();
            for (const Walk& w : e.walks) strings.push_back(format_walk(alg, w));
            Json out{{"algebra", alg.presentation().name}, {"max_arrows", max_arrows}, {"complete", e.complete}, {"strings", strings}};
            if (with_bands) {
                Enumeration b = enumerate_gba(alg, max_arrows);
                Json bands = Json::array();
                for (const Walk& w : b.walks) bands.push_back(format_walk(alg, w));
                out["bands"] = bands;
                out["bands_complete"] = b.complete;
            }
            emit(out);
        } else if (*complex) {
            Witness w = object_from(alg, obj);
            ProjComplex c = w.kind == WitnessKind::stalk  ? stalk_complex(alg, w.vertex)
                            : w.kind == WitnessKind::band ? band_complex(alg, classify_walk(alg, w.walk), w.lambda, w.d)
                                                          : string_complex(alg, classify_walk(alg, w.walk));
            emit(to_json(alg, c));
        } else if (*cohomology) {
            Witness w = object_from(alg, obj);
            CohVector h;
            if (method == "formula")
                h = cohomology_fast(alg, w);
            else if (w.kind == WitnessKind::beta)
                h = beta_cohomology(alg, classify_walk(alg, w.walk));
            else
                h = cohomology_rank(alg, w);
            emit(to_json(h));
        } else if (*spectrum) {
            SpectrumOptions opt;
            opt.max_arrows = max_arrows;
            opt.include_bands = !no_bands;
            opt.reduce_check = reduce_check;
            SpectrumReport r = hl_spectrum(alg, opt);
            emit(to_json(alg, r, traces));
            return (r.gaps.empty() && r.reduction_failures == 0) ? 0 : 2;
        } else if (*reduce) {
            Witness w = object_from(alg, obj);
            ReduceOptions opt;
            opt.negative = negative;
            try {
                emit(to_json(alg, reduce_witness(alg, w, opt)));
            } catch (const ReductionError& e) {
                emit(Json{{"error", Json{{"kind", "reduction"}, {"message", e.what()}}}});
                std::cerr << "reduce: " << e.what() << '\n';
                return 2;
            }
        } else if (*discrete) {
            emit(to_json(alg, is_derived_discrete(alg)));
        }
        return 0;
    } catch (const ParseError& e) {
        emit(Json{{"error", Json{{"kind", "parse"}, {"line", e.line()}, {"message", e.what()}}}});
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InputError& e) {
        emit(Json{{"error", Json{{"kind", "input"}, {"message", e.what()}}}});
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
