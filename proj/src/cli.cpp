#include "grm/cli.hpp"

#include "grm/errors.hpp"
#include "grm/quiver_file.hpp"
#include "grm/thin_rep.hpp"
#include "grm/weight_synth.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <ostream>

namespace grm {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNotGr = 2;
constexpr int kExitUnsupportedClass = 3;
constexpr int kExitDisagreement = 4;

QuiverFile load_inputs(const RunConfig& cfg) {
    QuiverFile file = load_quiver_file(cfg.quiver_path);
    if (!cfg.weights_path.empty()) load_weight_overrides(file, cfg.weights_path);
    return file;
}

ThinRep rep_from(const QuiverFile& file, const RunConfig& cfg) {
    return ThinRep::from_decl(file.quiver, file.rep(cfg.rep_name));
}

std::string chain_str(const std::vector<VertexSet>& chain, const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) out += " < ";
        out += chain[i].str(ids);
    }
    return out;
}

nlohmann::json measure_json(const Measure& m) {
    nlohmann::json values = nlohmann::json::array();
    for (const Rational& v : m.values()) values.push_back(v.str());
    return values;
}

nlohmann::json chain_json(const std::vector<VertexSet>& chain,
                          const std::vector<std::string>& ids) {
    nlohmann::json stages = nlohmann::json::array();
    for (const VertexSet& stage : chain) {
        nlohmann::json verts = nlohmann::json::array();
        for (std::uint32_t v : stage.indices()) verts.push_back(ids[v]);
        stages.push_back(std::move(verts));
    }
    return stages;
}

int cmd_measure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    QuiverFile file = load_inputs(cfg);
    ThinRep rep = rep_from(file, cfg);
    Measure measure;
    std::vector<SupportChain> chains;
    try {
        measure = gr_measure(rep, file.weights);
        chains = gr_filtrations(rep, file.weights);
    } catch (const UnsupportedSupportError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnsupportedClass;
    }
    const auto& ids = file.quiver.vertex_ids();
    if (cfg.json) {
        nlohmann::json j;
        j["measure"] = measure_json(measure);
        nlohmann::json filtrations = nlohmann::json::array();
        for (const SupportChain& chain : chains) filtrations.push_back(chain_json(chain, ids));
        j["filtrations"] = std::move(filtrations);
        out << j.dump() << "\n";
    } else {
        out << "measure: " << measure.str() << "\n";
        for (const SupportChain& chain : chains) {
            out << "filtration: " << chain_str(chain, ids) << "\n";
        }
    }
    return kExitOk;
}

int cmd_synth(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    QuiverFile file = load_inputs(cfg);
    ThinRep rep = rep_from(file, cfg);
    SubobjectPoset poset = materialize_poset(rep.support());
    SubsetFiltration filtration = parse_filtration(cfg.filtration, file.quiver.vertex_ids());
    SynthesisResult result = synthesize_unique(poset, filtration);
    const auto& ids = file.quiver.vertex_ids();
    bool unique = result.unique == Uniqueness::Unique;
    if (cfg.json) {
        nlohmann::json weights;
        for (std::size_t v = 0; v < ids.size(); ++v) {
            weights[ids[v]] = result.weights.at(static_cast<std::uint32_t>(v)).str();
        }
        nlohmann::json j;
        j["weights"] = weights;
        j["simple_lengths"] = weights;
        j["unique"] = unique;
        out << j.dump() << "\n";
    } else {
        for (std::size_t v = 0; v < ids.size(); ++v) {
            out << "w " << ids[v] << " " << result.weights.at(static_cast<std::uint32_t>(v)).str()
                << "\n";
        }
        for (std::size_t v = 0; v < ids.size(); ++v) {
            out << "l(S(" << ids[v] << ")) = "
                << result.weights.at(static_cast<std::uint32_t>(v)).str() << "\n";
        }
        out << "unique: " << (unique ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    QuiverFile file = load_inputs(cfg);
    ThinRep rep = rep_from(file, cfg);
    SubobjectPoset poset = materialize_poset(rep.support());
    SubsetFiltration filtration = parse_filtration(cfg.filtration, file.quiver.vertex_ids());
    VerifyOutcome outcome = verify_filtration(poset, filtration, file.weights);
    const auto& ids = file.quiver.vertex_ids();
    if (cfg.json) {
        nlohmann::json j;
        j["gr"] = outcome.is_gr;
        if (!outcome.is_gr) {
            j["witness"] = chain_json(outcome.witness, ids);
            j["witness_measure"] = measure_json(outcome.witness_measure);
        }
        out << j.dump() << "\n";
    } else if (outcome.is_gr) {
        out << "GR: yes\n";
    } else {
        out << "GR: no\n";
        out << "witness: " << chain_str(outcome.witness, ids) << "\n";
        out << "witness measure: " << outcome.witness_measure.str() << "\n";
    }
    return outcome.is_gr ? kExitOk : kExitNotGr;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    QuiverFile file = load_inputs(cfg);
    ThinRep rep = rep_from(file, cfg);
    if (rep.support().vertices().size() > cfg.max_vertices) {
        err << "error: support has " << rep.support().vertices().size()
            << " vertices, above the bound of " << cfg.max_vertices << "\n";
        return kExitInvalid;
    }
    SubobjectPoset poset = materialize_poset(rep.support());
    LengthAssignment lengths = poset.lengths(file.weights);
    Measure reference = oracle_l_star(poset.order, lengths, poset.top());
    Measure greedy = l_star(poset.order, lengths, poset.top());
    bool agree = reference == greedy;
    if (cfg.json) {
        nlohmann::json j;
        j["oracle_measure"] = measure_json(reference);
        j["greedy_measure"] = measure_json(greedy);
        j["agreement"] = agree;
        out << j.dump() << "\n";
    } else {
        out << "oracle measure: " << reference.str() << "\n";
        out << "greedy measure: " << greedy.str() << "\n";
        out << "agreement: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? kExitOk : kExitDisagreement;
}

int cmd_d4check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    std::size_t violations = d4_limit_violations(cfg.samples, cfg.seed);
    if (cfg.json) {
        nlohmann::json j;
        j["samples"] = cfg.samples;
        j["violations"] = violations;
        out << j.dump() << "\n";
    } else {
        out << "samples: " << cfg.samples << "\n";
        out << "violations: " << violations << "\n";
    }
    return violations == 0 ? kExitOk : kExitDisagreement;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Gabriel-Roiter measures of thin quiver representations"};
    app.require_subcommand(1);

    auto add_quiver_rep = [&cfg](CLI::App* cmd) {
        cmd->add_option("--quiver", cfg.quiver_path, "quiver file")->required();
        cmd->add_option("--rep", cfg.rep_name, "representation name")->required();
        cmd->add_flag("--json", cfg.json, "JSON output");
    };

    CLI::App* measure = app.add_subcommand(
        "measure", "compute the measure and best filtrations of a representation");
    add_quiver_rep(measure);
    measure->add_option("--weights", cfg.weights_path, "weight overrides file");

    CLI::App* synth = app.add_subcommand(
        "synth", "synthesize weights that realize a filtration");
    add_quiver_rep(synth);
    synth->add_option("--filtration", cfg.filtration, "stages, e.g. \"3 | 3,4,5\"")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "check whether a filtration is a best filtration under the weights");
    add_quiver_rep(verify);
    verify->add_option("--filtration", cfg.filtration, "stages, e.g. \"3 | 3,4,5\"")->required();
    verify->add_option("--weights", cfg.weights_path, "weight overrides file");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "compare the greedy engine against exhaustive chain enumeration");
    add_quiver_rep(oracle);
    oracle->add_option("--weights", cfg.weights_path, "weight overrides file");
    oracle->add_option("--max-vertices", cfg.max_vertices, "support size bound");

    CLI::App* d4check = app.add_subcommand(
        "d4check", "sample weights on the d4 star and count order violations");
    d4check->add_option("--samples", cfg.samples, "number of weight samples");
    d4check->add_option("--seed", cfg.seed, "generator seed");
    d4check->add_flag("--json", cfg.json, "JSON output");

    std::vector<const char*> argv;
    argv.push_back("grm");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (measure->parsed()) return cmd_measure(cfg, out, err);
        if (synth->parsed()) return cmd_synth(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (oracle->parsed()) return cmd_oracle(cfg, out, err);
        if (d4check->parsed()) return cmd_d4check(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    err << "error: no subcommand given\n";
    return kExitInvalid;
}

} // namespace grm
