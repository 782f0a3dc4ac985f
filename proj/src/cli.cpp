#include "casweep/cli.hpp"

#include <CLI11.hpp>

#include "casweep/io.hpp"

namespace casweep::cli {

namespace {

using io::json;

struct Options {
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    Index max_psi = Index{1} << 26;
};

json header(const std::string& command) { return {{"schema_version", io::schema_version}, {"command", command}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json closing_pair(const LocalRule& f) {
    return {{"left", io::to_json(left_closing_decide(f))}, {"right", io::to_json(right_closing_decide(f))}};
}

json analyze_report(const LocalRule& f, bool& exists) {
    json j = header("analyze");
    j["rule"] = io::to_json(f);
    const SliderReport rep = slider_exists(f);
    j["closing"] = {{"left", io::to_json(rep.closing)}, {"right", io::to_json(right_closing_decide(f))}};
    j["stairs"] = io::to_json(rep);
    if (rep.lambda) j["shift_offset"] = shift_offset_from_lambda(*rep.lambda, f.q);
    exists = rep.exists;
    return j;
}

int cmd_analyze(const std::string& rule_file, std::ostream& out, std::ostream& err) {
    const LocalRule f = io::rule_from_json(io::load_json(rule_file));
    bool exists = false;
    const json j = analyze_report(f, exists);
    emit(out, j);
    err << (exists ? "slider exists" : "no slider") << "\n";
    return exists ? Ok : Negative;
}

int cmd_synthesize(const std::string& rule_file, const std::string& out_file, const Options& o, std::ostream& out,
                   std::ostream& err) {
    const LocalRule f = io::rule_from_json(io::load_json(rule_file));
    bool exists = false;
    json rep = analyze_report(f, exists);
    if (!exists) {
        emit(out, rep);
        err << "no slider exists; nothing written\n";
        return Negative;
    }
    const Synthesis s = synthesize(f, o.max_psi);
    if (!is_slider_rule_for(s.rule, f)) throw IntegrityError("synthesized rule failed its exact self-check");
    io::save_json(out_file, io::to_json(s.rule));
    std::filesystem::path man(out_file);
    man.replace_extension(".manifest.json");
    io::save_json(man, io::manifest(s));
    json j = header("synthesize");
    j["manifest"] = io::manifest(s);
    j["block_length"] = s.rule.m();
    j["self_check"] = true;
    emit(out, j);
    err << "wrote block rule of length " << s.rule.m() << "\n";
    return Ok;
}

int cmd_verify(const std::string& block_file, const std::string& rule_file, bool exact, const Options& o,
               std::ostream& out, std::ostream& err) {
    const BlockRule chi = io::block_from_json(io::load_json(block_file));
    const LocalRule f = io::rule_from_json(io::load_json(rule_file));
    if (!chi.is_bijective()) throw std::domain_error("block rule is not bijective");
    if (chi.q() != f.q) throw std::domain_error("block rule and CA alphabets differ");
    json j = header("verify");
    bool ok;
    if (exact) {
        ok = is_slider_rule_for(chi, f);
        j["mode"] = "exact";
        j["slider"] = ok;
    } else {
        std::optional<SliderCounterexample> cex;
        ok = verify_slider(chi, f, o.samples, o.seed, &cex);
        j["mode"] = "sampled";
        j["samples"] = o.samples;
        j["seed"] = o.seed;
        j["slider"] = ok;
        j["sweeper_agrees"] = slider_sweeper_agree(chi, f, o.samples, o.seed);
        if (cex)
            j["counterexample"] = {{"x", io::to_json(cex->rep.x)},
                                   {"i", cex->rep.i},
                                   {"y", io::to_json(cex->y)},
                                   {"z", io::to_json(cex->z)},
                                   {"expected", io::to_json(cex->expected)}};
    }
    emit(out, j);
    err << (ok ? "verified" : "not a slider rule for this CA") << "\n";
    return ok ? Ok : Negative;
}

// Rows of the tape as chi is applied at i, i+1, ... across the interesting part.
void trace(const BlockRule& chi, const EpConfig& x, Pos i, std::ostream& err) {
    const Pos lo = std::min(i, x.center_start) - 2;
    const Pos hi = std::max(i, x.center_end()) + static_cast<Pos>(chi.m()) + 2;
    EpConfig cur = x;
    auto row = [&](const EpConfig& c) {
        std::string s;
        for (Pos k = lo; k < hi; ++k) s += (c.q <= 10 ? std::to_string(c.cell(k)) : " " + std::to_string(c.cell(k)));
        return s;
    };
    err << "trace cells [" << lo << ", " << hi << ")\n" << row(cur) << "\n";
    for (Pos j = i; j + static_cast<Pos>(chi.m()) <= hi; ++j) {
        cur = apply_at(chi, cur, j);
        err << row(cur) << "\n";
    }
}

int cmd_sweep(const std::string& block_file, const std::string& config_file, const std::string& mode, Pos anchor,
              bool want_trace, std::ostream& out, std::ostream& err) {
    const BlockRule chi = io::block_from_json(io::load_json(block_file));
    const EpConfig x = io::config_from_json(io::load_json(config_file));
    if (x.q != chi.q()) throw std::domain_error("configuration and block rule alphabets differ");
    json j = header("sweep");
    j["mode"] = mode;
    if (want_trace) trace(chi, x, anchor, err);
    if (mode == "slider") {
        j["anchor"] = anchor;
        j["forward"] = io::to_json(sweep_right_limit(chi, x, anchor));
        if (chi.is_bijective()) j["backward"] = io::to_json(sweep_left_limit(chi.inverse(), x, anchor));
        emit(out, j);
        return Ok;
    }
    const SweepOutcome s = sweeper_eval(chi, x);
    j["sweeper"] = io::to_json(s);
    emit(out, j);
    err << (s.converges ? "converges" : "diverges") << "\n";
    return s.converges ? Ok : Negative;
}

int cmd_mealy(const std::string& block_file, std::ostream& out, std::ostream& err) {
    const BlockRule chi = io::block_from_json(io::load_json(block_file));
    const MealyAutomaton M = mealy_from_block(chi);
    const GoodStates g = good_states(M);
    json good = json::array(), bad = json::array();
    for (Index s = 0; s < M.states; ++s) (g.good[s] ? good : bad).push_back(s);
    json j = header("mealy");
    j["states"] = M.states;
    j["bijective"] = M.is_bijective();
    j["transformations"] = g.transformations;
    j["good"] = good;
    j["bad"] = bad;
    emit(out, j);
    err << bad.size() << " bad states\n";
    return bad.empty() ? Ok : Negative;
}

int cmd_decompose(const std::string& rule_file, const std::string& out_dir, const Options& o, std::ostream& out,
                  std::ostream& err) {
    const LocalRule f = io::rule_from_json(io::load_json(rule_file));
    const Decomposition d = decompose_biclosing(f);
    const bool ok = verify_decomposition(d, 100, o.seed);
    io::save_decomposition(out_dir, d);
    json stages = json::array();
    const auto lams = stage_lambdas(d);
    for (std::size_t i = 0; i < d.stages.size(); ++i)
        stages.push_back({{"direction", direction_name(d.stages[i].direction)},
                          {"block_length", d.stages[i].rule.m()},
                          {"realizes", io::to_json(d.realized[i])},
                          {"lambda", io::to_json(lams[i])}});
    json j = header("decompose");
    j["shift_offset"] = shift_offset(f);
    j["stages"] = stages;
    j["verified_samples"] = 100;
    j["verified"] = ok;
    emit(out, j);
    err << (ok ? "decomposition verified" : "decomposition FAILED verification") << "\n";
    return ok ? Ok : Negative;
}

int cmd_closing(const std::string& rule_file, std::ostream& out, std::ostream& err) {
    const LocalRule f = io::rule_from_json(io::load_json(rule_file));
    json j = header("closing");
    j["verdicts"] = closing_pair(f);
    const bool both = j["verdicts"]["left"]["closing"].get<bool>() && j["verdicts"]["right"]["closing"].get<bool>();
    j["bi_closing"] = both;
    emit(out, j);
    err << (both ? "bi-closing" : "not bi-closing") << "\n";
    return both ? Ok : Negative;
}

ZAutomaton build_automaton(const std::string& kind, const std::string& file) {
    if (kind == "slider") return slider_relation_automaton(io::block_from_json(io::load_json(file)));
    if (kind == "sweeper") return sweeper_relation_automaton(io::block_from_json(io::load_json(file)));
    if (kind == "mismatch") return graph_mismatch_automaton(io::rule_from_json(io::load_json(file)));
    throw std::domain_error("unknown automaton kind '" + kind + "' (slider, sweeper, mismatch)");
}

json witness_json(const std::vector<EpConfig>& w) {
    json a = json::array();
    for (const auto& x : w) a.push_back(io::to_json(x));
    return a;
}

int cmd_automata(const std::string& action, const std::vector<std::string>& files, std::ostream& out,
                 std::ostream& err) {
    json j = header("automata " + action);
    if (action == "dump") {
        if (files.size() != 2) throw std::domain_error("usage: automata dump <slider|sweeper|mismatch> <file>");
        emit(out, io::to_json(build_automaton(files[0], files[1])));
        return Ok;
    }
    if (files.empty()) throw std::domain_error("automata " + action + " needs an automaton file");
    const ZAutomaton A = io::automaton_from_json(io::load_json(files[0]));
    if (action == "inspect") {
        const ZAutomaton T = trim(A);
        j["states"] = A.states;
        j["edges"] = A.edges.size();
        j["tracks"] = A.tracks;
        j["offsets"] = A.offsets;
        j["useful_states"] = T.states;
        j["empty"] = T.states == 0;
        emit(out, j);
        return Ok;
    }
    if (action == "member") {
        std::vector<EpConfig> tracks;
        for (std::size_t i = 1; i < files.size(); ++i) tracks.push_back(io::config_from_json(io::load_json(files[i])));
        const bool in = member(A, tracks);
        j["member"] = in;
        emit(out, j);
        err << (in ? "accepted" : "rejected") << "\n";
        return in ? Ok : Negative;
    }
    if (action == "empty") {
        const auto w = nonempty_witness(A);
        j["empty"] = !w;
        if (w) j["witness"] = witness_json(*w);
        emit(out, j);
        err << (w ? "nonempty" : "empty") << "\n";
        return w ? Negative : Ok;
    }
    throw std::domain_error("unknown automata action '" + action + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sliders and sweepers for one-dimensional cellular automata", "casweep"};
    app.require_subcommand(1);
    Options o;
    std::size_t max_states = max_automaton_states();
    app.add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    app.add_option("--samples", o.samples, "number of sampled configurations")->capture_default_str();
    app.add_option("--max-psi", o.max_psi, "cap on materialized stairs")->capture_default_str();
    app.add_option("--max-automaton-states", max_states, "cap on automaton product sizes")->capture_default_str();

    std::string a1, a2, mode = "slider", action;
    std::vector<std::string> files;
    bool exact = false, want_trace = false;
    Pos anchor = 0;

    auto* analyze = app.add_subcommand("analyze", "closing, stairs, lambda and slider verdict")->fallthrough();
    analyze->add_option("rule", a1)->required();
    auto* synth = app.add_subcommand("synthesize", "build a slider block rule")->fallthrough();
    synth->add_option("rule", a1)->required();
    synth->add_option("out", a2)->required();
    auto* verify = app.add_subcommand("verify", "check a block rule against a CA")->fallthrough();
    verify->add_option("block", a1)->required();
    verify->add_option("rule", a2)->required();
    verify->add_flag("--exact", exact, "decide with automata instead of sampling");
    auto* sweep = app.add_subcommand("sweep", "run a sweep on a configuration")->fallthrough();
    sweep->add_option("block", a1)->required();
    sweep->add_option("config", a2)->required();
    sweep->add_option("--mode", mode)->check(CLI::IsMember({"slider", "sweeper"}))->capture_default_str();
    sweep->add_option("--anchor", anchor)->capture_default_str();
    sweep->add_flag("--trace", want_trace, "space-time grid on stderr");
    auto* mealy = app.add_subcommand("mealy", "good and bad Mealy states")->fallthrough();
    mealy->add_option("block", a1)->required();
    auto* decompose = app.add_subcommand("decompose", "two-stage decomposition of a bi-closing CA")->fallthrough();
    decompose->add_option("rule", a1)->required();
    decompose->add_option("out_dir", a2)->required();
    auto* closing = app.add_subcommand("closing", "left and right closing verdicts")->fallthrough();
    closing->add_option("rule", a1)->required();
    auto* automata = app.add_subcommand("automata", "dump, inspect, member, empty")->fallthrough();
    automata->add_option("action", action)->required()->check(CLI::IsMember({"dump", "inspect", "member", "empty"}));
    automata->add_option("files", files);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return Usage;
    }
    max_automaton_states() = max_states;

    try {
        if (*analyze) return cmd_analyze(a1, out, err);
        if (*synth) return cmd_synthesize(a1, a2, o, out, err);
        if (*verify) return cmd_verify(a1, a2, exact, o, out, err);
        if (*sweep) return cmd_sweep(a1, a2, mode, anchor, want_trace, out, err);
        if (*mealy) return cmd_mealy(a1, out, err);
        if (*decompose) return cmd_decompose(a1, a2, o, out, err);
        if (*closing) return cmd_closing(a1, out, err);
        if (*automata) return cmd_automata(action, files, out, err);
    } catch (const VerdictError& e) {
        json j = header("verdict");
        j["verdict"] = e.what();
        j["evidence"] = witness_json(e.evidence);
        emit(out, j);
        err << e.what() << "\n";
        return Negative;
    } catch (const ResourceError& e) {
        err << "resource cap exceeded: " << e.what() << "\n";
        return Cap;
    } catch (const IntegrityError& e) {
        err << "internal check failed: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
    return Usage;
}

}  // namespace casweep::cli
