#include "casweep/io.hpp"

#include <fstream>

namespace casweep::io {

json load_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw FormatError("cannot open " + p.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(p.string() + ": " + e.what());
    }
}

void save_json(const std::filesystem::path& p, const json& j) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << j.dump(2) << "\n";
}

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

// domain errors from constructors are input errors here
template <class F>
auto checked(F&& make) {
    try {
        return make();
    } catch (const std::domain_error& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

json to_json(const EpConfig& x) {
    return {{"alphabet", x.q},
            {"left_period", x.left_period},
            {"center", x.center},
            {"center_start", x.center_start},
            {"right_period", x.right_period}};
}

EpConfig config_from_json(const json& j) {
    return checked([&] {
        return EpConfig(field<unsigned>(j, "alphabet"), field<Word>(j, "left_period"), field<Word>(j, "center"),
                        field<Pos>(j, "center_start"), field<Word>(j, "right_period"));
    });
}

json to_json(const BlockRule& chi) {
    return {{"alphabet", chi.q()}, {"block_length", chi.m()}, {"table", chi.table()}};
}

BlockRule block_from_json(const json& j) {
    return checked([&] {
        return BlockRule(field<unsigned>(j, "alphabet"), field<unsigned>(j, "block_length"),
                         field<std::vector<std::uint32_t>>(j, "table"));
    });
}

json to_json(const LocalRule& f) {
    return {{"alphabet", f.q}, {"anchor", f.anchor}, {"width", f.width}, {"table", f.table}};
}

LocalRule rule_from_json(const json& j) {
    return checked([&] {
        return LocalRule(field<unsigned>(j, "alphabet"), field<Pos>(j, "anchor"), field<unsigned>(j, "width"),
                         field<Word>(j, "table"));
    });
}

json to_json(const ValuedRational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

json to_json(const ClosingVerdict& v) {
    json j{{"closing", v.closing}};
    if (v.closing) j["radius"] = v.radius;
    if (v.witness_a) j["witness"] = json::array({to_json(*v.witness_a), to_json(*v.witness_b)});
    return j;
}

json to_json(const SliderReport& r) {
    json j{{"left_closing", to_json(r.closing)}, {"slider_exists", r.exists}};
    if (r.closing.closing) {
        j["m"] = r.m;
        j["psi_cardinality"] = r.psi;
    }
    if (r.lambda) {
        j["lambda"] = to_json(*r.lambda);
        json vals = json::object();
        for (auto [p, v] : r.valuations) vals[std::to_string(p)] = v;
        j["valuations"] = vals;
    }
    j["violating_primes"] = r.violating_primes;
    return j;
}

json to_json(const SweepOutcome& s) {
    json lim = json::array();
    for (const auto& x : s.limits) lim.push_back(to_json(x));
    return {{"outcome", s.converges ? "converges" : "diverges"}, {"limits", lim}, {"cycle_states", s.cycle_states}};
}

json to_json(const ZAutomaton& A) {
    json edges = json::array();
    for (const auto& e : A.edges) {
        json label = json::array();
        for (unsigned k = 0; k < A.tracks; ++k) label.push_back(A.digit(e.letter, k));
        edges.push_back({{"from", e.from}, {"label", label}, {"to", e.to}});
    }
    json I = json::array(), F = json::array();
    for (std::size_t s = 0; s < A.states; ++s) {
        if (A.initial[s]) I.push_back(s);
        if (A.final_[s]) F.push_back(s);
    }
    return {{"schema_version", schema_version},
            {"alphabet", A.q},
            {"tracks", A.tracks},
            {"offsets", A.offsets},
            {"states", A.states},
            {"edges", edges},
            {"initial", I},
            {"final", F}};
}

ZAutomaton automaton_from_json(const json& j) {
    ZAutomaton A;
    A.q = field<unsigned>(j, "alphabet");
    A.tracks = field<unsigned>(j, "tracks");
    A.offsets = field<std::vector<Pos>>(j, "offsets");
    A.states = field<std::size_t>(j, "states");
    A.initial.assign(A.states, 0);
    A.final_.assign(A.states, 0);
    for (auto s : field<std::vector<std::size_t>>(j, "initial")) {
        if (s >= A.states) throw FormatError("initial state out of range");
        A.initial[s] = 1;
    }
    for (auto s : field<std::vector<std::size_t>>(j, "final")) {
        if (s >= A.states) throw FormatError("final state out of range");
        A.final_[s] = 1;
    }
    for (const auto& e : field<json>(j, "edges")) {
        const auto label = field<Word>(e, "label");
        if (label.size() != A.tracks) throw FormatError("edge label has wrong track count");
        std::uint32_t letter = 0;
        for (Symbol s : label) {
            if (s >= A.q) throw FormatError("edge label symbol outside alphabet");
            letter = letter * A.q + s;
        }
        A.edges.push_back({field<std::uint32_t>(e, "from"), letter, field<std::uint32_t>(e, "to")});
    }
    checked([&] {
        A.validate();
        return 0;
    });
    return A;
}

json manifest(const Synthesis& s) {
    return {{"schema_version", schema_version}, {"n", s.n}, {"N", s.N}, {"psi", s.psi}, {"m", s.m},
            {"pi", "lex-interleave-v1"}};
}

void save_decomposition(const std::filesystem::path& dir, const Decomposition& d) {
    std::filesystem::create_directories(dir);
    json stages = json::array();
    for (std::size_t i = 0; i < d.stages.size(); ++i) {
        const std::string name = "stage_" + std::to_string(i + 1) + ".json";
        save_json(dir / name, to_json(d.stages[i].rule));
        json st{{"file", name}, {"direction", direction_name(d.stages[i].direction)}};
        if (i < d.realized.size()) st["realizes"] = to_json(d.realized[i]);
        stages.push_back(st);
    }
    save_json(dir / "claimed_ca.json", to_json(d.claimed_ca));
    save_json(dir / "decomposition.json",
              {{"schema_version", schema_version}, {"stages", stages}, {"claimed_ca", "claimed_ca.json"}});
}

Decomposition load_decomposition(const std::filesystem::path& file) {
    const json j = load_json(file);
    const auto base = file.parent_path();
    Decomposition d;
    d.claimed_ca = rule_from_json(load_json(base / field<std::string>(j, "claimed_ca")));
    bool all_realized = true;
    for (const auto& st : field<json>(j, "stages")) {
        DirectedSlider s;
        s.rule = block_from_json(load_json(base / field<std::string>(st, "file")));
        s.direction = checked([&] { return direction_from_name(field<std::string>(st, "direction")); });
        d.stages.push_back(s);
        if (st.contains("realizes"))
            d.realized.push_back(rule_from_json(st["realizes"]));
        else
            all_realized = false;
    }
    if (!all_realized) d.realized.clear();
    return d;
}

}  // namespace casweep::io
