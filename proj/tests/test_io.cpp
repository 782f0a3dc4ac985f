#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "casweep/io.hpp"
#include "oracles.hpp"

using namespace casweep;
namespace fs = std::filesystem;

namespace {

fs::path data(const std::string& rel) { return fs::path(CASWEEP_DATA_DIR) / rel; }

fs::path scratch(const std::string& name) {
    const fs::path p = fs::path(CASWEEP_SCRATCH_DIR) / ("io_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("round trips") {
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        const EpConfig x = random_config(rng, 2 + static_cast<unsigned>(t % 3));
        CHECK(ep_equal(io::config_from_json(io::to_json(x)), x));
    }
    const BlockRule swap(2, 2, {0, 2, 1, 3});
    CHECK(io::block_from_json(io::to_json(swap)) == swap);
    for (const char* name : {"identity", "ca102", "and_rule", "sigma2_x_sigma3inv"}) {
        const LocalRule f = named_rule(name);
        const LocalRule g = io::rule_from_json(io::to_json(f));
        CHECK(g.table == f.table);
        CHECK(g.anchor == f.anchor);
    }
    const ZAutomaton S = slider_relation_automaton(swap);
    const ZAutomaton S2 = io::automaton_from_json(io::to_json(S));
    CHECK(S2.states == S.states);
    CHECK(S2.offsets == S.offsets);
    CHECK(S2.edges.size() == S.edges.size());
    for (int t = 0; t < 30; ++t) {
        const EpConfig y = random_config(rng, 2);
        CHECK(member(S2, {y, y.shifted(1)}));
    }
    const fs::path dir = scratch("file");
    io::save_json(dir / "x.json", io::to_json(swap));
    CHECK(io::block_from_json(io::load_json(dir / "x.json")) == swap);
}

TEST_CASE("bundled files") {
    for (const char* name : {"identity", "shift", "shift_inv", "ca102", "xor_left", "and_rule", "sigma2_x_sigma3inv"})
        CHECK(equal(io::rule_from_json(io::load_json(data(std::string("rules/") + name + ".json"))), named_rule(name)));
    CHECK(equal(io::rule_from_json(io::load_json(data("rules/shift_q3.json"))), LocalRule::shift(3)));
    CHECK(io::block_from_json(io::load_json(data("blocks/swap.json"))) == BlockRule(2, 2, {0, 2, 1, 3}));
    CHECK(ep_equal(io::config_from_json(io::load_json(data("configs/single_one.json"))),
                   EpConfig(2, {0}, {1}, 0, {0})));
}

TEST_CASE("malformed input") {
    using io::json;
    CHECK_THROWS_AS(io::config_from_json(json::parse(R"({"alphabet":2})")), io::FormatError);
    CHECK_THROWS_AS(io::config_from_json(json::parse(R"({"alphabet":2,"left_period":[],"center":[],"center_start":0,"right_period":[0]})")),
                    io::FormatError);
    CHECK_THROWS_AS(io::block_from_json(json::parse(R"({"alphabet":2,"block_length":2,"table":[0,1,2]})")),
                    io::FormatError);
    CHECK_THROWS_AS(io::block_from_json(json::parse(R"({"alphabet":2,"block_length":1,"table":[0,5]})")),
                    io::FormatError);
    CHECK_THROWS_AS(io::rule_from_json(json::parse(R"({"alphabet":2,"anchor":0,"width":1,"table":"01"})")),
                    io::FormatError);
    CHECK_THROWS_AS(io::load_json(data("nope.json")), io::FormatError);
    const fs::path dir = scratch("bad");
    {
        std::ofstream(dir / "bad.json") << "{ not json";
    }
    CHECK_THROWS_AS(io::load_json(dir / "bad.json"), io::FormatError);
}

TEST_CASE("reports") {
    const SliderReport r = slider_exists(named_rule("xor_left"));
    const auto j = io::to_json(r);
    CHECK(j["slider_exists"] == false);
    CHECK(j["violating_primes"] == io::json::array({2}));
    CHECK(j["lambda"]["num"] == 2);
    const auto m = io::manifest(synthesize(named_rule("ca102")));
    CHECK(m["n"] == 6);
    CHECK(m["pi"] == "lex-interleave-v1");
}

TEST_CASE("decomposition files") {
    const Decomposition d = decompose_biclosing(named_rule("xor_left"));
    const fs::path dir = scratch("dec");
    io::save_decomposition(dir, d);
    const Decomposition e = io::load_decomposition(dir / "decomposition.json");
    REQUIRE(e.stages.size() == 2);
    for (int k = 0; k < 2; ++k) {
        CHECK(e.stages[k].rule == d.stages[k].rule);
        CHECK(e.stages[k].direction == d.stages[k].direction);
    }
    CHECK(equal(e.claimed_ca, d.claimed_ca));
    CHECK(verify_decomposition(e, 50, 3));
}
