#include <doctest.h>

#include "casweep/cellular_automaton.hpp"
#include "oracles.hpp"

using namespace casweep;

namespace {

LocalRule random_rule(Rng& rng, unsigned q) {
    const unsigned w = 1 + static_cast<unsigned>(draw(rng, 3));
    const Pos a = static_cast<Pos>(draw(rng, 5)) - 2;
    Word t(ipow(q, w));
    for (auto& s : t) s = static_cast<Symbol>(draw(rng, q));
    return LocalRule(q, a, w, t);
}

}  // namespace

TEST_CASE("apply_word examples") {
    CHECK(apply_word(named_rule("ca102"), {1, 1, 0}) == Word{0, 1});
    CHECK(apply_word(named_rule("and_rule"), {1, 0, 1}) == Word{0, 0});
    CHECK(apply_word(LocalRule::identity(3), {2, 0, 1}) == Word{2, 0, 1});
    CHECK_THROWS_AS(apply_word(named_rule("ca102"), {1}), std::domain_error);
}

TEST_CASE("apply_ep agrees with cell-wise table lookup") {
    Rng rng(1);
    for (int t = 0; t < 300; ++t) {
        const unsigned q = 2 + static_cast<unsigned>(draw(rng, 2));
        const LocalRule f = random_rule(rng, q);
        const EpConfig x = random_config(rng, q);
        CHECK(oracle::image_equals(f, x, apply_ep(f, x)));
    }
}

TEST_CASE("apply_ep examples") {
    const EpConfig one(2, {0}, {1}, 0, {0});
    const EpConfig img = apply_ep(named_rule("ca102"), one);
    for (Pos i = -5; i < 5; ++i) CHECK(img.cell(i) == (i == -1 || i == 0 ? 1u : 0u));
    CHECK(ep_equal(apply_ep(LocalRule::shift(2), one), one.shifted(1)));
    CHECK(ep_equal(apply_ep(LocalRule::identity(2), one), one));
}

TEST_CASE("apply_ep commutes with the shift") {
    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const LocalRule f = random_rule(rng, 2);
        const EpConfig x = random_config(rng, 2);
        CHECK(ep_equal(apply_ep(f, x.shifted(3)), apply_ep(f, x).shifted(3)));
    }
}

TEST_CASE("compose agrees with sequential application") {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const unsigned q = 2 + static_cast<unsigned>(draw(rng, 2));
        const LocalRule f = random_rule(rng, q), g = random_rule(rng, q);
        const LocalRule fg = compose(f, g);
        CHECK(fg.radius() <= f.radius() + g.radius());
        for (int s = 0; s < 5; ++s) {
            const EpConfig x = random_config(rng, q);
            CHECK(oracle::same(apply_ep(fg, x), apply_ep(f, apply_ep(g, x))));
        }
    }
}

TEST_CASE("compose examples") {
    CHECK(equal(compose(LocalRule::shift(2), LocalRule::shift(2, -1)), LocalRule::identity(2)));
    CHECK(equal(compose(named_rule("ca102"), LocalRule::identity(2)), named_rule("ca102")));
    CHECK(equal(compose(LocalRule::shift(2), named_rule("xor_left")), named_rule("ca102")));
    CHECK(compose(LocalRule::shift(2), LocalRule::shift(2, -1)).canonical().width == 1);
}

TEST_CASE("compose is associative") {
    Rng rng(6);
    for (int t = 0; t < 30; ++t) {
        const LocalRule f = random_rule(rng, 2), g = random_rule(rng, 2), h = random_rule(rng, 2);
        CHECK(equal(compose(f, compose(g, h)), compose(compose(f, g), h)));
    }
}

TEST_CASE("shift_compose") {
    CHECK(equal(shift_compose(LocalRule::identity(2), 1), LocalRule::shift(2)));
    CHECK(equal(shift_compose(named_rule("ca102"), -1), named_rule("xor_left")));
    Rng rng(7);
    for (int t = 0; t < 30; ++t) {
        const LocalRule f = random_rule(rng, 3);
        CHECK(equal(shift_compose(shift_compose(f, 2), -2), f));
        CHECK(equal(shift_compose(f, 2), compose(LocalRule::shift(3, 2), f)));
    }
}

TEST_CASE("mirror") {
    CHECK(equal(mirror(LocalRule::shift(2)), LocalRule::shift(2, -1)));
    CHECK(equal(mirror(named_rule("ca102")), named_rule("xor_left")));
    CHECK(equal(mirror(LocalRule::identity(3)), LocalRule::identity(3)));
    Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        const LocalRule f = random_rule(rng, 2), g = random_rule(rng, 2);
        CHECK(equal(mirror(mirror(f)), f));
        CHECK(equal(mirror(compose(f, g)), compose(mirror(f), mirror(g))));
        const EpConfig x = random_config(rng, 2);
        CHECK(oracle::same(apply_ep(mirror(f), x), apply_ep(f, x.reversed()).reversed()));
    }
}

TEST_CASE("equal refines to the union neighborhood") {
    const LocalRule f = named_rule("ca102");
    CHECK(equal(f, f.refined(-2, 5)));
    CHECK(equal(f.refined(-1, 3), f.refined(0, 4)));
    CHECK_FALSE(equal(f, named_rule("xor_left")));
    CHECK_FALSE(equal(LocalRule::identity(2), LocalRule::shift(2)));
    CHECK_THROWS_AS(f.refined(1, 2), std::domain_error);
}

TEST_CASE("canonical and radius form keep the map") {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const LocalRule f = random_rule(rng, 2);
        const LocalRule c = f.canonical(), r = f.radius_form(f.radius() + 1);
        CHECK(c.width <= f.width);
        CHECK(r.anchor == -(f.radius() + 1));
        for (int s = 0; s < 3; ++s) {
            const EpConfig x = random_config(rng, 2);
            CHECK(oracle::same(apply_ep(c, x), apply_ep(f, x)));
            CHECK(oracle::same(apply_ep(r, x), apply_ep(f, x)));
        }
    }
    CHECK(LocalRule(2, 3, 2, {1, 1, 1, 1}).canonical().anchor == 0);
    CHECK_THROWS_AS(named_rule("ca102").radius_form(0), std::domain_error);
}

TEST_CASE("bundled rules") {
    CHECK(named_rule("and_rule").table == Word{0, 0, 0, 1});
    CHECK(named_rule("xor_left").anchor == -1);
    const LocalRule s = named_rule("sigma2_x_sigma3inv");
    CHECK(s.q == 6);
    // a-track moves left, b-track moves right
    const EpConfig x(6, {0}, {3 * 1 + 0, 3 * 0 + 2}, 0, {0});
    const EpConfig y = apply_ep(s, x);
    CHECK(y.cell(-1) == 3);
    CHECK(y.cell(0) == 0);
    CHECK(y.cell(1) == 0);
    CHECK(y.cell(2) == 2);
    CHECK_THROWS_AS(named_rule("nope"), std::domain_error);
    CHECK_THROWS_AS(LocalRule(2, 0, 2, {0, 1, 2, 0}), std::domain_error);
}
