#include "casweep/hierarchy.hpp"

#include "casweep/mealy.hpp"

namespace casweep {

std::string direction_name(Direction d) {
    return d == Direction::LeftToRight ? "left_to_right" : "right_to_left";
}

Direction direction_from_name(const std::string& s) {
    if (s == "left_to_right") return Direction::LeftToRight;
    if (s == "right_to_left") return Direction::RightToLeft;
    throw std::domain_error("unknown direction '" + s + "'");
}

int shift_offset_from_lambda(const ValuedRational& lam, unsigned q) {
    int k = 0;
    for (auto p : prime_factors(lam.num())) {
        const int vq = valuation(q, p);
        if (!vq) throw IntegrityError("lambda has prime " + std::to_string(p) + " not dividing q");
        const int v = lam.vp(p);
        k = std::max(k, (v + vq - 1) / vq);
    }
    return k;
}

int shift_offset(const LocalRule& f) {
    const int k = shift_offset_from_lambda(lambda(f), f.q);
    if (!slider_exists(shift_compose(f, k)).exists || (k > 0 && slider_exists(shift_compose(f, k - 1)).exists))
        throw IntegrityError("shift offset " + std::to_string(k) + " failed its slider check");
    return k;
}

Decomposition decompose_biclosing(const LocalRule& f) {
    for (bool left : {true, false}) {
        const ClosingVerdict v = left ? left_closing_decide(f) : right_closing_decide(f);
        if (!v.closing)
            throw VerdictError(std::string("not ") + (left ? "left" : "right") + "-closing",
                               {*v.witness_a, *v.witness_b});
    }
    const int k = shift_offset(f);
    Decomposition d;
    d.claimed_ca = f;

    // sigma^-k read on the reversed tape is sigma^k
    const LocalRule back = LocalRule::shift(f.q, -k);
    d.stages.push_back({synthesize(mirror(back)).rule.reversed(), Direction::RightToLeft});
    d.realized.push_back(back);

    const LocalRule front = shift_compose(f, k);
    d.stages.push_back({synthesize(front).rule, Direction::LeftToRight});
    d.realized.push_back(front);
    return d;
}

std::optional<EpConfig> evaluate_stage(const DirectedSlider& s, const EpConfig& y) {
    if (s.direction == Direction::LeftToRight) {
        auto out = sweeper_eval(s.rule, y);
        if (!out.converges) return std::nullopt;
        return out.limits.front();
    }
    auto out = sweeper_eval(s.rule.reversed(), y.reversed());
    if (!out.converges) return std::nullopt;
    return out.limits.front().reversed().normalized();
}

std::optional<EpConfig> evaluate(const Decomposition& d, const EpConfig& y) {
    std::optional<EpConfig> cur = y;
    for (const auto& s : d.stages) {
        cur = evaluate_stage(s, *cur);
        if (!cur) return std::nullopt;
    }
    return cur;
}

bool verify_decomposition(const Decomposition& d, std::size_t samples, std::uint64_t seed) {
    for (std::size_t i = 1; i < d.stages.size(); ++i)
        if (d.stages[i].direction == d.stages[i - 1].direction)
            throw std::domain_error("decomposition stages must alternate direction");
    for (const auto& s : d.stages)
        if (s.rule.q() != d.claimed_ca.q) throw std::domain_error("stage alphabet differs from the claimed CA");

    Rng rng(seed);
    std::vector<EpConfig> ys;
    for (std::size_t i = 0; i < samples; ++i) ys.push_back(random_config(rng, d.claimed_ca.q));
    const auto n = static_cast<std::int64_t>(ys.size());
    int bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto got = evaluate(d, ys[i]);
        if (!got || !ep_equal(*got, apply_ep(d.claimed_ca, ys[i]))) ++bad;
    }
    return bad == 0;
}

std::vector<ValuedRational> stage_lambdas(const Decomposition& d) {
    if (d.realized.size() != d.stages.size()) throw std::domain_error("decomposition has no realized stage CAs");
    std::vector<ValuedRational> r;
    for (const auto& f : d.realized) r.push_back(lambda(f));
    return r;
}

}  // namespace casweep
