#include "casweep/stairs.hpp"

#include <algorithm>
#include <set>

#include "casweep/kernels.hpp"

namespace casweep {

bool StairSet::contains(const Word& v, const Word& w) const {
    if (v.size() != 2 * m || w.size() != 2 * m) return false;
    return std::binary_search(psi.begin(), psi.end(), pack(word_index(v, q), word_index(w, q)));
}

std::size_t StairSet::rank(Index packed) const {
    auto it = std::lower_bound(psi.begin(), psi.end(), packed);
    if (it == psi.end() || *it != packed) throw IntegrityError("pair is not a right stair");
    return static_cast<std::size_t>(it - psi.begin());
}

namespace {
LocalRule stair_form(const LocalRule& f, unsigned m) {
    const int r = f.radius();
    if (static_cast<unsigned>(r) > m)
        throw std::domain_error("stairs of length 3m need the rule radius " + std::to_string(r) + " <= m = " + std::to_string(m));
    return f.radius_form(r);
}
}  // namespace

bool is_stair(const LocalRule& f, unsigned m, const Word& v, const Word& w) {
    if (v.size() != 2 * m || w.size() != 2 * m) throw std::domain_error("stair words must have length 2m");
    const LocalRule fr = stair_form(f, m);
    const auto r = static_cast<unsigned>(-fr.anchor);
    // free cells [-r, m), then v on [m, 3m); the image on [0, 2m) reads [-r, 2m + r)
    const Index free = ipow(f.q, m + r);
    for (Index F = 0; F < free; ++F) {
        Word x = word_of_index(F, f.q, m + r);
        x.insert(x.end(), v.begin(), v.end());
        x.resize(2 * m + 2 * r);
        if (apply_word(fr, x) == w) return true;
    }
    return false;
}

StairSet enumerate_stairs(const LocalRule& f, unsigned m, bool materialize, Index cap) {
    const LocalRule fr = stair_form(f, m);
    StairSet s;
    s.q = f.q;
    s.m = m;
    if (materialize) {
        if (ipow(f.q, 4 * m) > cap) throw ResourceError("stair space q^(4m) = " + std::to_string(ipow(f.q, 4 * m)) + " exceeds cap");
        s.psi = kernels::stair_list_parallel(fr, m);
        s.cardinality = s.psi.size();
    } else {
        s.cardinality = kernels::stair_count_parallel(fr, m);
    }
    s.lambda = ValuedRational(s.cardinality, ipow(f.q, 3 * m));
    return s;
}

LambdaReport lambda_report(const LocalRule& f) {
    const ClosingVerdict v = left_closing_decide(f);
    if (!v.closing) throw VerdictError("rule is not left-closing", {*v.witness_a, *v.witness_b});
    const StairSet at = enumerate_stairs(f, v.radius, false);
    const StairSet next = enumerate_stairs(f, v.radius + 1, false);
    if (!(at.lambda == next.lambda))
        throw IntegrityError("lambda not stable: " + at.lambda.str() + " at m=" + std::to_string(v.radius) + " vs " +
                             next.lambda.str() + " at m=" + std::to_string(v.radius + 1));
    return {at.lambda, v.radius, at.cardinality};
}

ValuedRational lambda(const LocalRule& f) { return lambda_report(f).lambda; }

SliderReport slider_exists(const LocalRule& f) {
    SliderReport rep;
    rep.closing = left_closing_decide(f);
    if (!rep.closing.closing) return rep;
    const LambdaReport lr = lambda_report(f);
    rep.m = lr.m;
    rep.psi = lr.psi;
    rep.lambda = lr.lambda;
    std::set<std::uint64_t> primes;
    for (auto n : {static_cast<std::uint64_t>(f.q), lr.lambda.num(), lr.lambda.den()})
        for (auto p : prime_factors(n)) primes.insert(p);
    for (auto p : primes) {
        const int v = lr.lambda.vp(p);
        rep.valuations[p] = v;
        if (v > 0) rep.violating_primes.push_back(p);
    }
    // |Psi_3m| divides q^(3m) exactly when no valuation is positive
    rep.exists = rep.violating_primes.empty();
    return rep;
}

}  // namespace casweep
