#include "casweep/synthesis.hpp"

namespace casweep {

Symbol unique_predecessor(const LocalRule& f, unsigned m, const Word& vc, const Word& wd, Symbol b) {
    if (vc.size() != 2 * m || wd.size() != 2 * m) throw std::domain_error("stair words must have length 2m");
    const Word v(vc.begin(), vc.end() - 1), w(wd.begin(), wd.end() - 1);
    int found = 0;
    Symbol a = 0;
    for (Symbol c = 0; c < f.q; ++c) {
        Word av{c}, bw{b};
        av.insert(av.end(), v.begin(), v.end());
        bw.insert(bw.end(), w.begin(), w.end());
        if (is_stair(f, m, av, bw)) {
            ++found;
            a = c;
        }
    }
    if (found != 1)
        throw IntegrityError(std::to_string(found) + " predecessors for a stair; m = " + std::to_string(m) +
                             " is not a strong left-closing radius");
    return a;
}

Synthesis synthesize(const LocalRule& f, Index max_psi) {
    const SliderReport rep = slider_exists(f);
    if (!rep.closing.closing)
        throw VerdictError("rule is not left-closing", {*rep.closing.witness_a, *rep.closing.witness_b});
    if (!rep.exists) {
        std::string ps;
        for (auto p : rep.violating_primes) ps += (ps.empty() ? "" : ",") + std::to_string(p);
        throw VerdictError("|Psi_3m| does not divide q^(3m); violating primes " + ps, {});
    }
    const unsigned q = f.q, m = rep.m, n = 3 * m;
    if (rep.psi > max_psi) throw ResourceError("|Psi| = " + std::to_string(rep.psi) + " exceeds cap");
    const StairSet S = enumerate_stairs(f, m, true);
    const Index qn = ipow(q, n);
    if (qn % S.cardinality) throw IntegrityError("stair count does not divide q^n");
    const Index N = qn / S.cardinality;
    const LocalRule fm = f.radius_form(static_cast<int>(m));

    const Index q2m = ipow(q, 2 * m), q2m1 = q2m / q;
    std::vector<std::uint32_t> table(static_cast<std::size_t>(qn * q));
    std::vector<char> filled(table.size(), 0);
    for (std::size_t j = 0; j < S.psi.size(); ++j) {
        const Index vv = S.psi[j] / q2m, ww = S.psi[j] % q2m;
        const Index b = ww / q2m1;
        const Index v = vv % q2m1, w = ww % q2m1;
        for (Symbol c = 0; c < q; ++c) {
            const Symbol d = fm.table[vv * q + c];  // f_loc(a v c)
            const std::size_t j2 = S.rank(S.pack(v * q + c, w * q + d));
            for (Index k = 0; k < N; ++k) {
                const Index src = (j * N + k) * q + c;
                const Index dst = b * qn + j2 * N + k;
                if (filled[src]) throw IntegrityError("synthesized table entry written twice");
                filled[src] = 1;
                table[src] = static_cast<std::uint32_t>(dst);
            }
        }
    }
    Synthesis out{BlockRule(q, n + 1, std::move(table)), m, n, N, S.cardinality};
    if (!out.rule.is_bijective()) throw IntegrityError("synthesized block rule is not a permutation");
    return out;
}

bool verify_slider(const BlockRule& chi, const LocalRule& f, std::size_t samples, std::uint64_t seed,
                   std::optional<SliderCounterexample>* counterexample) {
    if (!chi.is_bijective()) throw std::domain_error("verify_slider requires a bijective block rule");
    if (chi.q() != f.q) throw std::domain_error("block rule and CA alphabets differ");
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        EpConfig x = random_config(rng, chi.q(), 3, 2 * chi.m() + 6);
        const Pos i = static_cast<Pos>(draw(rng, 13)) - 6;
        auto [y, z] = representation_eval(chi, {x, i});
        EpConfig fy = apply_ep(f, y);
        if (!ep_equal(z, fy)) {
            if (counterexample) *counterexample = SliderCounterexample{{x, i}, y, z, fy};
            return false;
        }
    }
    return true;
}

}  // namespace casweep
