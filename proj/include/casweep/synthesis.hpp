#pragma once

#include <optional>

#include "casweep/block_rule.hpp"
#include "casweep/stairs.hpp"

namespace casweep {

// The unique a with (a v, b w) in Psi_3m, where v, w drop the last symbol of vc, wd.
// IntegrityError if there are zero or several.
Symbol unique_predecessor(const LocalRule& f, unsigned m, const Word& vc, const Word& wd, Symbol b);

struct Synthesis {
    BlockRule rule;
    unsigned m = 0;  // strong left-closing radius
    unsigned n = 0;  // 3m
    Index N = 0;     // q^n / |Psi_n|
    Index psi = 0;
};

// Block rule of length 3m+1 whose slider is f. The bijection Psi_n x {0..N-1} -> S^n is
// fixed as (pair of rank j, k) -> word_of_index(j * N + k) with stairs ranked by
// packed index ("lex-interleave-v1"). VerdictError if f admits no slider.
Synthesis synthesize(const LocalRule& f, Index max_psi = Index{1} << 26);

struct SliderCounterexample {
    Representation rep;
    EpConfig y, z, expected;
};

// Samples random representations and checks z = f(y).
bool verify_slider(const BlockRule& chi, const LocalRule& f, std::size_t samples, std::uint64_t seed,
                   std::optional<SliderCounterexample>* counterexample = nullptr);

}  // namespace casweep
