#pragma once

#include <map>
#include <optional>

#include "casweep/cellular_automaton.hpp"
#include "casweep/closing.hpp"

namespace casweep {

// Psi_3m: pairs (v, w) of 2m-words with f([v]_[m,3m)) meeting [w]_[0,2m).
struct StairSet {
    unsigned q = 2, m = 1;
    Index cardinality = 0;
    std::vector<Index> psi;  // sorted packed v * q^(2m) + w; empty in counting mode
    ValuedRational lambda;

    Index pack(Index v, Index w) const { return v * ipow(q, 2 * m) + w; }
    bool contains(const Word& v, const Word& w) const;
    std::size_t rank(Index packed) const;  // position in psi; throws if absent
};

bool is_stair(const LocalRule& f, unsigned m, const Word& v, const Word& w);

// Exact Psi_3m. `materialize` = false only counts. Throws ResourceError when the
// packed space q^(4m) exceeds `cap` in materializing mode.
StairSet enumerate_stairs(const LocalRule& f, unsigned m, bool materialize = true, Index cap = Index{1} << 30);

struct LambdaReport {
    ValuedRational lambda;
    unsigned m = 0;  // smallest strong left-closing radius
    Index psi = 0;   // |Psi_3m|
};

// Throws VerdictError (with the non-closing witness) if f is not left-closing.
LambdaReport lambda_report(const LocalRule& f);
ValuedRational lambda(const LocalRule& f);

struct SliderReport {
    ClosingVerdict closing;
    unsigned m = 0;
    Index psi = 0;
    std::optional<ValuedRational> lambda;
    std::map<std::uint64_t, int> valuations;  // over primes dividing q, num or den
    std::vector<std::uint64_t> violating_primes;
    bool exists = false;
};

SliderReport slider_exists(const LocalRule& f);

}  // namespace casweep
