#pragma once

// Exhaustive enumeration kernels. Each comes in a serial reference version and
// an OpenMP version; the two must agree exactly (tests/test_kernels.cpp).
// Without OpenMP the parallel entry points simply run serially.

#include "casweep/block_rule.hpp"
#include "casweep/cellular_automaton.hpp"

namespace casweep::kernels {

bool parallel_enabled();
int max_threads();

// Right stairs for `fr` (radius form, radius r <= m): sorted packed indices v * q^(2m) + w.
std::vector<Index> stair_list_serial(const LocalRule& fr, unsigned m);
std::vector<Index> stair_list_parallel(const LocalRule& fr, unsigned m);

// |Psi_3m| without materializing the set.
Index stair_count_serial(const LocalRule& fr, unsigned m);
Index stair_count_parallel(const LocalRule& fr, unsigned m);

// Extension masks for the strong closing check: entry ((s * q^(2m) + t) * q + b)
// holds bit a when some window over [-r, 2m+r] has x_m = a, x_(m,2m] = s and image
// b t on [0, 2m]. Requires q <= 64.
std::vector<std::uint64_t> strong_masks_serial(const LocalRule& fr, unsigned m);
std::vector<std::uint64_t> strong_masks_parallel(const LocalRule& fr, unsigned m);

Index count_representations_serial(const BlockRule& chi, const LocalRule& f, const EpConfig& y, Pos i);
Index count_representations_parallel(const BlockRule& chi, const LocalRule& f, const EpConfig& y, Pos i);

}  // namespace casweep::kernels
