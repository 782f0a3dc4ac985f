#pragma once

#include <string>

#include "casweep/core.hpp"

namespace casweep {

// CA local rule on the neighborhood [anchor, anchor + width):
// f(x)_i = table[word_index(x_[i+anchor, i+anchor+width))].
struct LocalRule {
    unsigned q = 2;
    Pos anchor = 0;
    unsigned width = 1;
    std::vector<Symbol> table{0, 1};

    LocalRule() = default;
    LocalRule(unsigned q_, Pos anchor_, unsigned width_, std::vector<Symbol> table_);

    static LocalRule identity(unsigned q);
    static LocalRule shift(unsigned q, Pos k = 1);  // sigma^k(x)_i = x_{i+k}

    Symbol at(Index window) const { return table[window]; }
    Symbol eval(const Word& window) const;

    Pos right_end() const { return anchor + static_cast<Pos>(width) - 1; }
    int radius() const;

    // Same global map on a wider neighborhood [a, a + w) containing the current one.
    LocalRule refined(Pos a, unsigned w) const;
    // Neighborhood [-r, r]; r must be at least radius().
    LocalRule radius_form(int r) const;
    // Minimal neighborhood; constant rules are placed at anchor 0.
    LocalRule canonical() const;

    void validate() const;
};

Word apply_word(const LocalRule& f, const Word& u);
EpConfig apply_ep(const LocalRule& f, const EpConfig& x);

LocalRule compose(const LocalRule& f, const LocalRule& g);  // f o g
LocalRule shift_compose(const LocalRule& f, Pos k);         // sigma^k o f
LocalRule mirror(const LocalRule& f);
bool equal(const LocalRule& f, const LocalRule& g);

// Bundled rules by name: identity, shift, shift_inv, ca102, xor_left, and_rule,
// sigma2_x_sigma3inv. `q` applies to identity and the shifts only.
LocalRule named_rule(const std::string& name, unsigned q = 2);

}  // namespace casweep
