#include "casweep/cellular_automaton.hpp"

#include <algorithm>
#include <cstdlib>

namespace casweep {

LocalRule::LocalRule(unsigned q_, Pos anchor_, unsigned width_, std::vector<Symbol> table_)
    : q(q_), anchor(anchor_), width(width_), table(std::move(table_)) {
    validate();
}

void LocalRule::validate() const {
    if (q < 2) throw std::domain_error("alphabet size must be at least 2");
    if (width < 1) throw std::domain_error("neighborhood width must be at least 1");
    if (table.size() != ipow(q, width))
        throw std::domain_error("local rule table has " + std::to_string(table.size()) + " entries, expected " +
                                std::to_string(ipow(q, width)));
    for (Symbol s : table)
        if (s >= q) throw std::domain_error("local rule output " + std::to_string(s) + " outside alphabet");
}

LocalRule LocalRule::identity(unsigned q) { return shift(q, 0); }

LocalRule LocalRule::shift(unsigned q, Pos k) {
    std::vector<Symbol> t(q);
    for (unsigned s = 0; s < q; ++s) t[s] = s;
    return LocalRule(q, k, 1, std::move(t));
}

Symbol LocalRule::eval(const Word& window) const {
    if (window.size() != width) throw std::domain_error("window length does not match neighborhood width");
    return table[word_index(window, q)];
}

int LocalRule::radius() const {
    return static_cast<int>(std::max(std::llabs(anchor), std::llabs(right_end())));
}

LocalRule LocalRule::refined(Pos a, unsigned w) const {
    if (a > anchor || a + static_cast<Pos>(w) < anchor + static_cast<Pos>(width))
        throw std::domain_error("refined neighborhood must contain the current one");
    const Index n = ipow(q, w);
    const Index div = ipow(q, static_cast<unsigned>(a + static_cast<Pos>(w) - anchor - static_cast<Pos>(width)));
    const Index mod = ipow(q, width);
    std::vector<Symbol> t(n);
    for (Index u = 0; u < n; ++u) t[u] = table[(u / div) % mod];
    return LocalRule(q, a, w, std::move(t));
}

LocalRule LocalRule::radius_form(int r) const {
    if (r < radius()) throw std::domain_error("radius form smaller than the rule radius");
    return refined(-r, static_cast<unsigned>(2 * r + 1));
}

LocalRule LocalRule::canonical() const {
    LocalRule f = *this;
    // drop the leftmost cell while the output ignores it
    while (f.width > 1) {
        const Index sub = ipow(q, f.width - 1);
        bool ignores = true;
        for (Index u = 0; u < sub && ignores; ++u)
            for (Index s = 1; s < q && ignores; ++s) ignores = f.table[s * sub + u] == f.table[u];
        if (!ignores) break;
        f = LocalRule(q, f.anchor + 1, f.width - 1, std::vector<Symbol>(f.table.begin(), f.table.begin() + static_cast<std::ptrdiff_t>(sub)));
    }
    while (f.width > 1) {
        const Index sub = ipow(q, f.width - 1);
        bool ignores = true;
        for (Index u = 0; u < sub && ignores; ++u)
            for (Index s = 1; s < q && ignores; ++s) ignores = f.table[u * q + s] == f.table[u * q];
        if (!ignores) break;
        std::vector<Symbol> t(sub);
        for (Index u = 0; u < sub; ++u) t[u] = f.table[u * q];
        f = LocalRule(q, f.anchor, f.width - 1, std::move(t));
    }
    if (f.width == 1 && std::all_of(f.table.begin(), f.table.end(), [&](Symbol s) { return s == f.table[0]; }))
        f.anchor = 0;
    return f;
}

Word apply_word(const LocalRule& f, const Word& u) {
    if (u.size() < f.width) throw std::domain_error("word shorter than the neighborhood");
    Word out(u.size() - f.width + 1);
    const Index mod = ipow(f.q, f.width);
    Index idx = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] >= f.q) throw std::domain_error("symbol outside alphabet");
        idx = (idx * f.q + u[i]) % mod;
        if (i + 1 >= f.width) out[i + 1 - f.width] = f.table[idx];
    }
    return out;
}

EpConfig apply_ep(const LocalRule& f, const EpConfig& x) {
    if (x.q != f.q) throw std::domain_error("configuration and rule alphabets differ");
    const auto w = static_cast<Pos>(f.width);
    const Pos lo = x.center_start - f.anchor - w + 1;
    const Pos hi = std::max(lo, x.center_end() - f.anchor);
    const auto L = static_cast<Pos>(x.left_period.size());
    const auto R = static_cast<Pos>(x.right_period.size());
    const Pos a = lo - L, b = hi + R;
    Word image = apply_word(f, x.cells(a + f.anchor, b + f.anchor + w - 1));
    auto part = [&](Pos from, Pos to) {
        return Word(image.begin() + (from - a), image.begin() + (to - a));
    };
    return EpConfig(x.q, part(a, lo), part(lo, hi), lo, part(hi, b)).normalized();
}

LocalRule compose(const LocalRule& f, const LocalRule& g) {
    if (f.q != g.q) throw std::domain_error("compose: alphabets differ");
    const unsigned q = f.q;
    const unsigned w = f.width + g.width - 1;
    const Index n = ipow(q, w);
    std::vector<Symbol> t(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(n); ++u) {
        const Word inner = apply_word(g, word_of_index(static_cast<Index>(u), q, w));
        t[static_cast<std::size_t>(u)] = f.eval(inner);
    }
    return LocalRule(q, f.anchor + g.anchor, w, std::move(t));
}

LocalRule shift_compose(const LocalRule& f, Pos k) {
    LocalRule r = f;
    r.anchor += k;
    return r;
}

LocalRule mirror(const LocalRule& f) {
    const Index n = f.table.size();
    std::vector<Symbol> t(n);
    for (Index u = 0; u < n; ++u) t[u] = f.table[word_index(reversed(word_of_index(u, f.q, f.width)), f.q)];
    return LocalRule(f.q, -f.right_end(), f.width, std::move(t));
}

bool equal(const LocalRule& f, const LocalRule& g) {
    if (f.q != g.q) return false;
    const Pos a = std::min(f.anchor, g.anchor);
    const Pos b = std::max(f.right_end(), g.right_end());
    const auto w = static_cast<unsigned>(b - a + 1);
    return f.refined(a, w).table == g.refined(a, w).table;
}

LocalRule named_rule(const std::string& name, unsigned q) {
    if (name == "identity") return LocalRule::identity(q);
    if (name == "shift") return LocalRule::shift(q, 1);
    if (name == "shift_inv") return LocalRule::shift(q, -1);
    if (name == "ca102") return LocalRule(2, 0, 2, {0, 1, 1, 0});
    if (name == "xor_left") return LocalRule(2, -1, 2, {0, 1, 1, 0});
    if (name == "and_rule") return LocalRule(2, 0, 2, {0, 0, 0, 1});
    if (name == "sigma2_x_sigma3inv") {
        // symbol (a, b) with a in {0,1}, b in {0,1,2} is encoded as 3a + b;
        // the a-track shifts left and the b-track shifts right
        std::vector<Symbol> t(216);
        for (Index u = 0; u < 216; ++u) {
            const Word w = word_of_index(u, 6, 3);
            t[u] = 3 * (w[2] / 3) + (w[0] % 3);
        }
        return LocalRule(6, -1, 3, std::move(t));
    }
    throw std::domain_error("unknown rule name '" + name + "'");
}

}  // namespace casweep
