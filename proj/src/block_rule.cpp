#include "casweep/block_rule.hpp"

#include <unordered_map>

#include "casweep/kernels.hpp"

namespace casweep {

BlockRule::BlockRule(unsigned q, unsigned m, std::vector<std::uint32_t> table)
    : q_(q), m_(m), table_(std::move(table)) {
    if (q < 2) throw std::domain_error("alphabet size must be at least 2");
    if (m < 1) throw std::domain_error("block length must be at least 1");
    const Index n = ipow(q, m);
    if (n > (Index{1} << 31)) throw ResourceError("block rule table too large");
    if (table_.size() != n)
        throw std::domain_error("block rule table has " + std::to_string(table_.size()) + " entries, expected " +
                                std::to_string(n));
    carries_ = n / q;
    std::vector<std::uint32_t> inv(n, 0);
    std::vector<char> hit(n, 0);
    bool perm = true;
    for (Index w = 0; w < n; ++w) {
        const auto t = table_[w];
        if (t >= n) throw std::domain_error("block rule entry " + std::to_string(t) + " out of range");
        if (hit[t]) perm = false;
        hit[t] = 1;
        inv[t] = static_cast<std::uint32_t>(w);
    }
    if (perm) inverse_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(inv));
}

BlockRule BlockRule::identity(unsigned q, unsigned m) {
    std::vector<std::uint32_t> t(ipow(q, m));
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
    return BlockRule(q, m, std::move(t));
}

BlockRule BlockRule::from_function(unsigned q, unsigned m, const std::function<Word(const Word&)>& fn) {
    std::vector<std::uint32_t> t(ipow(q, m));
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Word img = fn(word_of_index(i, q, m));
        if (img.size() != m) throw std::domain_error("block function changed the word length");
        t[i] = static_cast<std::uint32_t>(word_index(img, q));
    }
    return BlockRule(q, m, std::move(t));
}

const std::vector<std::uint32_t>& BlockRule::inverse_table() const {
    if (!inverse_) throw std::domain_error("block rule is not bijective");
    return *inverse_;
}

BlockRule BlockRule::inverse() const { return BlockRule(q_, m_, inverse_table()); }

BlockRule BlockRule::reversed() const {
    return from_function(q_, m_, [&](const Word& w) { return casweep::reversed(apply(casweep::reversed(w))); });
}

Word BlockRule::apply(const Word& w) const { return word_of_index(table_[word_index(w, q_)], q_, m_); }

bool is_bijective(const BlockRule& chi) { return chi.is_bijective(); }

EpConfig overwrite(const EpConfig& x, Pos lo, const Word& w) {
    const Pos hi = lo + static_cast<Pos>(w.size());
    const Pos H = std::max(hi, x.center_end());
    Word mid = w;
    const Word tail = x.cells(hi, H);
    mid.insert(mid.end(), tail.begin(), tail.end());
    return splice(x, lo, mid, x.cells(H, H + static_cast<Pos>(x.right_period.size())));
}

EpConfig sweep_range(const BlockRule& chi, const EpConfig& x, Pos i, Pos j, bool reversed) {
    if (i > j) throw std::domain_error("sweep range must satisfy i <= j");
    if (x.q != chi.q()) throw std::domain_error("configuration and block rule alphabets differ");
    if (i == j) return x;
    const auto m = static_cast<Pos>(chi.m());
    Word w = x.cells(i, j + m - 1);
    auto at = [&](Pos p) {
        const auto off = static_cast<std::size_t>(p - i);
        const Word img = chi.apply(Word(w.begin() + off, w.begin() + off + chi.m()));
        std::copy(img.begin(), img.end(), w.begin() + off);
    };
    if (!reversed)
        for (Pos p = i; p < j; ++p) at(p);
    else
        for (Pos p = j; p-- > i;) at(p);
    return overwrite(x, i, w).normalized();
}

EpConfig apply_at(const BlockRule& chi, const EpConfig& x, Pos i) { return sweep_range(chi, x, i, i + 1); }

Index run_carry(const BlockRule& chi, Index carry, const EpConfig& y, Pos from, Pos to) {
    for (Pos k = from; k < to; ++k) carry = chi.step(carry, y.cell(k)).second;
    return carry;
}

RightRun run_right(const BlockRule& chi, Index carry, const EpConfig& y, Pos p) {
    const auto m = static_cast<Pos>(chi.m());
    const auto R = static_cast<Pos>(y.right_period.size());
    const Pos e = y.center_end();
    Pos k = p + m - 1;  // next input position
    Pos k0 = std::max(k, e);
    k0 += (R - (k0 - e) % R) % R;
    RightRun run;
    for (; k < k0; ++k) {
        run.carries.push_back(carry);
        auto [out, next] = chi.step(carry, y.cell(k));
        run.prefix.push_back(out);
        carry = next;
    }
    // from k0 on the input is the right period; iterate carry -> carry per period copy
    std::unordered_map<Index, std::size_t> seen;
    std::vector<Word> blocks;
    std::vector<std::vector<Index>> block_carries;
    while (!seen.count(carry)) {
        seen.emplace(carry, blocks.size());
        Word block;
        std::vector<Index> cs;
        for (Pos t = 0; t < R; ++t) {
            cs.push_back(carry);
            auto [out, next] = chi.step(carry, y.right_period[static_cast<std::size_t>(t)]);
            block.push_back(out);
            carry = next;
        }
        blocks.push_back(std::move(block));
        block_carries.push_back(std::move(cs));
    }
    const std::size_t start = seen.at(carry);
    for (std::size_t b = 0; b < start; ++b) {
        run.prefix.insert(run.prefix.end(), blocks[b].begin(), blocks[b].end());
        run.carries.insert(run.carries.end(), block_carries[b].begin(), block_carries[b].end());
    }
    for (std::size_t b = start; b < blocks.size(); ++b)
        run.period.insert(run.period.end(), blocks[b].begin(), blocks[b].end());
    return run;
}

EpConfig sweep_right_limit(const BlockRule& chi, const EpConfig& x, Pos i) {
    if (x.q != chi.q()) throw std::domain_error("configuration and block rule alphabets differ");
    const Index c0 = word_index(x.cells(i, i + static_cast<Pos>(chi.m()) - 1), chi.q());
    RightRun run = run_right(chi, c0, x, i);
    return splice(x, i, run.prefix, run.period).normalized();
}

EpConfig sweep_left_limit(const BlockRule& xi, const EpConfig& x, Pos i) {
    const auto m = static_cast<Pos>(xi.m());
    return sweep_right_limit(xi.reversed(), x.reversed(), -i - m + 2).reversed().normalized();
}

std::pair<EpConfig, EpConfig> representation_eval(const BlockRule& chi, const Representation& rep) {
    if (!chi.is_bijective()) throw std::domain_error("representation requires a bijective block rule");
    EpConfig z = sweep_right_limit(chi, rep.x, rep.i);
    EpConfig y = sweep_left_limit(chi.inverse(), rep.x, rep.i);
    return {std::move(y), std::move(z)};
}

Index count_representations(const BlockRule& chi, const LocalRule& f, const EpConfig& y, Pos i) {
#ifdef _OPENMP
    return kernels::count_representations_parallel(chi, f, y, i);
#else
    return kernels::count_representations_serial(chi, f, y, i);
#endif
}

}  // namespace casweep
