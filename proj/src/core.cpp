#include "casweep/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace casweep {

VerdictError::VerdictError(const std::string& what, std::vector<EpConfig> evidence_)
    : std::runtime_error(what), evidence(std::move(evidence_)) {}

Index ipow(Index q, unsigned n) {
    Index r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q != 0 && r > (Index{1} << 62) / q)
            throw ResourceError("integer power " + std::to_string(q) + "^" + std::to_string(n) +
                                " overflows");
        r *= q;
    }
    return r;
}

Index word_index(const Word& w, unsigned q) {
    Index r = 0;
    for (Symbol s : w) {
        if (s >= q) throw std::domain_error("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
        r = r * q + s;
    }
    return r;
}

Word word_of_index(Index idx, unsigned q, std::size_t len) {
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<Symbol>(idx % q);
        idx /= q;
    }
    return w;
}

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

namespace {

// Smallest d such that w is invariant under cyclic rotation by d.
std::size_t cyclic_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return d;
    }
    return n;
}

}  // namespace

EpConfig::EpConfig(unsigned q_, Word left, Word c, Pos cs, Word right)
    : q(q_), left_period(std::move(left)), center(std::move(c)), center_start(cs),
      right_period(std::move(right)) {
    validate();
}

EpConfig EpConfig::constant(unsigned q, Symbol s) { return EpConfig(q, {s}, {}, 0, {s}); }

EpConfig EpConfig::periodic(unsigned q, Word period) {
    // right zone starts at 0 so cell(i) = period[i mod p]; left period ends at cell(-1)
    return EpConfig(q, period, {}, 0, period);
}

void EpConfig::validate() const {
    if (q < 2) throw std::domain_error("alphabet size must be at least 2");
    if (left_period.empty() || right_period.empty()) throw std::domain_error("periods must be non-empty");
    for (const Word* w : {&left_period, &center, &right_period})
        for (Symbol s : *w)
            if (s >= q) throw std::domain_error("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
}

Symbol EpConfig::cell(Pos i) const {
    const Pos e = center_end();
    if (i < center_start) {
        const auto L = static_cast<Pos>(left_period.size());
        const Pos d = center_start - i;
        return left_period[static_cast<std::size_t>(L - 1 - (d - 1) % L)];
    }
    if (i < e) return center[static_cast<std::size_t>(i - center_start)];
    return right_period[static_cast<std::size_t>((i - e) % static_cast<Pos>(right_period.size()))];
}

Word EpConfig::cells(Pos lo, Pos hi) const {
    Word w;
    if (hi > lo) w.reserve(static_cast<std::size_t>(hi - lo));
    for (Pos i = lo; i < hi; ++i) w.push_back(cell(i));
    return w;
}

EpConfig EpConfig::shifted(Pos k) const {
    EpConfig r = *this;
    r.center_start -= k;
    return r;
}

EpConfig EpConfig::reversed() const {
    return EpConfig(q, casweep::reversed(right_period), casweep::reversed(center),
                    -(center_start + static_cast<Pos>(center.size()) - 1), casweep::reversed(left_period));
}

EpConfig EpConfig::normalized() const {
    EpConfig x = *this;
    const std::size_t lp = cyclic_period(x.left_period);
    x.left_period.erase(x.left_period.begin(), x.left_period.end() - static_cast<std::ptrdiff_t>(lp));
    x.right_period.resize(cyclic_period(x.right_period));

    const auto L = static_cast<Pos>(x.left_period.size());
    const auto R = static_cast<Pos>(x.right_period.size());
    const Pos e = x.center_end();
    const auto span = static_cast<Pos>(lcm64(static_cast<std::uint64_t>(L), static_cast<std::uint64_t>(R)));

    // a: the left tail is L-periodic on (-inf, a)
    Pos a = x.center_start;
    const Pos limit = e + L + span;
    while (a < limit && x.cell(a) == x.cell(a - L)) ++a;
    if (a == limit) {
        Word p = x.cells(0, L);
        return EpConfig::periodic(q, p);
    }
    // b: the right tail is R-periodic on [b, inf)
    Pos b = e;
    const Pos floor = x.center_start - R - span - 1;
    while (b > floor && x.cell(b - 1) == x.cell(b - 1 + R)) --b;

    if (a <= b) return EpConfig(q, x.cells(a - L, a), x.cells(a, b), a, x.cells(b, b + R));
    return EpConfig(q, x.cells(a - L, a), {}, a, x.cells(a, a + R));
}

bool ep_equal(const EpConfig& a, const EpConfig& b) {
    if (a.q != b.q) return false;
    const Pos lo = std::min(a.center_start, b.center_start);
    const Pos hi = std::max(a.center_end(), b.center_end());
    const auto ll = static_cast<Pos>(lcm64(a.left_period.size(), b.left_period.size()));
    const auto rr = static_cast<Pos>(lcm64(a.right_period.size(), b.right_period.size()));
    for (Pos i = lo - ll; i < hi + rr; ++i)
        if (a.cell(i) != b.cell(i)) return false;
    return true;
}

bool EpConfig::operator==(const EpConfig& o) const { return ep_equal(*this, o); }

std::string EpConfig::str() const {
    std::ostringstream os;
    os << "(" << to_string(left_period) << ")^w [" << center_start << ": " << to_string(center) << "] ("
       << to_string(right_period) << ")^w";
    return os.str();
}

EpConfig splice(const EpConfig& left, Pos i, const Word& mid, const Word& right_period) {
    const Pos lo = std::min(left.center_start, i);
    const auto L = static_cast<Pos>(left.left_period.size());
    Word c = left.cells(lo, i);
    c.insert(c.end(), mid.begin(), mid.end());
    return EpConfig(left.q, left.cells(lo - L, lo), std::move(c), lo, right_period);
}

EpConfig zip(const std::vector<EpConfig>& tracks, const std::vector<Pos>& offsets) {
    if (tracks.empty() || tracks.size() != offsets.size()) throw std::domain_error("zip: track/offset mismatch");
    const unsigned q = tracks[0].q;
    std::vector<EpConfig> ys;
    Pos lo = 0, hi = 0;
    std::uint64_t ll = 1, rr = 1;
    for (std::size_t k = 0; k < tracks.size(); ++k) {
        if (tracks[k].q != q) throw std::domain_error("zip: alphabet mismatch");
        ys.push_back(tracks[k].shifted(offsets[k]));
        const EpConfig& y = ys.back();
        lo = k ? std::min(lo, y.center_start) : y.center_start;
        hi = k ? std::max(hi, y.center_end()) : y.center_end();
        ll = lcm64(ll, y.left_period.size());
        rr = lcm64(rr, y.right_period.size());
    }
    const auto K = static_cast<unsigned>(tracks.size());
    auto letter = [&](Pos i) {
        Index v = 0;
        for (const auto& y : ys) v = v * q + y.cell(i);
        return static_cast<Symbol>(v);
    };
    auto range = [&](Pos a, Pos b) {
        Word w;
        for (Pos i = a; i < b; ++i) w.push_back(letter(i));
        return w;
    };
    return EpConfig(static_cast<unsigned>(ipow(q, K)), range(lo - static_cast<Pos>(ll), lo), range(lo, hi), lo,
                    range(hi, hi + static_cast<Pos>(rr)));
}

EpConfig unzip(const EpConfig& z, unsigned q, std::size_t tracks, std::size_t k, Pos offset) {
    const Index div = ipow(q, static_cast<unsigned>(tracks - 1 - k));
    auto digits = [&](const Word& w) {
        Word r;
        for (Symbol s : w) r.push_back(static_cast<Symbol>((s / div) % q));
        return r;
    };
    EpConfig t(q, digits(z.left_period), digits(z.center), z.center_start, digits(z.right_period));
    return t.shifted(-offset);
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        ps.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

int valuation(std::uint64_t n, std::uint64_t p) {
    int k = 0;
    while (n && n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

ValuedRational::ValuedRational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (num == 0 || den == 0) throw std::domain_error("valued rational must be positive");
    const auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

int ValuedRational::vp(std::uint64_t p) const {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
    return valuation(num_, p) - valuation(den_, p);
}

namespace {
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    if (r >> 64) throw std::overflow_error("rational overflow");
    return static_cast<std::uint64_t>(r);
}
}  // namespace

ValuedRational ValuedRational::operator*(const ValuedRational& o) const {
    const auto g1 = std::gcd(num_, o.den_), g2 = std::gcd(o.num_, den_);
    return {checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1)};
}

ValuedRational ValuedRational::operator/(const ValuedRational& o) const {
    return *this * ValuedRational(o.den_, o.num_);
}

std::string ValuedRational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------

Index draw(Rng& rng, Index n) { return n ? rng() % n : 0; }

Word random_word(Rng& rng, unsigned q, std::size_t len) {
    Word w(len);
    for (auto& s : w) s = static_cast<Symbol>(draw(rng, q));
    return w;
}

EpConfig random_config(Rng& rng, unsigned q, std::size_t max_period, std::size_t max_center, Pos anchor_span) {
    Word l = random_word(rng, q, 1 + draw(rng, max_period));
    Word c = random_word(rng, q, draw(rng, max_center + 1));
    const Pos cs = static_cast<Pos>(draw(rng, static_cast<Index>(2 * anchor_span + 1))) - anchor_span;
    Word r = random_word(rng, q, 1 + draw(rng, max_period));
    return EpConfig(q, std::move(l), std::move(c), cs, std::move(r));
}

}  // namespace casweep
