#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace casweep {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using Index = std::uint64_t;
using Pos = std::int64_t;

// Thrown when an internal construction invariant fails (a bug, or a bad radius).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a configured resource cap would be exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EpConfig;

// A negative decision whose evidence is a pair of configurations (for example
// two distinct asymptotic configurations with the same image).
struct VerdictError : std::runtime_error {
    VerdictError(const std::string& what, std::vector<EpConfig> evidence_);
    std::vector<EpConfig> evidence;
};

// q^n, throwing ResourceError if the result does not fit in 63 bits.
Index ipow(Index q, unsigned n);

// Big-endian radix-q: sum w_i q^(len-1-i).
Index word_index(const Word& w, unsigned q);
Word word_of_index(Index idx, unsigned q, std::size_t len);

Word reversed(Word w);
std::string to_string(const Word& w);

/*
 * Eventually periodic configuration.
 *
 *   cell(i) = center[i - center_start]         for center_start <= i < center_end()
 *   cell(center_start - d) = left_period[L - 1 - (d-1) mod L]    for d >= 1
 *   cell(center_end() + k) = right_period[k mod R]              for k >= 0
 */
struct EpConfig {
    unsigned q = 2;
    Word left_period{0};
    Word center;
    Pos center_start = 0;
    Word right_period{0};

    EpConfig() = default;
    EpConfig(unsigned q_, Word left, Word c, Pos cs, Word right);

    static EpConfig constant(unsigned q, Symbol s);
    static EpConfig periodic(unsigned q, Word period);  // cell(i) = period[i mod p]

    Pos center_end() const { return center_start + static_cast<Pos>(center.size()); }
    Symbol cell(Pos i) const;
    Word cells(Pos lo, Pos hi) const;  // [lo, hi)

    EpConfig shifted(Pos k) const;  // sigma^k: result.cell(i) = cell(i + k)
    EpConfig reversed() const;      // result.cell(i) = cell(-i)
    EpConfig normalized() const;

    void validate() const;  // throws std::domain_error
    std::string str() const;

    bool operator==(const EpConfig& o) const;  // semantic equality
};

bool ep_equal(const EpConfig& a, const EpConfig& b);

// Cells < i taken from `left`, then `mid` starting at i, then `right_period` repeated.
EpConfig splice(const EpConfig& left, Pos i, const Word& mid, const Word& right_period);

// Track-wise combination: cell(i) = sum_k x_k.cell(i + offset_k) * q^(K-1-k).
EpConfig zip(const std::vector<EpConfig>& tracks, const std::vector<Pos>& offsets);
// Inverse of zip for a single track k over a product alphabet of K tracks of size q.
EpConfig unzip(const EpConfig& z, unsigned q, std::size_t tracks, std::size_t k, Pos offset);

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b);

// Positive rational in lowest terms, with p-adic valuations.
class ValuedRational {
public:
    ValuedRational(std::uint64_t num = 1, std::uint64_t den = 1);
    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }
    int vp(std::uint64_t p) const;  // throws std::domain_error for non-prime p
    ValuedRational operator*(const ValuedRational& o) const;
    ValuedRational operator/(const ValuedRational& o) const;
    bool operator==(const ValuedRational& o) const = default;
    std::string str() const;

private:
    std::uint64_t num_, den_;
};

bool is_prime(std::uint64_t p);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
int valuation(std::uint64_t n, std::uint64_t p);

// Deterministic sampling helpers; every draw is `rng() % n` so results are
// reproducible across standard libraries.
using Rng = std::mt19937_64;
Index draw(Rng& rng, Index n);
Word random_word(Rng& rng, unsigned q, std::size_t len);
EpConfig random_config(Rng& rng, unsigned q, std::size_t max_period = 3, std::size_t max_center = 8,
                       Pos anchor_span = 6);

}  // namespace casweep
