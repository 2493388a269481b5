#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "transgen/engine.hpp"

namespace transgen {

struct SweepReport {
    std::string case_id;
    std::string inequality;
    mpz_class claimed_threshold;           // N0 (0 when not applicable)
    std::string verified_range;
    std::optional<mpz_class> first_failure_below;  // largest probed n < N0 that fails
    std::string status;                    // verified / failed / skipped (external data)
    std::vector<std::string> failures;
    std::string note;

    bool verified() const { return status == "verified"; }
};

struct SweepOptions {
    std::uint64_t window = 100000;       // exhaustive scan width above N0
    mpz_class geometric_limit = 1000000000;  // sparse scan ceiling
    unsigned probe_below = 64;           // tightness probe below N0
    unsigned threads = 0;                // 0 = hardware concurrency
};

// Closed-form threshold inequalities for block sizes 2..9; each checked at
// every integer in [N0, N0 + window] and on a sparse geometric grid beyond.
std::vector<SweepReport> sweep_appendix_b(unsigned m, const SweepOptions& opts = {});

// The finite m = 2 sweep over the 96 odd q values with bounded exponents:
// E(2^k q, 2) + dt(2^k q) <= floor(2 c n / sqrt(log 2n)) for k <= k_q.
SweepReport sweep_m2_finite(Engine& engine, bool exhaustive = false);

// The 10 <= m <= 480 band (needs as(m) data) and the m >= 481 closed form.
std::vector<SweepReport> sweep_section6_mrange(Engine& engine, std::uint64_t n_hi = 1260);

// Exact generator count of the 2-group family on degree 2^(2k); monotone
// central-binomial ratio; generic-bound comparison.
SweepReport check_example62(unsigned k_max);

// lpp(n) >= c' log2(n) for 2 <= n <= n_max.
SweepReport check_lemma28(std::uint64_t n_max);

// C(K, floor(K/2)) <= b 2^K / sqrt(K) for 1 <= K <= K_max.
SweepReport check_eq31(std::uint64_t K_max);

// (1/2) prod_{j=2..t} (1 + 1/(4j(j-1))) strictly increasing, < 2/pi.
SweepReport check_wallis(std::uint64_t t_max);

// width_rank == width_oracle across divisor lattices up to n_max.
SweepReport check_debruijn(std::uint64_t n_max);

// |P| <= (longest chain) * (width) on random posets of <= 24 elements.
SweepReport check_dilworth(unsigned trials, unsigned max_elements, std::uint64_t seed);

}  // namespace transgen
