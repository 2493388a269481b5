#include "transgen/numth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace transgen {

namespace {

constexpr std::uint32_t kSieveBound = 1u << 21;  // covers sqrt of 2^35*15 and the 10^6 scans

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<std::uint8_t> composite(kSieveBound + 1, 0);
        std::vector<std::uint32_t> ps;
        for (std::uint32_t i = 2; i <= kSieveBound; ++i) {
            if (!composite[i]) {
                ps.push_back(i);
                for (std::uint64_t j = std::uint64_t(i) * i; j <= kSieveBound; j += i)
                    composite[j] = 1;
            }
        }
        return ps;
    }();
    return primes;
}

const std::vector<std::uint32_t>& spf_table() {
    static const std::vector<std::uint32_t> spf = [] {
        std::vector<std::uint32_t> t(kSieveBound + 1, 0);
        for (std::uint32_t i = 2; i <= kSieveBound; ++i) {
            if (t[i] == 0) {
                for (std::uint64_t j = i; j <= kSieveBound; j += i)
                    if (t[j] == 0) t[j] = i;
            }
        }
        return t;
    }();
    return spf;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Pollard rho with a fixed increment ladder; only reached for
// cofactors that are products of two primes above the sieve bound.
std::uint64_t pollard_rho(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; }
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is deterministic for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Factorization::Factorization(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].exponent == 0) throw std::invalid_argument("zero exponent");
        if (!is_prime_u64(entries_[i].prime)) throw std::invalid_argument("entry prime fails primality test");
        if (i > 0 && entries_[i - 1].prime >= entries_[i].prime)
            throw std::invalid_argument("primes not strictly increasing");
    }
}

mpz_class Factorization::value() const {
    mpz_class v = 1;
    for (const auto& e : entries_) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), e.prime, e.exponent);
        v *= pw;
    }
    return v;
}

unsigned Factorization::exponent_of(std::uint64_t p) const {
    for (const auto& e : entries_)
        if (e.prime == p) return e.exponent;
    return 0;
}

mpz_class Factorization::p_part(std::uint64_t p) const {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, exponent_of(p));
    return pw;
}

mpz_class Factorization::lpp() const {
    mpz_class best = 1;
    for (const auto& e : entries_) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), e.prime, e.exponent);
        if (pw > best) best = pw;
    }
    return best;
}

std::uint64_t Factorization::omega() const {
    std::uint64_t s = 0;
    for (const auto& e : entries_) s += e.exponent;
    return s;
}

std::uint64_t Factorization::omega1() const {
    std::uint64_t s = 0;
    for (const auto& e : entries_) s += std::uint64_t(e.exponent) * e.prime;
    return s;
}

std::uint64_t Factorization::bigK() const { return omega1() - omega(); }

Factorization Factorization::without_prime(std::uint64_t p) const {
    std::vector<Entry> out;
    for (const auto& e : entries_)
        if (e.prime != p) out.push_back(e);
    return Factorization(std::move(out));
}

Factorization Factorization::times_prime_power(std::uint64_t p, unsigned k) const {
    if (k == 0) return *this;
    std::vector<Entry> out;
    bool placed = false;
    for (const auto& e : entries_) {
        if (e.prime == p) {
            out.push_back({p, e.exponent + k});
            placed = true;
        } else {
            if (!placed && e.prime > p) {
                out.push_back({p, k});
                placed = true;
            }
            out.push_back(e);
        }
    }
    if (!placed) out.push_back({p, k});
    return Factorization(std::move(out));
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<Factorization::Entry> entries;
    if (n <= kSieveBound) {
        const auto& spf = spf_table();
        while (n > 1) {
            std::uint64_t p = spf[n];
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            entries.push_back({p, e});
        }
        return Factorization(std::move(entries));
    }
    for (std::uint32_t p : small_primes()) {
        if (std::uint64_t(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            entries.push_back({p, e});
        }
    }
    if (n > 1) {
        if (is_prime_u64(n)) {
            entries.push_back({n, 1});
        } else {
            // Cofactor is a product of at most two primes above the sieve bound.
            std::uint64_t a = pollard_rho(n);
            std::uint64_t b = n / a;
            if (a > b) std::swap(a, b);
            if (a == b) {
                entries.push_back({a, 2});
            } else {
                entries.push_back({a, 1});
                entries.push_back({b, 1});
            }
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& x, const auto& y) { return x.prime < y.prime; });
    }
    return Factorization(std::move(entries));
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::invalid_argument("p_part: n must be positive");
    if (!is_prime_u64(p)) throw std::invalid_argument("p_part: p must be prime");
    std::uint64_t r = 1;
    while (n % p == 0) { n /= p; r *= p; }
    return r;
}

std::uint64_t lpp(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("lpp: n must be positive");
    std::uint64_t best = 1;
    Factorization f = factorize(n);
    for (const auto& e : f.entries()) {
        std::uint64_t pw = 1;
        for (unsigned i = 0; i < e.exponent; ++i) pw *= e.prime;
        best = std::max(best, pw);
    }
    return best;
}

std::uint64_t omega(std::uint64_t n) { return factorize(n).omega(); }
std::uint64_t omega1(std::uint64_t n) { return factorize(n).omega1(); }
std::uint64_t bigK(std::uint64_t n) { return factorize(n).bigK(); }

mpz_class binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpq_class ws(const Factorization& f) {
    mpz_class n = f.value();
    if (n < 2) throw std::invalid_argument("ws: n must be >= 2");
    std::uint64_t K = f.bigK();
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, K);
    mpq_class r(n * binom(K, K / 2), pow2);
    r.canonicalize();
    return r;
}

mpq_class ws(std::uint64_t n) { return ws(factorize(n)); }

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2 || n > kSieveBound) return 0;
    return spf_table()[n];
}

std::uint64_t lpp_sieved(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("lpp_sieved: n must be positive");
    if (n > kSieveBound) return lpp(n);
    const auto& spf = spf_table();
    std::uint64_t best = 1;
    while (n > 1) {
        std::uint64_t p = spf[n], pw = 1;
        while (n % p == 0) { n /= p; pw *= p; }
        best = std::max(best, pw);
    }
    return best;
}

}  // namespace transgen
