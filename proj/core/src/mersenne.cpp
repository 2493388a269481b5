#include "transgen/mersenne.hpp"

#include <stdexcept>

#include "transgen/numth.hpp"

namespace transgen {

bool is_mersenne_exponent(unsigned e) {
    if (e < 2) return false;  // 2^1 - 1 = 1 is not prime
    if (e == 2) return true;  // 3
    if (!is_prime_u64(e)) return false;
    // Lucas-Lehmer: s_0 = 4, s_{i+1} = s_i^2 - 2 mod M; M prime iff s_{e-2} = 0.
    mpz_class M = (mpz_class(1) << e) - 1;
    mpz_class s = 4;
    for (unsigned i = 0; i + 2 < e; ++i) {
        s = s * s - 2;
        s %= M;
    }
    return s == 0;
}

std::vector<MersenneTriple> enumerate_triples(unsigned m) {
    if (m < 5) return {};
    std::vector<MersenneTriple> out;
    for (unsigned e = 5; e <= m; ++e) {
        if (!is_mersenne_exponent(e)) continue;
        for (unsigned r = 1; e * r <= m; ++r) {
            out.push_back({e, r, m - e * r, std::nullopt});
        }
    }
    return out;
}

std::vector<OrbitEntry> orbit_profile(const MersenneTriple& triple, unsigned t1) {
    if (t1 > triple.t) throw std::invalid_argument("orbit_profile: t1 must satisfy 0 <= t1 <= t");
    mpz_class p = triple.p();
    std::vector<OrbitEntry> out;
    mpz_class pk = 1;
    for (unsigned k = 0; k <= triple.r; ++k) {
        OrbitEntry e;
        e.size = 3 * pk * (mpz_class(1) << (triple.t - t1));
        e.multiplicity = binom(triple.r, k) * (mpz_class(1) << t1);
        out.push_back(std::move(e));
        pk *= p;
    }
    return out;
}

bool check_orbit_identity(unsigned e, unsigned r) {
    if (!is_mersenne_exponent(e)) throw std::invalid_argument("check_orbit_identity: e not a Mersenne exponent");
    if (r < 1) throw std::invalid_argument("check_orbit_identity: r >= 1");
    mpz_class p = (mpz_class(1) << e) - 1;
    mpz_class lhs = 0, pk = 1;
    for (unsigned k = 0; k <= r; ++k) {
        lhs += binom(r, k) * 3 * pk;
        pk *= p;
    }
    mpz_class rhs;
    mpz_pow_ui(rhs.get_mpz_t(), mpz_class(p + 1).get_mpz_t(), r);
    return lhs == 3 * rhs;
}

}  // namespace transgen
