#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace transgen {

// Triple (e, r, t) with p = 2^e - 1 prime, p >= 31 (so e >= 5), r >= 1,
// t >= 0; carries the degree parameter m = e*r + t. t1 is optional data
// attached by the orbit analysis, 0 <= t1 <= t.
struct MersenneTriple {
    unsigned e;
    unsigned r;
    unsigned t;
    std::optional<unsigned> t1;

    unsigned m() const { return e * r + t; }
    mpz_class p() const { return (mpz_class(1) << e) - 1; }
    bool operator==(const MersenneTriple& o) const { return e == o.e && r == o.r && t == o.t; }
};

// true iff 2^e - 1 is prime; Lucas-Lehmer for e >= 3, direct below.
bool is_mersenne_exponent(unsigned e);

// All (e, r, t) with m = e*r + t, r >= 1, t >= 0, e >= 5 a Mersenne exponent;
// ordered by e ascending then r ascending.
std::vector<MersenneTriple> enumerate_triples(unsigned m);

// Orbit structure: (3 p^k * 2^(t - t1), C(r,k) * 2^t1) for k = 0..r.
struct OrbitEntry {
    mpz_class size;
    mpz_class multiplicity;
};
std::vector<OrbitEntry> orbit_profile(const MersenneTriple& triple, unsigned t1);

// sum_k C(r,k) 3 p^k == 3 (p+1)^r, exact big-integer identity.
bool check_orbit_identity(unsigned e, unsigned r);

}  // namespace transgen
