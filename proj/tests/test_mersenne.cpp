#include <doctest.h>

#include <transgen/mersenne.hpp>
#include <transgen/tables.hpp>

using namespace transgen;

TEST_CASE("Lucas-Lehmer exponent test") {
    CHECK(is_mersenne_exponent(5));
    CHECK(is_mersenne_exponent(7));
    CHECK_FALSE(is_mersenne_exponent(11));  // 2047 = 23 * 89
    CHECK_FALSE(is_mersenne_exponent(1));
    CHECK(is_mersenne_exponent(2));
    CHECK(is_mersenne_exponent(3));
    CHECK(is_mersenne_exponent(13));
    CHECK(is_mersenne_exponent(17));
    CHECK(is_mersenne_exponent(19));
    CHECK_FALSE(is_mersenne_exponent(23));
    CHECK(is_mersenne_exponent(31));
    CHECK_FALSE(is_mersenne_exponent(6));  // composite exponent

    // cross-check against trial division on the Mersenne number
    for (unsigned e = 2; e <= 31; ++e) {
        mpz_class M = (mpz_class(1) << e) - 1;
        bool prime = mpz_probab_prime_p(M.get_mpz_t(), 40) > 0;
        REQUIRE(is_mersenne_exponent(e) == prime);
    }
}

TEST_CASE("triple enumeration") {
    auto t5 = enumerate_triples(5);
    REQUIRE(t5.size() == 1);
    CHECK(t5[0] == MersenneTriple{5, 1, 0});

    auto t13 = enumerate_triples(13);
    REQUIRE(t13.size() == 4);
    CHECK(t13[0] == MersenneTriple{5, 1, 8});
    CHECK(t13[1] == MersenneTriple{5, 2, 3});
    CHECK(t13[2] == MersenneTriple{7, 1, 6});
    CHECK(t13[3] == MersenneTriple{13, 1, 0});

    auto t19 = enumerate_triples(19);
    CHECK(t19.size() == 8);
    bool has_19_1_0 = false;
    for (const auto& t : t19) has_19_1_0 |= (t == MersenneTriple{19, 1, 0});
    CHECK(has_19_1_0);

    CHECK(enumerate_triples(4).empty());
}

TEST_CASE("triples reproduce the printed table rows as sets") {
    for (unsigned m = 5; m <= 19; ++m) {
        auto computed = enumerate_triples(m);
        const auto& printed = printed_table62().at(m);
        REQUIRE(computed.size() == printed.size());
        for (const auto& p : printed) {
            bool found = false;
            for (const auto& c : computed)
                found |= (c.e == p.e && c.r == p.r && c.t == p.t);
            REQUIRE(found);
        }
    }
}

TEST_CASE("orbit profile shapes") {
    auto p510 = orbit_profile({5, 1, 0, {}}, 0);
    REQUIRE(p510.size() == 2);
    CHECK(p510[0].size == 3);
    CHECK(p510[0].multiplicity == 1);
    CHECK(p510[1].size == 93);
    CHECK(p510[1].multiplicity == 1);
    mpz_class total = 0;
    for (const auto& e : p510) total += e.size * e.multiplicity;
    CHECK(total == 96);

    auto p520 = orbit_profile({5, 2, 0, {}}, 0);
    REQUIRE(p520.size() == 3);
    CHECK(p520[0].size == 3);
    CHECK(p520[1].size == 93);
    CHECK(p520[1].multiplicity == 2);
    CHECK(p520[2].size == 2883);
    total = 0;
    for (const auto& e : p520) total += e.size * e.multiplicity;
    CHECK(total == 3 * 32 * 32);

    auto p4 = orbit_profile({5, 1, 1, {}}, 1);
    mpz_class count = 0;
    for (const auto& e : p4) count += e.multiplicity;
    CHECK(count == 4);  // 2^(r + t1)

    CHECK_THROWS_AS(orbit_profile({5, 1, 1, {}}, 2), std::invalid_argument);
}

TEST_CASE("orbit totals across the parameter box") {
    for (unsigned e : {5u, 7u, 13u}) {
        for (unsigned r = 1; r <= 3; ++r) {
            for (unsigned t = 0; t <= 4; ++t) {
                if (e * r + t > 40) continue;
                for (unsigned t1 = 0; t1 <= t; ++t1) {
                    auto prof = orbit_profile({e, r, t, {}}, t1);
                    mpz_class moved = 0, orbits = 0;
                    for (const auto& en : prof) {
                        moved += en.size * en.multiplicity;
                        orbits += en.multiplicity;
                    }
                    REQUIRE(moved == (mpz_class(1) << (e * r + t)) * 3);
                    REQUIRE(orbits == mpz_class(1) << (r + t1));
                }
            }
        }
    }
}

TEST_CASE("coset-count identity") {
    CHECK(check_orbit_identity(5, 1));  // 3 + 93 = 3 * 32
    CHECK(check_orbit_identity(5, 3));
    CHECK(check_orbit_identity(7, 1));  // 3 + 381 = 3 * 128
    for (unsigned e : {5u, 7u, 13u, 17u, 19u})
        for (unsigned r = 1; r <= 6; ++r) REQUIRE(check_orbit_identity(e, r));
    CHECK_THROWS_AS(check_orbit_identity(11, 1), std::invalid_argument);
}
