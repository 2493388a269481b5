#include <doctest.h>

#include <random>

#include <transgen/xreal.hpp>

using namespace transgen;

namespace {

bool encloses_between(const Ival& iv, const mpq_class& lo, const mpq_class& hi) {
    return mpfr_cmp_q(iv.lo(), lo.get_mpq_t()) >= 0 && mpfr_cmp_q(iv.hi(), hi.get_mpq_t()) <= 0;
}

}  // namespace

TEST_CASE("constant enclosures match the stated decimal expansions") {
    auto c = constant_interval(ConstantId::c, 64);
    CHECK(encloses_between(c, mpq_class(8660254, 10000000), mpq_class(8660255, 10000000)));
    auto b = constant_interval(ConstantId::b, 64);
    CHECK(encloses_between(b, mpq_class(7978845, 10000000), mpq_class(7978846, 10000000)));
    // the front-matter prints rounded decimals; allow one unit in the last digit
    auto b0 = constant_interval(ConstantId::b0, 64);
    CHECK(encloses_between(b0, mpq_class(362133, 100000), mpq_class(362135, 100000)));
    auto b1 = constant_interval(ConstantId::b1, 64);
    CHECK(encloses_between(b1, mpq_class(112837, 100000), mpq_class(112839, 100000)));
    auto c0 = constant_interval(ConstantId::c0, 64);
    CHECK(encloses_between(c0, mpq_class(224398, 100000), mpq_class(224400, 100000)));
    auto cp = constant_interval(ConstantId::cprime, 64);
    CHECK(encloses_between(cp, mpq_class(552282, 1000000), mpq_class(552283, 1000000)));
}

TEST_CASE("c1 recomputation lands in the stated window") {
    auto c1 = constant_interval(ConstantId::c1, 256);
    CHECK(encloses_between(c1, mpq_class(92058, 100000), mpq_class(92059, 100000)));
}

TEST_CASE("certified floors of the flagged near-ties") {
    // c * 8 / sqrt(log2 8) is exactly 4; the exact path must settle it.
    Expr tie = expr_div(expr_mul(expr_const(ConstantId::c), expr_int(8)),
                        expr_sqrt(expr_log2(expr_int(8))));
    mpfr_prec_t used = 9999;
    CHECK(certified_floor(tie, used) == 4);
    CHECK(used <= 256);

    Expr e36 = expr_div(expr_mul(expr_const(ConstantId::c), expr_int(36)),
                        expr_sqrt(expr_log2(expr_int(36))));
    CHECK(certified_floor(e36) == 13);

    Expr b8 = expr_div(expr_mul(expr_const(ConstantId::b), expr_int(8)),
                       expr_sqrt(expr_int(3)));
    CHECK(certified_floor(b8) == 3);
}

TEST_CASE("exact quadratic path handles power-of-two degrees") {
    // c * 4096 / sqrt(log2 4096) = 4096/4 = 1024 exactly
    Expr e = expr_div(expr_mul(expr_const(ConstantId::c), expr_int(4096)),
                      expr_sqrt(expr_log2(expr_int(4096))));
    auto q = try_exact(e);
    REQUIRE(q.has_value());
    q->normalize();
    CHECK(q->is_rational());
    CHECK(q->q == 1024);
    CHECK(certified_floor(e) == 1024);
}

TEST_CASE("certified comparisons") {
    CHECK(certified_le(expr_const(ConstantId::c), expr_const(ConstantId::c1)));
    CHECK_FALSE(certified_le(expr_const(ConstantId::b1), expr_const(ConstantId::b)));
    // ws(12) = 9/2 <= b*12/sqrt(log2 12)
    Expr lhs = expr_ratio(mpq_class(9, 2));
    Expr rhs = expr_div(expr_mul(expr_const(ConstantId::b), expr_int(12)),
                        expr_sqrt(expr_log2(expr_int(12))));
    CHECK(certified_le(lhs, rhs));
    // equality certified through the exact path
    Expr sqrt8 = expr_sqrt(expr_int(8));
    Expr two_sqrt2 = expr_mul(expr_int(2), expr_sqrt(expr_int(2)));
    CHECK(certified_le(sqrt8, two_sqrt2));
    CHECK(certified_le(two_sqrt2, sqrt8));
}

TEST_CASE("nested enclosures under precision refinement") {
    std::mt19937_64 rng(0xACC01ADEull);
    std::uniform_int_distribution<int> num(1, 1000), op(0, 5);
    for (int trial = 0; trial < 10000; ++trial) {
        // small random positive expression
        Expr e = expr_ratio(mpq_class(num(rng), num(rng)));
        for (int depth = 0; depth < 4; ++depth) {
            Expr r = expr_ratio(mpq_class(num(rng), num(rng)));
            switch (op(rng)) {
                case 0: e = expr_add(e, r); break;
                case 1: e = expr_mul(e, r); break;
                case 2: e = expr_div(e, r); break;
                case 3: e = expr_sqrt(e); break;
                case 4: e = expr_log2(expr_add(e, expr_int(2))); break;
                case 5: e = expr_add(e, expr_const(ConstantId::b)); break;
            }
        }
        Ival coarse = eval(e, 64);
        Ival fine = eval(e, 256);
        REQUIRE(mpfr_cmp(fine.lo(), coarse.lo()) >= 0);
        REQUIRE(mpfr_cmp(fine.hi(), coarse.hi()) <= 0);
    }
}

TEST_CASE("certified floor agrees with rational floor on exact expressions") {
    std::mt19937_64 rng(0x5EEDull);
    std::uniform_int_distribution<long> num(-2000, 2000);
    std::uniform_int_distribution<long> den(1, 500);
    std::uniform_int_distribution<int> op(0, 2);
    for (int trial = 0; trial < 10000; ++trial) {
        mpq_class value(num(rng), den(rng));
        value.canonicalize();
        Expr e = expr_ratio(value);
        for (int depth = 0; depth < 3; ++depth) {
            mpq_class r(num(rng), den(rng));
            r.canonicalize();
            switch (op(rng)) {
                case 0:
                    e = expr_add(e, expr_ratio(r));
                    value += r;
                    break;
                case 1:
                    e = expr_mul(e, expr_ratio(r));
                    value *= r;
                    break;
                case 2:
                    e = expr_sub(e, expr_ratio(r));
                    value -= r;
                    break;
            }
        }
        mpz_class expect;
        mpz_fdiv_q(expect.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
        REQUIRE(certified_floor(e) == expect);
    }
}

TEST_CASE("ambiguous floor surfaces instead of silently resolving") {
    // (sqrt2 + sqrt3)^2 - 2 sqrt6 = 5 exactly, but the mixed-radicand sum
    // escapes the exact carrier, so the enclosure always straddles 5.
    Expr s = expr_add(expr_sqrt(expr_int(2)), expr_sqrt(expr_int(3)));
    Expr e = expr_sub(expr_mul(s, s), expr_mul(expr_int(2), expr_sqrt(expr_int(6))));
    mpfr_prec_t saved = precision_cap();
    set_precision_cap(256);
    CHECK_THROWS_AS(certified_floor(e), AmbiguousFloor);
    set_precision_cap(saved);
}

TEST_CASE("domain errors are reported, never widened") {
    Expr div0 = expr_div(expr_int(1), expr_sub(expr_sqrt(expr_int(2)), expr_sqrt(expr_int(2))));
    CHECK_THROWS_AS(eval(div0, 64), DomainError);
    Expr logneg = expr_log2(expr_sub(expr_int(1), expr_int(5)));
    CHECK_THROWS_AS(eval(logneg, 64), DomainError);
    Expr sqrtneg = expr_sqrt(expr_sub(expr_int(1), expr_int(5)));
    CHECK_THROWS_AS(eval(sqrtneg, 64), DomainError);
}

TEST_CASE("precision cap validation") {
    CHECK_THROWS_AS(set_precision_cap(32), std::invalid_argument);
    CHECK(precision_cap() >= 64);
}
