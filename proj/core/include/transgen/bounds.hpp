#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "transgen/numth.hpp"
#include "transgen/xreal.hpp"

namespace transgen {

struct TraceStep {
    std::string rule;
    std::string location;
    std::string note;
};

// Exact rational (or +infinity) together with the derivation trace.
class BoundValue {
public:
    BoundValue() = default;
    explicit BoundValue(mpq_class v) : value_(std::move(v)) {}
    explicit BoundValue(const mpz_class& v) : value_(v) {}

    static BoundValue infinity() {
        BoundValue b;
        b.infinite_ = true;
        return b;
    }

    bool infinite() const { return infinite_; }
    const mpq_class& value() const { return value_; }
    mpz_class floored() const;  // outer floor; throws on infinity

    std::vector<TraceStep>& trace() { return trace_; }
    const std::vector<TraceStep>& trace() const { return trace_; }
    BoundValue& note(std::string rule, std::string location, std::string text);

    BoundValue operator+(const BoundValue& o) const;
    BoundValue operator+(const mpq_class& v) const;
    static BoundValue min(const BoundValue& a, const BoundValue& b);
    static BoundValue max(const BoundValue& a, const BoundValue& b);
    bool operator<(const BoundValue& o) const;

    std::string value_str() const;

private:
    bool infinite_ = false;
    mpq_class value_;
    std::vector<TraceStep> trace_;
};

// Orbit-count parameters may be infinite; callers supply them, they are
// never computed from a group action.
using OrbitCount = std::optional<std::uint64_t>;  // nullopt = +infinity
inline OrbitCount orbit_infinite() { return std::nullopt; }

// Selects D = E_sol (soluble transitive top projection available) or D = E.
enum class Solubility { SolubleTransitive, General };

// E(n, p) = min{ floor(b n / sqrt((p-1) log_p n_p)), n / lpp(n / n_p) },
// first operand +infinity when n_p = 1. Certified floor; exact second operand.
BoundValue e_bound(const Factorization& n, std::uint64_t p);
BoundValue e_bound(std::uint64_t n, std::uint64_t p);

// E_sol(n, p) = min{ ws(n), n_p }, exact.
BoundValue e_sol_bound(const Factorization& n, std::uint64_t p);
BoundValue e_sol_bound(std::uint64_t n, std::uint64_t p);

BoundValue d_bound(const Factorization& n, std::uint64_t p, Solubility ctx);

enum class Lemma41Part { i, ii, iii, iv, v };
struct Lemma41Args {
    Factorization n;
    std::uint64_t p = 2;
    std::uint64_t a = 1;           // module dimension
    OrbitCount chi = orbit_infinite();
    OrbitCount chi1 = orbit_infinite();
    std::uint64_t r = 3;           // prime != p, parts iii
    std::vector<std::uint64_t> orbit_sizes;  // part ii, must sum to n
};
BoundValue lemma41_bound(Lemma41Part part, const Lemma41Args& args);

// Piecewise final form of the induced-module corollary:
// n <= 1260 -> floor(2 a n / (c' log n)); n >= 1261 -> floor(a b1 n / sqrt(log n)).
BoundValue cor42_bound(const Factorization& n, std::uint64_t p, std::uint64_t a);

// Profile data consumed by the chief-series bound: abelian factor orders p^a
// plus the nonabelian chief-factor count.
struct ChiefFactors {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> abelian;
    unsigned nonabelian = 0;
};

// sum_i a_i D(n, p_i) + c_nonab + dS
BoundValue chief_bound_i(const ChiefFactors& profile, const Factorization& n, Solubility ctx,
                         const BoundValue& dS);

// a * sum_{k=0..r} 2^t C(r,k) E_sol(3 p^k, 2) + dS; every E_sol term is 1
// because 3 p^k is odd, so the sum collapses to a 2^(t+r). The k=1 variant
// from the later restatement is recorded in the trace.
BoundValue chief_bound_ii(std::uint64_t a, unsigned e, unsigned r, unsigned t,
                          const BoundValue& dS);

enum class Cor53Form { Literal, WithB };
struct Cor53Args {
    Factorization n;
    std::uint64_t p = 2;
    std::uint64_t a = 1;
    OrbitCount chi;
    OrbitCount chi1;
    std::uint64_t r = 3;  // prime != p
    BoundValue dX;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rest;  // remaining factor orders
    Solubility ctx = Solubility::General;
    BoundValue dS;
    Cor53Form form = Cor53Form::Literal;
};
BoundValue cor53_bound(const Cor53Args& args);

// 2 D(n,2) + D(n,3) + 1 + dS
BoundValue cor54_bound(const Factorization& n, Solubility ctx, const BoundValue& dS);

enum class Cor55Part { i, ii, iii };
struct Cor55Args {
    Factorization n;
    mpq_class alpha;  // 0 < alpha < 1
    std::uint64_t a_p = 0;
    std::uint64_t a_pprime = 0;
    std::uint64_t a_ab = 0;
    std::uint64_t c_nonab = 0;
    BoundValue dS;
};
BoundValue cor55_bound(Cor55Part part, const Cor55Args& args);

// floor(2 a n / (c' log n)) + dS for n <= 1260, floor(a b1 n / sqrt(log n)) + dS beyond.
BoundValue cor56_bound(const Factorization& n, std::uint64_t a, const BoundValue& dS);

// floor((1 + c0) log m - (1/3) log 24), certified; >= 1 for m >= 2.
mpz_class pyber_ab_bound(const mpz_class& m);

struct HoltBound {
    std::uint64_t value;
    bool m3_exception;  // degree 3: S3 needs 2 generators
};
HoltBound holt_bound(std::uint64_t m);

// floor(log2 m) for m >= 1, exact.
std::uint64_t floor_log2(std::uint64_t m);
std::uint64_t floor_log2(const mpz_class& m);

// f(e, z, w) = (e b1 + c1) sqrt(z + w) / (2^z sqrt(w)) as an expression tree.
Expr f_function(Expr e, Expr z, Expr w);

// floor(x * n / sqrt(q)) with x a named constant and q a positive rational;
// shared certified-floor helper with caching.
mpz_class floor_const_mul(ConstantId id, const mpz_class& n, const mpq_class& q);

}  // namespace transgen
