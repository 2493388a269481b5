#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace transgen {

struct AmbiguousFloor : std::runtime_error {
    explicit AmbiguousFloor(const std::string& what) : std::runtime_error(what) {}
};
struct AmbiguousComparison : std::runtime_error {
    explicit AmbiguousComparison(const std::string& what) : std::runtime_error(what) {}
};
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Escalation schedule runs 64 -> 128 -> ... -> precision_cap() bits.
mpfr_prec_t precision_cap();
void set_precision_cap(mpfr_prec_t bits);

// Enclosure [lo, hi] with outward rounding; endpoints are dyadic rationals.
class Ival {
public:
    explicit Ival(mpfr_prec_t prec = 64);
    Ival(const Ival&);
    Ival(Ival&&) noexcept;
    Ival& operator=(const Ival&);
    Ival& operator=(Ival&&) noexcept;
    ~Ival();

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    bool contains(const mpq_class& q) const;
    std::string str(std::size_t digits = 20) const;

    static Ival from_int(const mpz_class& z, mpfr_prec_t prec);
    static Ival from_ratio(const mpq_class& q, mpfr_prec_t prec);
    static Ival from_ui(unsigned long u, mpfr_prec_t prec);
    static Ival pi(mpfr_prec_t prec);
    static Ival ln2(mpfr_prec_t prec);

    static Ival add(const Ival& a, const Ival& b);
    static Ival sub(const Ival& a, const Ival& b);
    static Ival mul(const Ival& a, const Ival& b);
    static Ival div(const Ival& a, const Ival& b);  // throws DomainError if b straddles 0
    static Ival sqrt(const Ival& a);                // throws DomainError if a.lo < 0
    static Ival log2(const Ival& a);                // throws DomainError if a.lo <= 0
    static Ival exp2(const Ival& a);
    static Ival pow(const Ival& base, const Ival& expo);  // base.lo > 0 required
    static Ival neg(const Ival& a);

    // floor(lo) and floor(hi), exact on the dyadic endpoints.
    mpz_class floor_lo() const;
    mpz_class floor_hi() const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

enum class ConstantId { b, b1, c, c1, c0, cprime, b0 };
const char* constant_name(ConstantId id);
Ival constant_interval(ConstantId id, mpfr_prec_t prec);

// Values of the form q * sqrt(r), q rational, r rational >= 0. This exact
// carrier resolves the floor ties that come from c = sqrt(3)/2 against
// sqrt(log2 2^k); everything else stays on the interval path.
struct QuadValue {
    mpq_class q;
    mpq_class r;  // r == 1 means the value is the exact rational q

    bool is_rational() const { return r == 1 || q == 0; }
    void normalize();
};

class ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

Expr expr_int(long v);
Expr expr_int(const mpz_class& v);
Expr expr_ratio(const mpq_class& v);
Expr expr_const(ConstantId id);
Expr expr_add(Expr a, Expr b);
Expr expr_sub(Expr a, Expr b);
Expr expr_mul(Expr a, Expr b);
Expr expr_div(Expr a, Expr b);
Expr expr_sqrt(Expr a);
Expr expr_log2(Expr a);
Expr expr_logb(Expr a, unsigned long base);  // integer base >= 2
Expr expr_exp2(Expr a);

// Enclosure of the expression value; width shrinks monotonically in prec.
Ival eval(const Expr& e, mpfr_prec_t prec);

// Exact q*sqrt(r) value when the tree admits one.
std::optional<QuadValue> try_exact(const Expr& e);

// floor with proof obligation; escalates 64..cap, throws AmbiguousFloor.
mpz_class certified_floor(const Expr& e);
// Exposes the precision that settled the floor (for reporting).
mpz_class certified_floor(const Expr& e, mpfr_prec_t& used_prec);

// true iff lhs <= rhs, certified by disjoint enclosures or exact values.
bool certified_le(const Expr& lhs, const Expr& rhs);
bool certified_lt(const Expr& lhs, const Expr& rhs);

}  // namespace transgen
