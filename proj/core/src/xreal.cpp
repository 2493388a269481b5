#include "transgen/xreal.hpp"

#include <atomic>
#include <sstream>
#include <vector>

namespace transgen {

namespace {
std::atomic<mpfr_prec_t> g_precision_cap{4096};
}

mpfr_prec_t precision_cap() { return g_precision_cap.load(); }
void set_precision_cap(mpfr_prec_t bits) {
    if (bits < 64) throw std::invalid_argument("precision cap must be >= 64");
    g_precision_cap.store(bits);
}

Ival::Ival(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}
Ival::Ival(const Ival& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}
Ival::Ival(Ival&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}
Ival& Ival::operator=(const Ival& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}
Ival& Ival::operator=(Ival&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}
Ival::~Ival() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

bool Ival::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

std::string Ival::str(std::size_t digits) const {
    std::ostringstream os;
    char* l = nullptr;
    char* h = nullptr;
    mpfr_asprintf(&l, "%.*Rg", (int)digits, lo_);
    mpfr_asprintf(&h, "%.*Rg", (int)digits, hi_);
    os << "[" << l << ", " << h << "]";
    mpfr_free_str(l);
    mpfr_free_str(h);
    return os.str();
}

Ival Ival::from_int(const mpz_class& z, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
}
Ival Ival::from_ratio(const mpq_class& q, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}
Ival Ival::from_ui(unsigned long u, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_ui(r.lo_, u, MPFR_RNDD);
    mpfr_set_ui(r.hi_, u, MPFR_RNDU);
    return r;
}
Ival Ival::pi(mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}
Ival Ival::ln2(mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_const_log2(r.lo_, MPFR_RNDD);
    mpfr_const_log2(r.hi_, MPFR_RNDU);
    return r;
}

Ival Ival::add(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}
Ival Ival::sub(const Ival& a, const Ival& b) {
    Ival r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}
Ival Ival::mul(const Ival& a, const Ival& b) {
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    mpfr_t cand;
    mpfr_init2(cand, p);
    Ival r(p);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(cand, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand, r.lo_) < 0) mpfr_set(r.lo_, cand, MPFR_RNDD);
            mpfr_mul(cand, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand, r.hi_) > 0) mpfr_set(r.hi_, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(cand);
    return r;
}
Ival Ival::div(const Ival& a, const Ival& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
        throw DomainError("interval division by an enclosure containing 0");
    mpfr_prec_t p = std::max(a.prec_, b.prec_);
    mpfr_t cand;
    mpfr_init2(cand, p);
    Ival r(p);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(cand, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand, r.lo_) < 0) mpfr_set(r.lo_, cand, MPFR_RNDD);
            mpfr_div(cand, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand, r.hi_) > 0) mpfr_set(r.hi_, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(cand);
    return r;
}
Ival Ival::sqrt(const Ival& a) {
    if (mpfr_sgn(a.lo_) < 0) throw DomainError("sqrt of an enclosure with negative lower bound");
    Ival r(a.prec_);
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}
Ival Ival::log2(const Ival& a) {
    if (mpfr_sgn(a.lo_) <= 0) throw DomainError("log2 of an enclosure with nonpositive lower bound");
    Ival r(a.prec_);
    mpfr_log2(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log2(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}
Ival Ival::exp2(const Ival& a) {
    Ival r(a.prec_);
    mpfr_exp2(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp2(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}
Ival Ival::pow(const Ival& base, const Ival& expo) {
    if (mpfr_sgn(base.lo_) <= 0) throw DomainError("pow requires a positive base enclosure");
    mpfr_prec_t p = std::max(base.prec_, expo.prec_);
    mpfr_t cand;
    mpfr_init2(cand, p);
    Ival r(p);
    const mpfr_srcptr bs[2] = {base.lo_, base.hi_};
    const mpfr_srcptr es[2] = {expo.lo_, expo.hi_};
    bool first = true;
    for (auto x : bs)
        for (auto y : es) {
            mpfr_pow(cand, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand, r.lo_) < 0) mpfr_set(r.lo_, cand, MPFR_RNDD);
            mpfr_pow(cand, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand, r.hi_) > 0) mpfr_set(r.hi_, cand, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(cand);
    return r;
}
Ival Ival::neg(const Ival& a) {
    Ival r(a.prec_);
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

mpz_class Ival::floor_lo() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
    return z;
}
mpz_class Ival::floor_hi() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDD);
    return z;
}

const char* constant_name(ConstantId id) {
    switch (id) {
        case ConstantId::b: return "b";
        case ConstantId::b1: return "b1";
        case ConstantId::c: return "c";
        case ConstantId::c1: return "c1";
        case ConstantId::c0: return "c0";
        case ConstantId::cprime: return "c'";
        case ConstantId::b0: return "b0";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Expression trees

enum class Op {
    IntLit,
    RatioLit,
    Const,
    Pi,
    Ln2,
    Add,
    Sub,
    Mul,
    Div,
    Sqrt,
    Log2,
    Logb,
    Exp2,
};

class ExprNode {
public:
    Op op;
    mpq_class lit;           // IntLit / RatioLit
    ConstantId cid{};        // Const
    unsigned long base{};    // Logb
    Expr a, b;

    ExprNode(Op o) : op(o) {}
};

namespace {
Expr make(Op op) { return std::make_shared<ExprNode>(op); }
}

Expr expr_int(long v) {
    auto n = std::make_shared<ExprNode>(Op::IntLit);
    n->lit = mpq_class(v);
    return n;
}
Expr expr_int(const mpz_class& v) {
    auto n = std::make_shared<ExprNode>(Op::IntLit);
    n->lit = mpq_class(v);
    return n;
}
Expr expr_ratio(const mpq_class& v) {
    auto n = std::make_shared<ExprNode>(Op::RatioLit);
    n->lit = v;
    return n;
}
Expr expr_const(ConstantId id) {
    auto n = std::make_shared<ExprNode>(Op::Const);
    n->cid = id;
    return n;
}
static Expr binary(Op op, Expr a, Expr b) {
    auto n = std::make_shared<ExprNode>(op);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}
static Expr unary(Op op, Expr a) {
    auto n = std::make_shared<ExprNode>(op);
    n->a = std::move(a);
    return n;
}
Expr expr_add(Expr a, Expr b) { return binary(Op::Add, std::move(a), std::move(b)); }
Expr expr_sub(Expr a, Expr b) { return binary(Op::Sub, std::move(a), std::move(b)); }
Expr expr_mul(Expr a, Expr b) { return binary(Op::Mul, std::move(a), std::move(b)); }
Expr expr_div(Expr a, Expr b) { return binary(Op::Div, std::move(a), std::move(b)); }
Expr expr_sqrt(Expr a) { return unary(Op::Sqrt, std::move(a)); }
Expr expr_log2(Expr a) { return unary(Op::Log2, std::move(a)); }
Expr expr_logb(Expr a, unsigned long base) {
    if (base < 2) throw std::invalid_argument("logb base must be >= 2");
    auto n = std::make_shared<ExprNode>(Op::Logb);
    n->a = std::move(a);
    n->base = base;
    return n;
}
Expr expr_exp2(Expr a) { return unary(Op::Exp2, std::move(a)); }

// Constant defining expressions, from the front-matter table.
static Expr constant_definition(ConstantId id) {
    switch (id) {
        case ConstantId::b:  // sqrt(2/pi)
            return expr_sqrt(expr_div(expr_int(2), make(Op::Pi)));
        case ConstantId::b1:  // sqrt(2)*b
            return expr_mul(expr_sqrt(expr_int(2)), constant_definition(ConstantId::b));
        case ConstantId::c:  // sqrt(3)/2
            return expr_div(expr_sqrt(expr_int(3)), expr_int(2));
        case ConstantId::c1: {  // 1512660*sqrt(log2(2^19*15))/(2^19*15)
            mpz_class d = mpz_class(1) << 19;
            d *= 15;
            return expr_div(expr_mul(expr_int(1512660), expr_sqrt(expr_log2(expr_int(d)))),
                            expr_int(d));
        }
        case ConstantId::c0:  // log9(48) + (1/3)log9(24)
            return expr_add(expr_logb(expr_int(48), 9),
                            expr_mul(expr_ratio(mpq_class(1, 3)), expr_logb(expr_int(24), 9)));
        case ConstantId::cprime:  // ln2 / 1.25506
            return expr_div(make(Op::Ln2), expr_ratio(mpq_class(125506, 100000)));
        case ConstantId::b0:  // 2/c'
            return expr_div(expr_int(2), constant_definition(ConstantId::cprime));
    }
    throw std::logic_error("unknown constant");
}

Ival constant_interval(ConstantId id, mpfr_prec_t prec) {
    return eval(constant_definition(id), prec);
}

Ival eval(const Expr& e, mpfr_prec_t prec) {
    switch (e->op) {
        case Op::IntLit:
        case Op::RatioLit:
            return Ival::from_ratio(e->lit, prec);
        case Op::Const:
            return constant_interval(e->cid, prec);
        case Op::Pi:
            return Ival::pi(prec);
        case Op::Ln2:
            return Ival::ln2(prec);
        case Op::Add:
            return Ival::add(eval(e->a, prec), eval(e->b, prec));
        case Op::Sub:
            return Ival::sub(eval(e->a, prec), eval(e->b, prec));
        case Op::Mul:
            return Ival::mul(eval(e->a, prec), eval(e->b, prec));
        case Op::Div:
            return Ival::div(eval(e->a, prec), eval(e->b, prec));
        case Op::Sqrt:
            return Ival::sqrt(eval(e->a, prec));
        case Op::Log2:
            return Ival::log2(eval(e->a, prec));
        case Op::Logb:
            return Ival::div(Ival::log2(eval(e->a, prec)),
                             Ival::log2(Ival::from_ui(e->base, prec)));
        case Op::Exp2:
            return Ival::exp2(eval(e->a, prec));
    }
    throw std::logic_error("unhandled op");
}

// ---------------------------------------------------------------------------
// Exact q*sqrt(r) evaluation

void QuadValue::normalize() {
    if (q == 0) {
        r = 1;
        return;
    }
    if (r == 1) return;
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        q *= mpq_class(sn, sd);
        q.canonicalize();
        r = 1;
    }
}

namespace {

// log base `base` of q when q is an exact integer power of base; q > 0.
std::optional<long> integer_log(const mpq_class& q, unsigned long base) {
    if (q <= 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    auto as_power = [&](const mpz_class& v) -> std::optional<long> {
        if (v == 1) return 0;
        mpz_class cur = v;
        long k = 0;
        while (mpz_divisible_ui_p(cur.get_mpz_t(), base)) {
            cur /= static_cast<unsigned long>(base);
            ++k;
        }
        if (cur == 1) return k;
        return std::nullopt;
    };
    if (den == 1) return as_power(num);
    if (num == 1) {
        auto k = as_power(den);
        if (k) return -*k;
    }
    return std::nullopt;
}

}  // namespace

std::optional<QuadValue> try_exact(const Expr& e) {
    switch (e->op) {
        case Op::IntLit:
        case Op::RatioLit:
            return QuadValue{e->lit, 1};
        case Op::Const:
            if (e->cid == ConstantId::c) return QuadValue{mpq_class(1, 2), 3};
            return std::nullopt;
        case Op::Pi:
        case Op::Ln2:
            return std::nullopt;
        case Op::Add:
        case Op::Sub: {
            auto x = try_exact(e->a);
            auto y = try_exact(e->b);
            if (!x || !y) return std::nullopt;
            x->normalize();
            y->normalize();
            mpq_class yq = e->op == Op::Sub ? mpq_class(-y->q) : y->q;
            if (x->q == 0) return QuadValue{yq, y->r};
            if (y->q == 0) return *x;
            if (x->r != y->r) return std::nullopt;
            QuadValue out{x->q + yq, x->r};
            out.normalize();
            return out;
        }
        case Op::Mul: {
            auto x = try_exact(e->a);
            auto y = try_exact(e->b);
            if (!x || !y) return std::nullopt;
            QuadValue out{x->q * y->q, x->r * y->r};
            out.q.canonicalize();
            out.r.canonicalize();
            out.normalize();
            return out;
        }
        case Op::Div: {
            auto x = try_exact(e->a);
            auto y = try_exact(e->b);
            if (!x || !y) return std::nullopt;
            if (y->q == 0) throw DomainError("exact division by zero");
            QuadValue out{x->q / y->q, x->r / y->r};
            out.q.canonicalize();
            out.r.canonicalize();
            out.normalize();
            return out;
        }
        case Op::Sqrt: {
            auto x = try_exact(e->a);
            if (!x) return std::nullopt;
            x->normalize();
            if (x->r != 1) return std::nullopt;
            if (x->q < 0) throw DomainError("exact sqrt of a negative value");
            QuadValue out{1, x->q};
            out.normalize();
            return out;
        }
        case Op::Log2: {
            auto x = try_exact(e->a);
            if (!x) return std::nullopt;
            x->normalize();
            if (x->r != 1) return std::nullopt;
            if (x->q <= 0) throw DomainError("exact log2 of a nonpositive value");
            auto k = integer_log(x->q, 2);
            if (!k) return std::nullopt;
            return QuadValue{mpq_class(*k), 1};
        }
        case Op::Logb: {
            auto x = try_exact(e->a);
            if (!x) return std::nullopt;
            x->normalize();
            if (x->r != 1) return std::nullopt;
            if (x->q <= 0) throw DomainError("exact log of a nonpositive value");
            auto k = integer_log(x->q, e->base);
            if (!k) return std::nullopt;
            return QuadValue{mpq_class(*k), 1};
        }
        case Op::Exp2: {
            auto x = try_exact(e->a);
            if (!x) return std::nullopt;
            x->normalize();
            if (x->r != 1) return std::nullopt;
            mpz_class num = x->q.get_num(), den = x->q.get_den();
            auto pow2 = [](const mpz_class& k) {
                mpq_class v;
                if (k >= 0) {
                    mpz_class p;
                    mpz_ui_pow_ui(p.get_mpz_t(), 2, mpz_get_ui(k.get_mpz_t()));
                    v = p;
                } else {
                    mpz_class p;
                    mpz_ui_pow_ui(p.get_mpz_t(), 2, mpz_get_ui(mpz_class(-k).get_mpz_t()));
                    v = mpq_class(1, p);
                }
                return v;
            };
            if (den == 1 && mpz_fits_slong_p(num.get_mpz_t()))
                return QuadValue{pow2(num), 1};
            if (den == 2 && mpz_fits_slong_p(num.get_mpz_t())) {
                // 2^(a/2) = 2^((a-1)/2) * sqrt(2) for odd a
                mpz_class half = (num - 1) / 2;
                QuadValue out{pow2(half), 2};
                out.normalize();
                return out;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Certified floor and comparison

mpz_class certified_floor(const Expr& e) {
    mpfr_prec_t unused;
    return certified_floor(e, unused);
}

mpz_class certified_floor(const Expr& e, mpfr_prec_t& used_prec) {
    if (auto exact = try_exact(e)) {
        exact->normalize();
        if (exact->is_rational()) {
            used_prec = 0;
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), exact->q.get_num().get_mpz_t(), exact->q.get_den().get_mpz_t());
            return f;
        }
    }
    mpfr_prec_t cap = precision_cap();
    for (mpfr_prec_t p = 64; p <= cap; p *= 2) {
        Ival iv = eval(e, p);
        mpz_class flo = iv.floor_lo(), fhi = iv.floor_hi();
        if (flo == fhi) {
            used_prec = p;
            return flo;
        }
    }
    throw AmbiguousFloor("floor still ambiguous at the precision cap; value may be an exact integer");
}

namespace {

// -1 / 0 / +1 comparison of two exact q*sqrt(r) values.
int quad_cmp(QuadValue x, QuadValue y) {
    x.normalize();
    y.normalize();
    int sx = sgn(x.q), sy = sgn(y.q);
    if (sx != sy) return sx < sy ? -1 : 1;
    if (sx == 0) return 0;
    // same nonzero sign: compare squares q^2 * r
    mpq_class l = x.q * x.q * x.r, rr = y.q * y.q * y.r;
    l.canonicalize();
    rr.canonicalize();
    int c = cmp(l, rr);
    return sx > 0 ? c : -c;
}

}  // namespace

bool certified_le(const Expr& lhs, const Expr& rhs) {
    auto x = try_exact(lhs);
    auto y = try_exact(rhs);
    if (x && y) return quad_cmp(*x, *y) <= 0;
    mpfr_prec_t cap = precision_cap();
    for (mpfr_prec_t p = 64; p <= cap; p *= 2) {
        Ival l = eval(lhs, p), r = eval(rhs, p);
        if (mpfr_cmp(l.hi(), r.lo()) <= 0) return true;
        if (mpfr_cmp(l.lo(), r.hi()) > 0) return false;
    }
    throw AmbiguousComparison("comparison still ambiguous at the precision cap");
}

bool certified_lt(const Expr& lhs, const Expr& rhs) {
    auto x = try_exact(lhs);
    auto y = try_exact(rhs);
    if (x && y) return quad_cmp(*x, *y) < 0;
    mpfr_prec_t cap = precision_cap();
    for (mpfr_prec_t p = 64; p <= cap; p *= 2) {
        Ival l = eval(lhs, p), r = eval(rhs, p);
        if (mpfr_cmp(l.hi(), r.lo()) < 0) return true;
        if (mpfr_cmp(l.lo(), r.hi()) >= 0) return false;
    }
    throw AmbiguousComparison("comparison still ambiguous at the precision cap");
}

}  // namespace transgen
