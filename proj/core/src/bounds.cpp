#include "transgen/bounds.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace transgen {

mpz_class BoundValue::floored() const {
    if (infinite_) throw std::domain_error("floor of an infinite bound");
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return f;
}

BoundValue& BoundValue::note(std::string rule, std::string location, std::string text) {
    trace_.push_back({std::move(rule), std::move(location), std::move(text)});
    return *this;
}

BoundValue BoundValue::operator+(const BoundValue& o) const {
    BoundValue r;
    r.infinite_ = infinite_ || o.infinite_;
    if (!r.infinite_) r.value_ = value_ + o.value_;
    r.trace_ = trace_;
    r.trace_.insert(r.trace_.end(), o.trace_.begin(), o.trace_.end());
    return r;
}

BoundValue BoundValue::operator+(const mpq_class& v) const {
    BoundValue r = *this;
    if (!r.infinite_) r.value_ += v;
    return r;
}

BoundValue BoundValue::min(const BoundValue& a, const BoundValue& b) {
    const BoundValue& pick = (a < b) ? a : b;
    BoundValue r = pick;
    r.trace_ = a.trace_;
    r.trace_.insert(r.trace_.end(), b.trace_.begin(), b.trace_.end());
    return r;
}

BoundValue BoundValue::max(const BoundValue& a, const BoundValue& b) {
    const BoundValue& pick = (a < b) ? b : a;
    BoundValue r = pick;
    r.trace_ = a.trace_;
    r.trace_.insert(r.trace_.end(), b.trace_.begin(), b.trace_.end());
    return r;
}

bool BoundValue::operator<(const BoundValue& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
}

std::string BoundValue::value_str() const {
    if (infinite_) return "inf";
    std::ostringstream os;
    os << value_;
    return os.str();
}

namespace {

mpq_class q_of(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Cache of certified floors of (constant * n / sqrt(q)); these dominate the
// table-regeneration cost.
std::map<std::tuple<int, mpz_class, mpq_class>, mpz_class>& floor_cache() {
    static std::map<std::tuple<int, mpz_class, mpq_class>, mpz_class> cache;
    return cache;
}
std::mutex g_floor_mutex;

}  // namespace

mpz_class floor_const_mul(ConstantId id, const mpz_class& n, const mpq_class& q) {
    if (q <= 0) throw std::domain_error("floor_const_mul: nonpositive radicand");
    auto key = std::make_tuple(static_cast<int>(id), n, q);
    {
        std::lock_guard<std::mutex> lk(g_floor_mutex);
        if (auto it = floor_cache().find(key); it != floor_cache().end()) return it->second;
    }
    Expr e = expr_div(expr_mul(expr_const(id), expr_int(n)), expr_sqrt(expr_ratio(q)));
    mpz_class f = certified_floor(e);
    std::lock_guard<std::mutex> lk(g_floor_mutex);
    floor_cache().emplace(std::move(key), f);
    return f;
}

BoundValue e_bound(const Factorization& n, std::uint64_t p) {
    mpz_class nv = n.value();
    if (nv < 2) throw std::invalid_argument("e_bound: n must be >= 2");
    unsigned a = n.exponent_of(p);
    mpz_class second_den = n.without_prime(p).lpp();
    mpq_class second = q_of(nv, second_den);

    BoundValue result;
    std::ostringstream note;
    if (a == 0) {
        result = BoundValue(second);
        note << "E(" << nv << "," << p << ") = min{inf (n_p=1), " << nv << "/" << second_den
             << "} = " << result.value_str();
    } else {
        mpq_class rad = mpq_class((p - 1) * std::uint64_t(a));
        mpz_class first = floor_const_mul(ConstantId::b, nv, rad);
        mpq_class firstq(first);
        result = BoundValue(firstq <= second ? firstq : second);
        note << "E(" << nv << "," << p << ") = min{floor(b*n/sqrt(" << rad << "))=" << first << ", "
             << nv << "/" << second_den << "} = " << result.value_str();
    }
    result.note("E", "induced-module bound", note.str());
    return result;
}

BoundValue e_bound(std::uint64_t n, std::uint64_t p) { return e_bound(factorize(n), p); }

BoundValue e_sol_bound(const Factorization& n, std::uint64_t p) {
    mpz_class nv = n.value();
    if (nv < 2) throw std::invalid_argument("e_sol_bound: n must be >= 2");
    mpq_class w = ws(n);
    mpz_class np = n.p_part(p);
    mpq_class npq(np);
    BoundValue result(w <= npq ? w : npq);
    std::ostringstream note;
    note << "E_sol(" << nv << "," << p << ") = min{ws=" << w << ", n_p=" << np
         << "} = " << result.value_str();
    result.note("E_sol", "induced-module bound, soluble case", note.str());
    return result;
}

BoundValue e_sol_bound(std::uint64_t n, std::uint64_t p) { return e_sol_bound(factorize(n), p); }

BoundValue d_bound(const Factorization& n, std::uint64_t p, Solubility ctx) {
    return ctx == Solubility::SolubleTransitive ? e_sol_bound(n, p) : e_bound(n, p);
}

namespace {

mpq_class min_a_chi(std::uint64_t a, OrbitCount chi) {
    if (!chi) return mpq_class(a);
    return mpq_class(std::min<std::uint64_t>(a, *chi));
}

}  // namespace

BoundValue lemma41_bound(Lemma41Part part, const Lemma41Args& args) {
    mpz_class nv = args.n.value();
    switch (part) {
        case Lemma41Part::i: {
            mpz_class np = args.n.p_part(args.p);
            BoundValue r(mpq_class(min_a_chi(args.a, args.chi1) * np));
            r.note("p-part submodule bound", "soluble case", "min{a,chi1} * n_p");
            return r;
        }
        case Lemma41Part::ii: {
            mpz_class total = 0;
            mpq_class sum = 0;
            for (auto t : args.orbit_sizes) {
                total += t;
                sum += e_sol_bound(t, args.p).value();
            }
            if (total != nv) throw std::invalid_argument("lemma41(ii): orbit sizes must sum to n");
            BoundValue r(mpq_class(args.a) * sum);
            r.note("orbit-sum submodule bound", "soluble orbit decomposition", "a * sum E_sol(t_i, p)");
            return r;
        }
        case Lemma41Part::iii: {
            mpz_class nr = args.n.p_part(args.r);
            BoundValue r(min_a_chi(args.a, args.chi1) * q_of(nv, nr));
            r.note("Sylow-index submodule bound", "Sylow restriction", "min{a,chi1} * n/n_r");
            return r;
        }
        case Lemma41Part::iv: {
            unsigned beta = args.n.exponent_of(args.p);
            if (beta == 0) throw std::invalid_argument("lemma41(iv): requires n_p > 1");
            if (!args.chi) return BoundValue::infinity();
            mpz_class f = floor_const_mul(ConstantId::b, nv, mpq_class(beta));
            BoundValue r(mpq_class(*args.chi) * mpq_class(f));
            r.note("soluble-core submodule bound", "soluble core", "chi * floor(b n / sqrt(log_p n_p))");
            return r;
        }
        case Lemma41Part::v: {
            BoundValue e = e_bound(args.n, args.p);
            BoundValue r(mpq_class(args.a) * e.value());
            r.trace() = e.trace();
            r.note("general submodule bound", "general case", "a * E(n,p)");
            return r;
        }
    }
    throw std::logic_error("unhandled part");
}

namespace {

// floor(2 a n / (c' log2 n)): 2an / c' / log2(n), certified.
mpz_class floor_two_a_over_cprime_log(const mpz_class& n, std::uint64_t a) {
    Expr num = expr_mul(expr_int(mpz_class(2 * mpz_class(a))), expr_int(n));
    Expr den = expr_mul(expr_const(ConstantId::cprime), expr_log2(expr_int(n)));
    return certified_floor(expr_div(num, den));
}

// floor(a * b1 * n / sqrt(log2 n)) for n not a power of two needs log2(n)
// under the radical; keep it on the expression path.
mpz_class floor_a_b1_over_sqrt_log(const mpz_class& n, std::uint64_t a) {
    Expr e = expr_div(expr_mul(expr_int(mpz_class(a)), expr_mul(expr_const(ConstantId::b1), expr_int(n))),
                      expr_sqrt(expr_log2(expr_int(n))));
    return certified_floor(e);
}

}  // namespace

BoundValue cor42_bound(const Factorization& n, std::uint64_t p, std::uint64_t a) {
    mpz_class nv = n.value();
    if (nv < 2) throw std::invalid_argument("cor42: n must be >= 2");
    if (a == 0) {
        BoundValue r{mpq_class(0)};
        r.note("piecewise induced-module cap", "piecewise", "a = 0");
        return r;
    }
    mpz_class np = n.p_part(p);
    bool big_p_part = np * np >= nv;
    mpz_class f = nv <= 1260 ? floor_two_a_over_cprime_log(nv, a) : floor_a_b1_over_sqrt_log(nv, a);
    BoundValue r{mpq_class(f)};
    std::ostringstream note;
    note << (nv <= 1260 ? "floor(2an/(c' log n))" : "floor(a b1 n/sqrt(log n))") << " = " << f
         << (big_p_part ? " [n_p >= sqrt(n) branch (i)]" : " [n_p <= sqrt(n) branch (ii)]");
    r.note("piecewise induced-module cap", "piecewise at n = 1261", note.str());
    return r;
}

BoundValue chief_bound_i(const ChiefFactors& profile, const Factorization& n, Solubility ctx,
                         const BoundValue& dS) {
    BoundValue acc{mpq_class(0)};
    for (auto [p, a] : profile.abelian) {
        BoundValue d = d_bound(n, p, ctx);
        acc = acc + BoundValue(mpq_class(a) * d.value());
        acc.trace().insert(acc.trace().end(), d.trace().begin(), d.trace().end());
    }
    acc = acc + mpq_class(profile.nonabelian);
    BoundValue r = acc + dS;
    std::ostringstream note;
    note << "sum a_i D(n,p_i) + c_nonab(" << profile.nonabelian << ") + dS = " << r.value_str();
    r.note("chief-series bound", "chief series", note.str());
    return r;
}

BoundValue chief_bound_ii(std::uint64_t a, unsigned e, unsigned r, unsigned t,
                          const BoundValue& dS) {
    if (r < 1) throw std::invalid_argument("chief_bound_ii: r >= 1 required");
    // Each E_sol(3 p^k, 2) = min{ws(3 p^k), 1} = 1 since 3 p^k is odd.
    mpz_class full = mpz_class(a) * (mpz_class(1) << (t + r));           // k = 0..r
    mpz_class tail = mpz_class(a) * ((mpz_class(1) << (t + r)) - (mpz_class(1) << t));  // k = 1..r
    BoundValue result{mpq_class(full)};
    result = result + dS;
    std::ostringstream note;
    note << "a*2^t*sum_k C(" << r << ",k)*E_sol(3p^k,2) with e=" << e
         << ": E_sol terms all 1, k=0 variant " << full << ", k=1 variant " << tail
         << "; larger variant kept";
    result.note("Mersenne block-case bound", "Mersenne block case", note.str());
    return result;
}

BoundValue cor53_bound(const Cor53Args& args) {
    mpz_class nv = args.n.value();
    unsigned beta = args.n.exponent_of(args.p);

    BoundValue op1 = BoundValue::infinity();
    if (beta > 0 && args.chi) {
        mpz_class f = args.form == Cor53Form::Literal
                          ? certified_floor(expr_div(expr_int(nv), expr_sqrt(expr_int(long(beta)))))
                          : floor_const_mul(ConstantId::b, nv, mpq_class(beta));
        op1 = BoundValue(mpq_class(*args.chi) * mpq_class(f)) + args.dX;
        op1.note("orbit-refined chief bound", "first operand",
                 args.form == Cor53Form::Literal ? "literal form (no b factor)"
                                                 : "soluble-core form (with b)");
    }
    BoundValue op2 = BoundValue::infinity();
    if (args.chi1) {
        mpq_class sylow_part = args.ctx == Solubility::SolubleTransitive
                                   ? mpq_class(args.n.p_part(args.p))
                                   : q_of(nv, args.n.p_part(args.r));
        op2 = BoundValue(mpq_class(*args.chi1) * sylow_part) + args.dX;
    }
    BoundValue dnp = d_bound(args.n, args.p, args.ctx);
    BoundValue op3(mpq_class(args.a) * dnp.value());

    BoundValue head = BoundValue::min(BoundValue::min(op1, op2), op3);
    for (auto [p, a] : args.rest) {
        BoundValue d = d_bound(args.n, p, args.ctx);
        head = head + BoundValue(mpq_class(a) * d.value());
    }
    BoundValue result = head + args.dS;
    result.note("orbit-refined chief bound", args.ctx == Solubility::SolubleTransitive ? "part (ii)" : "part (i)",
                "min of chi/chi1/aE operands plus remaining factors");
    return result;
}

BoundValue cor54_bound(const Factorization& n, Solubility ctx, const BoundValue& dS) {
    BoundValue d2 = d_bound(n, 2, ctx);
    BoundValue d3 = d_bound(n, 3, ctx);
    BoundValue r(mpq_class(2) * d2.value() + d3.value() + 1);
    r.trace() = d2.trace();
    r.trace().insert(r.trace().end(), d3.trace().begin(), d3.trace().end());
    BoundValue out = r + dS;
    out.note("block-size-4 bound", "block size 4", "2D(n,2) + D(n,3) + 1 + dS");
    return out;
}

BoundValue cor55_bound(Cor55Part part, const Cor55Args& args) {
    mpz_class nv = args.n.value();
    if (nv < 2) throw std::invalid_argument("cor55: n must be >= 2");
    if (args.alpha <= 0 || args.alpha >= 1) throw std::invalid_argument("cor55: alpha in (0,1)");
    BoundValue result{mpq_class(0)};
    switch (part) {
        case Cor55Part::i: {
            if (args.a_ab == 0) {
                result = BoundValue{mpq_class(0)};
            } else {
                mpq_class coeff = mpq_class(args.a_ab) / (mpq_class(1) - args.alpha);
                Expr e = expr_div(expr_mul(expr_ratio(coeff), expr_int(nv)),
                                  expr_mul(expr_const(ConstantId::cprime), expr_log2(expr_int(nv))));
                result = BoundValue{mpq_class(certified_floor(e))};
            }
            result.note("composition-split bound (i)", "small p-parts",
                        "floor(a_ab n / ((1-alpha) c' log n))");
            break;
        }
        case Cor55Part::ii:
        case Cor55Part::iii: {
            std::uint64_t lead = part == Cor55Part::ii ? args.a_pprime : args.a_p;
            std::uint64_t sqrt_coeff = part == Cor55Part::ii ? args.a_p : args.a_pprime;
            mpq_class expo = mpq_class(1) - args.alpha;
            mpz_class t1 = 0;
            if (lead > 0) {
                Expr npow = expr_exp2(expr_mul(expr_ratio(expo), expr_log2(expr_int(nv))));
                t1 = certified_floor(expr_mul(expr_int(mpz_class(lead)), npow));
            }
            mpz_class t2 = 0;
            if (sqrt_coeff > 0) {
                Expr e = expr_div(
                    expr_mul(expr_mul(expr_int(mpz_class(sqrt_coeff)),
                                      expr_sqrt(expr_div(expr_int(1), expr_ratio(args.alpha)))),
                             expr_mul(expr_const(ConstantId::b), expr_int(nv))),
                    expr_sqrt(expr_log2(expr_int(nv))));
                t2 = certified_floor(e);
            }
            result = BoundValue{mpq_class(t1 + t2)};
            result.note(part == Cor55Part::ii ? "composition-split bound (ii)" : "composition-split bound (iii)",
                        "large p-part", "floor(lead n^(1-alpha)) + floor(coeff b n / sqrt(log n))");
            break;
        }
    }
    return result + mpq_class(args.c_nonab) + args.dS;
}

BoundValue cor56_bound(const Factorization& n, std::uint64_t a, const BoundValue& dS) {
    mpz_class nv = n.value();
    if (nv < 2) throw std::invalid_argument("cor56: n must be >= 2");
    if (a == 0) {
        BoundValue r = dS;
        r.note("composition-length cap", "piecewise", "a = 0");
        return r;
    }
    mpz_class f = nv <= 1260 ? floor_two_a_over_cprime_log(nv, a) : floor_a_b1_over_sqrt_log(nv, a);
    BoundValue r = BoundValue{mpq_class(f)} + dS;
    r.note("composition-length cap", "piecewise at n = 1261",
           nv <= 1260 ? "floor(2an/(c' log n)) + dS" : "floor(a b1 n / sqrt(log n)) + dS");
    return r;
}

mpz_class pyber_ab_bound(const mpz_class& m) {
    if (m < 2) throw std::invalid_argument("pyber_ab_bound: m >= 2");
    Expr e = expr_sub(expr_mul(expr_add(expr_int(1), expr_const(ConstantId::c0)), expr_log2(expr_int(m))),
                      expr_mul(expr_ratio(mpq_class(1, 3)), expr_log2(expr_int(24))));
    return certified_floor(e);
}

HoltBound holt_bound(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("holt_bound: m >= 2");
    return {floor_log2(m), m == 3};
}

std::uint64_t floor_log2(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("floor_log2(0)");
    return 63 - __builtin_clzll(m);
}

std::uint64_t floor_log2(const mpz_class& m) {
    if (m <= 0) throw std::invalid_argument("floor_log2: positive input required");
    return mpz_sizeinbase(m.get_mpz_t(), 2) - 1;
}

Expr f_function(Expr e, Expr z, Expr w) {
    Expr num = expr_mul(expr_add(expr_mul(e, expr_const(ConstantId::b1)), expr_const(ConstantId::c1)),
                        expr_sqrt(expr_add(z, w)));
    Expr den = expr_mul(expr_exp2(z), expr_sqrt(w));
    return expr_div(num, den);
}

}  // namespace transgen
