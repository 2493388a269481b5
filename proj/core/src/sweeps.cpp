#include "transgen/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "transgen/poset.hpp"

namespace transgen {

namespace {

// Cached constant enclosures per precision, rebuilt per thread.
struct ConstCtx {
    mpfr_prec_t prec;
    Ival b, b1, c, cprime;
    explicit ConstCtx(mpfr_prec_t p)
        : prec(p),
          b(constant_interval(ConstantId::b, p)),
          b1(constant_interval(ConstantId::b1, p)),
          c(constant_interval(ConstantId::c, p)),
          cprime(constant_interval(ConstantId::cprime, p)) {}
};

const ConstCtx& ctx_for(mpfr_prec_t prec) {
    thread_local std::vector<std::unique_ptr<ConstCtx>> cache;
    for (auto& c : cache)
        if (c->prec == prec) return *c;
    cache.push_back(std::make_unique<ConstCtx>(prec));
    return *cache.back();
}

Ival iv_int(const mpz_class& z, mpfr_prec_t p) { return Ival::from_int(z, p); }
Ival iv_q(const mpq_class& q, mpfr_prec_t p) { return Ival::from_ratio(q, p); }

// c n / sqrt(log2 n)
Ival generic_term(const mpz_class& n, mpfr_prec_t p) {
    const auto& k = ctx_for(p);
    return Ival::div(Ival::mul(k.c, iv_int(n, p)), Ival::sqrt(Ival::log2(iv_int(n, p))));
}

using PointFn = std::function<Ival(const mpz_class&, mpfr_prec_t)>;

struct BCase {
    std::string id;
    std::string inequality;
    std::uint64_t n0;
    unsigned mult;  // right side: mult * c * n / sqrt(log2(mult * n))
    PointFn lhs;
};

Ival rhs_term(unsigned mult, const mpz_class& n, mpfr_prec_t p) {
    const auto& k = ctx_for(p);
    mpz_class mn = mpz_class(mult) * n;
    return Ival::div(Ival::mul(Ival::mul(iv_int(mpz_class(mult), p), k.c), iv_int(n, p)),
                     Ival::sqrt(Ival::log2(iv_int(mn, p))));
}

// Certified lhs <= rhs with escalation; inconclusive after the cap counts as
// a failure (reported, never silently accepted).
enum class PointResult { Holds, Fails, Ambiguous };

PointResult check_point(const PointFn& lhs, unsigned mult, const mpz_class& n) {
    for (mpfr_prec_t p = 128; p <= 2048; p *= 2) {
        Ival l = lhs(n, p);
        Ival r = rhs_term(mult, n, p);
        if (mpfr_cmp(l.hi(), r.lo()) <= 0) return PointResult::Holds;
        if (mpfr_cmp(l.lo(), r.hi()) > 0) return PointResult::Fails;
    }
    return PointResult::Ambiguous;
}

SweepReport run_case(const BCase& bc, const SweepOptions& opts) {
    SweepReport rep;
    rep.case_id = bc.id;
    rep.inequality = bc.inequality;
    rep.claimed_threshold = bc.n0;

    mpz_class lo(bc.n0);
    mpz_class hi = lo + opts.window;
    unsigned nthreads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());

    std::mutex mu;
    std::vector<mpz_class> failures;
    std::atomic<std::uint64_t> next{bc.n0};
    const std::uint64_t end = bc.n0 + opts.window;
    constexpr std::uint64_t kChunk = 2048;

    auto worker = [&]() {
        for (;;) {
            std::uint64_t start = next.fetch_add(kChunk);
            if (start > end) return;
            std::uint64_t stop = std::min(end, start + kChunk - 1);
            std::vector<mpz_class> local;
            for (std::uint64_t n = start; n <= stop; ++n) {
                if (check_point(bc.lhs, bc.mult, mpz_class(n)) != PointResult::Holds)
                    local.push_back(n);
            }
            if (!local.empty()) {
                std::lock_guard<std::mutex> lk(mu);
                failures.insert(failures.end(), local.begin(), local.end());
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // Sparse geometric scan beyond the window.
    mpz_class g = hi;
    while (g <= opts.geometric_limit) {
        g += g / 4 + 1;
        if (check_point(bc.lhs, bc.mult, g) != PointResult::Holds) failures.push_back(g);
    }

    std::sort(failures.begin(), failures.end());
    for (const auto& f : failures) rep.failures.push_back(f.get_str());
    rep.status = failures.empty() ? "verified" : "failed";
    std::ostringstream range;
    range << "[" << bc.n0 << ", " << end << "] exhaustive; geometric to " << opts.geometric_limit;
    rep.verified_range = range.str();

    // Tightness probe just below the threshold.
    for (std::uint64_t d = 1; d <= opts.probe_below && bc.n0 > d + 1; ++d) {
        mpz_class n(bc.n0 - d);
        if (n < 2) break;
        if (check_point(bc.lhs, bc.mult, n) == PointResult::Fails) {
            rep.first_failure_below = n;
            break;
        }
    }
    return rep;
}

// Boundary-plus-grid variant for the analytic m = 2 cases at n >= 10^66.
SweepReport run_case_geometric(const BCase& bc, const mpz_class& start, const mpz_class& limit) {
    SweepReport rep;
    rep.case_id = bc.id;
    rep.inequality = bc.inequality;
    rep.claimed_threshold = start;
    std::vector<mpz_class> failures;
    mpz_class g = start;
    while (g <= limit) {
        if (check_point(bc.lhs, bc.mult, g) != PointResult::Holds) failures.push_back(g);
        g += g / 3 + 1;
    }
    std::sort(failures.begin(), failures.end());
    for (const auto& f : failures) rep.failures.push_back(f.get_str());
    rep.status = failures.empty() ? "verified" : "failed";
    rep.verified_range = "boundary " + start.get_str() + " and geometric grid to " + limit.get_str();
    return rep;
}

Ival npow(const mpz_class& n, const mpq_class& expo, mpfr_prec_t p) {
    return Ival::pow(iv_int(n, p), iv_q(expo, p));
}

std::vector<BCase> appendix_b_cases(unsigned m) {
    std::vector<BCase> cases;
    auto lhs_cprime = [](const mpq_class& coeff) {
        return [coeff](const mpz_class& n, mpfr_prec_t p) {
            const auto& k = ctx_for(p);
            Ival t = Ival::div(Ival::mul(iv_q(coeff, p), iv_int(n, p)),
                               Ival::mul(k.cprime, Ival::log2(iv_int(n, p))));
            return Ival::add(t, generic_term(n, p));
        };
    };
    // coeff * b * n / sqrt(log n) + extra * n^expo + c n / sqrt(log n) [+ add1]
    auto lhs_bsqrt = [](const mpq_class& sq, unsigned coeff, unsigned extra, const mpq_class& expo,
                        unsigned add1) {
        return [=](const mpz_class& n, mpfr_prec_t p) {
            const auto& k = ctx_for(p);
            Ival t = Ival::div(Ival::mul(Ival::mul(Ival::mul(iv_int(coeff, p), Ival::sqrt(iv_q(sq, p))), k.b),
                                         iv_int(n, p)),
                               Ival::sqrt(Ival::log2(iv_int(n, p))));
            Ival acc = Ival::add(t, generic_term(n, p));
            if (extra) acc = Ival::add(acc, Ival::mul(iv_int(extra, p), npow(n, expo, p)));
            if (add1) acc = Ival::add(acc, iv_int(add1, p));
            return acc;
        };
    };

    switch (m) {
        case 2: {
            BCase i{"m=2 (i)", "b sqrt(1000/858) n/sqrt(log n) + c n/sqrt(log n) <= 2c n/sqrt(log 2n)",
                    0, 2, lhs_bsqrt(mpq_class(1000, 858), 1, 0, 0, 0)};
            BCase ii{"m=2 (ii)", "(1000/858) n/(c' log n) + c n/sqrt(log n) <= 2c n/sqrt(log 2n)", 0,
                     2, lhs_cprime(mpq_class(1000, 858))};
            cases.push_back(i);
            cases.push_back(ii);
            break;
        }
        case 3:
            cases.push_back({"m=3 (i)", "3n/(c' log n) + c n/sqrt(log n) <= 3c n/sqrt(log 3n)", 3824,
                             3, lhs_cprime(3)});
            cases.push_back({"m=3 (ii)", "b sqrt(3) n/sqrt(log n) + sqrt(n) + c n/sqrt(log n) <= 3c n/sqrt(log 3n)",
                             5578, 3, lhs_bsqrt(3, 1, 1, mpq_class(1, 2), 0)});
            break;
        case 4:
            cases.push_back({"m=4 (i)", "1 + (300/55) n/(c' log n) + c n/sqrt(log n) <= 4c n/sqrt(log 4n)",
                             115063, 4,
                             [f = lhs_cprime(mpq_class(300, 55))](const mpz_class& n, mpfr_prec_t p) {
                                 return Ival::add(f(n, p), Ival::from_ui(1, p));
                             }});
            cases.push_back({"m=4 (ii)", "2 sqrt(100/45) b n/sqrt(log n) + n^(55/100) + c n/sqrt(log n) <= 4c n/sqrt(log 4n)",
                             82517, 4, lhs_bsqrt(mpq_class(100, 45), 2, 1, mpq_class(55, 100), 0)});
            cases.push_back({"m=4 (iii)", "sqrt(100/45) b n/sqrt(log n) + 2 n^(55/100) + c n/sqrt(log n) <= 4c n/sqrt(log 4n)",
                             44, 4, lhs_bsqrt(mpq_class(100, 45), 1, 2, mpq_class(55, 100), 0)});
            break;
        case 5:
            cases.push_back({"m=5 (i)", "5n/(c' log n) + c n/sqrt(log n) <= 5c n/sqrt(log 5n)", 553,
                             5, lhs_cprime(5)});
            cases.push_back({"m=5 (ii)", "2b sqrt(5/2) n/sqrt(log n) + n^(3/5) + c n/sqrt(log n) <= 5c n/sqrt(log 5n)",
                             139, 5, lhs_bsqrt(mpq_class(5, 2), 2, 1, mpq_class(3, 5), 0)});
            cases.push_back({"m=5 (iii)", "b sqrt(5/2) n/sqrt(log n) + 2 n^(3/5) + c n/sqrt(log n) <= 5c n/sqrt(log 5n)",
                             17, 5, lhs_bsqrt(mpq_class(5, 2), 1, 2, mpq_class(3, 5), 0)});
            break;
        case 6:
            cases.push_back({"m=6", "b1 n/sqrt(log n) + 1 + c n/sqrt(log n) <= 6c n/sqrt(log 6n)", 2,
                             6, [](const mpz_class& n, mpfr_prec_t p) {
                                 const auto& k = ctx_for(p);
                                 Ival t = Ival::div(Ival::mul(k.b1, iv_int(n, p)),
                                                    Ival::sqrt(Ival::log2(iv_int(n, p))));
                                 return Ival::add(Ival::add(t, Ival::from_ui(1, p)), generic_term(n, p));
                             }});
            break;
        case 7:
            cases.push_back({"m=7", "3 b1 n/sqrt(log n) + c n/sqrt(log n) <= 7c n/sqrt(log 7n)", 7, 7,
                             [](const mpz_class& n, mpfr_prec_t p) {
                                 const auto& k = ctx_for(p);
                                 Ival t = Ival::div(Ival::mul(Ival::mul(iv_int(3, p), k.b1), iv_int(n, p)),
                                                    Ival::sqrt(Ival::log2(iv_int(n, p))));
                                 return Ival::add(t, generic_term(n, p));
                             }});
            break;
        case 8:
            cases.push_back({"m=8 (i)", "(500/63) n/(c' log n) + c n/sqrt(log n) <= 8c n/sqrt(log 8n)",
                             273, 8, lhs_cprime(mpq_class(500, 63))});
            cases.push_back({"m=8 (ii)", "3b sqrt(100/37) n/sqrt(log n) + 2 n^(63/100) + c n/sqrt(log n) <= 8c n/sqrt(log 8n)",
                             98, 8, lhs_bsqrt(mpq_class(100, 37), 3, 2, mpq_class(63, 100), 0)});
            cases.push_back({"m=8 (iii)", "2b sqrt(100/37) n/sqrt(log n) + 3 n^(63/100) + c n/sqrt(log n) <= 8c n/sqrt(log 8n)",
                             27, 8, lhs_bsqrt(mpq_class(100, 37), 2, 3, mpq_class(63, 100), 0)});
            break;
        case 9:
            cases.push_back({"m=9 (i)", "(700/63) n/(c' log n) + c n/sqrt(log n) <= 9c n/sqrt(log 9n)",
                             2336, 9, lhs_cprime(mpq_class(700, 63))});
            cases.push_back({"m=9 (ii)", "4b sqrt(100/37) n/sqrt(log n) + 3 n^(63/100) + c n/sqrt(log n) <= 9c n/sqrt(log 9n)",
                             1197, 9, lhs_bsqrt(mpq_class(100, 37), 4, 3, mpq_class(63, 100), 0)});
            cases.push_back({"m=9 (iii)", "3b sqrt(100/37) n/sqrt(log n) + 4 n^(63/100) + c n/sqrt(log n) <= 9c n/sqrt(log 9n)",
                             148, 9, lhs_bsqrt(mpq_class(100, 37), 3, 4, mpq_class(63, 100), 0)});
            break;
        default:
            throw std::invalid_argument("sweep_appendix_b: m in 2..9");
    }
    return cases;
}

}  // namespace

std::vector<SweepReport> sweep_appendix_b(unsigned m, const SweepOptions& opts) {
    std::vector<SweepReport> reports;
    if (m == 2) {
        // Analytic region: boundary at 10^66 plus a geometric grid above it.
        mpz_class boundary;
        mpz_ui_pow_ui(boundary.get_mpz_t(), 10, 66);
        mpz_class limit;
        mpz_ui_pow_ui(limit.get_mpz_t(), 10, 80);
        for (const auto& bc : appendix_b_cases(2))
            reports.push_back(run_case_geometric(bc, boundary, limit));
        return reports;
    }
    for (const auto& bc : appendix_b_cases(m)) reports.push_back(run_case(bc, opts));
    return reports;
}

SweepReport sweep_m2_finite(Engine& engine, bool exhaustive) {
    SweepReport rep;
    rep.case_id = "m=2 finite (96 q values)";
    rep.inequality = "E(2^k q, 2) + dt(2^k q) <= floor(2c n / sqrt(log 2n))";
    mpz_class bound66;
    mpz_ui_pow_ui(bound66.get_mpz_t(), 10, 66);

    unsigned q_count = 0;
    std::vector<std::string> failures;
    for (unsigned l3 = 0; l3 <= 2; ++l3)
        for (unsigned l5 = 0; l5 <= 1; ++l5)
            for (unsigned l7 = 0; l7 <= 1; ++l7)
                for (unsigned l11 = 0; l11 <= 1; ++l11)
                    for (unsigned l13 = 0; l13 <= 1; ++l13)
                        for (unsigned l17 = 0; l17 <= 1; ++l17) {
                            ++q_count;
                            std::vector<Factorization::Entry> ent;
                            if (l3) ent.push_back({3, l3});
                            if (l5) ent.push_back({5, l5});
                            if (l7) ent.push_back({7, l7});
                            if (l11) ent.push_back({11, l11});
                            if (l13) ent.push_back({13, l13});
                            if (l17) ent.push_back({17, l17});
                            Factorization qf{ent};
                            mpz_class q = qf.value();
                            unsigned k_q = (unsigned)floor_log2(mpz_class(bound66 / q));
                            std::vector<unsigned> ks;
                            if (exhaustive) {
                                for (unsigned k = 0; k <= k_q; ++k) ks.push_back(k);
                            } else {
                                // documented default grid: dense low range, every
                                // 8th exponent, and the top of the range
                                for (unsigned k = 0; k <= std::min(k_q, 24u); ++k) ks.push_back(k);
                                for (unsigned k = 32; k + 8 <= k_q; k += 8) ks.push_back(k);
                                for (unsigned k = k_q >= 3 ? k_q - 3 : 0; k <= k_q; ++k) ks.push_back(k);
                                std::sort(ks.begin(), ks.end());
                                ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
                            }
                            for (unsigned k : ks) {
                                Factorization nf = qf.times_prime_power(2, k);
                                mpz_class n = nf.value();
                                if (n < 2) continue;
                                // degrees resolved by the base table or a
                                // regenerated row are certified there; the
                                // q-grid verifies the generic claim beyond
                                mpz_class d = 2 * n;
                                if (d <= 32 ||
                                    engine.dt_upper(d).source.rfind("Table", 0) == 0)
                                    continue;
                                mpq_class lhs = e_bound(nf, 2).value();
                                lhs += mpq_class(engine.dt_upper(n).value);
                                mpz_class lhs_floor;
                                mpz_fdiv_q(lhs_floor.get_mpz_t(), lhs.get_num().get_mpz_t(),
                                           lhs.get_den().get_mpz_t());
                                mpz_class target = engine.generic_bound(d);
                                if (lhs_floor > target) {
                                    std::ostringstream f;
                                    f << "q=" << q.get_str() << " k=" << k << ": " << lhs_floor.get_str()
                                      << " > " << target.get_str();
                                    failures.push_back(f.str());
                                }
                            }
                        }
    rep.failures = std::move(failures);
    rep.status = rep.failures.empty() ? "verified" : "failed";
    std::ostringstream note;
    note << q_count << " q values, " << (exhaustive ? "exhaustive k" : "default k grid");
    rep.note = note.str();
    rep.verified_range = "k <= floor(log2(10^66 / q)) per q";
    return rep;
}

std::vector<SweepReport> sweep_section6_mrange(Engine& engine, std::uint64_t n_hi) {
    std::vector<SweepReport> reports;
    const auto& data = engine.as_data();

    SweepReport a;
    a.case_id = "section6 case (a)";
    a.inequality = "f(as(m), log m, log 1261) < c for 10 <= m <= 480";
    SweepReport b;
    b.case_id = "section6 case (b)";
    b.inequality = "min{floor(2 as(m) n/(c' log n)), n floor(log m)} + floor(c n/sqrt(log n)) <= floor(c mn/sqrt(log mn))";
    if (data.empty()) {
        a.status = b.status = "skipped (external data)";
        a.note = b.note = "no as(m) data file supplied";
        reports.push_back(a);
        reports.push_back(b);
    } else {
        for (const auto& [m, as_m] : data) {
            if (m < 10 || m > 480) continue;
            Expr f = f_function(expr_int((long)as_m), expr_log2(expr_int((long)m)),
                                expr_log2(expr_int(1261)));
            if (!certified_lt(f, expr_const(ConstantId::c))) {
                std::ostringstream fail;
                fail << "m=" << m << ": f(as(m), log m, log 1261) not < c";
                a.failures.push_back(fail.str());
            }
        }
        a.status = a.failures.empty() ? "verified" : "failed";
        a.verified_range = "supplied m in [10, 480]";

        unsigned literal_reading_points = 0, literal_reading_excess = 0;
        for (const auto& [m, as_m] : data) {
            if (m < 10 || m > 480) continue;
            for (std::uint64_t n = 2; n <= n_hi; ++n) {
                mpz_class nz(n);
                mpz_class mn = mpz_class(m) * nz;
                // degrees carried by the regenerated tables resolve there,
                // not through the generic target
                if (engine.dt_upper(mn).source.rfind("Table", 0) == 0) continue;
                mpz_class target = engine.generic_bound(mn);
                mpz_class inner;
                if (m == 16 && n >= 72) {
                    // fallback from the degree-16 worst profile; the adopted
                    // reading is 7E(n,2) + 2E(n,3)
                    Factorization nf = factorize(n);
                    mpq_class adopted = 7 * e_bound(nf, 2).value() + 2 * e_bound(nf, 3).value() +
                                        mpq_class(engine.generic_bound(nz));
                    mpz_class fl;
                    mpz_fdiv_q(fl.get_mpz_t(), adopted.get_num().get_mpz_t(),
                               adopted.get_den().get_mpz_t());
                    if (fl > target) {
                        std::ostringstream fail;
                        fail << "m=16 n=" << n << " (E-profile fallback): " << fl.get_str() << " > "
                             << target.get_str();
                        b.failures.push_back(fail.str());
                    }
                    // alternative literal composite reading, reported alongside
                    mpq_class literal = e_bound(factorize(7 * n), 2).value() +
                                        e_bound(factorize(2 * n), 3).value() +
                                        mpq_class(engine.generic_bound(nz));
                    mpz_class lf;
                    mpz_fdiv_q(lf.get_mpz_t(), literal.get_num().get_mpz_t(),
                               literal.get_den().get_mpz_t());
                    if (lf > target) ++literal_reading_excess;
                    ++literal_reading_points;
                    continue;
                }
                Expr e = expr_div(expr_mul(expr_int(mpz_class(2 * std::uint64_t(as_m))), expr_int(nz)),
                                  expr_mul(expr_const(ConstantId::cprime), expr_log2(expr_int(nz))));
                mpz_class f1 = certified_floor(e);
                mpz_class f2 = nz * floor_log2(std::uint64_t(m));
                inner = std::min(f1, f2);
                mpz_class lhs = inner + engine.generic_bound(nz);
                if (lhs > target) {
                    std::ostringstream fail;
                    fail << "m=" << m << " n=" << n << ": " << lhs.get_str() << " > " << target.get_str();
                    b.failures.push_back(fail.str());
                }
            }
        }
        b.status = b.failures.empty() ? "verified" : "failed";
        std::ostringstream range;
        range << "n in [2, " << n_hi << "] for each supplied m";
        b.verified_range = range.str();
        if (literal_reading_points) {
            std::ostringstream note;
            note << "literal composite reading E(7n,2)+E(2n,3) evaluated at "
                 << literal_reading_points << " fallback points, exceeds the target at "
                 << literal_reading_excess;
            b.note = note.str();
        }
        reports.push_back(a);
        reports.push_back(b);
    }

    // m >= 481 closed form, checked on a grid (m geometric to 10^4, n powers of 2).
    SweepReport cf;
    cf.case_id = "section6 m>=481 closed form";
    cf.inequality = "([(2+c0) log m - (1/3) log 24] b0 + c1) n / sqrt(log n) < c m n / sqrt(log mn)";
    for (mpz_class m = 481; m <= 10000; m += m / 5 + 1) {
        for (unsigned j = 1; j <= 20; ++j) {
            mpz_class n = mpz_class(1) << j;
            Expr lm = expr_log2(expr_int(m));
            Expr coeff = expr_sub(expr_mul(expr_add(expr_int(2), expr_const(ConstantId::c0)), lm),
                                  expr_mul(expr_ratio(mpq_class(1, 3)), expr_log2(expr_int(24))));
            Expr lhs = expr_div(
                expr_mul(expr_add(expr_mul(coeff, expr_const(ConstantId::b0)), expr_const(ConstantId::c1)),
                         expr_int(n)),
                expr_sqrt(expr_log2(expr_int(n))));
            Expr rhs = expr_div(expr_mul(expr_const(ConstantId::c), expr_int(mpz_class(m * n))),
                                expr_sqrt(expr_log2(expr_int(mpz_class(m * n)))));
            if (!certified_lt(lhs, rhs)) {
                std::ostringstream fail;
                fail << "m=" << m.get_str() << " n=2^" << j;
                cf.failures.push_back(fail.str());
            }
        }
    }
    cf.status = cf.failures.empty() ? "verified" : "failed";
    cf.verified_range = "m geometric in [481, 10^4], n = 2^1..2^20";
    reports.push_back(cf);
    return reports;
}

SweepReport check_example62(unsigned k_max) {
    SweepReport rep;
    rep.case_id = "example 2-group family";
    rep.inequality =
        "d(G) = C(2k-1,k-1) + 2k - 1 <= floor(c 2^(2k)/sqrt(2k)); sqrt(2k) C(2k,k)/4^k increasing, < b";
    rep.claimed_threshold = 2;
    mpq_class prev_sq = 0;
    for (unsigned k = 2; k <= k_max; ++k) {
        mpz_class dG = binom(2 * k - 1, k - 1) + 2 * k - 1;
        // identity with the half central binomial
        mpz_class alt = binom(2 * k, k) / 2 + 2 * k - 1;
        if (dG != alt) {
            rep.failures.push_back("identity C(2k-1,k-1) = C(2k,k)/2 failed at k=" + std::to_string(k));
            continue;
        }
        mpz_class deg = mpz_class(1) << (2 * k);
        mpz_class target = floor_const_mul(ConstantId::c, deg, mpq_class(2 * k));
        if (dG > target) {
            rep.failures.push_back("generator count exceeds generic bound at k=" + std::to_string(k));
        }
        // seq(k)^2 = 2k C(2k,k)^2 / 16^k, exact; strict increase and < 2/pi.
        mpz_class c2k = binom(2 * k, k);
        mpz_class pow16;
        mpz_ui_pow_ui(pow16.get_mpz_t(), 16, k);
        mpq_class sq(2 * k * c2k * c2k, pow16);
        sq.canonicalize();
        if (!(sq > prev_sq)) {
            rep.failures.push_back("ratio sequence not strictly increasing at k=" + std::to_string(k));
        }
        prev_sq = sq;
        // sqrt(sq) < b, certified (b^2 = 2/pi).
        Expr seq = expr_sqrt(expr_ratio(sq));
        if (!certified_lt(seq, expr_const(ConstantId::b))) {
            rep.failures.push_back("ratio sequence not below b at k=" + std::to_string(k));
        }
    }
    rep.status = rep.failures.empty() ? "verified" : "failed";
    rep.verified_range = "k in [2, " + std::to_string(k_max) + "]";
    return rep;
}

SweepReport check_lemma28(std::uint64_t n_max) {
    SweepReport rep;
    rep.case_id = "largest prime-power vs log";
    rep.inequality = "lpp(n) >= c' log2 n";
    rep.claimed_threshold = 2;
    // lpp(n) >= c' log2 n  <=>  n <= 2^(L / c') with L = lpp(n); precompute
    // the integer thresholds N_L = floor(2^(L/c')) once.
    unsigned L_cap = 64;
    std::vector<mpz_class> thresh(L_cap + 1, 0);
    mpz_class nmaxz(static_cast<unsigned long>(n_max));
    for (unsigned L = 1; L <= L_cap; ++L) {
        Expr e = expr_exp2(expr_div(expr_int((long)L), expr_const(ConstantId::cprime)));
        thresh[L] = certified_floor(e);
        if (thresh[L] > nmaxz) {
            for (unsigned j = L + 1; j <= L_cap; ++j) thresh[j] = thresh[L];
            break;
        }
    }
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        std::uint64_t L = lpp_sieved(n);
        if (L > L_cap) continue;
        if (mpz_class(static_cast<unsigned long>(n)) > thresh[(unsigned)L]) {
            rep.failures.push_back("n=" + std::to_string(n));
            if (rep.failures.size() > 16) break;
        }
    }
    rep.status = rep.failures.empty() ? "verified" : "failed";
    rep.verified_range = "n in [2, " + std::to_string(n_max) + "]";
    return rep;
}

SweepReport check_eq31(std::uint64_t K_max) {
    SweepReport rep;
    rep.case_id = "central binomial bound";
    rep.inequality = "C(K, floor(K/2)) <= b 2^K / sqrt(K)";
    rep.claimed_threshold = 1;
    mpfr_prec_t p = 192;
    Ival b = constant_interval(ConstantId::b, p);
    mpfr_t chi, rhs, sq;
    mpfr_init2(chi, p);
    mpfr_init2(rhs, p);
    mpfr_init2(sq, p);
    mpz_class C = 1;  // C(1, 0)
    for (std::uint64_t K = 1; K <= K_max; ++K) {
        if (K > 1) {
            // C(K, floor(K/2)) from C(K-1, floor((K-1)/2))
            if (K % 2 == 0) {
                C *= 2;  // C(2t, t) = 2 C(2t-1, t-1)
            } else {
                std::uint64_t t = K / 2;
                C = C * (2 * t + 1) / (t + 1);  // exact
            }
        }
        mpfr_set_z(chi, C.get_mpz_t(), MPFR_RNDU);
        mpfr_sqrt_ui(sq, static_cast<unsigned long>(K), MPFR_RNDU);
        mpfr_div(rhs, b.lo(), sq, MPFR_RNDD);
        mpfr_mul_2ui(rhs, rhs, static_cast<unsigned long>(K), MPFR_RNDD);
        if (mpfr_cmp(chi, rhs) > 0) {
            // exact fallback: pi * K * C^2 <= 2 * 4^K with a dyadic pi bound
            Ival pi = Ival::pi(256);
            mpz_class pnum;
            mpfr_exp_t pexp = mpfr_get_z_2exp(pnum.get_mpz_t(), pi.hi());
            // pi_hi = pnum * 2^pexp (pexp negative)
            mpz_class lhs = pnum * K * C * C;
            mpz_class rhs2 = mpz_class(2) << (2 * K);  // 2 * 4^K
            if (pexp < 0)
                rhs2 <<= static_cast<unsigned long>(-pexp);
            else
                lhs <<= static_cast<unsigned long>(pexp);
            if (lhs > rhs2) {
                rep.failures.push_back("K=" + std::to_string(K));
                if (rep.failures.size() > 16) break;
            }
        }
    }
    mpfr_clear(chi);
    mpfr_clear(rhs);
    mpfr_clear(sq);
    rep.status = rep.failures.empty() ? "verified" : "failed";
    rep.verified_range = "K in [1, " + std::to_string(K_max) + "]";
    return rep;
}

SweepReport check_wallis(std::uint64_t t_max) {
    SweepReport rep;
    rep.case_id = "Wallis partial products";
    rep.inequality = "(1/2) prod_{j=2..t} (1 + 1/(4j(j-1))) increasing, < 2/pi";
    rep.claimed_threshold = 2;
    mpfr_prec_t p = 128;
    Ival prod(p);
    mpfr_set_d(prod.lo(), 0.5, MPFR_RNDD);
    mpfr_set_d(prod.hi(), 0.5, MPFR_RNDU);
    Ival limit = Ival::div(Ival::from_ui(2, p), Ival::pi(p));
    std::string sample;
    for (std::uint64_t j = 2; j <= t_max; ++j) {
        // term 1 + 1/(4j(j-1)) > 1 exactly, so strict increase is structural
        mpz_class den = 4 * mpz_class(static_cast<unsigned long>(j)) *
                        mpz_class(static_cast<unsigned long>(j - 1));
        mpq_class term(mpz_class(den + 1), den);
        term.canonicalize();
        prod = Ival::mul(prod, Ival::from_ratio(term, p));
        if (j == 10000) sample = prod.str(10);
    }
    if (mpfr_cmp(prod.hi(), limit.lo()) >= 0) {
        rep.failures.push_back("partial product reaches 2/pi by t=" + std::to_string(t_max));
    }
    rep.note = "each term exceeds 1 exactly (strict increase); value at t=10^4: " + sample;
    rep.status = rep.failures.empty() ? "verified" : "failed";
    rep.verified_range = "t in [2, " + std::to_string(t_max) + "]";
    return rep;
}

SweepReport check_debruijn(std::uint64_t n_max) {
    SweepReport rep;
    rep.case_id = "max-rank-level width";
    rep.inequality = "width_rank == width_oracle on divisor lattices";
    rep.claimed_threshold = 2;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        ChainProduct p = ChainProduct::divisor_lattice(n);
        if (width_rank(p) != width_oracle(p)) {
            rep.failures.push_back("n=" + std::to_string(n));
            if (rep.failures.size() > 16) break;
        }
    }
    rep.status = rep.failures.empty() ? "verified" : "failed";
    rep.verified_range = "divisor lattices of n in [2, " + std::to_string(n_max) + "]";
    return rep;
}

SweepReport check_dilworth(unsigned trials, unsigned max_elements, std::uint64_t seed) {
    SweepReport rep;
    rep.case_id = "chain-antichain cardinality";
    rep.inequality = "|P| <= longest_chain * max_antichain";
    rep.claimed_threshold = 0;
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        std::uniform_int_distribution<unsigned> size_dist(2, max_elements);
        unsigned n = size_dist(rng);
        SmallPoset poset;
        poset.n = n;
        poset.less.assign(n, std::vector<bool>(n, false));
        std::uniform_int_distribution<int> coin(0, 2);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (coin(rng) == 0) poset.less[i][j] = true;
        // transitive closure over the index order
        for (unsigned k = 0; k < n; ++k)
            for (unsigned i = 0; i < n; ++i)
                if (poset.less[i][k])
                    for (unsigned j = 0; j < n; ++j)
                        if (poset.less[k][j]) poset.less[i][j] = true;
        std::size_t chain = poset.longest_chain();
        std::size_t anti = poset.max_antichain_bruteforce();
        if (chain * anti < n) {
            rep.failures.push_back("trial " + std::to_string(t));
        }
    }
    rep.status = rep.failures.empty() ? "verified" : "failed";
    rep.verified_range = std::to_string(trials) + " random posets, <= " +
                         std::to_string(max_elements) + " elements, seed " + std::to_string(seed);
    return rep;
}

}  // namespace transgen
