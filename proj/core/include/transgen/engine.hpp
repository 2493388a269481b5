#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "transgen/bounds.hpp"
#include "transgen/mersenne.hpp"
#include "transgen/tables.hpp"

namespace transgen {

enum class DegreeClass { TableA1, Table61, TableA3, Generic };

struct DegreeRecord {
    mpz_class d;
    std::string d_expr;  // "2^19*15" style alongside decimal
    DegreeClass cls = DegreeClass::Generic;
    mpz_class bound;
    std::optional<unsigned> f;
    std::optional<mpz_class> paper_bound;
    std::optional<int> paper_f;  // -1 encodes a printed blank
    // max-achieving cases (several when tied)
    std::vector<std::string> argmax_cases;
};

struct CaseEvaluation {
    std::string case_id;
    std::string rule;
    bool skipped = false;          // external-data gap
    std::string skip_reason;
    mpq_class bound;               // exact, pre-floor
    mpz_class floored;
    mpz_class target;
    bool pass = false;
};

struct Certificate {
    mpz_class degree;
    std::string degree_expr;
    mpz_class target;
    std::string target_source;
    std::vector<CaseEvaluation> cases;
    bool has_skips = false;
    bool pass = false;                    // every evaluated case within target
    std::vector<std::string> worst_cases; // all cases attaining the maximum bound
    mpz_class worst_value;
};

struct DtValue {
    mpz_class value;
    std::string source;
};

// Replays the inductive analysis: per-degree certification and regeneration
// of the degree tables. Case evaluations are deterministic; the degree store
// is populated strictly in increasing degree.
class Engine {
public:
    enum class ClassMode { General, SolTrans, NoSolTrans };

    Engine();

    // Table A.1 if n <= 32; a regenerated table row if n is a table degree;
    // otherwise the certified generic floor(c n / sqrt(log2 n)).
    DtValue dt_upper(const mpz_class& n);

    // floor(c n / sqrt(log2 n)), certified and cached.
    mpz_class generic_bound(const mpz_class& n);

    // Structure-case bound for block size m with n blocks (d = m n):
    // the block-size-4 corollary for m = 4, profile maximum for profiled m,
    // n floor(log m) + dt(n) otherwise. `mode` selects the solubility branches.
    BoundValue imprimitive_case_bound(const mpz_class& d, const mpz_class& m, const mpz_class& n,
                                      ClassMode mode);

    // Mersenne block case at degree d = 2 * (2^(er+t) * 3).
    BoundValue mersenne_case_bound(const mpz_class& d, const MersenneTriple& triple);

    // sum_{i=1..f_G} E(2^(k-i) v, 2) plus the no-2-block bound at the
    // residual degree (primitive floor(log) against the structure cases).
    BoundValue exceptional_bound(unsigned v, unsigned k, unsigned f_G);

    // Bound for transitive groups without soluble transitive subgroups and
    // without 2-blocks: max over the primitive and r > 2 structure cases.
    mpz_class no_two_block_bound(const mpz_class& x);

    std::vector<DegreeRecord> regenerate_table61();
    std::vector<DegreeRecord> regenerate_tableA3();
    std::map<unsigned, std::vector<MersenneTriple>> regenerate_table62(unsigned m_lo = 5,
                                                                       unsigned m_hi = 19);

    Certificate certify(const mpz_class& d);

    // Optional as(m) data for 10 <= m <= 480 (max primitive composition length).
    void set_as_data(std::map<unsigned, unsigned> data) { as_data_ = std::move(data); }
    const std::map<unsigned, unsigned>& as_data() const { return as_data_; }

    const std::map<mpz_class, DegreeRecord>& store() const { return store_; }

private:
    void ensure_tables();
    DegreeRecord regenerate_row61(const mpz_class& d);
    DegreeRecord regenerate_rowA3(unsigned v, unsigned k);
    // All structure cases r >= 3 at degree d, in divisor order.
    std::vector<std::pair<std::string, BoundValue>> structure_cases(const mpz_class& d,
                                                                    ClassMode mode);
    // m = 2 case bounds at degree d (solubility split + Mersenne variants).
    std::vector<std::pair<std::string, BoundValue>> block2_cases(const mpz_class& d,
                                                                 bool include_general_e);

    std::optional<BoundValue> profile_case_bound(const ChiefFactorProfile& prof, const mpz_class& m,
                                                 const Factorization& n, ClassMode mode);
    std::optional<BoundValue> try_case_bound(const mpz_class& d, const mpz_class& m,
                                             const mpz_class& n, ClassMode mode);

    std::map<mpz_class, DegreeRecord> store_;
    std::map<mpz_class, mpz_class> generic_cache_;
    std::map<mpz_class, mpz_class> no2block_cache_;
    std::map<unsigned, unsigned> as_data_;
    bool tables_ready_ = false;
    bool regenerating_ = false;
};

// Divisors of n in increasing order (n fits in 64 bits for table degrees).
std::vector<mpz_class> sorted_divisors(const mpz_class& n);

// "2^k*v" rendering when d = 2^k * v with v odd (and plain decimal otherwise).
std::string degree_expr(const mpz_class& d);

}  // namespace transgen
