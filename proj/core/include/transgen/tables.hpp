#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace transgen {

// Chief-factor data for one primitive group: abelian chief factor orders p^a
// in series order, plus the number of nonabelian chief factors. For every
// group in the embedded tables the nonabelian chief factors are simple, so
// they each contribute 1 to the composition length.
struct ChiefFactorProfile {
    std::string group;
    unsigned degree = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> abelian;  // (p, a) per chief factor
    unsigned nonabelian = 0;

    bool soluble() const { return nonabelian == 0; }
    // a_(p): number of composition factors of order p.
    unsigned a_p(std::uint32_t p) const;
    // a_ab: number of abelian composition factors.
    unsigned a_ab() const;
    // a(R): composition length.
    unsigned a_total() const { return a_ab() + nonabelian; }
};

// Table A.1: max d(G) over transitive groups of degree d, 2 <= d <= 32.
unsigned dt_a1(unsigned d);
bool has_dt_a1(unsigned d);

// Table A.2: chief factors of the primitive groups of degrees 2..9, 12, 16.
const std::map<unsigned, std::vector<ChiefFactorProfile>>& table_a2();

// Structure facts for the primitive groups of a few degrees beyond Table A.2
// that occur as block sizes in the table recursions (10, 15, 20, 24, 30, 32, 40).
// The degree-24 fact is quoted in the source material; the others are the
// standard classifications of primitive groups of those degrees.
const std::map<unsigned, std::vector<ChiefFactorProfile>>& aux_profiles();

// Profiles for a degree, from either table; empty when unknown.
const std::vector<ChiefFactorProfile>* profiles_for_degree(unsigned m);

// Sharper d(S) bound for transitive groups of degree d that have no soluble
// transitive subgroup, where known (degree 10: such groups are almost simple
// with socle A5 or A6, hence 2-generated). Returns nullopt elsewhere.
std::optional<unsigned> dt_nosol_refinement(std::uint64_t d);

// Printed table values, embedded for comparison against regenerated output.
struct PrintedRow61 {
    std::uint64_t d;
    std::uint64_t bound;
};
const std::vector<PrintedRow61>& printed_table61();

struct PrintedRowA3 {
    unsigned v;  // 5 or 15
    unsigned k;  // degree = 2^k * v
    int f;       // -1 when the row has no f entry
    std::uint64_t bound;
    std::uint64_t degree() const { return (std::uint64_t(1) << k) * v; }
};
const std::vector<PrintedRowA3>& printed_tableA3();

struct MersenneTripleRow {
    unsigned e, r, t;
};
// Table 6.2: n = 2^m*3 -> the printed (e, r, t) triples, keyed by m (5..19).
const std::map<unsigned, std::vector<MersenneTripleRow>>& printed_table62();

// FNV-1a checksum over a canonical serialization of all embedded tables,
// so regeneration diffs are auditable against a pinned fingerprint.
std::uint64_t tables_checksum();

}  // namespace transgen
