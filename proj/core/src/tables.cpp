#include "transgen/tables.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace transgen {

unsigned ChiefFactorProfile::a_p(std::uint32_t p) const {
    unsigned s = 0;
    for (const auto& [q, a] : abelian)
        if (q == p) s += a;
    return s;
}

unsigned ChiefFactorProfile::a_ab() const {
    unsigned s = 0;
    for (const auto& [q, a] : abelian) {
        (void)q;
        s += a;
    }
    return s;
}

namespace {

constexpr std::array<unsigned, 31> kTableA1 = {
    // d = 2 .. 32
    1, 2, 2, 2, 2, 2, 4, 3, 3, 2, 4, 2, 2, 2, 6, 2, 4, 2, 5, 3, 2, 2, 6, 3, 3, 6, 4, 2, 4, 2, 10};

using P = std::pair<std::uint32_t, std::uint32_t>;

ChiefFactorProfile prof(unsigned degree, const char* name,
                        std::vector<P> abelian, unsigned nonab) {
    ChiefFactorProfile p;
    p.group = name;
    p.degree = degree;
    p.abelian = std::move(abelian);
    p.nonabelian = nonab;
    return p;
}

std::map<unsigned, std::vector<ChiefFactorProfile>> build_a2() {
    std::map<unsigned, std::vector<ChiefFactorProfile>> t;
    t[2] = {prof(2, "C2", {{2, 1}}, 0)};
    t[3] = {prof(3, "A3", {{3, 1}}, 0), prof(3, "S3", {{2, 1}, {3, 1}}, 0)};
    t[4] = {prof(4, "A4", {{3, 1}, {2, 2}}, 0), prof(4, "S4", {{2, 2}, {3, 1}, {2, 1}}, 0)};
    t[5] = {prof(5, "C5", {{5, 1}}, 0),
            prof(5, "D10", {{5, 1}, {2, 1}}, 0),
            prof(5, "AGL(1,5)", {{5, 1}, {2, 1}, {2, 1}}, 0),
            prof(5, "A5", {}, 1),
            prof(5, "S5", {{2, 1}}, 1)};
    t[6] = {prof(6, "PSL(2,5)", {}, 1), prof(6, "PGL(2,5)", {{2, 1}}, 1),
            prof(6, "A6", {}, 1), prof(6, "S6", {{2, 1}}, 1)};
    t[7] = {prof(7, "C7", {{7, 1}}, 0),
            prof(7, "D14", {{7, 1}, {2, 1}}, 0),
            prof(7, "C7:C3", {{7, 1}, {3, 1}}, 0),
            prof(7, "AGL(1,7)", {{7, 1}, {3, 1}, {2, 1}}, 0),
            prof(7, "PSL(2,7)", {}, 1),
            prof(7, "A7", {}, 1),
            prof(7, "S7", {{2, 1}}, 1)};
    t[8] = {prof(8, "AGL(1,8)", {{2, 3}, {7, 1}}, 0),
            prof(8, "AGammaL(1,8)", {{2, 3}, {7, 1}, {3, 1}}, 0),
            prof(8, "ASL(3,2)", {{2, 3}}, 1),
            prof(8, "PSL(2,7)", {}, 1),
            prof(8, "PGL(2,7)", {{2, 1}}, 1),
            prof(8, "A8", {}, 1),
            prof(8, "S8", {{2, 1}}, 1)};
    t[9] = {prof(9, "C3^2:C4", {{3, 2}, {2, 1}, {2, 1}}, 0),
            prof(9, "C3^2:D8", {{3, 2}, {2, 1}, {2, 1}, {2, 1}}, 0),
            prof(9, "C3^2:Q8", {{3, 2}, {2, 1}, {2, 1}, {2, 1}}, 0),
            prof(9, "C3^2:C8", {{3, 2}, {2, 1}, {2, 1}, {2, 1}}, 0),
            prof(9, "AGammaL(1,9)", {{3, 2}, {2, 1}, {2, 1}, {2, 1}, {2, 1}}, 0),
            prof(9, "C3^2:SL(2,3)", {{3, 2}, {2, 1}, {2, 2}, {3, 1}}, 0),
            prof(9, "AGL(2,3)", {{3, 2}, {2, 1}, {2, 2}, {3, 1}, {2, 1}}, 0),
            prof(9, "PSL(2,8)", {}, 1),
            prof(9, "PGammaL(2,8)", {{3, 1}}, 1),
            prof(9, "A9", {}, 1),
            prof(9, "S9", {{2, 1}}, 1)};
    t[12] = {prof(12, "M11", {}, 1),  prof(12, "M12", {}, 1),
             prof(12, "PSL(2,11)", {}, 1), prof(12, "PGL(2,11)", {{2, 1}}, 1),
             prof(12, "A12", {}, 1),  prof(12, "S12", {{2, 1}}, 1)};
    t[16] = {prof(16, "C2^4:5", {{5, 1}, {2, 4}}, 0),
             prof(16, "C2^4:D10", {{2, 1}, {5, 1}, {2, 4}}, 0),
             prof(16, "AGL(1,16)", {{3, 1}, {5, 1}, {2, 4}}, 0),
             prof(16, "(A4xA4):C2", {{2, 1}, {3, 1}, {3, 1}, {2, 4}}, 0),
             prof(16, "(C2^4:C5).C4", {{2, 1}, {2, 1}, {5, 1}, {2, 4}}, 0),
             prof(16, "AGL(1,16):C2", {{3, 1}, {2, 1}, {5, 1}, {2, 4}}, 0),
             prof(16, "(C2^4.S3xS3)", {{2, 1}, {2, 1}, {3, 1}, {3, 1}, {2, 4}}, 0),
             prof(16, "(C2^4.C3^2):C4", {{2, 1}, {2, 1}, {3, 2}, {2, 4}}, 0),
             prof(16, "AGammaL(1,16)", {{2, 1}, {2, 1}, {3, 1}, {5, 1}, {2, 4}}, 0),
             prof(16, "(S4xS4):C2", {{2, 1}, {2, 1}, {2, 1}, {3, 2}, {2, 4}}, 0),
             prof(16, "C2^4.PSL(4,2)", {{2, 4}}, 1),
             prof(16, "AGammaL(2,4)", {{2, 1}, {3, 1}, {2, 4}}, 2),
             prof(16, "ASL(2,4):C2", {{2, 1}, {2, 4}}, 2),
             prof(16, "AGL(2,4)", {{3, 1}, {2, 4}}, 1),
             prof(16, "ASL(2,4)", {{2, 4}}, 1),
             prof(16, "C2^4.S6", {{2, 1}, {2, 4}}, 1),
             prof(16, "C2^4.A6", {{2, 4}}, 1),
             prof(16, "C2^4.S5", {{2, 1}, {2, 4}}, 1),
             prof(16, "C2^4.A5", {{2, 4}}, 1),
             prof(16, "C2^4.A7", {{2, 4}}, 1),
             prof(16, "A16", {}, 1),
             prof(16, "S16", {{2, 1}}, 1)};
    return t;
}

std::map<unsigned, std::vector<ChiefFactorProfile>> build_aux() {
    std::map<unsigned, std::vector<ChiefFactorProfile>> t;
    t[10] = {prof(10, "A5/A6/A10 (deg 10)", {}, 1),
             prof(10, "S5/PGL(2,9)/M10/S10 (deg 10)", {{2, 1}}, 1),
             prof(10, "PGammaL(2,9)", {{2, 1}, {2, 1}}, 1)};
    t[15] = {prof(15, "A6/A7/A8/A15 (deg 15)", {}, 1),
             prof(15, "S6/S15 (deg 15)", {{2, 1}}, 1)};
    t[20] = {prof(20, "PSL(2,19)/A20", {}, 1),
             prof(20, "PGL(2,19)/S20", {{2, 1}}, 1)};
    t[24] = {prof(24, "simple (deg 24)", {}, 1),
             prof(24, "simple.2 (deg 24)", {{2, 1}}, 1)};
    t[30] = {prof(30, "PSL(2,29)/A30", {}, 1),
             prof(30, "PGL(2,29)/S30", {{2, 1}}, 1)};
    t[40] = {prof(40, "PSL(4,3)/U4(2)/A40", {}, 1),
             prof(40, "PGL(4,3)/U4(2).2/S40", {{2, 1}}, 1)};
    t[32] = {prof(32, "2^5:31", {{2, 5}, {31, 1}}, 0),
             prof(32, "2^5:(31:5)", {{2, 5}, {31, 1}, {5, 1}}, 0),
             prof(32, "ASL(5,2)", {{2, 5}}, 1),
             prof(32, "PSL(2,31)/A32", {}, 1),
             prof(32, "PGL(2,31)/S32", {{2, 1}}, 1)};
    return t;
}

std::vector<PrintedRow61> build_61() {
    auto p2 = [](unsigned k) { return std::uint64_t(1) << k; };
    return {
        {48, 16},          {64, 20},          {96, 31},          {128, 40},
        {192, 57},         {256, 75},         {384, 109},        {512, 145},
        {p2(8) * 3, 203},  {p2(10), 271},     {p2(9) * 3, 392},  {p2(11), 523},
        {p2(10) * 3, 738}, {p2(11) * 3, 1431}, {p2(12) * 3, 2718}, {p2(13) * 3, 5292},
        {p2(14) * 3, 10118}, {p2(15) * 3, 19770}, {p2(16) * 3, 38002}, {p2(17) * 3, 74467},
        {p2(18) * 3, 143750}, {p2(19) * 3, 282317}, {p2(20) * 3, 546854},
    };
}

std::vector<PrintedRowA3> build_a3() {
    std::vector<PrintedRowA3> rows;
    auto add = [&](unsigned v, unsigned k, int f, std::uint64_t bound) {
        rows.push_back({v, k, f, bound});
    };
    add(5, 3, -1, 9);
    add(5, 4, -1, 18);
    add(5, 5, -1, 34);
    add(5, 6, -1, 66);
    add(5, 7, -1, 130);
    add(5, 8, -1, 258);
    add(5, 9, -1, 514);
    add(5, 10, -1, 1026);
    add(5, 11, -1, 2050);
    add(5, 12, -1, 4098);
    add(5, 13, -1, 8194);
    add(5, 14, -1, 16386);
    add(5, 15, -1, 32770);
    add(5, 16, -1, 65538);
    add(5, 17, 5, 130900);
    add(5, 18, 4, 257722);
    add(5, 19, 4, 504220);
    add(5, 20, 4, 984067);
    add(5, 21, 4, 1919461);
    add(5, 22, 4, 3745164);
    add(5, 23, 5, 7312620);
    add(5, 24, 5, 14290701);
    add(5, 25, 6, 27953017);
    add(5, 26, 7, 54725580);
    add(15, 2, -1, 15);
    add(15, 3, -1, 27);
    add(15, 4, -1, 52);
    add(15, 5, -1, 100);
    add(15, 6, -1, 196);
    add(15, 7, -1, 388);
    add(15, 8, -1, 772);
    add(15, 9, -1, 1540);
    add(15, 10, -1, 3076);
    add(15, 11, -1, 6148);
    add(15, 12, -1, 12292);
    add(15, 13, -1, 24580);
    add(15, 14, -1, 49156);
    add(15, 15, 6, 98308);
    add(15, 16, 4, 196612);
    add(15, 17, 3, 392700);
    add(15, 18, 3, 773166);
    add(15, 19, 3, 1512660);
    add(15, 20, 3, 2952202);
    add(15, 21, 3, 5758386);
    add(15, 22, 3, 11235497);
    add(15, 23, 3, 21937865);
    add(15, 24, 3, 42872110);
    add(15, 25, 3, 83859059);
    add(15, 26, 4, 164176748);
    add(15, 27, 4, 321692696);
    add(15, 28, 4, 630835627);
    add(15, 29, 4, 1237980292);
    add(15, 30, 5, 2431149936);
    add(15, 31, 5, 4777379825);
    add(15, 32, 5, 9393534359);
    add(15, 33, 6, 18480443646);
    add(15, 34, 7, 36376783048);
    add(15, 35, 8, 71639170628);
    return rows;
}

std::map<unsigned, std::vector<MersenneTripleRow>> build_62() {
    std::map<unsigned, std::vector<MersenneTripleRow>> t;
    t[5] = {{5, 1, 0}};
    t[6] = {{5, 1, 1}};
    t[7] = {{5, 1, 2}, {7, 1, 0}};
    t[8] = {{5, 1, 3}, {7, 1, 1}};
    t[9] = {{5, 1, 4}, {7, 1, 2}};
    t[10] = {{5, 1, 5}, {7, 1, 3}, {5, 2, 0}};
    t[11] = {{5, 1, 6}, {7, 1, 4}, {5, 2, 1}};
    t[12] = {{5, 1, 7}, {7, 1, 5}, {5, 2, 2}};
    t[13] = {{5, 1, 8}, {7, 1, 6}, {13, 1, 0}, {5, 2, 3}};
    t[14] = {{5, 1, 9}, {7, 1, 7}, {13, 1, 1}, {5, 2, 4}, {7, 2, 0}};
    t[15] = {{5, 1, 10}, {7, 1, 8}, {13, 1, 2}, {5, 2, 5}, {7, 2, 1}, {5, 3, 0}};
    t[16] = {{5, 1, 11}, {7, 1, 9}, {13, 1, 3}, {5, 2, 6}, {7, 2, 2}, {5, 3, 1}};
    t[17] = {{5, 1, 12}, {7, 1, 10}, {13, 1, 4}, {17, 1, 0}, {5, 2, 7}, {7, 2, 3}, {5, 3, 2}};
    t[18] = {{5, 1, 13}, {7, 1, 11}, {13, 1, 5}, {17, 1, 1}, {5, 2, 8}, {7, 2, 4}, {5, 3, 3}};
    t[19] = {{5, 1, 14}, {7, 1, 12}, {13, 1, 6}, {17, 1, 2}, {19, 1, 0}, {5, 2, 9}, {7, 2, 5},
             {5, 3, 4}};
    return t;
}

}  // namespace

unsigned dt_a1(unsigned d) {
    if (d < 2 || d > 32) throw std::out_of_range("dt_a1: degree outside [2, 32]");
    return kTableA1[d - 2];
}

bool has_dt_a1(unsigned d) { return d >= 2 && d <= 32; }

const std::map<unsigned, std::vector<ChiefFactorProfile>>& table_a2() {
    static const auto t = build_a2();
    return t;
}

const std::map<unsigned, std::vector<ChiefFactorProfile>>& aux_profiles() {
    static const auto t = build_aux();
    return t;
}

const std::vector<ChiefFactorProfile>* profiles_for_degree(unsigned m) {
    const auto& a2 = table_a2();
    if (auto it = a2.find(m); it != a2.end()) return &it->second;
    const auto& aux = aux_profiles();
    if (auto it = aux.find(m); it != aux.end()) return &it->second;
    return nullptr;
}

std::optional<unsigned> dt_nosol_refinement(std::uint64_t d) {
    if (d == 10) return 2;
    return std::nullopt;
}

const std::vector<PrintedRow61>& printed_table61() {
    static const auto t = build_61();
    return t;
}

const std::vector<PrintedRowA3>& printed_tableA3() {
    static const auto t = build_a3();
    return t;
}

const std::map<unsigned, std::vector<MersenneTripleRow>>& printed_table62() {
    static const auto t = build_62();
    return t;
}

std::uint64_t tables_checksum() {
    std::ostringstream os;
    for (unsigned d = 2; d <= 32; ++d) os << d << ':' << dt_a1(d) << ';';
    for (const auto& [deg, profs] : table_a2()) {
        os << 'D' << deg << '{';
        for (const auto& p : profs) {
            os << p.group << '[';
            for (auto [q, a] : p.abelian) os << q << '^' << a << ',';
            os << "]n" << p.nonabelian << ';';
        }
        os << '}';
    }
    for (const auto& r : printed_table61()) os << r.d << "->" << r.bound << ';';
    for (const auto& r : printed_tableA3()) os << r.v << ',' << r.k << ',' << r.f << "->" << r.bound << ';';
    for (const auto& [m, trips] : printed_table62()) {
        os << 'M' << m << ':';
        for (const auto& tr : trips) os << '(' << tr.e << ',' << tr.r << ',' << tr.t << ')';
    }
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace transgen
