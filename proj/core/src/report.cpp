#include "transgen/report.hpp"

#include <sstream>
#include <stdexcept>

namespace transgen {

using nlohmann::json;

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("unknown output format: " + name);
}

json certificate_to_json(const Certificate& cert) {
    json cases = json::array();
    for (const auto& ev : cert.cases) {
        json c{{"case", ev.case_id},
               {"rule", ev.rule},
               {"skipped", ev.skipped},
               {"target", ev.target.get_str()}};
        if (ev.skipped) {
            c["skip_reason"] = ev.skip_reason;
        } else {
            c["bound"] = ev.bound.get_str();
            c["floored"] = ev.floored.get_str();
            c["pass"] = ev.pass;
        }
        cases.push_back(std::move(c));
    }
    return json{{"schema", kSchemaTag},
                {"kind", "certificate"},
                {"degree", cert.degree.get_str()},
                {"degree_expr", cert.degree_expr},
                {"target", cert.target.get_str()},
                {"target_source", cert.target_source},
                {"cases", std::move(cases)},
                {"has_skips", cert.has_skips},
                {"pass", cert.pass},
                {"worst_value", cert.worst_value.get_str()},
                {"worst_cases", cert.worst_cases}};
}

Certificate certificate_from_json(const json& j) {
    if (j.at("schema").get<std::string>() != kSchemaTag)
        throw std::invalid_argument("unexpected schema tag");
    Certificate cert;
    cert.degree = mpz_class(j.at("degree").get<std::string>());
    cert.degree_expr = j.at("degree_expr").get<std::string>();
    cert.target = mpz_class(j.at("target").get<std::string>());
    cert.target_source = j.at("target_source").get<std::string>();
    cert.has_skips = j.at("has_skips").get<bool>();
    cert.pass = j.at("pass").get<bool>();
    cert.worst_value = mpz_class(j.at("worst_value").get<std::string>());
    cert.worst_cases = j.at("worst_cases").get<std::vector<std::string>>();
    for (const auto& c : j.at("cases")) {
        CaseEvaluation ev;
        ev.case_id = c.at("case").get<std::string>();
        ev.rule = c.at("rule").get<std::string>();
        ev.skipped = c.at("skipped").get<bool>();
        ev.target = mpz_class(c.at("target").get<std::string>());
        if (ev.skipped) {
            ev.skip_reason = c.at("skip_reason").get<std::string>();
        } else {
            ev.bound = mpq_class(c.at("bound").get<std::string>());
            ev.floored = mpz_class(c.at("floored").get<std::string>());
            ev.pass = c.at("pass").get<bool>();
        }
        cert.cases.push_back(std::move(ev));
    }
    return cert;
}

namespace {

std::string f_str(const std::optional<unsigned>& f) { return f ? std::to_string(*f) : ""; }
std::string paper_f_str(const std::optional<int>& f) {
    if (!f || *f < 0) return "";
    return std::to_string(*f);
}

}  // namespace

json table_to_json(const std::string& table, const std::vector<DegreeRecord>& rows) {
    json out{{"schema", kSchemaTag}, {"kind", "table"}, {"table", table}};
    json jrows = json::array();
    for (const auto& r : rows) {
        json jr{{"d", r.d.get_str()},
                {"d_expr", r.d_expr},
                {"bound", r.bound.get_str()},
                {"argmax_cases", r.argmax_cases}};
        if (r.f) jr["f"] = *r.f;
        if (r.paper_bound) {
            jr["paper_bound"] = r.paper_bound->get_str();
            jr["delta"] = mpz_class(r.bound - *r.paper_bound).get_str();
        }
        if (r.paper_f && *r.paper_f >= 0) jr["paper_f"] = *r.paper_f;
        jrows.push_back(std::move(jr));
    }
    out["rows"] = std::move(jrows);
    return out;
}

std::string table_to_csv(const std::vector<DegreeRecord>& rows) {
    std::ostringstream os;
    os << "d_expr,f,bound,paper_bound,delta\n";
    for (const auto& r : rows) {
        os << r.d_expr << ',' << f_str(r.f) << ',' << r.bound.get_str() << ',';
        if (r.paper_bound)
            os << r.paper_bound->get_str() << ',' << mpz_class(r.bound - *r.paper_bound).get_str();
        else
            os << ',';
        os << '\n';
    }
    return os.str();
}

std::string table_to_text(const std::string& table, const std::vector<DegreeRecord>& rows) {
    std::ostringstream os;
    os << "table " << table << " (" << rows.size() << " rows)\n";
    os << "  d (decimal)      d_expr        f   bound           paper      delta\n";
    for (const auto& r : rows) {
        os << "  " << r.d.get_str();
        for (std::size_t i = r.d.get_str().size(); i < 15; ++i) os << ' ';
        os << "  " << r.d_expr;
        for (std::size_t i = r.d_expr.size(); i < 12; ++i) os << ' ';
        std::string fs = f_str(r.f);
        os << "  " << (fs.empty() ? "-" : fs) << "   " << r.bound.get_str();
        for (std::size_t i = r.bound.get_str().size(); i < 14; ++i) os << ' ';
        if (r.paper_bound) {
            mpz_class delta = r.bound - *r.paper_bound;
            os << ' ' << r.paper_bound->get_str() << "      " << delta.get_str();
            std::string pf = paper_f_str(r.paper_f);
            if (!pf.empty() && (!r.f || std::to_string(*r.f) != pf))
                os << "  [f mismatch: paper " << pf << "]";
        }
        os << '\n';
    }
    return os.str();
}

json sweep_to_json(const SweepReport& rep) {
    json j{{"schema", kSchemaTag},
           {"kind", "sweep"},
           {"case", rep.case_id},
           {"inequality", rep.inequality},
           {"claimed_threshold", rep.claimed_threshold.get_str()},
           {"verified_range", rep.verified_range},
           {"status", rep.status},
           {"failures", rep.failures}};
    if (rep.first_failure_below) j["first_failure_below"] = rep.first_failure_below->get_str();
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

std::string sweeps_to_jsonl(const std::vector<SweepReport>& reps) {
    std::ostringstream os;
    for (const auto& r : reps) os << sweep_to_json(r).dump() << '\n';
    return os.str();
}

std::string sweeps_to_text(const std::vector<SweepReport>& reps) {
    std::ostringstream os;
    for (const auto& r : reps) {
        os << (r.verified() ? "[ok]   " : (r.status.rfind("skipped", 0) == 0 ? "[skip] " : "[FAIL] "))
           << r.case_id << "  " << r.inequality << '\n';
        os << "       range: " << r.verified_range;
        if (r.first_failure_below)
            os << "  (first failure below threshold: " << r.first_failure_below->get_str() << ")";
        if (!r.note.empty()) os << "  note: " << r.note;
        os << '\n';
        for (const auto& f : r.failures) os << "       failure: " << f << '\n';
    }
    return os.str();
}

std::string certificate_to_text(const Certificate& cert) {
    std::ostringstream os;
    os << "certify degree " << cert.degree.get_str() << " (" << cert.degree_expr << ")\n";
    os << "  target " << cert.target.get_str() << " [" << cert.target_source << "]\n";
    for (const auto& ev : cert.cases) {
        if (ev.skipped) {
            os << "  [skip] " << ev.case_id << ": " << ev.skip_reason << '\n';
        } else {
            os << "  " << (ev.pass ? "[ok]  " : "[FAIL]") << ' ' << ev.case_id << " (" << ev.rule
               << "): " << ev.floored.get_str() << " <= " << ev.target.get_str() << '\n';
        }
    }
    os << "  verdict: " << (cert.pass ? "pass" : "fail");
    if (cert.has_skips) os << " (with skipped cases)";
    os << "; worst " << cert.worst_value.get_str() << " at";
    for (const auto& w : cert.worst_cases) os << ' ' << w << ';';
    os << '\n';
    return os.str();
}

}  // namespace transgen
