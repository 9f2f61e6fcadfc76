#include "relosc/report.hpp"

#include <json.hpp>

#include <sstream>

namespace relosc {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string emit_report(const Report& r, EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        nlohmann::ordered_json j;
        j["command"] = r.command;
        nlohmann::ordered_json cfg;
        for (const auto& [k, v] : r.config) cfg[k] = v;
        j["config"] = std::move(cfg);
        nlohmann::ordered_json cases = nlohmann::ordered_json::array();
        for (const auto& c : r.cases) {
            nlohmann::ordered_json jc;
            jc["label"] = c.label;
            jc["pass"] = c.pass;
            if (c.vacuous) jc["vacuous"] = true;
            if (c.uncertain) jc["uncertain"] = true;
            for (const auto& [k, v] : c.fields) jc[k] = v;
            cases.push_back(std::move(jc));
        }
        j["cases"] = std::move(cases);
        j["aggregate_pass"] = r.aggregate_pass;
        if (r.include_timing) j["wall_ms"] = r.wall_ms;
        return j.dump(2) + "\n";
    }

    if (fmt == EmitFormat::csv) {
        std::ostringstream out;
        out << "label,pass,vacuous,uncertain,detail\n";
        for (const auto& c : r.cases) {
            std::string detail;
            for (const auto& [k, v] : c.fields) {
                if (!detail.empty()) detail += "; ";
                detail += k + "=" + v;
            }
            out << csv_escape(c.label) << ',' << (c.pass ? "1" : "0") << ','
                << (c.vacuous ? "1" : "0") << ',' << (c.uncertain ? "1" : "0") << ','
                << csv_escape(detail) << '\n';
        }
        out << csv_escape("aggregate") << ',' << (r.aggregate_pass ? "1" : "0") << ",,,\n";
        return out.str();
    }

    std::ostringstream out;
    out << "== " << r.command << " ==\n";
    for (const auto& [k, v] : r.config) out << "  " << k << " = " << v << "\n";
    for (const auto& c : r.cases) {
        out << (c.pass ? "[ ok ]" : "[FAIL]");
        if (c.vacuous) out << " (vacuous)";
        if (c.uncertain) out << " (uncertain)";
        out << ' ' << c.label;
        for (const auto& [k, v] : c.fields) out << "  " << k << "=" << v;
        out << '\n';
    }
    out << (r.aggregate_pass ? "PASS" : "FAIL") << " (" << r.cases.size() << " cases, "
        << r.wall_ms << " ms)\n";
    return out.str();
}

} // namespace relosc
