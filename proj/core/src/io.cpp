#include "relosc/io.hpp"

#include "relosc/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace relosc {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v) {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_number_float()) return Rational::from_double(v.get<double>());
    throw ParseError("coefficient entries must be strings or numbers");
}

RawCoefficientData raw_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("coefficient set must be a JSON object");
    if (!j.contains("N") || !j["N"].is_number_integer())
        throw ParseError("missing integer field \"N\"");
    if (!j.contains("a") || !j["a"].is_array() || !j.contains("b") || !j["b"].is_array())
        throw ParseError("missing array fields \"a\" and \"b\"");
    RawCoefficientData raw;
    raw.n = j["N"].get<int>();
    for (const auto& v : j["a"]) raw.a.push_back(rational_from_json(v));
    for (const auto& v : j["b"]) raw.b.push_back(rational_from_json(v));
    if (j.contains("mode")) {
        auto m = j["mode"].get<std::string>();
        if (m == "exact") raw.declared_mode = Mode::exact;
        else if (m == "float") raw.declared_mode = Mode::floating;
        else throw ParseError("mode must be \"exact\" or \"float\"");
    }
    if (raw.a.size() != static_cast<size_t>(raw.n) + 1 ||
        raw.b.size() != static_cast<size_t>(raw.n))
        throw ParseError("sequence lengths must be N+1 (a) and N (b)");
    return raw;
}

json raw_to_json(const RawCoefficientData& raw) {
    json j;
    j["N"] = raw.n;
    json a = json::array(), b = json::array();
    for (const auto& v : raw.a) a.push_back(v.to_string());
    for (const auto& v : raw.b) b.push_back(v.to_string());
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    j["mode"] = mode_name(raw.declared_mode);
    return j;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

RawCoefficientData parse_coefficients_json(const std::string& text) {
    return raw_from_json(parse_text(text));
}

RawCoefficientData load_coefficients_file(const std::string& path) {
    return parse_coefficients_json(slurp(path));
}

std::pair<RawCoefficientData, RawCoefficientData> parse_pair_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("j0") || !j.contains("j1"))
        throw ParseError("pair file must hold objects \"j0\" and \"j1\"");
    auto p = std::make_pair(raw_from_json(j["j0"]), raw_from_json(j["j1"]));
    if (p.first.n != p.second.n) throw ParseError("pair file: operators must share N");
    return p;
}

std::pair<RawCoefficientData, RawCoefficientData> load_pair_file(const std::string& path) {
    return parse_pair_json(slurp(path));
}

std::string coefficients_to_json(const RawCoefficientData& raw) {
    return raw_to_json(raw).dump(2) + "\n";
}

std::string pair_to_json(const RawCoefficientData& j0, const RawCoefficientData& j1) {
    json j;
    j["j0"] = raw_to_json(j0);
    j["j1"] = raw_to_json(j1);
    return j.dump(2) + "\n";
}

} // namespace relosc
