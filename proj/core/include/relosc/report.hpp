#pragma once

#include <string>
#include <utility>
#include <vector>

namespace relosc {

enum class EmitFormat { json, csv, human };

/// One labelled case of a command report (a theorem instance, a property
/// tally, an eigenvalue row, ...). Fields keep insertion order so emitted
/// reports are deterministic.
struct ReportCase {
    std::string label;
    bool pass = true;
    bool vacuous = false;
    bool uncertain = false;
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<ReportCase> cases;
    bool aggregate_pass = true;
    long wall_ms = 0;
    // Wall time is nondeterministic, so machine formats omit it unless asked;
    // identical (command, config, inputs) then emit byte-identical output.
    bool include_timing = false;

    void add_config(std::string key, std::string value) {
        config.emplace_back(std::move(key), std::move(value));
    }
};

std::string emit_report(const Report& r, EmitFormat fmt);

} // namespace relosc
