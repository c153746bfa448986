// Copyright 2026 The ninecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ninecode/reference.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef NINECODE_DATA_DIR
#define NINECODE_DATA_DIR "reference-data"
#endif

namespace ninecode {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::ifstream open_or_throw(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    return in;
}

}  // namespace

std::filesystem::path default_data_dir() { return NINECODE_DATA_DIR; }

std::vector<ReferenceRow> load_reference_rows(const std::filesystem::path& file) {
    std::ifstream in = open_or_throw(file);
    std::vector<ReferenceRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 7) throw std::runtime_error("bad reference row: " + line);
        ReferenceRow r;
        r.preset = f[0];
        r.schedule = f[1];
        r.level = std::stoi(f[2]);
        r.channel = {std::stod(f[3]), std::stod(f[4]), std::stod(f[5]), std::stod(f[6])};
        rows.push_back(r);
    }
    return rows;
}

std::map<std::string, std::vector<GoldenTerm>> load_golden(const std::filesystem::path& file) {
    std::ifstream in = open_or_throw(file);
    std::map<std::string, std::vector<GoldenTerm>> out;
    std::string section, line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            out[section];
            continue;
        }
        if (section.empty()) throw std::runtime_error("golden term outside a section in " + file.string());
        out[section].push_back(parse_golden_term(line));
    }
    return out;
}

const std::vector<std::string>& subgroup_fixture_names() {
    static const std::vector<std::string> names = {"THREE_QUBIT", "FIVE_QUBIT", "STEANE", "NINE_QUBIT"};
    return names;
}

SubgroupSpec subgroup_fixture(std::string_view name) {
    auto make = [](int n, std::initializer_list<const char*> gens) {
        SubgroupSpec s{n, {}};
        for (const char* g : gens) s.generators.push_back(PauliOperator::parse(g, n));
        return s;
    };
    if (name == "THREE_QUBIT") return make(3, {"Z1Z2", "Z2Z3"});
    if (name == "FIVE_QUBIT") return make(5, {"X1Z2Z3X4", "X2Z3Z4X5", "X1X3Z4Z5", "Z1X2X4Z5"});
    if (name == "STEANE") return make(7, {"X4X5X6X7", "X2X3X6X7", "X1X3X5X7"});
    if (name == "NINE_QUBIT") return make(9, {"X1X2X3X4X5X6", "X4X5X6X7X8X9"});
    throw std::invalid_argument("unknown subgroup fixture: " + std::string(name));
}

std::string fixture_golden_file(std::string_view name) {
    if (name == "THREE_QUBIT") return "three_qubit.txt";
    if (name == "FIVE_QUBIT") return "five_qubit.txt";
    if (name == "STEANE") return "steane.txt";
    if (name == "NINE_QUBIT") return "nine_qubit.txt";
    throw std::invalid_argument("unknown subgroup fixture: " + std::string(name));
}

const Preset& get_preset(std::string_view name) {
    static const std::vector<Preset> presets = {
        {"depolarizing", {0.92, 0.08 / 3, 0.08 / 3, 0.08 / 3}, {"SSSSS", "24422"}},
        {"no-y", {0.92, 0.04, 0.04, 0.0}, {"SSSSS", "24442"}},
    };
    for (const auto& p : presets) {
        if (p.name == name) return p;
    }
    throw std::invalid_argument("unknown preset: " + std::string(name));
}

double ComparisonEntry::deviation() const { return std::abs(actual - expected); }

std::vector<ComparisonEntry> compare_with_reference(const std::string& preset, const std::string& schedule,
                                                    const std::vector<LevelResult>& levels,
                                                    const std::vector<ReferenceRow>& reference) {
    std::vector<ComparisonEntry> out;
    for (const auto& row : reference) {
        if (row.preset != preset || row.schedule != schedule) continue;
        if (row.level < 0 || row.level >= static_cast<int>(levels.size())) continue;
        const PauliChannel& got = levels[row.level].channel;
        for (int k = 0; k < 4; ++k) out.push_back({schedule, row.level, "IXZY"[k], row.channel[k], got[k]});
    }
    return out;
}

std::string shortest_decimal(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return {buf, ptr};
}

std::string results_csv(const std::vector<LevelResult>& levels, DecoderPolicy policy, const std::string& schedule,
                        bool header) {
    std::ostringstream out;
    if (header) out << "L,code,lam_II,lam_XX,lam_ZZ,lam_YY,policy,schedule\n";
    for (const auto& r : levels) {
        out << r.level << ',' << (r.code.empty() ? "-" : r.code);
        for (int k = 0; k < 4; ++k) out << ',' << shortest_decimal(r.channel[k]);
        out << ',' << policy_name(policy) << ',' << schedule << '\n';
    }
    return out.str();
}

std::string results_json(const std::vector<LevelResult>& levels, DecoderPolicy policy, const std::string& schedule) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : levels) {
        nlohmann::ordered_json j;
        j["L"] = r.level;
        j["code"] = r.code.empty() ? "-" : r.code;
        j["lam_II"] = r.channel.ii;
        j["lam_XX"] = r.channel.xx;
        j["lam_ZZ"] = r.channel.zz;
        j["lam_YY"] = r.channel.yy;
        j["policy"] = policy_name(policy);
        j["schedule"] = schedule;
        rows.push_back(j);
    }
    return rows.dump(2);
}

}  // namespace ninecode
