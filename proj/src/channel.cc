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

#include "ninecode/channel.h"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ninecode {

Schedule Schedule::parse(std::string_view text, std::optional<int> num_levels) {
    Schedule s;
    std::string cleaned;
    for (char c : text) {
        if (c != '(' && c != ')' && c != ' ') cleaned += c;
    }
    if (cleaned.empty()) throw std::invalid_argument("empty schedule");
    s.notation = "(" + cleaned + ")";
    if (cleaned.find_first_not_of("24S") == std::string::npos) {
        for (char c : cleaned) s.levels.push_back(c == '2' ? "EQ2" : c == '4' ? "EQ4" : "SHOR");
    } else {
        std::string_view rest = cleaned;
        while (true) {
            auto comma = rest.find(',');
            s.levels.push_back(get_code(rest.substr(0, comma)).name);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
    }
    if (num_levels) {
        if (*num_levels < 0) throw std::invalid_argument("negative level count");
        if (s.levels.size() == 1) {
            s.levels.assign(*num_levels, s.levels.front());
        } else if (static_cast<std::size_t>(*num_levels) <= s.levels.size()) {
            s.levels.resize(*num_levels);
        } else {
            throw std::invalid_argument("schedule " + s.notation + " has fewer than " + std::to_string(*num_levels) +
                                        " levels");
        }
    }
    return s;
}

PauliChannel logical_channel(const CodeSpec& code, const DecoderTable& table, const PauliChannel& lambda) {
    if (table.code != code.name) throw std::invalid_argument("table built for " + table.code + ", not " + code.name);
    lambda.validate(1e-9);
    const double total = lambda.sum();
    const PauliChannel unit{lambda.ii / total, lambda.xx / total, lambda.zz / total, lambda.yy / total};
    const ErrorCensus& census = error_census(code);
    std::vector<double> w = census.cell_weights(unit);
    std::array<double, 4> sum{}, comp{};
    for (std::size_t s = 0; s < census.num_syndromes(); ++s) {
        for (int label = 0; label < 4; ++label) {
            int c = label ^ table.labels[s];
            double v = w[s * 4 + label];
            double t = sum[c] + v;
            comp[c] += std::abs(sum[c]) >= std::abs(v) ? (sum[c] - t) + v : (v - t) + sum[c];
            sum[c] = t;
        }
    }
    // lam_II near 1 carries absolute roundoff that compounds across levels; the
    // other entries are accurate relative to their own size.
    PauliChannel out{0, sum[1] + comp[1], sum[2] + comp[2], sum[3] + comp[3]};
    out.ii = 1 - (out.xx + out.zz + out.yy);
    return out;
}

std::vector<LevelResult> concatenate(const Schedule& schedule, const PauliChannel& lambda0, DecoderPolicy policy) {
    lambda0.validate(1e-9);
    std::vector<LevelResult> out{{0, "", lambda0}};
    std::map<std::string, DecoderTable> fixed;
    PauliChannel current = lambda0;
    for (std::size_t k = 0; k < schedule.levels.size(); ++k) {
        const CodeSpec& code = get_code(schedule.levels[k]);
        if (policy == DecoderPolicy::MaxLikelihood) {
            current = logical_channel(code, build_table(code, policy, current), current);
        } else {
            auto it = fixed.find(code.name);
            if (it == fixed.end()) it = fixed.emplace(code.name, build_table(code, policy)).first;
            current = logical_channel(code, it->second, current);
        }
        out.push_back({static_cast<int>(k + 1), code.name, current});
    }
    return out;
}

}  // namespace ninecode
