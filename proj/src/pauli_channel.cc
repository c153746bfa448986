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

#include "ninecode/pauli_channel.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ninecode {

namespace {

double parse_number(std::string_view s) {
    auto parse_plain = [&](std::string_view t) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size()) {
            throw std::invalid_argument("not a number: '" + std::string(t) + "'");
        }
        return v;
    };
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    // "a/b" is accepted so that 0.08/3 can be written exactly.
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        return parse_plain(s.substr(0, slash)) / parse_plain(s.substr(slash + 1));
    }
    return parse_plain(s);
}

}  // namespace

void PauliChannel::validate(double tol) const {
    for (double v : {ii, xx, zz, yy}) {
        if (!(v >= 0) || !std::isfinite(v)) throw std::invalid_argument("channel entry negative or not finite: " + str());
    }
    if (std::abs(sum() - 1.0) > tol) throw std::invalid_argument("channel does not sum to 1: " + str());
}

double PauliChannel::operator[](int letter) const {
    switch (letter) {
        case 0: return ii;
        case 1: return xx;
        case 2: return zz;
        case 3: return yy;
    }
    throw std::out_of_range("Pauli letter index");
}

std::string PauliChannel::str() const {
    std::ostringstream out;
    out.precision(10);
    out << "(" << ii << ", " << xx << ", " << zz << ", " << yy << ")";
    return out.str();
}

PauliChannel PauliChannel::parse(const std::string& text) {
    std::vector<double> v;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        v.push_back(parse_number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (v.size() != 4) throw std::invalid_argument("channel needs four entries II,XX,ZZ,YY");
    PauliChannel c{v[0], v[1], v[2], v[3]};
    c.validate(1e-9);
    return c;
}

double max_abs_diff(const PauliChannel& a, const PauliChannel& b) {
    return std::max({std::abs(a.ii - b.ii), std::abs(a.xx - b.xx), std::abs(a.zz - b.zz), std::abs(a.yy - b.yy)});
}

}  // namespace ninecode
