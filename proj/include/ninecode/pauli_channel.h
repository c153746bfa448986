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

#pragma once

#include <string>

namespace ninecode {

/// Diagonal single-qubit Pauli channel (lam_II, lam_XX, lam_ZZ, lam_YY).
struct PauliChannel {
    double ii = 1;
    double xx = 0;
    double zz = 0;
    double yy = 0;

    /// Throws std::invalid_argument unless entries are >= 0 and sum to 1 within tol.
    void validate(double tol = 1e-12) const;
    double operator[](int letter) const;  // 0=I 1=X 2=Z 3=Y
    double sum() const { return ii + xx + zz + yy; }
    std::string str() const;

    /// Parses "II,XX,ZZ,YY" decimals.
    static PauliChannel parse(const std::string& text);

    friend bool operator==(const PauliChannel&, const PauliChannel&) = default;
};

/// Exchanges lam_XX and lam_ZZ.
inline PauliChannel swap_xz(const PauliChannel& c) { return {c.ii, c.zz, c.xx, c.yy}; }

double max_abs_diff(const PauliChannel& a, const PauliChannel& b);

}  // namespace ninecode
