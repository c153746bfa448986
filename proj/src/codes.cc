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

#include "ninecode/codes.h"

#include <algorithm>
#include <array>
#include <map>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace ninecode {

namespace {

struct ThreeQubitDef {
    ThreeQubitId id;
    std::array<const char*, 2> generators;
    std::vector<const char*> x_reps;  // canonical first
    std::vector<const char*> z_reps;
};

const std::vector<ThreeQubitDef>& three_qubit_defs() {
    static const std::vector<ThreeQubitDef> defs = {
        {ThreeQubitId::B1, {"Z1Z2", "Z2Z3"}, {"X1X2X3"}, {"Z1", "Z2", "Z3", "Z1Z2Z3"}},
        {ThreeQubitId::B2, {"Z1Z2", "Z2Z3"}, {"Z1", "Z2", "Z3", "Z1Z2Z3"}, {"X1X2X3"}},
        {ThreeQubitId::P1, {"X1X2", "X2X3"}, {"Z1Z2Z3"}, {"X1", "X2", "X3", "X1X2X3"}},
        {ThreeQubitId::P2, {"X1X2", "X2X3"}, {"X1", "X2", "X3", "X1X2X3"}, {"Z1Z2Z3"}},
    };
    return defs;
}

const ThreeQubitDef& def_of(ThreeQubitId id) {
    for (const auto& d : three_qubit_defs()) {
        if (d.id == id) return d;
    }
    throw std::logic_error("unknown three-qubit id");
}

std::vector<PauliOperator> parse_all(const std::vector<const char*>& texts, int n) {
    std::vector<PauliOperator> out;
    for (const char* t : texts) out.push_back(PauliOperator::parse(t, n));
    return out;
}

CodeSpec make_three_qubit(const ThreeQubitDef& d) {
    CodeSpec c;
    c.name = three_qubit_name(d.id);
    c.n = 3;
    for (const char* g : d.generators) c.generators.push_back(PauliOperator::parse(g, 3));
    auto xs = parse_all(d.x_reps, 3);
    auto zs = parse_all(d.z_reps, 3);
    c.logical_x = xs.front();
    c.logical_z = zs.front();
    c.alt_logical_x.assign(xs.begin() + 1, xs.end());
    c.alt_logical_z.assign(zs.begin() + 1, zs.end());
    c.recipe = {d.id, std::nullopt};
    return c;
}

const PauliOperator& min_weight_rep(const std::vector<PauliOperator>& reps) {
    return *std::min_element(reps.begin(), reps.end(),
                             [](const auto& a, const auto& b) { return a.weight() < b.weight(); });
}

const PauliOperator& max_weight_rep(const std::vector<PauliOperator>& reps) {
    return *std::max_element(reps.begin(), reps.end(),
                             [](const auto& a, const auto& b) { return a.weight() < b.weight(); });
}

std::vector<PauliOperator> all_reps(const PauliOperator& canonical, const std::vector<PauliOperator>& alts) {
    std::vector<PauliOperator> out{canonical};
    out.insert(out.end(), alts.begin(), alts.end());
    return out;
}

/// Places a three-qubit operator on triple t of nine qubits.
PauliOperator lift(const PauliOperator& p, int t) {
    return {9, p.x_mask() << (3 * t), p.z_mask() << (3 * t), p.phase()};
}

/// Replaces each letter of the outer operator with the inner logical on that triple.
PauliOperator substitute(const PauliOperator& outer, const std::array<PauliOperator, 3>& inner_x,
                         const std::array<PauliOperator, 3>& inner_z) {
    PauliOperator out = PauliOperator(9).with_phase(outer.phase());
    for (int t = 0; t < 3; ++t) {
        switch (outer.letter(t)) {
            case Letter::I: break;
            case Letter::X: out = out * inner_x[t]; break;
            case Letter::Z: out = out * inner_z[t]; break;
            case Letter::Y: out = out * inner_x[t] * inner_z[t] * PauliOperator(9).with_phase(1); break;
        }
    }
    return out;
}

std::string combination_name(ThreeQubitId outer, ThreeQubitId inner) {
    return std::string(three_qubit_name(outer)) + std::string(three_qubit_name(inner));
}

std::string display_name(ThreeQubitId outer, ThreeQubitId inner) {
    std::string combo = combination_name(outer, inner);
    if (combo == "P1B1") return "SHOR";
    if (combo == "P2B1") return "EQ2";
    if (combo == "B1P2") return "EQ4";
    return combo;
}

void push_unique(std::vector<PauliOperator>& v, const PauliOperator& p, const PauliOperator& canonical) {
    if (p == canonical) return;
    if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

struct Catalog {
    std::vector<std::string> names;
    std::map<std::string, CodeSpec, std::less<>> codes;
    std::map<std::string, std::string, std::less<>> aliases;
};

const Catalog& catalog() {
    static const Catalog cat = [] {
        Catalog c;
        for (const auto& d : three_qubit_defs()) {
            CodeSpec spec = make_three_qubit(d);
            c.names.push_back(spec.name);
            c.codes.emplace(spec.name, std::move(spec));
        }
        using T = ThreeQubitId;
        const std::array<std::pair<T, T>, 8> combos = {{{T::P2, T::B1},
                                                         {T::B1, T::P2},
                                                         {T::P1, T::B1},
                                                         {T::B2, T::P2},
                                                         {T::B1, T::P1},
                                                         {T::B2, T::P1},
                                                         {T::P1, T::B2},
                                                         {T::P2, T::B2}}};
        for (auto [outer, inner] : combos) {
            CodeSpec spec = build_nine_qubit(outer, inner);
            c.aliases.emplace(combination_name(outer, inner), spec.name);
            c.names.push_back(spec.name);
            c.codes.emplace(spec.name, std::move(spec));
        }
        for (const auto& [name, spec] : c.codes) spec.validate();
        return c;
    }();
    return cat;
}

bool same_up_to_phase(const StateVector& a, const StateVector& b, Amplitude& phase) {
    phase = inner_product(b, a);
    return std::abs(std::abs(phase) - 1.0) < 1e-10;
}

}  // namespace

void CodeSpec::validate() const {
    auto fail = [&](const std::string& why) { throw std::logic_error("code " + name + ": " + why); };
    if (static_cast<int>(generators.size()) != n - 1) fail("expected n-1 generators");
    try {
        stabilizer().validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    for (const auto& g : generators) {
        if (!commutes(g, logical_x) || !commutes(g, logical_z)) fail("generator " + g.str() + " is not logical-safe");
    }
    if (commutes(logical_x, logical_z)) fail("logical X and Z commute");
    for (const auto& p : alt_logical_x) {
        if (!in_stabilizer_group(*this, p * logical_x)) fail("bad logical X representative " + p.str());
    }
    for (const auto& p : alt_logical_z) {
        if (!in_stabilizer_group(*this, p * logical_z)) fail("bad logical Z representative " + p.str());
    }
}

const std::vector<std::string>& catalog_names() { return catalog().names; }

const CodeSpec& get_code(std::string_view name) {
    const Catalog& c = catalog();
    if (auto it = c.codes.find(name); it != c.codes.end()) return it->second;
    if (auto it = c.aliases.find(name); it != c.aliases.end()) return c.codes.find(it->second)->second;
    throw std::invalid_argument("unknown code: " + std::string(name));
}

CodeSpec build_nine_qubit(ThreeQubitId outer, ThreeQubitId inner) {
    CodeSpec o = make_three_qubit(def_of(outer));
    CodeSpec in = make_three_qubit(def_of(inner));
    auto in_x = all_reps(in.logical_x, in.alt_logical_x);
    auto in_z = all_reps(in.logical_z, in.alt_logical_z);
    auto out_x = all_reps(o.logical_x, o.alt_logical_x);
    auto out_z = all_reps(o.logical_z, o.alt_logical_z);

    // Inner logicals of full weight make the outer generators and logicals
    // read like the familiar X1X2X3X4X5X6 forms.
    std::array<PauliOperator, 3> full_x, full_z;
    for (int t = 0; t < 3; ++t) {
        full_x[t] = lift(max_weight_rep(in_x), t);
        full_z[t] = lift(max_weight_rep(in_z), t);
    }

    CodeSpec c;
    c.name = display_name(outer, inner);
    c.n = 9;
    c.recipe = {outer, inner};
    for (int t = 0; t < 3; ++t) {
        for (const auto& g : in.generators) c.generators.push_back(lift(g, t));
    }
    for (const auto& g : o.generators) c.generators.push_back(substitute(g, full_x, full_z));
    c.logical_x = substitute(min_weight_rep(out_x), full_x, full_z);
    c.logical_z = substitute(min_weight_rep(out_z), full_x, full_z);

    // Every outer representative with any inner representative per triple.
    auto expand = [&](const std::vector<PauliOperator>& outer_reps, const PauliOperator& canonical) {
        std::vector<PauliOperator> out;
        for (const auto& rep : outer_reps) {
            for (int choice = 0; choice < 64; ++choice) {
                std::array<PauliOperator, 3> ix, iz;
                for (int t = 0; t < 3; ++t) {
                    std::size_t k = (choice >> (2 * t)) & 3;
                    ix[t] = lift(in_x[std::min(k, in_x.size() - 1)], t);
                    iz[t] = lift(in_z[std::min(k, in_z.size() - 1)], t);
                }
                push_unique(out, substitute(rep, ix, iz), canonical);
            }
        }
        return out;
    };
    c.alt_logical_x = expand(out_x, c.logical_x);
    c.alt_logical_z = expand(out_z, c.logical_z);
    return c;
}

bool in_stabilizer_group(const CodeSpec& code, const PauliOperator& p) {
    std::vector<PauliOperator> ops = code.generators;
    int base = symplectic_rank(ops);
    ops.push_back(p);
    return symplectic_rank(ops) == base;
}

std::pair<StateVector, StateVector> codewords(const CodeSpec& code) {
    return {encode(1, 0, code.recipe), encode(0, 1, code.recipe)};
}

std::string_view effectiveness_name(Effectiveness e) {
    switch (e) {
        case Effectiveness::CorrectsAllSingleQubit: return "corrects_all_single_qubit";
        case Effectiveness::BitFlipOnly: return "bit_flip_only";
        case Effectiveness::PhaseFlipOnly: return "phase_flip_only";
        case Effectiveness::None: return "none";
    }
    return "?";
}

Effectiveness classify_effectiveness(const CodeSpec& code) {
    auto correctable = [&](std::initializer_list<Letter> letters) {
        std::vector<PauliOperator> errors{PauliOperator(code.n)};
        for (int q = 0; q < code.n; ++q) {
            for (Letter l : letters) errors.push_back(PauliOperator::single(code.n, q, l));
        }
        for (std::size_t i = 0; i < errors.size(); ++i) {
            for (std::size_t j = i + 1; j < errors.size(); ++j) {
                PauliOperator p = errors[i] * errors[j];
                bool undetected = std::all_of(code.generators.begin(), code.generators.end(),
                                              [&](const auto& g) { return commutes(p, g); });
                if (undetected && !in_stabilizer_group(code, p)) return false;
            }
        }
        return true;
    };
    if (correctable({Letter::X, Letter::Z, Letter::Y})) return Effectiveness::CorrectsAllSingleQubit;
    if (correctable({Letter::X})) return Effectiveness::BitFlipOnly;
    if (correctable({Letter::Z})) return Effectiveness::PhaseFlipOnly;
    return Effectiveness::None;
}

CodeSpec conjugate_transversal_h(const CodeSpec& code) {
    auto h = [](const PauliOperator& p) { return PauliOperator(p.num_qubits(), p.z_mask(), p.x_mask(), p.phase()); };
    CodeSpec out = code;
    out.name = "H(" + code.name + ")";
    for (auto& g : out.generators) g = h(g);
    out.logical_x = h(code.logical_z);
    out.logical_z = h(code.logical_x);
    out.alt_logical_x.clear();
    out.alt_logical_z.clear();
    for (const auto& p : code.alt_logical_z) out.alt_logical_x.push_back(h(p));
    for (const auto& p : code.alt_logical_x) out.alt_logical_z.push_back(h(p));
    return out;
}

std::string_view transform_name(TransformKind k) {
    switch (k) {
        case TransformKind::LogicalH: return "LogicalH";
        case TransformKind::TransversalH: return "TransversalH";
        case TransformKind::SubgroupCombination: return "C(g)";
    }
    return "?";
}

const std::vector<CodeTransform>& registered_transforms() {
    using K = TransformKind;
    static const std::vector<CodeTransform> transforms = {
        {K::LogicalH, "B1", "B2"},
        {K::TransversalH, "B2", "P2"},
        {K::LogicalH, "P2", "P1"},
        {K::TransversalH, "P1", "B1"},
        {K::SubgroupCombination, "B1", "P2"},
        {K::SubgroupCombination, "B2", "P1"},
        {K::LogicalH, "EQ2", "SHOR"},
        {K::LogicalH, "EQ4", "B2P2"},
        {K::LogicalH, "B1P1", "B2P1"},
        {K::LogicalH, "P2B2", "P1B2"},
    };
    return transforms;
}

std::pair<StateVector, StateVector> transform_codewords(TransformKind kind, const CodeSpec& source) {
    auto [zero, one] = codewords(source);
    const double s = std::numbers::sqrt2 / 2;
    switch (kind) {
        case TransformKind::LogicalH:
            return {s * (zero + one), s * (zero + (-1.0) * one)};
        case TransformKind::TransversalH:
            for (int q = 0; q < source.n; ++q) {
                zero.apply_h(q);
                one.apply_h(q);
            }
            return {zero, one};
        case TransformKind::SubgroupCombination: {
            if (source.n != 3) throw std::invalid_argument("C(g) is defined on three-qubit codes");
            SubgroupSpec g{3, {PauliOperator::parse("X1X2", 3), PauliOperator::parse("X2X3", 3)}};
            auto project = [&](const StateVector& v) {
                StateVector sum(3, std::vector<Amplitude>(v.dim()));
                for (const auto& e : g.elements()) sum += apply_pauli(v, e);
                sum.normalize();
                return sum;
            };
            return {project(zero), project(one)};
        }
    }
    throw std::logic_error("unhandled transform");
}

CodeSpec apply_transform(const CodeTransform& t) {
    const auto& reg = registered_transforms();
    bool known = std::any_of(reg.begin(), reg.end(), [&](const CodeTransform& r) {
        return r.kind == t.kind && r.source == t.source && r.target == t.target;
    });
    if (!known) throw std::invalid_argument("transform not registered");
    const CodeSpec& source = get_code(t.source);
    const CodeSpec& target = get_code(t.target);
    auto [zero, one] = transform_codewords(t.kind, source);
    auto [want_zero, want_one] = codewords(target);
    Amplitude p0, p1;
    if (!same_up_to_phase(zero, want_zero, p0) || !same_up_to_phase(one, want_one, p1) ||
        std::abs(p0 - p1) > 1e-10) {
        throw std::logic_error(std::string(transform_name(t.kind)) + "." + t.source + " does not yield " + t.target);
    }
    return target;
}

std::string code_to_json(const CodeSpec& code, int indent) {
    auto strs = [](const std::vector<PauliOperator>& ps) {
        std::vector<std::string> out;
        for (const auto& p : ps) out.push_back(p.str());
        return out;
    };
    nlohmann::ordered_json j;
    j["name"] = code.name;
    j["n"] = code.n;
    j["generators"] = strs(code.generators);
    j["logical_x"] = code.logical_x.str();
    j["logical_z"] = code.logical_z.str();
    j["alt_logical_x"] = strs(code.alt_logical_x);
    j["alt_logical_z"] = strs(code.alt_logical_z);
    nlohmann::ordered_json recipe;
    recipe["outer"] = three_qubit_name(code.recipe.outer);
    if (code.recipe.inner) recipe["inner"] = three_qubit_name(*code.recipe.inner);
    j["recipe"] = recipe;
    j["effectiveness"] = effectiveness_name(classify_effectiveness(code));
    return j.dump(indent);
}

}  // namespace ninecode
