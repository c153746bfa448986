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

// ninecode: command-line driver for the nine-qubit code toolkit.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ninecode/channel.h"
#include "ninecode/codes.h"
#include "ninecode/decoder.h"
#include "ninecode/oracle.h"
#include "ninecode/reference.h"
#include "ninecode/statevec.h"

namespace {

using namespace ninecode;

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

int cmd_codes(const std::string& filter, const std::string& format, const std::string& out_path) {
    std::vector<const CodeSpec*> codes;
    for (const auto& name : catalog_names()) {
        const CodeSpec& c = get_code(name);
        bool keep = filter == "all" || (filter == "n=3" && c.n == 3) || (filter == "n=9" && c.n == 9) ||
                    (filter == "effective" && classify_effectiveness(c) == Effectiveness::CorrectsAllSingleQubit);
        if (keep) codes.push_back(&c);
    }
    std::ostringstream out;
    if (format == "json") {
        out << "[";
        for (std::size_t k = 0; k < codes.size(); ++k) out << (k ? ",\n" : "\n") << code_to_json(*codes[k]);
        out << "\n]\n";
    } else {
        for (const CodeSpec* c : codes) {
            out << c->name << "  n=" << c->n << "  recipe=" << c->recipe.str() << "  "
                << effectiveness_name(classify_effectiveness(*c)) << "\n  generators:";
            for (const auto& g : c->generators) out << ' ' << g.str();
            out << "\n  logical X: " << c->logical_x.str() << "  logical Z: " << c->logical_z.str() << "\n";
        }
    }
    emit(out.str(), out_path);
    return 0;
}

int cmd_codewords(const std::string& code_name, const std::string& out_path) {
    std::ostringstream out;
    auto write = [&](const char* label, const std::vector<GoldenTerm>& terms) {
        out << "[" << label << "]\n";
        for (const auto& t : terms) out << format_golden_term(t) << "\n";
    };
    const auto& fixtures = subgroup_fixture_names();
    if (std::find(fixtures.begin(), fixtures.end(), code_name) != fixtures.end()) {
        SubgroupSpec s = subgroup_fixture(code_name);
        out << "# " << code_name << " by subgroup projection\n";
        write("0_L", golden_terms_in_group_order(s, std::string(s.num_qubits, '0')));
        write("1_L", golden_terms_in_group_order(s, std::string(s.num_qubits, '1')));
    } else {
        const CodeSpec& c = get_code(code_name);
        auto [zero, one] = codewords(c);
        out << "# " << c.name << " encoded with recipe " << c.recipe.str() << "\n";
        write("0_L", golden_terms(zero));
        write("1_L", golden_terms(one));
    }
    emit(out.str(), out_path);
    return 0;
}

int cmd_syndromes(const std::string& code_name, const std::string& policy_text, const std::string& lambda_text,
                  const std::string& out_path) {
    const CodeSpec& code = get_code(code_name);
    DecoderPolicy policy = parse_policy(policy_text);
    std::optional<PauliChannel> lambda;
    if (!lambda_text.empty()) lambda = PauliChannel::parse(lambda_text);
    DecoderTable table = build_table(code, policy, lambda);
    emit(syndrome_table_csv(code, table), out_path);
    return 0;
}

struct SimulateOptions {
    std::string preset;
    std::string schedule;
    std::string lambda;
    std::string policy;
    int levels = -1;
    bool check = false;
    bool compare_policies = false;
    double tol = 5e-6;
    std::string format = "csv";
    std::string out;
};

void print_policy_comparison(const Preset& preset, const std::vector<ReferenceRow>& reference) {
    const std::array<DecoderPolicy, 3> policies = {DecoderPolicy::MinWeight, DecoderPolicy::MaxLikelihood,
                                                   DecoderPolicy::MinWeightXZFirst};
    for (const auto& sched : preset.schedules) {
        std::vector<std::vector<ComparisonEntry>> per_policy;
        for (auto p : policies) {
            per_policy.push_back(
                compare_with_reference(preset.name, sched, concatenate(Schedule::parse(sched), preset.lambda0, p),
                                       reference));
        }
        std::cerr << "deviation by policy, " << preset.name << " " << sched << "\n";
        std::cerr << "  L  lam   min_weight      max_likelihood  min_weight_xz   closest\n";
        for (std::size_t e = 0; e < per_policy[0].size(); ++e) {
            const auto& ref = per_policy[0][e];
            std::size_t best = 0;
            std::cerr << "  " << ref.level << "  " << ref.component << ref.component << "  ";
            for (std::size_t p = 0; p < policies.size(); ++p) {
                std::cerr << std::setw(14) << std::scientific << std::setprecision(3) << per_policy[p][e].deviation()
                          << "  ";
                if (per_policy[p][e].deviation() < per_policy[best][e].deviation()) best = p;
            }
            std::cerr << policy_name(policies[best]) << "\n";
        }
    }
    std::cerr << std::defaultfloat;
}

int cmd_simulate(const SimulateOptions& o) {
    std::vector<std::pair<std::string, PauliChannel>> runs;
    const Preset* preset = nullptr;
    PauliChannel lambda0;
    if (!o.preset.empty()) {
        preset = &get_preset(o.preset);
        lambda0 = preset->lambda0;
    }
    if (!o.lambda.empty()) lambda0 = PauliChannel::parse(o.lambda);
    if (!preset && o.lambda.empty()) throw std::invalid_argument("simulate needs --preset or --lambda");

    std::vector<std::string> schedules;
    if (!o.schedule.empty()) {
        schedules.push_back(o.schedule);
    } else if (preset) {
        schedules = preset->schedules;
    } else {
        throw std::invalid_argument("simulate needs --schedule or --preset");
    }
    std::string policy_text = o.policy.empty() ? (preset ? "minweight-xz" : "ml") : o.policy;
    DecoderPolicy policy = parse_policy(policy_text);

    std::vector<ReferenceRow> reference;
    if (o.check || o.compare_policies) {
        if (!preset) throw std::invalid_argument("--check-reference needs --preset");
        reference = load_reference_rows(default_data_dir() / "tables.csv");
    }

    std::ostringstream out;
    nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
    int failures = 0;
    std::size_t compared = 0;
    for (std::size_t k = 0; k < schedules.size(); ++k) {
        std::optional<int> levels;
        if (o.levels >= 0) levels = o.levels;
        Schedule schedule = Schedule::parse(schedules[k], levels);
        auto results = concatenate(schedule, lambda0, policy);
        if (o.format == "json") {
            for (auto& row : nlohmann::ordered_json::parse(results_json(results, policy, schedule.notation))) {
                json_rows.push_back(row);
            }
        } else {
            out << results_csv(results, policy, schedule.notation, k == 0);
        }
        if (o.check) {
            auto entries = compare_with_reference(preset->name, schedules[k], results, reference);
            compared += entries.size();
            for (const auto& e : entries) {
                if (e.deviation() > o.tol) {
                    ++failures;
                    std::cerr << "DEVIATION " << schedules[k] << " L=" << e.level << " lam_" << e.component
                              << e.component << " expected " << e.expected << " got " << shortest_decimal(e.actual)
                              << " |diff| " << e.deviation() << "\n";
                }
            }
            std::cerr << "reference check " << preset->name << " " << schedule.notation << ": " << entries.size()
                      << " entries compared, policy " << policy_name(policy) << ", tol " << o.tol << "\n";
        }
    }
    if (o.format == "json") out << json_rows.dump(2) << "\n";
    emit(out.str(), o.out);
    if (o.compare_policies) print_policy_comparison(*preset, reference);
    if (o.check) {
        std::cerr << (failures ? "FAIL" : "PASS") << ": " << compared - failures << "/" << compared
                  << " entries within tolerance\n";
        return failures ? kExitCheckFailed : 0;
    }
    return 0;
}

int report_cases(const CodeSpec& code) {
    CaseFamilyReport r = verify_case_families(code);
    for (const auto& [family, tally] : r.per_family) {
        std::cout << "  " << code.name << " " << std::left << std::setw(7) << family << std::right << " "
                  << (tally.second ? "FAIL" : "pass") << "  " << tally.first - tally.second << "/" << tally.first
                  << "\n";
    }
    for (const auto& c : r.cases) {
        if (!c.pass) std::cout << "  mismatch " << c.family << " " << c.error << ": " << c.detail << "\n";
    }
    std::cout << "  conflict pairs with equal syndromes: " << r.conflicts_checked - r.conflict_failures << "/"
              << r.conflicts_checked << "\n";
    std::cout << "  unmarked equal-syndrome pairs of different class: " << r.unmarked_collisions << "\n";
    for (const auto& ex : r.unmarked_examples) std::cout << "    " << ex << "\n";
    return r.ok() ? 0 : 1;
}

int cmd_verify(const std::string& scope, std::uint64_t seed, int samples) {
    int failed = 0;
    bool all = scope == "all";
    bool known = false;
    if (all || scope == "golden") {
        known = true;
        std::cout << "golden codewords\n";
        for (const auto& c : verify_codeword_goldens(default_data_dir())) {
            std::cout << "  " << std::left << std::setw(12) << c.fixture << std::right << " " << c.codeword << " "
                      << (c.pass ? "pass" : "FAIL") << "  " << c.matched_terms << "/" << c.expected_terms << " terms";
            if (!c.detail.empty()) std::cout << "  " << c.detail;
            std::cout << "\n";
            failed += !c.pass;
        }
    }
    if (all || scope == "cases-eq2") {
        known = true;
        std::cout << "case families, EQ2\n";
        failed += report_cases(get_code("EQ2"));
    }
    if (all || scope == "cases-eq4") {
        known = true;
        std::cout << "case families, EQ4\n";
        failed += report_cases(get_code("EQ4"));
    }
    if (all || scope == "oracle") {
        known = true;
        OracleReport r = run_oracle_check(samples, seed);
        std::cout << "state-vector oracle, seed " << seed << "\n  " << r.agreements << "/" << r.samples
                  << " agree with the Pauli frame; " << r.restored << " restored the encoded state\n";
        for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        failed += r.agreements != r.samples;
    }
    if (!known) throw std::invalid_argument("unknown verify scope: " + scope);
    std::cout << (failed ? "FAIL" : "PASS") << "\n";
    return failed ? kExitCheckFailed : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulation of three- and nine-qubit stabilizer codes"};
    app.require_subcommand(1);

    std::string filter = "all", format = "text", out_path, code_name, policy, lambda;
    auto* codes = app.add_subcommand("codes", "List catalog codes");
    codes->add_option("--filter", filter, "all | n=3 | n=9 | effective")
        ->check(CLI::IsMember({"all", "n=3", "n=9", "effective"}));
    codes->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    codes->add_option("--out", out_path, "Output file");

    auto* words = app.add_subcommand("codewords", "Print codeword expansions");
    words->add_option("--code", code_name, "Catalog code or THREE_QUBIT, FIVE_QUBIT, STEANE, NINE_QUBIT")
        ->required();
    words->add_option("--out", out_path, "Output file");

    auto* syn = app.add_subcommand("syndromes", "Syndrome table as CSV");
    syn->add_option("--code", code_name, "Catalog code")->required();
    syn->add_option("--policy", policy, "minweight | ml | minweight-xz")->default_val("minweight");
    syn->add_option("--lambda", lambda, "II,XX,ZZ,YY channel for ml");
    syn->add_option("--out", out_path, "Output file");

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "Concatenated logical channels");
    simulate->add_option("--preset", sim.preset, "depolarizing | no-y")
        ->check(CLI::IsMember({"depolarizing", "no-y"}));
    simulate->add_option("--schedule", sim.schedule, "e.g. 24422, S, EQ2,EQ4");
    simulate->add_option("--lambda", sim.lambda, "II,XX,ZZ,YY (a/b fractions allowed)");
    simulate->add_option("--policy", sim.policy, "minweight | ml | minweight-xz");
    simulate->add_option("--levels", sim.levels, "Number of levels")->check(CLI::NonNegativeNumber);
    simulate->add_flag("--check-reference", sim.check, "Compare with the stored reference tables");
    simulate->add_flag("--compare-policies", sim.compare_policies, "Per-entry deviation of every policy");
    simulate->add_option("--tol", sim.tol, "Absolute tolerance")->default_val(5e-6);
    simulate->add_option("--format", sim.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--out", sim.out, "Output file");

    std::string scope = "all";
    std::uint64_t seed = 0;
    int samples = 200;
    auto* verify = app.add_subcommand("verify", "Regression checks");
    verify->add_option("--scope", scope, "golden | cases-eq2 | cases-eq4 | oracle | all")
        ->check(CLI::IsMember({"golden", "cases-eq2", "cases-eq4", "oracle", "all"}));
    verify->add_option("--seed", seed, "Oracle seed");
    verify->add_option("--samples", samples, "Oracle samples")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*codes) return cmd_codes(filter, format, out_path);
        if (*words) return cmd_codewords(code_name, out_path);
        if (*syn) return cmd_syndromes(code_name, policy, lambda, out_path);
        if (*simulate) return cmd_simulate(sim);
        if (*verify) return cmd_verify(scope, seed, samples);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
