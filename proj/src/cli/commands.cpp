// Copyright 2026 The alphaeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "alphaeta/cipherfile.hpp"
#include "alphaeta/cli.hpp"
#include "alphaeta/keyrate.hpp"
#include "alphaeta/montecarlo.hpp"
#include "alphaeta/receivers.hpp"
#include "alphaeta/report_json.hpp"

namespace alphaeta::cli {

namespace {

using nlohmann::ordered_json;

/// Thrown for rejected flag combinations discovered after parsing.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void emit_text(const std::string &text, const std::string &output, std::ostream &out) {
    if (output.empty() || output == "-") {
        out << text;
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + output + "'");
    }
    file << text;
    if (!file) {
        throw std::runtime_error("failed writing output file '" + output + "'");
    }
}

std::vector<uint8_t> read_binary(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_binary(const std::string &path, const std::vector<uint8_t> &bytes) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    file.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!file) {
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// The first `integer_columns` columns hold counts and are emitted as JSON
// integers.
std::string table_text(const std::vector<std::string> &columns, const std::vector<std::vector<double>> &rows,
                       const std::string &format, size_t integer_columns = 0) {
    if (format == "json") {
        ordered_json doc = ordered_json::array();
        for (const auto &row : rows) {
            ordered_json obj;
            for (size_t i = 0; i < columns.size(); ++i) {
                if (i < integer_columns) {
                    obj[columns[i]] = static_cast<uint64_t>(row[i]);
                } else {
                    obj[columns[i]] = row[i];
                }
            }
            doc.push_back(std::move(obj));
        }
        return dump_json(doc);
    }
    std::ostringstream text;
    for (size_t i = 0; i < columns.size(); ++i) {
        text << (i ? "," : "") << columns[i];
    }
    text << "\n";
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            text << (i ? "," : "") << format_number(row[i]);
        }
        text << "\n";
    }
    return text.str();
}

// ---- ber-table ------------------------------------------------------------

struct BerTableOptions {
    double s_min = 0;
    double s_max = 10;
    size_t steps = 11;
    std::vector<std::string> receivers{"optimal", "phase", "heterodyne"};
    size_t resolution = kDefaultPhaseResolution;
    std::string format = "csv";
    std::string output;
};

std::string ber_table(const BerTableOptions &o) {
    if (!(o.s_min >= 0) || !(o.s_max >= o.s_min)) {
        throw UsageError("ber-table: need 0 <= s-min <= s-max");
    }
    if (o.steps < 2) {
        throw UsageError("ber-table: steps must be at least 2");
    }
    std::vector<ReceiverModel> models;
    std::vector<std::string> columns{"S"};
    for (const auto &name : o.receivers) {
        models.push_back({parse_receiver(name), o.resolution});
        columns.push_back(name + "_exact");
    }
    for (const auto &name : o.receivers) {
        columns.push_back(name + "_asymptotic");
    }

    std::vector<double> s_values;
    if (o.s_max == o.s_min) {
        s_values.push_back(o.s_min);
    } else {
        for (size_t i = 0; i < o.steps; ++i) {
            s_values.push_back(o.s_min + (o.s_max - o.s_min) * static_cast<double>(i) /
                                             static_cast<double>(o.steps - 1));
        }
    }

    std::vector<std::vector<double>> rows;
    for (double s : s_values) {
        std::vector<BerLaw> laws;
        for (const auto &m : models) {
            laws.push_back(receiver_ber(m, s));
        }
        std::vector<double> row{s};
        for (const auto &law : laws) {
            row.push_back(law.exact);
        }
        for (const auto &law : laws) {
            row.push_back(law.asymptotic);
        }
        rows.push_back(std::move(row));
    }
    return table_text(columns, rows, o.format);
}

// ---- eve-nokey ------------------------------------------------------------

struct EveNokeyOptions {
    double s = 7;
    std::vector<size_t> m_list{1, 2, 4, 8, 16, 32, 64};
    std::string mapping = "alternating";
    std::string format = "csv";
    std::string output;
};

std::string eve_nokey(const EveNokeyOptions &o) {
    const Mapping mapping = parse_mapping(o.mapping);
    std::vector<std::vector<double>> rows;
    for (size_t m : o.m_list) {
        const Constellation c(m, mapping);
        rows.push_back({static_cast<double>(m), eve_nokey_helstrom(o.s, c)});
    }
    return table_text({"M", "p_error"}, rows, o.format, 1);
}

// ---- simulate -------------------------------------------------------------

struct SimulateOptions {
    SimConfig config;
    std::string mapping = "alternating";
    std::string bob = "optimal";
    std::string eve = "none";
    std::string output;
};

std::string simulate(SimulateOptions o) {
    o.config.mapping = parse_mapping(o.mapping);
    o.config.bob.kind = parse_receiver(o.bob);
    o.config.eve = parse_eve_strategy(o.eve);
    o.config.validate();
    return dump_json(to_json(run_simulation(o.config)));
}

// ---- keyrate --------------------------------------------------------------

struct KeyrateOptions {
    std::optional<double> s;
    std::optional<double> p_bob;
    std::optional<double> p_eve;
    std::string eve = "phase-deferred";
    double line_rate = 1e9;
    std::string ber_column = "asymptotic";
    std::string output;
};

std::string keyrate(const KeyrateOptions &o) {
    const bool have_s = o.s.has_value();
    const bool have_p = o.p_bob.has_value() || o.p_eve.has_value();
    if (have_s == have_p) {
        throw UsageError("keyrate: give either --S or both --p-bob and --p-eve");
    }
    if (have_p && !(o.p_bob && o.p_eve)) {
        throw UsageError("keyrate: --p-bob and --p-eve must be given together");
    }
    const EveStrategy eve = parse_eve_strategy(o.eve);
    if (eve != EveStrategy::PhaseDeferred && eve != EveStrategy::HeterodyneDeferred) {
        throw UsageError("keyrate: --eve must be phase-deferred or heterodyne-deferred");
    }
    const DeferredStrategy strategy =
        eve == EveStrategy::PhaseDeferred ? DeferredStrategy::CanonicalPhase : DeferredStrategy::Heterodyne;
    const BerColumn column = parse_ber_column(o.ber_column);

    ordered_json doc;
    ordered_json inputs;
    if (have_s) {
        const KeyRateReport report = key_rate_at(*o.s, strategy, o.line_rate, column);
        doc = to_json(report);
        inputs["S"] = *o.s;
        doc["rate_exact"] = key_rate_at(*o.s, strategy, o.line_rate, BerColumn::Exact).rate;
        doc["rate_asymptotic"] = key_rate_at(*o.s, strategy, o.line_rate, BerColumn::Asymptotic).rate;
    } else {
        doc = to_json(key_rate(*o.p_bob, *o.p_eve, o.line_rate));
        inputs["S"] = nullptr;
        doc["rate_exact"] = nullptr;
        doc["rate_asymptotic"] = nullptr;
    }
    inputs["eve_strategy"] = to_string(eve);
    inputs["ber_column"] = have_s ? ordered_json(to_string(column)) : ordered_json(nullptr);
    doc["inputs"] = inputs;
    doc["published_rate_order"] = strategy == DeferredStrategy::CanonicalPhase ? 1e3 : 1e6;
    doc["published_rate_conditions"] = "S ~ 7, 1 Gbit/s line rate";
    doc["note"] =
        "rate = line_rate * max(0, h(p_eve) - h(p_bob)), an entropy-gap model of privacy amplification; "
        "the published estimate does not state its privacy-amplification accounting, so only orders of "
        "magnitude are comparable";
    return dump_json(doc);
}

// ---- encrypt / decrypt ----------------------------------------------------

struct CryptOptions {
    std::string input;
    std::string output;
    std::string seed_key;
    size_t m_bases = 64;
    std::string mapping = "alternating";
    size_t dsr_d = 0;
    uint64_t dsr_seed = 0;
};

void encrypt(const CryptOptions &o) {
    EncryptOptions options;
    options.m_bases = o.m_bases;
    options.mapping = parse_mapping(o.mapping);
    options.dsr_d = o.dsr_d;
    options.dsr_seed = o.dsr_seed;
    // Validate the configuration before touching the input file.
    (void)Constellation(options.m_bases, options.mapping);
    validate_dsr(options.dsr_d, options.m_bases);
    (void)KeystreamGen::from_hex(o.seed_key);
    write_binary(o.output, encrypt_file(read_binary(o.input), o.seed_key, options));
}

void decrypt(const CryptOptions &o) {
    (void)KeystreamGen::from_hex(o.seed_key);
    write_binary(o.output, decrypt_file(read_binary(o.input), o.seed_key));
}

/// Inserts config-file tokens right after the subcommand name so that flags
/// given on the command line take precedence.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::vector<std::string> plain;
    std::vector<std::string> from_config;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string &a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) {
                throw UsageError("--config needs a file path");
            }
            auto tokens = config_tokens(args[++i]);
            from_config.insert(from_config.end(), tokens.begin(), tokens.end());
        } else if (a.starts_with("--config=")) {
            auto tokens = config_tokens(a.substr(9));
            from_config.insert(from_config.end(), tokens.begin(), tokens.end());
        } else {
            plain.push_back(a);
        }
    }
    if (from_config.empty() || plain.size() < 2) {
        return plain;
    }
    std::vector<std::string> out(plain.begin(), plain.begin() + 2);
    out.insert(out.end(), from_config.begin(), from_config.end());
    out.insert(out.end(), plain.begin() + 2, plain.end());
    return out;
}

}  // namespace

std::vector<std::string> config_tokens(const std::string &path) {
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot open config file '" + path + "'");
    }
    std::vector<std::string> tokens;
    std::string line;
    size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw UsageError(path + ":" + std::to_string(line_no) + ": empty key");
        }
        tokens.push_back("--" + key);
        tokens.push_back(value);
    }
    return tokens;
}

int run(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulator and numerical toolkit for the alpha-eta quantum-noise stream cipher", "alphaeta"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_help_all_flag("--help-all", "Help for every subcommand");
    app.add_option("--config", "Flat key=value file of flag defaults for the subcommand");

    std::function<void()> action;

    BerTableOptions ber;
    auto *ber_cmd = app.add_subcommand("ber-table", "Bit-error rates of the antipodal receivers over a range of S");
    ber_cmd->add_option("--s-min", ber.s_min, "Smallest mean photon number")->capture_default_str();
    ber_cmd->add_option("--s-max", ber.s_max, "Largest mean photon number")->capture_default_str();
    ber_cmd->add_option("--steps", ber.steps, "Number of S values (>= 2)")->capture_default_str();
    ber_cmd->add_option("--receivers", ber.receivers, "optimal, phase, heterodyne, homodyne")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
        ->capture_default_str();
    ber_cmd->add_option("--resolution", ber.resolution, "Phase quadrature grid size")->capture_default_str();
    ber_cmd->add_option("--format", ber.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    ber_cmd->add_option("--output", ber.output, "Output file (default stdout)");
    ber_cmd->callback([&] { action = [&] { emit_text(ber_table(ber), ber.output, out); }; });

    EveNokeyOptions nokey;
    auto *nokey_cmd = app.add_subcommand("eve-nokey", "Eve's Helstrom error when the basis is never revealed");
    nokey_cmd->add_option("--S", nokey.s, "Mean photon number")->capture_default_str();
    nokey_cmd->add_option("--m-list", nokey.m_list, "Comma-separated numbers of bases")
        ->delimiter(',')
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
        ->capture_default_str();
    nokey_cmd->add_option("--mapping", nokey.mapping, "alternating or plain")->capture_default_str();
    nokey_cmd->add_option("--format", nokey.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    nokey_cmd->add_option("--output", nokey.output, "Output file (default stdout)");
    nokey_cmd->callback([&] { action = [&] { emit_text(eve_nokey(nokey), nokey.output, out); }; });

    SimulateOptions sim;
    auto *sim_cmd = app.add_subcommand("simulate", "Monte Carlo run of Alice, Bob and Eve; writes a JSON report");
    sim_cmd->add_option("--S", sim.config.mean_photons, "Mean photon number")->capture_default_str();
    sim_cmd->add_option("--M", sim.config.m_bases, "Number of bases (power of two)")->capture_default_str();
    sim_cmd->add_option("--mapping", sim.mapping, "alternating or plain")->capture_default_str();
    sim_cmd->add_option("--seed-key", sim.config.seed_key, "Hex seed key of the running-key LFSR")
        ->capture_default_str();
    sim_cmd->add_option("--bob", sim.bob, "optimal, phase, heterodyne or homodyne")->capture_default_str();
    sim_cmd->add_option("--resolution", sim.config.bob.resolution, "Phase grid size")->capture_default_str();
    sim_cmd->add_option("--eve", sim.eve, "none, heterodyne-deferred, phase-deferred or nearest-point")
        ->capture_default_str();
    sim_cmd->add_option("--trials", sim.config.trials, "Number of symbols")->capture_default_str();
    sim_cmd->add_option("--master-seed", sim.config.master_seed, "Seed of the per-trial randomness")
        ->capture_default_str();
    sim_cmd->add_option("--dsr-d", sim.config.dsr_d, "Deliberate state randomization half-width")
        ->capture_default_str();
    sim_cmd->add_option("--threads", sim.config.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sim_cmd->add_option("--output", sim.output, "Output file (default stdout)");
    sim_cmd->callback([&] { action = [&] { emit_text(simulate(sim), sim.output, out); }; });

    KeyrateOptions kr;
    auto *kr_cmd = app.add_subcommand("keyrate", "Fresh-key rate from the Bob/Eve error gap; writes JSON");
    kr_cmd->add_option("--S", kr.s, "Mean photon number (derives both error rates)");
    kr_cmd->add_option("--p-bob", kr.p_bob, "Bob's bit-error rate");
    kr_cmd->add_option("--p-eve", kr.p_eve, "Eve's bit-error rate");
    kr_cmd->add_option("--eve", kr.eve, "phase-deferred or heterodyne-deferred")->capture_default_str();
    kr_cmd->add_option("--line-rate", kr.line_rate, "Symbols per second")->capture_default_str();
    kr_cmd->add_option("--ber-column", kr.ber_column, "asymptotic or exact (with --S)")->capture_default_str();
    kr_cmd->add_option("--output", kr.output, "Output file (default stdout)");
    kr_cmd->callback([&] { action = [&] { emit_text(keyrate(kr), kr.output, out); }; });

    CryptOptions enc;
    auto *enc_cmd = app.add_subcommand("encrypt", "Map plaintext bits to constellation point indices");
    enc_cmd->add_option("--input", enc.input, "Plaintext file")->required();
    enc_cmd->add_option("--output", enc.output, "Ciphertext file")->required();
    enc_cmd->add_option("--seed-key", enc.seed_key, "Hex seed key")->required();
    enc_cmd->add_option("--M", enc.m_bases, "Number of bases (power of two)")->capture_default_str();
    enc_cmd->add_option("--mapping", enc.mapping, "alternating or plain")->capture_default_str();
    enc_cmd->add_option("--dsr-d", enc.dsr_d, "Deliberate state randomization half-width")->capture_default_str();
    enc_cmd->add_option("--dsr-seed", enc.dsr_seed, "Seed of the DSR dither")->capture_default_str();
    enc_cmd->callback([&] { action = [&] { encrypt(enc); }; });

    CryptOptions dec;
    auto *dec_cmd = app.add_subcommand("decrypt", "Recover plaintext from a point-index file");
    dec_cmd->add_option("--input", dec.input, "Ciphertext file")->required();
    dec_cmd->add_option("--output", dec.output, "Plaintext file")->required();
    dec_cmd->add_option("--seed-key", dec.seed_key, "Hex seed key")->required();
    dec_cmd->callback([&] { action = [&] { decrypt(dec); }; });

    try {
        const std::vector<std::string> args = expand_config(raw_args);
        std::vector<const char *> argv;
        argv.reserve(args.size());
        for (const auto &a : args) {
            argv.push_back(a.c_str());
        }
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (action) {
            action();
        }
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        // Prints help for --help, the parse diagnostic otherwise.
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace alphaeta::cli
