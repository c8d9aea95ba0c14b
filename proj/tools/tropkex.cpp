/*
   Copyright 2026 The tropkex Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// tropkex: key exchange over tropical matrix pairs and the chain-bisection key recovery.
//
//   tropkex gen      --k 10 --N 1000 --K 200 --op circ --seed 7 --out params.json
//   tropkex exchange --params params.json --out transcript.json --keys-out keys.json
//   tropkex attack   --transcript transcript.json --out result.json
//   tropkex bench    --k 5,10 --N 1000 --K 200 --trials 3 --op circ --seed 7 --out t.csv
//
// Exit codes: 0 ok, 1 usage, 3 io, 4 invalid_input, 5 attack_failed, 6 key_agreement, 7 internal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tropkex/attack.hpp>
#include <tropkex/bench.hpp>
#include <tropkex/errors.hpp>
#include <tropkex/protocol.hpp>
#include <tropkex/serialize.hpp>

namespace {

using namespace tropkex;

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 3,
    kInvalidInput = 4,
    kAttackFailed = 5,
    kKeyAgreement = 6,
    kInternal = 7,
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("write to '" + path + "' failed");
}

void write_json(const std::string& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

struct SetupArgs {
    std::int64_t k = 10;
    std::int64_t N = 1000;
    std::uint32_t K = 200;
    std::string op = "circ";
};

void add_setup_options(CLI::App* cmd, SetupArgs& args) {
    cmd->add_option("--k", args.k, "matrix dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--N", args.N, "entry bound, entries drawn from [-N, N]")->check(CLI::NonNegativeNumber);
    cmd->add_option("--K", args.K, "private exponents are below 2^K")->check(CLI::PositiveNumber);
    cmd->add_option("--op", args.op, "semigroup law")->check(CLI::IsMember({"circ", "star"}));
}

int report(const char* category, int code, const std::string& message) {
    std::cerr << "error[" << category << "]: " << message << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical matrix key exchange and its chain-bisection attack"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "RNG seed (default from TROPKEX_SEED, else 1)")
        ->envname("TROPKEX_SEED")
        ->capture_default_str();

    SetupArgs gen_args;
    std::string gen_out = "-";
    auto* gen = app.add_subcommand("gen", "draw public parameters (M, H) and write them as JSON");
    add_setup_options(gen, gen_args);
    gen->add_option("--out", gen_out, "output path, '-' for stdout");

    SetupArgs ex_args;
    std::string ex_params;
    std::string ex_out = "-";
    std::string ex_keys_out;
    auto* exch = app.add_subcommand("exchange", "run the protocol, write the transcript and both keys");
    add_setup_options(exch, ex_args);
    exch->add_option("--params", ex_params, "use parameters from a 'gen' file instead of drawing new ones");
    exch->add_option("--out", ex_out, "transcript output path, '-' for stdout");
    exch->add_option("--keys-out", ex_keys_out, "write {\"alice_key\", \"bob_key\"} here");

    std::string at_transcript;
    std::string at_out = "-";
    std::string at_target = "alice";
    bool at_naive = false;
    auto* attack = app.add_subcommand("attack", "recover the shared key from a transcript");
    attack->add_option("--transcript", at_transcript, "transcript JSON")->required();
    attack->add_option("--out", at_out, "result output path, '-' for stdout");
    attack->add_option("--target", at_target, "whose message to search for")->check(CLI::IsMember({"alice", "bob"}));
    attack->add_flag("--naive", at_naive, "power every probe from scratch instead of using the square ladder");

    std::vector<std::int64_t> bench_k{5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60};
    std::int64_t bench_N = 1000;
    std::uint32_t bench_K = 200;
    std::uint32_t bench_trials = 40;
    std::string bench_op = "circ";
    std::string bench_out = "-";
    bool bench_verbose = false;
    auto* bench = app.add_subcommand("bench", "time the attack over a list of dimensions, write CSV");
    bench->add_option("--k", bench_k, "comma-separated dimensions")->delimiter(',')->check(CLI::PositiveNumber);
    bench->add_option("--N", bench_N, "entry bound")->check(CLI::NonNegativeNumber);
    bench->add_option("--K", bench_K, "exponent bit bound")->check(CLI::PositiveNumber);
    bench->add_option("--trials", bench_trials, "trials per dimension")->check(CLI::PositiveNumber);
    bench->add_option("--op", bench_op, "semigroup law")->check(CLI::IsMember({"circ", "star"}));
    bench->add_option("--out", bench_out, "CSV output path, '-' for stdout");
    bench->add_flag("-v,--verbose", bench_verbose, "print one line per trial to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            std::mt19937_64 rng(seed);
            const ProtocolParams params =
                setup(gen_args.k, gen_args.N, gen_args.K, parse_op_kind(gen_args.op), rng);
            write_json(gen_out, params_to_json(params));
        } else if (exch->parsed()) {
            std::mt19937_64 rng(seed);
            const ProtocolParams params =
                ex_params.empty() ? setup(ex_args.k, ex_args.N, ex_args.K, parse_op_kind(ex_args.op), rng)
                                  : params_from_json(parse_json(read_file(ex_params)));
            const ExchangeResult r = run_exchange(params, rng);
            write_json(ex_out, transcript_to_json(r.transcript));
            if (!ex_keys_out.empty()) {
                write_json(ex_keys_out,
                           Json{{"alice_key", matrix_to_json(r.alice_key)}, {"bob_key", matrix_to_json(r.bob_key)}});
            }
        } else if (attack->parsed()) {
            const Transcript tr = transcript_from_json(parse_json(read_file(at_transcript)));
            const AttackResult r = recover_key(tr, at_target == "bob" ? Target::Bob : Target::Alice,
                                               at_naive ? ProbeMode::Naive : ProbeMode::Cached);
            write_json(at_out, attack_result_to_json(r));
        } else if (bench->parsed()) {
            RunConfig cfg;
            cfg.k_list.assign(bench_k.begin(), bench_k.end());
            cfg.N = bench_N;
            cfg.K = bench_K;
            cfg.op = parse_op_kind(bench_op);
            cfg.trials = bench_trials;
            cfg.seed = seed;
            cfg.output_path = bench_out;
            TrialCallback progress;
            if (bench_verbose) {
                progress = [](const TrialRecord& t) {
                    std::cerr << "k=" << t.k << " trial=" << t.trial << " alpha=" << t.alpha_bits
                              << " ops=" << t.op_count << " t_mprime=" << t.time_mprime_s
                              << "s plateau=" << (t.plateau ? 1 : 0) << '\n';
                };
            }
            const auto rows = run_experiment(cfg, progress);
            std::ostringstream csv;
            write_csv(csv, rows);
            write_text(bench_out, csv.str());
        }
    } catch (const IoError& e) {
        return report("io", kIo, e.what());
    } catch (const KeyAgreementError& e) {
        return report("key_agreement", kKeyAgreement, e.what());
    } catch (const AttackFailedError& e) {
        return report("attack_failed", kAttackFailed, e.what());
    } catch (const ChainViolationError& e) {
        return report("attack_failed", kAttackFailed, e.what());
    } catch (const NotOnChainError& e) {
        return report("attack_failed", kAttackFailed, e.what());
    } catch (const std::invalid_argument& e) {
        return report("invalid_input", kInvalidInput, e.what());
    } catch (const std::exception& e) {
        return report("internal", kInternal, e.what());
    }
    return kOk;
}
