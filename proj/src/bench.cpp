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

#include <tropkex/bench.hpp>

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <string>

#include <tropkex/attack.hpp>
#include <tropkex/errors.hpp>
#include <tropkex/protocol.hpp>

namespace tropkex {

std::uint64_t measure_alpha(const TropicalMatrix& A) {
    std::uint64_t bits = 0;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) bits += bit_length(A(i, j)) + 1;
    return bits;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

TrialRecord run_trial(const RunConfig& config, Eigen::Index k, std::uint32_t trial) {
    std::mt19937_64 rng(config.seed + trial);
    const ProtocolParams params = setup(k, config.N, config.K, config.op, rng);
    const ExchangeResult ex = run_exchange(params, rng);
    const TropicalMatrix& A = ex.transcript.alice_message;

    const auto start = Clock::now();
    OpCounter counter;
    DoublingResult bound = doubling_phase(params.op, params.M, params.H, A, params.K, &counter);
    SearchHit hit = binary_search_exponent(bound.cache, A, bound.t, &counter);
    const auto found = Clock::now();
    const TropicalMatrix key = product_first(params.op, ex.transcript.bob_message, hit.pair);
    const auto done = Clock::now();

    if (!equal(key, ex.alice_key)) {
        throw AttackFailedError("recovered key differs from the shared key (k=" + std::to_string(k) +
                                ", trial=" + std::to_string(trial) + ", seed=" +
                                std::to_string(config.seed + trial) + ")");
    }

    TrialRecord rec;
    rec.k = k;
    rec.trial = trial;
    rec.alpha_bits = measure_alpha(A);
    rec.time_mprime_s = seconds_between(start, found);
    rec.time_full_s = seconds_between(start, done);
    rec.op_count = counter.count;
    rec.plateau = hit.m_prime != ex.alice.exponent;
    return rec;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const RunConfig& config, const TrialCallback& on_trial) {
    if (config.trials < 1) throw std::invalid_argument("run_experiment: trials must be >= 1");
    if (config.k_list.empty()) throw std::invalid_argument("run_experiment: empty k list");

    std::vector<ExperimentRow> rows;
    for (const Eigen::Index k : config.k_list) {
        if (k < 1) throw std::invalid_argument("run_experiment: k must be >= 1");
        ExperimentRow row;
        row.k = k;
        row.trials = config.trials;
        std::uint32_t plateaus = 0;
        for (std::uint32_t trial = 0; trial < config.trials; ++trial) {
            const TrialRecord rec = run_trial(config, k, trial);
            row.alpha_bits += static_cast<double>(rec.alpha_bits);
            row.time_mprime_s += rec.time_mprime_s;
            row.time_full_s += rec.time_full_s;
            plateaus += rec.plateau ? 1 : 0;
            if (on_trial) on_trial(rec);
        }
        const double n = config.trials;
        row.alpha_bits /= n;
        row.time_mprime_s /= n;
        row.time_full_s /= n;
        row.plateau_fraction = plateaus / n;
        const double kd = static_cast<double>(k);
        row.t_over_k3 = row.time_mprime_s / (kd * kd * kd);
        row.t_over_alpha15 = row.time_mprime_s / std::pow(row.alpha_bits, 1.5);
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    const auto old_precision = out.precision(6);
    const auto old_flags = out.flags();
    out.unsetf(std::ios::floatfield);
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.k << ',' << r.alpha_bits << ',' << r.time_mprime_s << ',' << r.time_full_s << ',' << r.t_over_k3
            << ',' << r.t_over_alpha15 << ',' << r.trials << ',' << r.plateau_fraction << '\n';
    }
    out.precision(old_precision);
    out.flags(old_flags);
}

}  // namespace tropkex
