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

#ifndef TROPKEX_BENCH_HPP_
#define TROPKEX_BENCH_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <tropkex/semidirect.hpp>
#include <tropkex/tropical.hpp>

namespace tropkex {

// Bits to write A down: per entry, bit length of |entry| plus one sign bit.
std::uint64_t measure_alpha(const TropicalMatrix& A);

struct RunConfig {
    std::vector<Eigen::Index> k_list{5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60};
    std::int64_t N = 1000;
    std::uint32_t K = 200;
    OpKind op = OpKind::Circ;
    std::uint32_t trials = 40;
    std::uint64_t seed = 1;
    std::filesystem::path output_path;
};

struct ExperimentRow {
    Eigen::Index k = 0;
    double alpha_bits = 0;      // mean over trials
    double time_mprime_s = 0;   // mean seconds to find m' (doubling + bisection)
    double time_full_s = 0;     // mean seconds including key derivation
    double t_over_k3 = 0;       // time_mprime_s / k^3
    double t_over_alpha15 = 0;  // time_mprime_s / alpha_bits^1.5
    std::uint32_t trials = 0;
    double plateau_fraction = 0;  // trials with m' != m
};

// Per-trial outcome, reported through the optional progress callback.
struct TrialRecord {
    Eigen::Index k = 0;
    std::uint32_t trial = 0;
    std::uint64_t alpha_bits = 0;
    double time_mprime_s = 0;
    double time_full_s = 0;
    std::uint64_t op_count = 0;
    bool plateau = false;
};

using TrialCallback = std::function<void(const TrialRecord&)>;

// Trial i of every k uses seed + i. Throws if any attack fails to reproduce the shared key.
std::vector<ExperimentRow> run_experiment(const RunConfig& config, const TrialCallback& on_trial = {});

inline constexpr const char* kCsvHeader =
    "k,alpha_bits,time_mprime_s,time_full_s,t_over_k3,t_over_alpha15,trials,plateau_fraction";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace tropkex

#endif  // TROPKEX_BENCH_HPP_
