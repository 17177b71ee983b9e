// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "swipt/types.hpp"

#include <cstdint>
#include <random>

namespace swipt {

/// Independent draw streams within one Monte Carlo trial.
enum class StreamTag : std::uint64_t {
    UserPosition = 1,
    FarFieldA = 2,
    FarFieldB = 3,
    Interference = 4,
    RandomPhase = 5,
    RandomPs = 6,
    Randomization = 7,
    Test = 99,
};

/// splitmix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Seed that depends only on (master, trial, cell, stream): draws are a pure
/// function of these, independent of execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t cell, StreamTag tag);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t master, std::uint64_t trial, std::uint64_t cell, StreamTag tag)
        : engine_(derive_seed(master, trial, cell, tag)) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double normal() { return normal_(engine_); }

    /// CN(0, variance): real and imaginary parts each N(0, variance/2).
    cplx complex_gaussian(double variance) {
        const double s = std::sqrt(0.5 * variance);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace swipt
