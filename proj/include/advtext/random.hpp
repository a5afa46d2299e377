// Copyright 2026 The advtext Authors
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
#ifndef ADVTEXT_RANDOM_HPP_
#define ADVTEXT_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace advtext {

// SplitMix64 output function (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

// Sub-seed for the sample at `ordinal`: splitmix64(seed ^ splitmix64(ordinal)).
// Independent of processing order, so serial and parallel runs agree.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t ordinal);

using Engine = std::mt19937_64;

// Uniform integer in [0, bound) by rejection; bound must be > 0. Stable
// across standard library implementations, unlike uniform_int_distribution.
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound);

// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::vector<T>& items, Engine& engine) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(engine, i));
    std::swap(items[i - 1], items[j]);
  }
}

// `count` distinct values from [0, population), in ascending order.
std::vector<std::size_t> sample_indices(Engine& engine, std::size_t population,
                                        std::size_t count);

}  // namespace advtext

#endif  // ADVTEXT_RANDOM_HPP_
