// Copyright 2026 The Possibly Authors
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

#ifndef POSSIBLY_RANDOM_H_
#define POSSIBLY_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace possibly {

// SplitMix64 finaliser. Bijective on 64-bit words.
std::uint64_t MixBits(std::uint64_t x);

// Hashes a sequence of words into one key; order sensitive.
std::uint64_t DeriveKey(std::initializer_list<std::uint64_t> words);

// Counter-based random stream. A stream is fully identified by its key, so
// simulations open one stream per (seed, run, step, phase, agent) and the
// draws never depend on execution order across threads.
//
// Satisfies UniformRandomBitGenerator so it can drive <random>
// distributions.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t key) : state_(key) {}
  RandomStream(std::initializer_list<std::uint64_t> key_words)
      : state_(DeriveKey(key_words)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform double in [0, 1) with 53 bits of resolution.
  double Uniform();

  // Standard normal variate.
  double Gaussian();

 private:
  std::uint64_t state_;
};

}  // namespace possibly

#endif  // POSSIBLY_RANDOM_H_
