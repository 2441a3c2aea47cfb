// Copyright 2026 The Graphbench Authors
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

#ifndef GRAPHBENCH_RNG_H_
#define GRAPHBENCH_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "graphbench/graph.h"
#include "graphbench/task.h"

namespace graphbench {

// Portable random source for dataset generation.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The std:: distributions are not, so all draws go through the
// helpers below:
//   UniformInt(lo, hi)  rejection sampling on raw 64-bit outputs
//   UnitReal()          (x >> 11) * 2^-53, in [0, 1)
//   Shuffle()           Fisher-Yates from the back using UniformInt
// Any change to these helpers changes every generated dataset and must bump
// kGeneratorVersion in dataset.h.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  double UnitReal();
  // Uniform over the inclusive range [lo, hi]. Requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi);
  bool Coin() { return (Next() >> 63) != 0; }

  template <typename T>
  void Shuffle(std::span<T> values) {
    for (size_t i = values.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(0, static_cast<int64_t>(i) - 1));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer applied to x + golden gamma. A bijection on 64 bits.
uint64_t SplitMix64(uint64_t x);

// Child seed for graph `index` of the (task, bucket) cell.
uint64_t DeriveInstanceSeed(uint64_t master_seed, TaskKind task,
                            BucketName bucket, int64_t index);

// Seed for few-shot exemplars of a (task, bucket) cell. Drawn from a
// separate domain so it never coincides with an evaluation seed in practice.
uint64_t DeriveExemplarSeed(uint64_t master_seed, TaskKind task,
                            BucketName bucket);

}  // namespace graphbench

#endif  // GRAPHBENCH_RNG_H_
