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

#include "graphbench/rng.h"

#include <cassert>
#include <limits>

namespace graphbench {
namespace {

// Domain tags keep evaluation and exemplar seed streams apart.
constexpr uint64_t kInstanceDomain = 0x6772617068696e73ULL;  // "graphins"
constexpr uint64_t kExemplarDomain = 0x6772617068657865ULL;  // "graphexe"

uint64_t Chain(uint64_t domain, uint64_t master, uint64_t task,
               uint64_t bucket, uint64_t index) {
  uint64_t h = SplitMix64(master ^ domain);
  h = SplitMix64(h ^ task);
  h = SplitMix64(h ^ bucket);
  return SplitMix64(h ^ index);
}

}  // namespace

double Rng::UnitReal() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

int64_t Rng::UniformInt(int64_t lo, int64_t hi) {
  assert(lo <= hi);
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (span == std::numeric_limits<uint64_t>::max()) {
    return static_cast<int64_t>(Next());
  }
  const uint64_t range = span + 1;
  // Largest multiple of `range` that fits; draws at or above it are rejected.
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      (std::numeric_limits<uint64_t>::max() % range + 1) % range;
  uint64_t x;
  do {
    x = Next();
  } while (x > limit);
  return lo + static_cast<int64_t>(x % range);
}

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveInstanceSeed(uint64_t master_seed, TaskKind task,
                            BucketName bucket, int64_t index) {
  return Chain(kInstanceDomain, master_seed, static_cast<uint64_t>(task),
               static_cast<uint64_t>(bucket), static_cast<uint64_t>(index));
}

uint64_t DeriveExemplarSeed(uint64_t master_seed, TaskKind task,
                            BucketName bucket) {
  return Chain(kExemplarDomain, master_seed, static_cast<uint64_t>(task),
               static_cast<uint64_t>(bucket), 0);
}

}  // namespace graphbench
