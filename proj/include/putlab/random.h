// Copyright 2026 The Putlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PUTLAB_RANDOM_H_
#define PUTLAB_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

#include "putlab/alphabet.h"
#include "putlab/empirical.h"
#include "putlab/joint_pmf.h"
#include "putlab/mechanism.h"

namespace putlab {

// Counter-based seed splitting: the stream for (seed, index) does not depend
// on how many other streams were drawn before it.
uint64_t DeriveSeed(uint64_t seed, uint64_t index);

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  Rng(uint64_t seed, uint64_t stream) : engine_(DeriveSeed(seed, stream)) {}

  double Uniform() { return std::uniform_real_distribution<double>()(engine_); }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  size_t UniformIndex(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(engine_);
  }

  // Symmetric Dirichlet(alpha, ..., alpha) point on the k-simplex.
  std::vector<double> Dirichlet(size_t k, double alpha = 1.0);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Dirichlet(1,...,1) joint over indexed alphabets.
JointPmf RandomJointPmf(Rng& rng, size_t rows, size_t cols);

// Row-wise Dirichlet(1,...,1) mechanism.
Mechanism RandomMechanism(Rng& rng, const Alphabet& input, size_t output_size);

// n i.i.d. draws from p, returned as label pairs.
SampleSet DrawSamples(Rng& rng, const JointPmf& p, int64_t n);

// Empirical pmf of n i.i.d. draws from p (multinomial counts / n).
JointPmf DrawEmpirical(Rng& rng, const JointPmf& p, int64_t n);

}  // namespace putlab

#endif  // PUTLAB_RANDOM_H_
