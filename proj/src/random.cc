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

#include "putlab/random.h"

#include <algorithm>
#include <span>

namespace putlab {
namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void Normalize(std::span<double> v) {
  double total = 0.0;
  for (double x : v) total += x;
  for (double& x : v) x /= total;
}

}  // namespace

uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
  return SplitMix64(SplitMix64(seed) ^ SplitMix64(index + 0x632be59bd9b4e019ULL));
}

std::vector<double> Rng::Dirichlet(size_t k, double alpha) {
  std::gamma_distribution<double> gamma(alpha, 1.0);
  std::vector<double> out(k);
  double total = 0.0;
  do {
    total = 0.0;
    for (double& v : out) {
      v = gamma(engine_);
      total += v;
    }
  } while (total <= 0.0);
  Normalize(out);
  return out;
}

JointPmf RandomJointPmf(Rng& rng, size_t rows, size_t cols) {
  std::vector<double> flat = rng.Dirichlet(rows * cols);
  Matrix p(rows, cols);
  std::copy(flat.begin(), flat.end(), p.data().begin());
  return *JointPmf::Create(Alphabet::Indexed("s", rows),
                           Alphabet::Indexed("x", cols), std::move(p));
}

Mechanism RandomMechanism(Rng& rng, const Alphabet& input,
                          size_t output_size) {
  Matrix rows(input.size(), output_size);
  for (size_t x = 0; x < input.size(); ++x) {
    std::vector<double> r = rng.Dirichlet(output_size);
    std::copy(r.begin(), r.end(), rows.row(x).begin());
  }
  return *Mechanism::Create(input, std::move(rows));
}

namespace {

std::vector<size_t> DrawCellIndices(Rng& rng, const JointPmf& p, int64_t n) {
  std::discrete_distribution<size_t> cell(p.p().data().begin(),
                                          p.p().data().end());
  std::vector<size_t> out(static_cast<size_t>(n));
  for (size_t& c : out) c = cell(rng.engine());
  return out;
}

}  // namespace

SampleSet DrawSamples(Rng& rng, const JointPmf& p, int64_t n) {
  SampleSet out;
  const size_t cols = p.num_cols();
  for (size_t c : DrawCellIndices(rng, p, n)) {
    out.pairs.emplace_back(p.row_alphabet().label(c / cols),
                           p.col_alphabet().label(c % cols));
  }
  return out;
}

JointPmf DrawEmpirical(Rng& rng, const JointPmf& p, int64_t n) {
  std::vector<int64_t> counts(p.p().size(), 0);
  for (size_t c : DrawCellIndices(rng, p, n)) ++counts[c];
  Matrix m(p.num_rows(), p.num_cols());
  for (size_t i = 0; i < counts.size(); ++i) {
    m.data()[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  return *JointPmf::Create(p.row_alphabet(), p.col_alphabet(), std::move(m));
}

}  // namespace putlab
