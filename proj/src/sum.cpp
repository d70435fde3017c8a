// Copyright 2026 lctlab authors
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

#include "lctlab/sum.hpp"

namespace lctlab {

namespace {

constexpr std::size_t kLeafSize = 32;

std::complex<double> sum_range(std::span<const std::complex<double>> terms,
                               std::size_t lo, std::size_t hi) {
  if (hi - lo <= kLeafSize) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = lo; i < hi; ++i) acc += terms[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return sum_range(terms, lo, mid) + sum_range(terms, mid, hi);
}

std::complex<double> sum_range_indexed(
    const std::function<std::complex<double>(std::size_t)>& term,
    std::size_t lo, std::size_t hi) {
  if (hi - lo <= kLeafSize) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return sum_range_indexed(term, lo, mid) + sum_range_indexed(term, mid, hi);
}

}  // namespace

std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) {
  if (terms.empty()) return {0.0, 0.0};
  return sum_range(terms, 0, terms.size());
}

std::complex<double> pairwise_sum_indexed(
    std::size_t n,
    const std::function<std::complex<double>(std::size_t)>& term) {
  if (n == 0) return {0.0, 0.0};
  return sum_range_indexed(term, 0, n);
}

}  // namespace lctlab
