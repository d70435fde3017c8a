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

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace lctlab {

/// Pairwise (cascade) summation. Reduction order is a fixed function of the
/// index range, so results are reproducible regardless of thread count.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms);

/// Pairwise summation of term(i) for i in [0, n) without materializing the
/// terms. Same fixed reduction tree as pairwise_sum.
std::complex<double> pairwise_sum_indexed(
    std::size_t n, const std::function<std::complex<double>(std::size_t)>& term);

}  // namespace lctlab
