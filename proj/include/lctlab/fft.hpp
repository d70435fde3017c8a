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
#include <vector>

namespace lctlab {

/// In-place iterative radix-2 FFT, kernel e^{-2*pi*i*jk/N} (forward).
/// The inverse applies the conjugate kernel and divides by N.
/// Size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data, bool inverse = false);

}  // namespace lctlab
