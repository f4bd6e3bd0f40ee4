// Copyright 2026 The Zeroscope Authors.
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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zeroscope {

using cplx = std::complex<double>;

/// Address of one random stream: (run seed, trial id, draw block within trial).
struct SeedPath {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
  std::uint64_t substream_index = 0;

  SeedPath with_substream(std::uint64_t sub) const {
    return {master_seed, stream_index, sub};
  }
  friend bool operator==(const SeedPath&, const SeedPath&) = default;
};

/// Philox4x32-10 block function. Pure; exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/**
 * Counter-based generator keyed by a SeedPath.
 *
 * Word k of the stream is a pure function of (seed path, k), so the output
 * does not depend on which thread draws it or in which order trials run.
 * The 64-bit Philox key is derived from (master_seed, substream_index);
 * the high half of the 128-bit counter carries stream_index and the low
 * half counts blocks.
 */
class CounterRng {
 public:
  explicit CounterRng(const SeedPath& path);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double next_unit();
  /// Uniform on (0, 1].
  double next_open_unit();

  /// Box-Muller draw of N_C(0,1): real and imaginary parts iid N_R(0, 1/2).
  cplx next_standard_complex();

  const SeedPath& path() const { return path_; }

 private:
  SeedPath path_;
  std::array<std::uint32_t, 2> key_{};
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_words_ = 2;  // 64-bit words consumed from buffer_
};

std::vector<cplx> sample_standard_complex(const SeedPath& seed, std::size_t n);

}  // namespace zeroscope
