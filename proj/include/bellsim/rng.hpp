// Copyright 2026 The bellsim developers.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <random>

namespace bellsim {

/// Reproducible random stream: identical (seed, stream_id) reproduces an
/// identical sequence bit-for-bit. Distinct stream_ids give independent
/// streams, so trial generation can be parallelized stream-per-worker.
/// A single instance must not be shared across threads.
class SeededGenerator {
  public:
    explicit SeededGenerator(std::uint64_t seed, std::uint64_t stream_id = 0);

    /// Uniform in [0, 1), built from the raw 64-bit output so the mapping
    /// does not depend on the standard library's distribution internals.
    double uniform01();

    /// Uniform in [0, 2*pi).
    double uniformAngle();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t streamId() const { return stream_id_; }

    /// Independent stream derived from this one (seed kept, stream remixed).
    SeededGenerator substream(std::uint64_t k) const;

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

} // namespace bellsim
