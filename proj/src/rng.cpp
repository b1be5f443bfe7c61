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
#include "bellsim/rng.hpp"

#include <numbers>

namespace bellsim {

namespace {
// splitmix64; decorrelates (seed, stream_id) pairs before seeding.
std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t state = seed;
    std::uint64_t a = splitmix64(state);
    state ^= stream_id * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL;
    return a ^ splitmix64(state);
}
} // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(mixSeed(seed, stream_id)) {}

double SeededGenerator::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededGenerator::uniformAngle() {
    return 2.0 * std::numbers::pi * uniform01();
}

SeededGenerator SeededGenerator::substream(std::uint64_t k) const {
    std::uint64_t state = stream_id_ ^ (k + 0x9e3779b97f4a7c15ULL);
    return SeededGenerator(seed_, splitmix64(state));
}

} // namespace bellsim
