#pragma once

#include <cstdint>
#include <random>

namespace simps {

// Independent random substreams derived from one master seed. Each pipeline
// stage (graph build, population draw, placement, ...) gets its own stream so
// changing the parameters of one stage never perturbs the draws of another.
enum class StreamPurpose : std::uint64_t {
    GraphStructure = 1,
    GraphWeights = 2,
    Population = 3,
    Placement = 4,
    PerceptionPhase = 5,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, StreamPurpose purpose) {
    return splitmix64(splitmix64(master) ^ static_cast<std::uint64_t>(purpose));
}

inline std::mt19937_64 make_stream(std::uint64_t master, StreamPurpose purpose) {
    return std::mt19937_64(substream_seed(master, purpose));
}

}  // namespace simps
