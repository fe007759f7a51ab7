#include "oswap/rng.hpp"

#include <cmath>
#include <cstdint>

namespace oswap {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), key_(mix64(seed) ^ mix64(mix64(stream))) {}

std::uint64_t RngStream::next_u64() { return mix64(key_ ^ mix64(++ctr_)); }

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::exponential(double rate) {
    return -std::log1p(-uniform01()) / rate;
}

std::uint32_t RngStream::below(std::uint32_t n) {
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= bound) x = next_u64();
    return static_cast<std::uint32_t>(x % n);
}

}  // namespace oswap
