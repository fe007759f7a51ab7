#pragma once

#include <cstdint>

namespace oswap {

// Counter-based stream: identical (seed, stream) reproduces identical draws
// regardless of thread count or interleaving with other streams.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform01();  // [0, 1)
    double exponential(double rate = 1.0);
    std::uint32_t below(std::uint32_t n);  // uniform on {0..n-1}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t key_ = 0;
    std::uint64_t ctr_ = 0;
};

}  // namespace oswap
