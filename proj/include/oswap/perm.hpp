#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oswap {

// One-line notation over {1..m}: the value at position k is the image of k.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int m);
    static Permutation reversal(int m);

    int size() const { return static_cast<int>(v_.size()); }
    int operator()(int pos) const { return v_[pos - 1]; }
    const std::vector<int>& one_line() const { return v_; }

    Permutation inverse() const;
    bool is_identity() const;
    int ascents() const;  // positions k < m with v(k) < v(k+1)

    // Nibble-packed one-line word; requires m <= 8.
    std::uint32_t key() const;

    std::string to_string() const;  // "1,3,2"
    static Permutation parse(const std::string& csv);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> v_;
};

// Rank-order permutation of a vector with distinct entries:
// result(j) < result(k) iff vals[j-1] < vals[k-1].
Permutation rank_permutation(const std::vector<int>& vals);

}  // namespace oswap
