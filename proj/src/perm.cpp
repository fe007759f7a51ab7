#include "oswap/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oswap {

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
    const int m = static_cast<int>(v_.size());
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > m || seen[x]) throw std::invalid_argument("not a permutation of 1..m");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::reversal(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = m - i;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(v_.size());
    for (int i = 0; i < size(); ++i) w[v_[i] - 1] = i + 1;
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (v_[i] != i + 1) return false;
    return true;
}

int Permutation::ascents() const {
    int a = 0;
    for (int i = 0; i + 1 < size(); ++i)
        if (v_[i] < v_[i + 1]) ++a;
    return a;
}

std::uint32_t Permutation::key() const {
    if (size() > 8) throw std::invalid_argument("key() requires m <= 8");
    std::uint32_t k = 0;
    for (int i = 0; i < size(); ++i) k |= static_cast<std::uint32_t>(v_[i]) << (4 * i);
    return k;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << v_[i];
    }
    return os.str();
}

Permutation Permutation::parse(const std::string& csv) {
    std::vector<int> v;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(std::stoi(tok));
    return Permutation(std::move(v));
}

Permutation rank_permutation(const std::vector<int>& vals) {
    const int m = static_cast<int>(vals.size());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    std::vector<int> rank(m);
    for (int r = 0; r < m; ++r) {
        if (r > 0 && vals[order[r]] == vals[order[r - 1]])
            throw std::invalid_argument("rank_permutation requires distinct values");
        rank[order[r]] = r + 1;
    }
    return Permutation(std::move(rank));
}

}  // namespace oswap
