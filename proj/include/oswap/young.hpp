#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "oswap/perm.hpp"

namespace oswap {

struct Cell {
    int row = 0;  // 1-based
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A partition drawn in English notation: weakly decreasing positive row lengths.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    int row_count() const { return static_cast<int>(rows_.size()); }
    int row_len(int i) const { return (i >= 1 && i <= row_count()) ? rows_[i - 1] : 0; }
    bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= row_len(i); }
    std::size_t size() const;
    bool empty() const { return rows_.empty(); }
    const std::vector<int>& rows() const { return rows_; }

    std::vector<Cell> cells() const;  // row-major
    YoungDiagram conjugate() const;
    bool contains_diagram(const YoungDiagram& mu) const;

    // Boxes whose addition keeps a Young diagram contained in `bound`,
    // listed by increasing row.
    std::vector<Cell> addable_cells(const YoungDiagram& bound) const;

    std::string to_string() const;  // "4,3,3,1"
    static YoungDiagram parse(const std::string& csv);

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;
};

// Array of values indexed by the cells of a shape, stored row-major.
template <typename T>
class TableauT {
public:
    TableauT() = default;
    explicit TableauT(YoungDiagram shape, T fill = T{}) : shape_(std::move(shape)) {
        rebuild_offsets();
        vals_.assign(shape_.size(), fill);
    }
    TableauT(YoungDiagram shape, std::vector<T> vals) : shape_(std::move(shape)), vals_(std::move(vals)) {
        rebuild_offsets();
        if (vals_.size() != shape_.size()) throw std::invalid_argument("tableau value count != shape size");
    }

    const YoungDiagram& shape() const { return shape_; }
    T& at(int i, int j) { return vals_[index(i, j)]; }
    const T& at(int i, int j) const { return vals_[index(i, j)]; }
    const std::vector<T>& values() const { return vals_; }
    std::vector<T>& values() { return vals_; }

    friend bool operator==(const TableauT&, const TableauT&) = default;

private:
    std::size_t index(int i, int j) const {
        if (!shape_.contains(i, j)) throw std::out_of_range("cell outside shape");
        return static_cast<std::size_t>(off_[i - 1] + (j - 1));
    }
    void rebuild_offsets() {
        off_.assign(shape_.row_count(), 0);
        int acc = 0;
        for (int i = 0; i < shape_.row_count(); ++i) {
            off_[i] = acc;
            acc += shape_.rows()[i];
        }
    }

    YoungDiagram shape_;
    std::vector<T> vals_;
    std::vector<int> off_;
};

using IntTableau = TableauT<long long>;
using RealTableau = TableauT<double>;

// Entries weakly increase along rows and columns.
template <typename T>
bool is_interlacing(const TableauT<T>& t) {
    const auto& sh = t.shape();
    for (int i = 1; i <= sh.row_count(); ++i)
        for (int j = 1; j <= sh.row_len(i); ++j) {
            if (j > 1 && t.at(i, j - 1) > t.at(i, j)) return false;
            if (sh.contains(i - 1, j) && t.at(i - 1, j) > t.at(i, j)) return false;
        }
    return true;
}

// Bijective filling by 1..N, strictly increasing along rows and columns.
class StandardTableau {
public:
    StandardTableau() = default;
    StandardTableau(YoungDiagram shape, std::vector<int> vals);

    const YoungDiagram& shape() const { return tab_.shape(); }
    int at(int i, int j) const { return tab_.at(i, j); }
    int entries() const { return static_cast<int>(tab_.values().size()); }
    const std::vector<int>& values() const { return tab_.values(); }

    bool is_standard() const;
    Cell cell_of(int entry) const;
    int staircase_order() const;  // n with shape == staircase(n); throws otherwise

    // Nibble-packed row-major values; requires N <= 15.
    std::uint64_t key() const;

    std::string values_csv() const;
    static StandardTableau parse(const YoungDiagram& shape, const std::string& csv);

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    TableauT<int> tab_;
};

YoungDiagram staircase(int n);  // (n-1, ..., 1); n >= 2

// Border boxes (i,j) with (i+1,j+1) outside the shape, ordered as the
// line-to-line path from (1, lambda_1) to (rows, 1).
std::vector<Cell> border_strip(const YoungDiagram& shape);

// Boxes whose removal keeps a Young diagram, by strictly decreasing row.
std::vector<Cell> corners(const YoungDiagram& shape);

// +1/-1/0 diagonal weights making sum(omega * RSK(x)) == sum(x).
TableauT<int> omega_weights(const YoungDiagram& shape);

void for_each_syt(const YoungDiagram& shape, const std::function<void(const StandardTableau&)>& fn);
std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape);
std::vector<StandardTableau> enumerate_syt_parallel(const YoungDiagram& shape);
unsigned long long syt_count_hook(const YoungDiagram& shape);

struct GrowthSequence {
    std::vector<YoungDiagram> diagrams;  // empty shape up to the full shape, one box per step
};
GrowthSequence growth_sequence(const StandardTableau& t);

// Product over variables k of 1/(x_k + d)^multiplicity.
struct GeneratingFactor {
    int nvars = 0;
    std::vector<std::map<int, int>> blocks;  // blocks[k-1]: shift d -> multiplicity

    std::size_t total_multiplicity() const;
    std::string to_string() const;
    friend bool operator==(const GeneratingFactor&, const GeneratingFactor&) = default;
};

GeneratingFactor build_generating_factor(int nvars, const std::vector<int>& bar,
                                         const std::vector<int>& deg);

struct TableauParams {
    std::vector<int> cor;       // corner entries, bottom-left to top-right
    Permutation sigma;          // rank order of cor
    std::vector<int> diag_bar;  // increasing rearrangement, diag_bar[0] = 0
    std::vector<int> deg;       // out-degrees along the growth path, index 0..N-1
    GeneratingFactor factor;
};
TableauParams tableau_params(const StandardTableau& t);

}  // namespace oswap
