#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "oswap/sortnet.hpp"
#include "oswap/young.hpp"

namespace oswap {

// Cells visited when evacuating the maximal entry, from its corner to (1,1).
std::vector<Cell> evacuation_path(const StandardTableau& t);

// Outward slide along the evacuation path, vacate (1,1), then increment all.
StandardTableau schuetzenberger_step(const StandardTableau& t);

// Edelman-Greene map via label emptying (production path).
SortingNetwork eg_map(const StandardTableau& t);

// Literal iteration of the Schuetzenberger operator; must agree with eg_map.
SortingNetwork eg_map_by_iteration(const StandardTableau& t);

// Indexed inverse over a full enumeration of SYT(staircase(n)).
class EgIndex {
public:
    explicit EgIndex(int n);
    int order() const { return n_; }
    std::size_t size() const { return by_network_.size(); }
    const StandardTableau& invert(const SortingNetwork& s) const;

private:
    int n_ = 0;
    std::vector<StandardTableau> tableaux_;
    std::unordered_map<std::uint64_t, std::size_t> by_network_;
};

StandardTableau eg_inverse_search(const SortingNetwork& s);

struct EgParamsReport {
    int n = 0;
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> failure_examples;
    bool pass = false;
};

// Exhaustive check of last_{EG(t)} == cor_t and pi_{EG(t)} == sigma_t.
EgParamsReport verify_eg_params(int n);
EgParamsReport verify_eg_params_serial(int n);

}  // namespace oswap
