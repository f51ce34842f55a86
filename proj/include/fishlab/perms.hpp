#pragma once

// Permutations avoiding the bivincular pattern (no indices i+1=j<k with
// pi_i + 1 = pi_k < pi_j), corner statistics, and the desk-scale reports for
// the two open conjectures relating those statistics to Fishburn matrices.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fishlab {

class Permutation {
public:
    // One-line notation with values 1..n.
    explicit Permutation(std::vector<int> values);

    int size() const { return static_cast<int>(values_.size()); }
    int at(int i) const { return values_[i - 1]; }  // 1-based position
    const std::vector<int>& values() const { return values_; }

    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return values_ == o.values_; }
    bool operator<(const Permutation& o) const { return values_ < o.values_; }

private:
    std::vector<int> values_;
};

bool avoids_bivincular(const Permutation& p);

struct CornerStats {
    int lrmax = 0;
    int lrmin = 0;
    int rlmax = 0;
    int rlmin = 0;
};

CornerStats corner_stats(const Permutation& p);

// All permutations of size n in lexicographic order.
void enumerate_permutations(int n, const std::function<void(const Permutation&)>& visit);
// The avoiders only.
void enumerate_avoiders(int n, const std::function<void(const Permutation&)>& visit);
std::int64_t count_avoiders(int n);

struct Pat2Report {
    int n = 0;
    // (LRmax, RLmax) -> count over the avoiders
    std::map<std::pair<int, int>, std::int64_t> table;
    bool symmetric = false;
};

// Joint distribution of LRmax and RLmax over the avoiders; reports symmetry,
// never asserts it.
Pat2Report conjecture_pat2(int n);

struct Pat1Report {
    int n = 0;
    // multiset of (LRmax, RLmin, RLmax, LRmin) over avoiders
    std::map<std::array<int, 4>, std::int64_t> permutation_side;
    // multiset of (first-row weight, last-column weight, wNE count, positive
    // diagonal cells) over weight-n Fishburn matrices
    std::map<std::array<int, 4>, std::int64_t> matrix_side;
    bool multisets_equal = false;
    bool inverse_closed = false;  // avoiders are closed under composition inverse
};

// The necessary condition for the conjectured statistic-preserving bijection.
Pat1Report conjecture_pat1_necessary(int n);

std::string to_line(const Permutation& p);

}  // namespace fishlab
