#pragma once

// Dyck paths and their tunnels, the two Catalan-pair encodings, the four
// classical statistics asc/des/ret/pea, Narayana and ballot counts.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fishlab/relations.hpp"

namespace fishlab {

// Lattice path of n up-steps and n right-steps staying weakly above the
// diagonal, stored as a string over {U, R}.
class DyckPath {
public:
    explicit DyckPath(std::string steps);

    int order() const { return static_cast<int>(steps_.size()) / 2; }
    const std::string& steps() const { return steps_; }

    bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }
    bool operator<(const DyckPath& o) const { return steps_ < o.steps_; }

private:
    std::string steps_;
};

// A tunnel pairs one up-step with one right-step; the pairing is the usual
// matched-parenthesis one.
struct Tunnel {
    int up_index = 0;
    int right_index = 0;

    bool operator==(const Tunnel& o) const {
        return up_index == o.up_index && right_index == o.right_index;
    }
};

// All n tunnels, sorted by up-step index; every step belongs to exactly one.
std::vector<Tunnel> tunnels(const DyckPath& p);

// C1 encoding: elements are tunnels; S is nesting, R is precedence.
RelStructure c1_of_dyck(const DyckPath& p);

// C2 encoding: elements are 1..n; for i<j the unit square s_{i,j} below the
// path puts (i,j) in T, above the path puts it in R. The square with top-right
// corner (i,j) is above the path exactly when the i-th right-step is preceded
// by fewer than j up-steps.
RelStructure c2_of_dyck(const DyckPath& p);

struct DyckStats {
    int asc = 0;  // initial ascent length
    int des = 0;  // final descent length
    int ret = 0;  // right-steps ending on the diagonal
    int pea = 0;  // UR factors
};

DyckStats dyck_stats(const DyckPath& p);

// All C_n paths exactly once, lexicographic in the step string (R < U).
void enumerate_dyck(int n, const std::function<void(const DyckPath&)>& visit);
std::vector<DyckPath> enumerate_dyck(int n);

// The statistic-preserving bijection from C1-pairs to C2-pairs: the C2-pair of
// the Dyck path whose C1-pair is isomorphic to the input. Throws if the input
// violates the C1 axioms.
RelStructure psi(const RelStructure& c1);

// Exact small-number helpers.
std::int64_t binomial(int n, int k);
std::int64_t catalan_number(int n);
std::int64_t motzkin_number(int n);
std::int64_t narayana(int n, int k);      // |D_n[pea = k]|
std::int64_t ballot_count(int n, int k);  // |D_n[ret = k]|, also asc and des

}  // namespace fishlab
