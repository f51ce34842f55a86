#include "fishlab/perms.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fishlab/fishburn.hpp"

namespace fishlab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    int n = static_cast<int>(values_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < static_cast<int>(values_.size()); ++i) inv[values_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

bool avoids_bivincular(const Permutation& p) {
    int n = p.size();
    for (int i = 1; i + 1 <= n; ++i) {
        int j = i + 1;
        for (int k = j + 1; k <= n; ++k)
            if (p.at(i) + 1 == p.at(k) && p.at(k) < p.at(j)) return false;
    }
    return true;
}

CornerStats corner_stats(const Permutation& p) {
    CornerStats st;
    int n = p.size();
    int best_max = 0, best_min = n + 1;
    for (int i = 1; i <= n; ++i) {
        if (p.at(i) > best_max) ++st.lrmax, best_max = p.at(i);
        if (p.at(i) < best_min) ++st.lrmin, best_min = p.at(i);
    }
    best_max = 0, best_min = n + 1;
    for (int i = n; i >= 1; --i) {
        if (p.at(i) > best_max) ++st.rlmax, best_max = p.at(i);
        if (p.at(i) < best_min) ++st.rlmin, best_min = p.at(i);
    }
    return st;
}

void enumerate_permutations(int n, const std::function<void(const Permutation&)>& visit) {
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    do {
        visit(Permutation(values));
    } while (std::next_permutation(values.begin(), values.end()));
}

void enumerate_avoiders(int n, const std::function<void(const Permutation&)>& visit) {
    enumerate_permutations(n, [&](const Permutation& p) {
        if (avoids_bivincular(p)) visit(p);
    });
}

std::int64_t count_avoiders(int n) {
    std::int64_t count = 0;
    enumerate_avoiders(n, [&](const Permutation&) { ++count; });
    return count;
}

Pat2Report conjecture_pat2(int n) {
    if (n < 1 || n > 9) throw std::invalid_argument("conjecture_pat2 bound is 1..9");
    Pat2Report report;
    report.n = n;
    enumerate_avoiders(n, [&](const Permutation& p) {
        auto st = corner_stats(p);
        ++report.table[{st.lrmax, st.rlmax}];
    });
    report.symmetric = true;
    for (const auto& [key, count] : report.table) {
        auto it = report.table.find({key.second, key.first});
        if (it == report.table.end() || it->second != count) {
            report.symmetric = false;
            break;
        }
    }
    return report;
}

Pat1Report conjecture_pat1_necessary(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("conjecture_pat1_necessary bound is 1..8");
    Pat1Report report;
    report.n = n;

    report.inverse_closed = true;
    enumerate_avoiders(n, [&](const Permutation& p) {
        auto st = corner_stats(p);
        ++report.permutation_side[{st.lrmax, st.rlmin, st.rlmax, st.lrmin}];
        if (!avoids_bivincular(p.inverse())) report.inverse_closed = false;
    });

    enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
        ++report.matrix_side[{m.first_row_weight(), m.last_col_weight(), ne(m),
                              m.diagonal_positive_count()}];
    });

    report.multisets_equal = report.permutation_side == report.matrix_side;
    return report;
}

std::string to_line(const Permutation& p) {
    std::ostringstream out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out << ' ';
        out << p.at(i);
    }
    return out.str();
}

}  // namespace fishlab
