#include "fishlab/catalan.hpp"

#include <algorithm>
#include <stdexcept>

#include "fishlab/ftriple.hpp"

namespace fishlab {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
    int height = 0;
    for (char ch : steps_) {
        if (ch == 'U') ++height;
        else if (ch == 'R') --height;
        else throw std::invalid_argument("dyck path steps must be U or R");
        if (height < 0) throw std::invalid_argument("dyck path dips below the diagonal");
    }
    if (height != 0) throw std::invalid_argument("dyck path must balance up- and right-steps");
}

std::vector<Tunnel> tunnels(const DyckPath& p) {
    std::vector<Tunnel> out;
    std::vector<int> stack;
    const std::string& s = p.steps();
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        if (s[i] == 'U') {
            stack.push_back(i);
        } else {
            out.push_back({stack.back(), i});
            stack.pop_back();
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Tunnel& a, const Tunnel& b) { return a.up_index < b.up_index; });
    return out;
}

RelStructure c1_of_dyck(const DyckPath& p) {
    auto ts = tunnels(p);
    int n = static_cast<int>(ts.size());
    Relation nest(n), prec(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            // ts sorted by up index; with up_a < up_b either b nests in a or a precedes b
            if (ts[a].up_index < ts[b].up_index) {
                if (ts[b].right_index < ts[a].right_index) nest.add(b, a);
                else prec.add(a, b);
            }
        }
    return RelStructure(n, {nest, prec});
}

RelStructure c2_of_dyck(const DyckPath& p) {
    int n = p.order();
    // ups_before[i] = number of up-steps preceding the i-th right-step (1-based)
    std::vector<int> ups_before(n + 1, 0);
    int ups = 0, rights = 0;
    for (char ch : p.steps()) {
        if (ch == 'U') ++ups;
        else ups_before[++rights] = ups;
    }
    Relation below(n), above(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (ups_before[i] < j) above.add(i - 1, j - 1);
            else below.add(i - 1, j - 1);
        }
    return RelStructure(n, {below, above});
}

DyckStats dyckstats_impl(const std::string& s) {
    DyckStats st;
    int n = static_cast<int>(s.size()) / 2;
    while (st.asc < 2 * n && s[st.asc] == 'U') ++st.asc;
    while (st.des < 2 * n && s[2 * n - 1 - st.des] == 'R') ++st.des;
    int height = 0;
    for (int i = 0; i < 2 * n; ++i) {
        if (s[i] == 'U') ++height;
        else if (--height == 0) ++st.ret;
        if (i + 1 < 2 * n && s[i] == 'U' && s[i + 1] == 'R') ++st.pea;
    }
    return st;
}

DyckStats dyck_stats(const DyckPath& p) { return dyckstats_impl(p.steps()); }

namespace {

void enumerate_dyck_rec(std::string& prefix, int ups_left, int rights_left, int height,
                        const std::function<void(const DyckPath&)>& visit) {
    if (ups_left == 0 && rights_left == 0) {
        visit(DyckPath(prefix));
        return;
    }
    // lexicographic: R before U
    if (rights_left > 0 && height > 0) {
        prefix.push_back('R');
        enumerate_dyck_rec(prefix, ups_left, rights_left - 1, height - 1, visit);
        prefix.pop_back();
    }
    if (ups_left > 0) {
        prefix.push_back('U');
        enumerate_dyck_rec(prefix, ups_left - 1, rights_left, height + 1, visit);
        prefix.pop_back();
    }
}

}  // namespace

void enumerate_dyck(int n, const std::function<void(const DyckPath&)>& visit) {
    if (n < 0) throw std::invalid_argument("dyck order must be nonnegative");
    std::string prefix;
    enumerate_dyck_rec(prefix, n, n, 0, visit);
}

std::vector<DyckPath> enumerate_dyck(int n) {
    std::vector<DyckPath> out;
    enumerate_dyck(n, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

RelStructure psi(const RelStructure& c1) {
    auto report = is_c1_pair(c1);
    if (!report.ok)
        throw std::invalid_argument("psi: input violates C1 axiom " + report.axiom);
    std::string wanted = canonical_form(c1);
    RelStructure result;
    bool found = false;
    enumerate_dyck(c1.n, [&](const DyckPath& p) {
        if (found) return;
        if (canonical_form(c1_of_dyck(p)) == wanted) {
            result = c2_of_dyck(p);
            found = true;
        }
    });
    if (!found) throw std::logic_error("psi: no Dyck path realizes the given C1-pair");
    return result;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (int i = 0; i < k; ++i) {
        result = result * (n - i);
        result /= (i + 1);
    }
    return result;
}

std::int64_t catalan_number(int n) { return binomial(2 * n, n) / (n + 1); }

std::int64_t motzkin_number(int n) {
    std::vector<std::int64_t> m(std::max(n + 1, 2));
    m[0] = 1;
    m[1] = 1;
    for (int i = 2; i <= n; ++i) {
        m[i] = m[i - 1];
        for (int k = 0; k <= i - 2; ++k) m[i] += m[k] * m[i - 2 - k];
    }
    return m[n];
}

std::int64_t narayana(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("narayana requires 1 <= k <= n");
    return binomial(n - 1, k - 1) * binomial(n, k - 1) / k;
}

std::int64_t ballot_count(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("ballot_count requires 1 <= k <= n");
    return k * binomial(2 * n - k, n) / (2 * n - k);
}

}  // namespace fishlab
