#include "fishlab/series.hpp"

#include <sstream>
#include <stdexcept>

#include "fishlab/fishburn.hpp"
#include "json.hpp"

namespace fishlab {

TruncatedSeries::TruncatedSeries(int max_total_degree)
    : degree_(max_total_degree), stride_(max_total_degree + 1) {
    if (max_total_degree < 0) throw std::invalid_argument("negative truncation degree");
    coeffs_.resize(static_cast<std::size_t>(stride_) * stride_ * stride_);
}

TruncatedSeries TruncatedSeries::constant(int max_total_degree, Int value) {
    TruncatedSeries s(max_total_degree);
    s.coeffs_[0] = std::move(value);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int max_total_degree, int a, int b, int c, Int coef) {
    TruncatedSeries s(max_total_degree);
    s.set_coeff(a, b, c, std::move(coef));
    return s;
}

const Int& TruncatedSeries::coeff(int a, int b, int c) const {
    static const Int zero = 0;
    if (a < 0 || b < 0 || c < 0 || a + b + c > degree_) return zero;
    return coeffs_[index(a, b, c)];
}

void TruncatedSeries::set_coeff(int a, int b, int c, Int value) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("negative exponent");
    if (a + b + c > degree_) return;
    coeffs_[index(a, b, c)] = std::move(value);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("truncation degree mismatch");
    TruncatedSeries out(degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("truncation degree mismatch");
    TruncatedSeries out(degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("truncation degree mismatch");
    TruncatedSeries out(degree_);
    for (int a = 0; a <= degree_; ++a)
        for (int b = 0; a + b <= degree_; ++b)
            for (int c = 0; a + b + c <= degree_; ++c) {
                const Int& lhs = coeffs_[index(a, b, c)];
                if (lhs == 0) continue;
                int room = degree_ - a - b - c;
                for (int d = 0; d <= room; ++d)
                    for (int e = 0; d + e <= room; ++e)
                        for (int f = 0; d + e + f <= room; ++f) {
                            const Int& rhs = o.coeffs_[o.index(d, e, f)];
                            if (rhs == 0) continue;
                            out.coeffs_[out.index(a + d, b + e, c + f)] += lhs * rhs;
                        }
            }
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

int TruncatedSeries::min_total_degree() const {
    int best = degree_ + 1;
    for (int a = 0; a <= degree_; ++a)
        for (int b = 0; a + b <= degree_; ++b)
            for (int c = 0; a + b + c <= degree_; ++c)
                if (coeffs_[index(a, b, c)] != 0 && a + b + c < best) best = a + b + c;
    return best;
}

int TruncatedSeries::min_x_degree() const {
    int best = degree_ + 1;
    for (int a = 0; a < best; ++a)
        for (int b = 0; a + b <= degree_; ++b)
            for (int c = 0; a + b + c <= degree_; ++c)
                if (coeffs_[index(a, b, c)] != 0) {
                    best = a;
                    break;
                }
    return best;
}

TruncatedSeries TruncatedSeries::invert_unit() const {
    const Int& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("invert_unit requires constant term +1 or -1");
    // s = c0 (1 + u) with u of positive valuation; 1/s = c0 sum (-u)^i
    TruncatedSeries u(degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) u.coeffs_[i] = c0 * coeffs_[i];
    u.coeffs_[0] = 0;
    TruncatedSeries result = constant(degree_, 1);
    TruncatedSeries power = constant(degree_, 1);
    for (int i = 1; i <= degree_; ++i) {
        power = power * u;
        if (power.is_zero()) break;
        if (i % 2 == 0) result = result + power;
        else result = result - power;
    }
    if (c0 == -1) return -result;
    return result;
}

TruncatedSeries TruncatedSeries::substitute_y(const TruncatedSeries& g) const {
    if (g.degree_ != degree_) throw std::invalid_argument("truncation degree mismatch");
    if (g.coeffs_[0] != 0)
        throw std::invalid_argument("substitution series must have zero constant term");
    // Horner in y: sum_b slice_b(x,z) g^b
    TruncatedSeries result(degree_);
    for (int b = degree_; b >= 0; --b) {
        TruncatedSeries slice(degree_);
        for (int a = 0; a + b <= degree_; ++a)
            for (int c = 0; a + b + c <= degree_; ++c)
                slice.coeffs_[slice.index(a, 0, c)] = coeffs_[index(a, b, c)];
        result = result * g + slice;
    }
    return result;
}

TruncatedSeries TruncatedSeries::compose_xy(const TruncatedSeries& gx,
                                            const TruncatedSeries& gy) const {
    if (gx.degree_ != degree_ || gy.degree_ != degree_)
        throw std::invalid_argument("truncation degree mismatch");
    if (gx.coeffs_[0] != 0 || gy.coeffs_[0] != 0)
        throw std::invalid_argument("substitution series must have zero constant term");
    // Nested Horner: outer in x, inner in y.
    TruncatedSeries result(degree_);
    for (int a = degree_; a >= 0; --a) {
        TruncatedSeries inner(degree_);
        for (int b = degree_ - a; b >= 0; --b) {
            TruncatedSeries slice(degree_);
            for (int c = 0; a + b + c <= degree_; ++c)
                slice.coeffs_[slice.index(0, 0, c)] = coeffs_[index(a, b, c)];
            inner = inner * gy + slice;
        }
        result = result * gx + inner;
    }
    return result;
}

TruncatedSeries TruncatedSeries::swap_yz() const {
    TruncatedSeries out(degree_);
    for (int a = 0; a <= degree_; ++a)
        for (int b = 0; a + b <= degree_; ++b)
            for (int c = 0; a + b + c <= degree_; ++c)
                out.coeffs_[out.index(a, c, b)] = coeffs_[index(a, b, c)];
    return out;
}

TruncatedSeries TruncatedSeries::collapse_z(int out_degree) const {
    TruncatedSeries out(out_degree);
    for (int a = 0; a <= degree_; ++a)
        for (int b = 0; a + b <= degree_; ++b) {
            if (a + b > out_degree) continue;
            Int total = 0;
            for (int c = 0; a + b + c <= degree_; ++c) total += coeffs_[index(a, b, c)];
            out.set_coeff(a, b, 0, std::move(total));
        }
    return out;
}

std::string TruncatedSeries::to_text() const {
    std::ostringstream out;
    for_each_term([&](int a, int b, int c, const Int& v) {
        out << v.str() << " x^" << a << " y^" << b << " z^" << c << '\n';
    });
    return out.str();
}

std::string TruncatedSeries::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for_each_term([&](int a, int b, int c, const Int& v) {
        j[std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c)] = v.str();
    });
    return j.dump();
}

void TruncatedSeries::for_each_term(
    const std::function<void(int, int, int, const Int&)>& fn) const {
    for (int a = 0; a <= degree_; ++a)
        for (int b = 0; a + b <= degree_; ++b)
            for (int c = 0; a + b + c <= degree_; ++c)
                if (coeffs_[index(a, b, c)] != 0) fn(a, b, c, coeffs_[index(a, b, c)]);
}

// -- formulas -----------------------------------------------------------------

TruncatedSeries pochhammer(const TruncatedSeries& a, const TruncatedSeries& q, int n) {
    int N = a.max_degree();
    TruncatedSeries prod = TruncatedSeries::constant(N, 1);
    TruncatedSeries aq = a;
    for (int i = 0; i < n; ++i) {
        prod = prod * (TruncatedSeries::constant(N, 1) - aq);
        aq = aq * q;
    }
    return prod;
}

namespace {

TruncatedSeries one(int N) { return TruncatedSeries::constant(N, 1); }
TruncatedSeries var_x(int N) { return TruncatedSeries::monomial(N, 1, 0, 0); }
TruncatedSeries var_y(int N) { return TruncatedSeries::monomial(N, 0, 1, 0); }
TruncatedSeries var_z(int N) { return TruncatedSeries::monomial(N, 0, 0, 1); }

// sum_{n>=0} prod_{i=0}^{n-1} (1 - a q^i), with a per-term check that summand
// n has total valuation at least n, which guarantees the truncated sum is
// finite and complete.
TruncatedSeries pochhammer_sum(const TruncatedSeries& a, const TruncatedSeries& q,
                               int first_term) {
    int N = a.max_degree();
    TruncatedSeries prod = one(N);
    TruncatedSeries aq = a;
    TruncatedSeries sum(N);
    for (int n = 0;; ++n) {
        if (n >= first_term) {
            if (prod.min_total_degree() < n)
                throw std::logic_error("pochhammer sum: term valuation below index");
            sum = sum + prod;
        }
        if (n >= N + 1) break;
        prod = prod * (one(N) - aq);
        if (prod.is_zero()) break;
        aq = aq * q;
    }
    return sum;
}

}  // namespace

TruncatedSeries F_formula(int N) {
    if (N < 1) throw std::invalid_argument("F_formula requires degree >= 1");
    auto x = var_x(N), y = var_y(N), z = var_z(N);
    auto a = (one(N) - x * y) * (one(N) - x * z);
    auto q = one(N) - x;

    TruncatedSeries prod = one(N);
    TruncatedSeries aq = a;
    TruncatedSeries sum(N);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            prod = prod * (one(N) - aq);
            aq = aq * q;
            if (prod.is_zero()) break;
            if (prod.min_x_degree() < n)
                throw std::logic_error("F_formula: term n lacks x-valuation n");
        }
        sum = sum + prod;
    }
    return TruncatedSeries::monomial(N, 1, 1, 1) * sum;
}

TruncatedSeries brute_series(int N, int enumeration_bound) {
    if (N > enumeration_bound)
        throw std::invalid_argument("brute_series degree exceeds enumeration bound");
    TruncatedSeries sum(N);
    // a weight-w matrix has lc >= 1 and ne >= 1, so only w <= N-2 contributes
    for (int w = 1; w <= N - 2; ++w)
        enumerate_matrices(w, {}, [&](const FishburnMatrix& m) {
            int lc = m.last_col_weight(), e = ne(m);
            if (w + lc + e <= N)
                sum.set_coeff(w, lc, e, sum.coeff(w, lc, e) + 1);
        });
    return sum;
}

TruncatedSeries F_univariate(int N) {
    // F(x,1,1) = x sum_n prod_{i=0}^{n-1} (1 - (1-x)^{i+2})
    auto q = one(N) - var_x(N);
    TruncatedSeries qpow = q * q;
    TruncatedSeries prod = one(N);
    TruncatedSeries sum(N);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            prod = prod * (one(N) - qpow);
            qpow = qpow * q;
            if (prod.is_zero()) break;
            if (prod.min_x_degree() < n)
                throw std::logic_error("F_univariate: term n lacks x-valuation n");
        }
        sum = sum + prod;
    }
    return var_x(N) * sum;
}

TruncatedSeries G_formula(int N, int which) {
    auto x = var_x(N), y = var_y(N);
    switch (which) {
        case 1: {
            // sum_{n>=0} xy/(1-xy)^{n+1} (1-x; 1-x)_n
            auto inv = (one(N) - x * y).invert_unit();
            auto q = one(N) - x;
            TruncatedSeries prefactor = x * y * inv;
            TruncatedSeries qpow = q;   // (1-x)^{n+1}
            TruncatedSeries zn = one(N);  // (1-x; 1-x)_n
            TruncatedSeries sum(N);
            for (int n = 0; n <= N; ++n) {
                auto term = prefactor * zn;
                if (term.min_total_degree() < n)
                    throw std::logic_error("G formula 1: term valuation below index");
                sum = sum + term;
                zn = zn * (one(N) - qpow);
                qpow = qpow * q;
                prefactor = prefactor * inv;
            }
            return sum;
        }
        case 2:
            return pochhammer_sum(one(N) - x * y, one(N) - x, 1);
        case 3: {
            auto p = (one(N) - x * y).invert_unit();
            auto q = (one(N) - x).invert_unit();
            TruncatedSeries sum(N);
            TruncatedSeries qn = one(N);
            for (int n = 0; n <= N + 1; ++n) {
                auto term = p * qn * pochhammer(p, q, n) * pochhammer(q, q, n);
                if (n > 0 && term.min_total_degree() < n)
                    throw std::logic_error("G formula 3: term valuation below index");
                sum = sum + term;
                if (n > 0 && term.is_zero()) break;
                qn = qn * q;
            }
            return sum - one(N);
        }
        default:
            throw std::invalid_argument("G_formula selector must be 1, 2 or 3");
    }
}

TruncatedSeries G_from_F(int N) {
    // Every F-term satisfies ne <= w, so terms with w + lc <= N have total
    // degree at most N + (N - 1).
    return F_formula(2 * N - 1).collapse_z(N);
}

TruncatedSeries P_brute(int N) {
    TruncatedSeries sum(N);
    for (int w = 1; w <= N; ++w)
        enumerate_matrices(w, {.primitive_only = true}, [&](const FishburnMatrix& m) {
            int pc = m.preceding_cols_weight(), lc = m.last_col_weight(), e = ne(m);
            if (pc + (lc - 1) + e <= N)
                sum.set_coeff(pc, lc - 1, e, sum.coeff(pc, lc - 1, e) + 1);
        });
    return sum;
}

TruncatedSeries P_dim(int k, int N) {
    TruncatedSeries sum(N);
    enumerate_primitive_dim(k, [&](const FishburnMatrix& m) {
        int pc = m.preceding_cols_weight(), lc = m.last_col_weight(), e = ne(m);
        if (pc + (lc - 1) + e <= N)
            sum.set_coeff(pc, lc - 1, e, sum.coeff(pc, lc - 1, e) + 1);
    });
    return sum;
}

TruncatedSeries P_closed_form(int N) {
    auto x = var_x(N), y = var_y(N), z = var_z(N);
    auto inv_1px = (one(N) + x).invert_unit();
    auto inv_1py = (one(N) + y).invert_unit();
    auto a = (one(N) + x - x * z) * inv_1px * inv_1py;
    auto q = inv_1px;
    return z * inv_1py * pochhammer_sum(a, q, 0);
}

PCheckReport P_checks(int N) {
    PCheckReport report;
    auto x = var_x(N), y = var_y(N), z = var_z(N);
    auto P = P_brute(N);
    auto inv_1py = (one(N) + y).invert_unit();
    auto shifted = P.substitute_y(x + y + x * y);

    report.functional_equation =
        P == z * inv_1py + (x * z + x * y + y) * inv_1py * shifted;
    report.closed_form = P == P_closed_form(N);

    auto inv_1mxy = (one(N) - x * y).invert_unit();
    auto fx = x * (one(N) - x).invert_unit();
    auto fy = x * y * inv_1mxy;
    report.inflation_identity = F_formula(N) == x * y * inv_1mxy * P.compose_xy(fx, fy);
    return report;
}

bool P_recurrence_holds(int k, int N) {
    auto x = var_x(N), y = var_y(N), z = var_z(N);
    auto Pk = P_dim(k, N);
    auto Pk1 = P_dim(k + 1, N);
    auto rhs = (x * z + x * y + y) * Pk.substitute_y(x + y + x * y) - y * Pk;
    return Pk1 == rhs;
}

}  // namespace fishlab
