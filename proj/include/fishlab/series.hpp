#pragma once

// Exact formal power series in x, y, z with integer coefficients, truncated by
// total degree, and the generating-function identities for Fishburn matrices:
// F(x,y,z) summing x^weight y^lastcol z^ne, the primitive-matrix series P, and
// the three closed forms of G(x,y) = F(x,y,1).
//
// Truncation by total degree is sound for every substitution used here because
// all replacement series have zero constant term, so total degree never drops.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <vector>

namespace fishlab {

using Int = boost::multiprecision::cpp_int;

class TruncatedSeries {
public:
    explicit TruncatedSeries(int max_total_degree);

    static TruncatedSeries constant(int max_total_degree, Int value);
    static TruncatedSeries monomial(int max_total_degree, int a, int b, int c, Int coef = 1);

    int max_degree() const { return degree_; }

    const Int& coeff(int a, int b, int c) const;
    void set_coeff(int a, int b, int c, Int value);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    bool operator==(const TruncatedSeries& o) const;

    bool is_zero() const;
    // Smallest total degree of a nonzero term; max_degree()+1 when zero.
    int min_total_degree() const;
    // Smallest x-exponent over nonzero terms; max_degree()+1 when zero.
    int min_x_degree() const;

    // Multiplicative inverse; requires constant term +1 or -1.
    TruncatedSeries invert_unit() const;

    // y -> g, g with zero constant term.
    TruncatedSeries substitute_y(const TruncatedSeries& g) const;
    // Simultaneous x -> gx, y -> gy, both with zero constant term.
    TruncatedSeries compose_xy(const TruncatedSeries& gx, const TruncatedSeries& gy) const;

    TruncatedSeries swap_yz() const;

    // Sets z to 1 by summing coefficients over the z-exponent, re-truncated to
    // out_degree. The caller is responsible for having computed enough terms.
    TruncatedSeries collapse_z(int out_degree) const;

    // Nonzero monomials sorted by exponent triple, "coef x^a y^b z^c" each.
    std::string to_text() const;
    std::string to_json() const;

    void for_each_term(const std::function<void(int, int, int, const Int&)>& fn) const;

private:
    int degree_;
    int stride_;
    std::vector<Int> coeffs_;  // dense (degree+1)^3 cube, row-major (a,b,c)

    std::size_t index(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * stride_ + b) * stride_ + c;
    }
};

// prod_{i=0}^{n-1} (1 - a q^i)
TruncatedSeries pochhammer(const TruncatedSeries& a, const TruncatedSeries& q, int n);

// The closed form xyz * sum_n ((1-xy)(1-xz); 1-x)_n, truncated at N. Each
// summand is checked to have x-valuation at least n before it is added.
TruncatedSeries F_formula(int N);

// Direct sum over all Fishburn matrices whose monomial fits in degree N.
TruncatedSeries brute_series(int N, int enumeration_bound = 8);

// F(x,1,1): the Fishburn-number generating function x sum_n ((1-x)^2; 1-x)_n,
// cheap at any degree since it is univariate.
TruncatedSeries F_univariate(int N);

// The three published closed forms of G(x,y); `which` selects 1, 2 or 3.
TruncatedSeries G_formula(int N, int which);

// F(x,y,1) truncated to total degree N in (x,y), computed from F_formula at a
// degree high enough to cover every contributing term (ne <= weight bounds the
// z-exponent by the x-exponent).
TruncatedSeries G_from_F(int N);

// Sum over primitive matrices of weight <= N of x^pc y^(lc-1) z^ne.
TruncatedSeries P_brute(int N);

// Same restricted to primitive matrices of exact dimension k (a polynomial),
// truncated at N.
TruncatedSeries P_dim(int k, int N);

// The closed form of P from the functional equation.
TruncatedSeries P_closed_form(int N);

struct PCheckReport {
    bool functional_equation = false;  // P = z/(1+y) + (xz+xy+y)/(1+y) P(x,x+y+xy,z)
    bool closed_form = false;          // brute P equals the closed form
    bool inflation_identity = false;   // F = xy/(1-xy) P(x/(1-x), xy/(1-xy), z)
    bool all() const { return functional_equation && closed_form && inflation_identity; }
};

PCheckReport P_checks(int N);

// P_{k+1}(x,y,z) = (xz+xy+y) P_k(x,x+y+xy,z) - y P_k(x,y,z), checked modulo
// total degree N with brute-force P_k.
bool P_recurrence_holds(int k, int N);

}  // namespace fishlab
