#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fishlab/fishburn.hpp"
#include "fishlab/series.hpp"

using namespace fishlab;

namespace {

TruncatedSeries x(int n) { return TruncatedSeries::monomial(n, 1, 0, 0); }
TruncatedSeries y(int n) { return TruncatedSeries::monomial(n, 0, 1, 0); }
TruncatedSeries z(int n) { return TruncatedSeries::monomial(n, 0, 0, 1); }
TruncatedSeries one(int n) { return TruncatedSeries::constant(n, 1); }

}  // namespace

TEST_CASE("ring arithmetic") {
    int n = 2;
    auto prod = (one(n) + x(n)) * (one(n) - x(n));
    CHECK(prod == one(n) - x(n) * x(n));

    auto inv = (one(3) - x(3)).invert_unit();
    auto geom = one(3) + x(3) + x(3) * x(3) + x(3) * x(3) * x(3);
    CHECK(inv == geom);

    CHECK_THROWS_AS(x(3).invert_unit(), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::constant(3, 2).invert_unit(), std::invalid_argument);
    CHECK((-(one(2) + x(2))).invert_unit() == -(one(2) - x(2) + x(2) * x(2)));
    CHECK_THROWS_AS(x(2) + x(3), std::invalid_argument);
}

TEST_CASE("truncation by total degree") {
    int n = 3;
    auto s = x(n) * x(n) * y(n) * y(n);  // degree 4 vanishes
    CHECK(s.is_zero());
    CHECK(x(n).min_total_degree() == 1);
    CHECK(TruncatedSeries(n).min_total_degree() == 4);
    CHECK((y(n) * z(n)).min_x_degree() == 0);
}

TEST_CASE("substitute_y") {
    int n = 3;
    auto g = x(n) + y(n) + x(n) * y(n);
    auto sq = y(n) * y(n);
    auto got = sq.substitute_y(g);
    // (x+y+xy)^2 truncated at 3: x^2 + 2xy + y^2 + 2x^2y + 2xy^2
    TruncatedSeries want(n);
    want.set_coeff(2, 0, 0, 1);
    want.set_coeff(1, 1, 0, 2);
    want.set_coeff(0, 2, 0, 1);
    want.set_coeff(2, 1, 0, 2);
    want.set_coeff(1, 2, 0, 2);
    CHECK(got == want);

    auto anything = one(n) + x(n) * y(n) + z(n);
    CHECK(anything.substitute_y(y(n)) == anything);
    CHECK((y(n) + x(n)).substitute_y(TruncatedSeries(n)) == x(n));
    CHECK_THROWS_AS(anything.substitute_y(one(n)), std::invalid_argument);
}

TEST_CASE("compose_xy") {
    int n = 4;
    // substitute x -> x/(1-x) into x: expect x + x^2 + x^3 + x^4
    auto fx = x(n) * (one(n) - x(n)).invert_unit();
    auto got = x(n).compose_xy(fx, y(n));
    CHECK(got == fx);
    // substitute into xy both rational replacements
    auto fy = x(n) * y(n) * (one(n) - x(n) * y(n)).invert_unit();
    auto xy = x(n) * y(n);
    CHECK(xy.compose_xy(fx, fy) == fx * fy);
}

TEST_CASE("pochhammer") {
    int n = 4;
    CHECK(pochhammer(x(n), one(n) - x(n), 0) == one(n));
    auto sq = pochhammer(x(n), one(n), 2);
    CHECK(sq == (one(n) - x(n)) * (one(n) - x(n)));
    auto a = (one(n) - x(n) * y(n)) * (one(n) - x(n) * z(n));
    auto p1 = pochhammer(a, one(n) - x(n), 1);
    // 1 - (1-xy)(1-xz) = xy + xz - x^2 y z
    TruncatedSeries want(n);
    want.set_coeff(1, 1, 0, 1);
    want.set_coeff(1, 0, 1, 1);
    want.set_coeff(2, 1, 1, -1);
    CHECK(p1 == want);
}

TEST_CASE("F formula low coefficients") {
    auto f = F_formula(7);
    CHECK(f.coeff(1, 1, 1) == 1);             // the matrix [1]
    CHECK(f.coeff(2, 2, 1) == 1);             // [[2]]
    CHECK(f.coeff(2, 1, 2) == 1);             // 2x2 identity
    CHECK(f.coeff(2, 2, 2) == 0);
    // weight 3: [[3]], [[1,1],[0,1]], diag(2,1), diag(1,2), identity
    CHECK(f.coeff(3, 3, 1) == 1);
    CHECK(f.coeff(3, 2, 1) == 1);
    CHECK(f.coeff(3, 1, 2) == 1);
    CHECK(f.coeff(3, 2, 2) == 1);
    CHECK(f.coeff(3, 1, 3) == 1);
    CHECK(f.coeff(3, 1, 1) == 0);
    CHECK(f.min_x_degree() == 1);
}

TEST_CASE("F coefficient sums are the Fishburn numbers") {
    // full sums over y,z exponents need degree 3n; the univariate F(x,1,1)
    // closed form gives them directly
    const std::int64_t expected[] = {1, 2, 5, 15, 53, 217, 1014, 5335};
    auto f = F_formula(12);
    for (int n = 1; n <= 4; ++n) {
        Int total = 0;
        for (int lc = 0; lc <= 12; ++lc)
            for (int e = 0; e <= 12; ++e) total += f.coeff(n, lc, e);
        CHECK(total == expected[n - 1]);
    }
    auto uni = F_univariate(8);
    for (int n = 1; n <= 8; ++n) CHECK(uni.coeff(n, 0, 0) == expected[n - 1]);
}

TEST_CASE("brute series") {
    auto b1 = brute_series(1);
    CHECK(b1.is_zero());  // xyz has total degree 3
    auto b3 = brute_series(3);
    CHECK(b3.coeff(1, 1, 1) == 1);
    CHECK(b3 == F_formula(3));
    CHECK(brute_series(7) == F_formula(7));
    CHECK_THROWS_AS(brute_series(9, 8), std::invalid_argument);
}

TEST_CASE("F symmetry in y and z") {
    auto f = F_formula(9);
    CHECK(f == f.swap_yz());
}

TEST_CASE("G formulas") {
    for (int which : {1, 2, 3}) CHECK(G_formula(6, which) == G_from_F(6));
    CHECK_THROWS_AS(G_formula(6, 4), std::invalid_argument);

    // [x^n y^1] counts interval orders with one maximal element
    auto g = G_formula(6, 2);
    for (int n = 1; n <= 5; ++n) {
        std::int64_t count = 0;
        enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
            if (m.last_col_weight() == 1) ++count;
        });
        CHECK(g.coeff(n, 1, 0) == count);
    }

    // G(x,1) gives the Fishburn numbers
    const std::int64_t expected[] = {1, 2, 5, 15, 53};
    auto g10 = G_formula(10, 2);
    for (int n = 1; n <= 5; ++n) {
        Int total = 0;
        for (int lc = 0; lc <= 10; ++lc) total += g10.coeff(n, lc, 0);
        CHECK(total == expected[n - 1]);
    }
}

TEST_CASE("P series") {
    auto p1 = P_brute(1);
    CHECK(p1 == z(1));  // the matrix [1]
    auto report = P_checks(5);
    CHECK(report.functional_equation);
    CHECK(report.closed_form);
    CHECK(report.inflation_identity);
    CHECK(report.all());
}

TEST_CASE("P recurrence") {
    for (int k = 1; k <= 3; ++k) CHECK(P_recurrence_holds(k, 7));
}

TEST_CASE("series text and json") {
    int n = 3;
    auto s = one(n) + x(n) * y(n) * z(n) - x(n);
    CHECK(s.to_text() == "1 x^0 y^0 z^0\n-1 x^1 y^0 z^0\n1 x^1 y^1 z^1\n");
    CHECK(s.to_json() == R"({"0 0 0":"1","1 0 0":"-1","1 1 1":"1"})");
}
