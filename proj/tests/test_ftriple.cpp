#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fishlab/catalan.hpp"
#include "fishlab/ftriple.hpp"

using namespace fishlab;

namespace {

FishburnMatrix mat(const std::vector<std::vector<int>>& rows) {
    return FishburnMatrix::validate(rows);
}

}  // namespace

TEST_CASE("is_f_triple on Catalan pairs") {
    // (empty, S, R) is an F-triple exactly when (S,R) is a C1-pair, and
    // (T, empty, R) when (T,R) is a C2-pair
    for (int n = 1; n <= 5; ++n)
        enumerate_dyck(n, [&](const DyckPath& p) {
            CHECK(is_c1_pair(c1_of_dyck(p)).ok);
            CHECK(is_c2_pair(c2_of_dyck(p)).ok);
        });
}

TEST_CASE("is_f_triple violation reports") {
    Relation T(3), S(3), R(3);
    T.add(0, 1);
    T.add(0, 2);
    R.add(1, 2);
    auto report = is_f_triple(RelStructure(3, {T, S, R}));
    CHECK_FALSE(report.ok);
    CHECK(report.axiom == "C2c");
    CHECK(report.witness == std::array<int, 3>{0, 1, 2});

    // S-comparable and R-comparable pair breaks Fb
    Relation T2(2), S2(2), R2(2);
    S2.add(0, 1);
    R2.add(0, 1);
    auto fb = is_f_triple(RelStructure(2, {T2, S2, R2}));
    CHECK_FALSE(fb.ok);
    CHECK(fb.axiom == "Fb");

    // S not transitive breaks Fa
    Relation T3(3), S3(3), R3(3);
    S3.add(0, 1);
    S3.add(1, 2);
    auto fa = is_f_triple(RelStructure(3, {T3, S3, R3}));
    CHECK_FALSE(fa.ok);
    CHECK(fa.axiom == "Fa:S");

    CHECK_THROWS_AS(is_f_triple(RelStructure(2, {Relation(2)})), std::invalid_argument);
}

TEST_CASE("is_f_triple C1c violations") {
    // xSy, yRz, x and z incomparable in R: forbidden by C1c
    Relation T(3), S(3), R(3);
    S.add(0, 1);
    R.add(1, 2);
    T.add(0, 2);
    auto report = is_f_triple(RelStructure(3, {T, S, R}));
    CHECK_FALSE(report.ok);
    CHECK(report.axiom == "C1c");
}

TEST_CASE("f1 and f2 of a single cell") {
    auto f1 = f1_triple(mat({{4}}));
    CHECK(f1.T().pair_count() == 0);
    CHECK(f1.S().pair_count() == 6);  // chain on 4 elements
    CHECK(f1.R().pair_count() == 0);
    CHECK(is_partial_order(f1.S()));
    CHECK(is_f_triple(f1.base).ok);

    auto f2 = f2_triple(mat({{4}}));
    CHECK(f2.T().pair_count() == 6);
    CHECK(f2.S().pair_count() == 0);
    CHECK(is_f_triple(f2.base).ok);
}

TEST_CASE("f1 strict-NW pairs") {
    // cells (1,2) and (2,3) are the unique strictly NW pair
    auto t = f1_triple(mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
    REQUIRE(t.base.n == 4);
    // elements in cell order: 0=(1,1), 1=(1,2), 2=(2,3), 3=(3,3)
    CHECK(t.T().pairs() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("NW-free matrices give C1-pairs through f1") {
    for (int n = 1; n <= 5; ++n)
        enumerate_matrices(n, {.avoid = AvoidFilter::StrictNW}, [&](const FishburnMatrix& m) {
            auto t = f1_triple(m);
            CHECK(t.T().pair_count() == 0);
            CHECK(is_c1_pair(RelStructure(t.base.n, {t.S(), t.R()})).ok);
        });
}

TEST_CASE("trivial involution") {
    // (empty, S, empty) maps to itself
    auto chain_triple = f1_triple(mat({{3}}));
    auto image = trivial_involution(chain_triple);
    CHECK(image.base == chain_triple.base);

    for (int n = 1; n <= 4; ++n)
        enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
            auto t = f1_triple(m);
            auto img = trivial_involution(t);
            CHECK(is_f_triple(img.base).ok);
            auto back = trivial_involution(img);
            CHECK(back.base == t.base);
            CHECK(back.matrix == t.matrix);
            // image is the F1-triple of the transposed matrix, up to iso
            CHECK(canonical_form(img.base) ==
                  canonical_form(f1_triple(antidiagonal_transpose(m)).base));
            auto st = triple_stats(t);
            auto sti = triple_stats(img);
            CHECK(st.minT == sti.maxT);
            CHECK(st.maxT == sti.minT);
            CHECK(st.maxS == sti.maxS);
        });
}

TEST_CASE("triple statistics match extreme cells") {
    auto m1 = mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}});
    CHECK(triple_stats(f1_triple(m1)).maxS == 2);
    CHECK(triple_stats(f2_triple(m1)).maxT == 1);
    auto m2 = mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    CHECK(triple_stats(f2_triple(m2)).maxS == 3);
}

TEST_CASE("within-cell chain order is immaterial up to isomorphism") {
    for (int n = 1; n <= 4; ++n)
        enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
            for (bool type1 : {true, false}) {
                FTriple t = type1 ? f1_triple(m) : f2_triple(m);
                // reverse every within-cell chain
                Relation chain_rel = type1 ? t.S() : t.T();
                Relation reversed(t.base.n);
                for (auto [a, b] : chain_rel.pairs()) {
                    if (t.cellmap[a] == t.cellmap[b]) reversed.add(b, a);
                    else reversed.add(a, b);
                }
                RelStructure variant =
                    type1 ? RelStructure(t.base.n, {t.T(), reversed, t.R()})
                          : RelStructure(t.base.n, {reversed, t.S(), t.R()});
                CHECK(is_f_triple(variant).ok);
                CHECK(canonical_form(variant) == canonical_form(t.base));
            }
        });
}

TEST_CASE("phi statistic swaps on small cases") {
    for (int n = 1; n <= 5; ++n)
        enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
            auto image = phi(m);
            auto st1 = triple_stats(f1_triple(m));
            auto st2 = triple_stats(f2_triple(m));
            auto ist1 = triple_stats(f1_triple(image));
            auto ist2 = triple_stats(f2_triple(image));
            CHECK(st1.maxS == ist2.maxT);
            CHECK(st2.maxS == ist1.maxT);
            CHECK(st1.maxR == ist1.maxR);
        });
}

TEST_CASE("triple serialization") {
    auto t = f1_triple(mat({{1, 1}, {0, 1}}));
    auto text = to_text(t);
    auto parsed = rel_structure_from_text(text);
    CHECK(parsed == t.base);
}
