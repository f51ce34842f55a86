#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>

#include "fishlab/fishburn.hpp"

using namespace fishlab;

namespace {

FishburnMatrix mat(const std::vector<std::vector<int>>& rows) {
    return FishburnMatrix::validate(rows);
}

// Independent oracle for cell positions, a direct audit of the definition.
CellPosition naive_position(Cell c, Cell d) {
    if (c.row == d.row && c.col == d.col) return CellPosition::Equal;
    bool c_greater = d.col < c.row;
    bool c_smaller = c.col < d.row;
    if (c_greater) return CellPosition::Greater;
    if (c_smaller) return CellPosition::Smaller;
    if (c.col == d.col && c.row > d.row) return CellPosition::South;
    if (c.col == d.col && c.row < d.row) return CellPosition::North;
    if (c.row == d.row && c.col < d.col) return CellPosition::West;
    if (c.row == d.row && c.col > d.col) return CellPosition::East;
    if (c.row > d.row && c.col < d.col) return CellPosition::StrictSW;
    if (c.row < d.row && c.col > d.col) return CellPosition::StrictNE;
    if (c.row > d.row && c.col > d.col) return CellPosition::StrictSE;
    return CellPosition::StrictNW;
}

}  // namespace

TEST_CASE("validate") {
    CHECK(mat({{1}}).weight() == 1);
    CHECK_THROWS_WITH_AS(mat({{0, 1}, {0, 0}}), "zero row 2", std::invalid_argument);
    auto m = mat({{1, 1}, {0, 1}});
    CHECK(m.weight() == 3);
    CHECK(m.last_col_weight() == 2);
    CHECK_THROWS_AS(mat({{0, 1}, {1, 0}}), std::invalid_argument);  // lower entry
    CHECK_THROWS_WITH_AS(mat({{1, 0}, {0, 0}}), "zero row 2", std::invalid_argument);
    CHECK_THROWS_WITH_AS(mat({{0, 1}, {0, 1}}), "zero column 1", std::invalid_argument);
    CHECK_THROWS_AS(mat({{1, -1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(mat({}), std::invalid_argument);
}

TEST_CASE("cell_position examples") {
    CHECK(cell_position({3, 3}, {1, 2}) == CellPosition::Greater);
    CHECK(cell_position({2, 2}, {1, 3}) == CellPosition::StrictSW);
    CHECK(cell_position({1, 3}, {2, 2}) == CellPosition::StrictNE);
    CHECK(cell_position({1, 2}, {2, 3}) == CellPosition::StrictNW);
    CHECK(cell_position({2, 3}, {1, 2}) == CellPosition::StrictSE);
    CHECK(cell_position({1, 1}, {1, 1}) == CellPosition::Equal);
    CHECK_THROWS_AS(cell_position({2, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("cell_position is total and agrees with the definition audit") {
    int k = 5;
    for (int ci = 1; ci <= k; ++ci)
        for (int cj = ci; cj <= k; ++cj)
            for (int di = 1; di <= k; ++di)
                for (int dj = di; dj <= k; ++dj) {
                    Cell c{ci, cj}, d{di, dj};
                    CHECK(cell_position(c, d) == naive_position(c, d));
                }
}

TEST_CASE("weak region helpers") {
    // weakly SW = South, West or strictly SW
    CHECK(weakly_sw({2, 2}, {1, 2}));   // South
    CHECK(weakly_sw({1, 2}, {1, 3}));   // West
    CHECK(weakly_sw({2, 2}, {1, 3}));   // strictly SW
    CHECK_FALSE(weakly_sw({1, 1}, {1, 1}));
    CHECK(weakly_ne({1, 2}, {2, 2}));
    CHECK(weakly_nw({1, 2}, {2, 3}));
    CHECK(weakly_se({2, 3}, {1, 2}));
}

TEST_CASE("matrix_to_order") {
    auto single = matrix_to_order(mat({{1}}));
    CHECK(single.order.n == 1);
    CHECK(single.order.components[0].pair_count() == 0);

    auto three = matrix_to_order(mat({{1, 1}, {0, 1}}));
    CHECK(three.order.n == 3);
    // one relation: the (1,1) element below the (2,2) element
    CHECK(three.order.components[0].pair_count() == 1);
    CHECK(three.order.components[0].has(0, 2));
    CHECK(three.cellmap[0] == Cell{1, 1});
    CHECK(three.cellmap[1] == Cell{1, 2});
    CHECK(three.cellmap[2] == Cell{2, 2});

    auto pair = matrix_to_order(mat({{2}}));
    CHECK(pair.order.n == 2);
    CHECK(pair.order.components[0].pair_count() == 0);
    CHECK(pair.cellmap[0] == pair.cellmap[1]);
}

TEST_CASE("order_to_matrix") {
    // expectations fixed by brute-force inverse of matrix_to_order over all
    // weight-3 matrices: for each stated poset exactly one matrix matches
    auto expect_unique_preimage = [](const RelStructure& poset, const FishburnMatrix& want) {
        int found = 0;
        enumerate_matrices(poset.n, {}, [&](const FishburnMatrix& m) {
            if (canonical_form(matrix_to_order(m).order) == canonical_form(poset)) {
                ++found;
                CHECK(m == want);
            }
        });
        CHECK(found == 1);
    };

    RelStructure antichain3(3, {Relation(3)});
    CHECK(order_to_matrix(antichain3) == mat({{3}}));
    expect_unique_preimage(antichain3, mat({{3}}));

    Relation ch(3);
    ch.add(0, 1);
    ch.add(1, 2);
    ch.add(0, 2);
    RelStructure chain3(3, {ch});
    CHECK(order_to_matrix(chain3) == mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    expect_unique_preimage(chain3, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

    RelStructure one_pair(3, {Relation::from_pairs(3, {{0, 1}})});
    CHECK(order_to_matrix(one_pair) == mat({{1, 1}, {0, 1}}));
    expect_unique_preimage(one_pair, mat({{1, 1}, {0, 1}}));
}

TEST_CASE("order_to_matrix errors") {
    // 2+2 poset is not an interval order
    Relation r(4);
    r.add(0, 1);
    r.add(2, 3);
    CHECK_THROWS_AS(order_to_matrix(RelStructure(4, {r})), std::invalid_argument);
    // not transitive
    CHECK_THROWS_AS(order_to_matrix(RelStructure(3, {Relation::from_pairs(3, {{0, 1}, {1, 2}})})),
                    std::invalid_argument);
}

TEST_CASE("round trips weight<=6") {
    for (int n = 1; n <= 6; ++n)
        enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
            auto order = matrix_to_order(m).order;
            CHECK(order_to_matrix(order) == m);
        });
}

TEST_CASE("extend") {
    auto p1 = mat({{1}});
    CHECK(extend(p1, ExtensionCode("D")) == mat({{1, 1}, {0, 1}}));
    CHECK(extend(p1, ExtensionCode("I")) == mat({{1, 0}, {0, 1}}));
    CHECK(extend(mat({{1, 1}, {0, 1}}), ExtensionCode("IS")) ==
          mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
    CHECK(extend(mat({{1, 1}, {0, 1}}), ExtensionCode("SI")) ==
          mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));

    CHECK_THROWS_AS(extend(mat({{2}}), ExtensionCode("D")), std::invalid_argument);
    CHECK_THROWS_AS(extend(p1, ExtensionCode("DD")), std::invalid_argument);
    CHECK_THROWS_AS(ExtensionCode("SS"), std::invalid_argument);
    CHECK_THROWS_AS(ExtensionCode("DX"), std::invalid_argument);
}

TEST_CASE("decompose") {
    auto [p1, c1] = decompose(mat({{1, 1}, {0, 1}}));
    CHECK(p1 == mat({{1}}));
    CHECK(c1.word == "D");
    auto [p2, c2] = decompose(mat({{1, 0}, {0, 1}}));
    CHECK(p2 == mat({{1}}));
    CHECK(c2.word == "I");
    auto [p3, c3] = decompose(mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
    CHECK(p3 == mat({{1, 1}, {0, 1}}));
    CHECK(c3.word == "IS");
    CHECK_THROWS_AS(decompose(mat({{1}})), std::invalid_argument);
    CHECK_THROWS_AS(decompose(mat({{2, 1}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("inflate and deflate") {
    CHECK(inflate(mat({{1}}), {5}) == mat({{5}}));
    auto [p, values] = deflate(mat({{2, 1}, {0, 3}}));
    CHECK(p == mat({{1, 1}, {0, 1}}));
    CHECK(values == Inflation{2, 1, 3});
    CHECK_THROWS_AS(inflate(mat({{1}}), {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(inflate(mat({{1}}), {0}), std::invalid_argument);

    for (int n = 1; n <= 5; ++n)
        enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
            auto [prim, vals] = deflate(m);
            CHECK(inflate(prim, vals) == m);
        });
}

TEST_CASE("extreme cells") {
    auto m1 = mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}});
    CHECK(extreme_cells(m1, ExtremeKind::WeakNE) == std::vector<Cell>{{1, 2}, {2, 3}});
    CHECK(extreme_cells(m1, ExtremeKind::WeakSE) == std::vector<Cell>{{3, 3}});
    CHECK(extreme_weight(m1, ExtremeKind::StrongNE) == 4);
    CHECK(extreme_weight(m1, ExtremeKind::StrongSE) == 3);

    auto m2 = mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    CHECK(extreme_cells(m2, ExtremeKind::WeakNE) == std::vector<Cell>{{1, 3}});
    CHECK(extreme_cells(m2, ExtremeKind::WeakSE) == std::vector<Cell>{{2, 2}, {3, 3}});
    CHECK(extreme_weight(m2, ExtremeKind::StrongNE) == 3);
    CHECK(extreme_weight(m2, ExtremeKind::StrongSE) == 4);

    auto m3 = mat({{7}});
    for (auto kind : {ExtremeKind::WeakNE, ExtremeKind::StrongNE, ExtremeKind::WeakSE,
                      ExtremeKind::StrongSE})
        CHECK(extreme_cells(m3, kind) == std::vector<Cell>{{1, 1}});
    CHECK(extreme_weight(m3, ExtremeKind::StrongNE) == 7);
}

TEST_CASE("enumerate_matrices") {
    auto w1 = enumerate_matrices(1);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0] == mat({{1}}));

    CHECK(enumerate_matrices(3).size() == 5);

    auto prim3 = enumerate_matrices(3, {.primitive_only = true});
    REQUIRE(prim3.size() == 2);
    CHECK(std::count(prim3.begin(), prim3.end(), mat({{1, 1}, {0, 1}})) == 1);
    CHECK(std::count(prim3.begin(), prim3.end(), mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    auto first = enumerate_matrices(6);
    auto second = enumerate_matrices(6);
    CHECK(first == second);
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& m : first) seen.insert(m.rows());
    CHECK(seen.size() == first.size());
}

TEST_CASE("stream order: codes lexicographic, inflations colexicographic") {
    auto stream = enumerate_matrices(3);
    REQUIRE(stream.size() == 5);
    CHECK(stream[0] == mat({{3}}));
    CHECK(stream[1] == mat({{1, 1}, {0, 1}}));            // code D
    CHECK(stream[2] == mat({{2, 0}, {0, 1}}));            // code I, values (2,1)
    CHECK(stream[3] == mat({{1, 0}, {0, 2}}));            // code I, values (1,2)
    CHECK(stream[4] == mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("primitive enumeration by dimension agrees with the weight route") {
    for (int k = 1; k <= 4; ++k) {
        std::int64_t by_dim = 0;
        enumerate_primitive_dim(k, [&](const FishburnMatrix&) { ++by_dim; });
        std::int64_t by_weight = 0;
        for (int w = k; w <= k * (k + 1) / 2; ++w)
            enumerate_matrices(w, {.primitive_only = true}, [&](const FishburnMatrix& m) {
                if (m.dim() == k) ++by_weight;
            });
        CHECK(by_dim == by_weight);
    }
}

TEST_CASE("antidiagonal transpose") {
    CHECK(antidiagonal_transpose(mat({{1, 1}, {0, 1}})) == mat({{1, 1}, {0, 1}}));
    // entrywise: (i,j) -> (k+1-j, k+1-i); this matrix is a fixed point
    CHECK(antidiagonal_transpose(mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}})) ==
          mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
    CHECK(antidiagonal_transpose(mat({{2, 1}, {0, 1}})) == mat({{1, 1}, {0, 2}}));
    for (int n = 1; n <= 5; ++n)
        enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
            CHECK(antidiagonal_transpose(antidiagonal_transpose(m)) == m);
        });
}

TEST_CASE("phi") {
    CHECK(phi(mat({{1, 1}, {0, 1}})) == mat({{1, 1}, {0, 1}}));
    // codes D, IS reverse to D, SI
    CHECK(phi(mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}})) == mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(phi(mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})) == mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}));
    // column values reverse per column under reversal of the code sequence
    for (int n = 1; n <= 5; ++n)
        enumerate_matrices(n, {}, [&](const FishburnMatrix& m) {
            auto image = phi(m);
            CHECK(phi(image) == m);
            CHECK(image.weight() == m.weight());
            for (int j = 1; j <= m.dim(); ++j) CHECK(image.col_weight(j) == m.col_weight(j));
        });
}

TEST_CASE("text and json formats") {
    auto m = mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}});
    CHECK(to_text(m) == "1 1 0\n0 0 1\n0 0 1\n");
    CHECK(matrix_from_text(to_text(m)) == m);
    CHECK(to_json(m) == R"({"k":3,"rows":[[1,1,0],[0,0,1],[0,0,1]]})");
    CHECK(matrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_text("1 1\n0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(R"({"k":2,"rows":[[1]]})"), std::invalid_argument);
}
