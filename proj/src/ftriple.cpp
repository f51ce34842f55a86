#include "fishlab/ftriple.hpp"

#include <stdexcept>

namespace fishlab {

namespace {

AxiomReport violation(std::string axiom, int x, int y = -1, int z = -1) {
    return {false, std::move(axiom), {x, y, z}};
}

// First transitivity-violating triple (x,y,z) with xRy, yRz, not xRz.
std::array<int, 3> transitivity_witness(const Relation& r) {
    for (auto [x, y] : r.pairs())
        for (int z = 0; z < r.size(); ++z)
            if (r.has(y, z) && !r.has(x, z)) return {x, y, z};
    return {-1, -1, -1};
}

}  // namespace

AxiomReport is_f_triple(const RelStructure& t) {
    if (t.components.size() != 3)
        throw std::invalid_argument("is_f_triple expects exactly three components");
    const Relation& T = t.components[0];
    const Relation& S = t.components[1];
    const Relation& R = t.components[2];
    int n = t.n;

    if (!is_partial_order(S)) {
        auto w = transitivity_witness(S);
        return violation("Fa:S", w[0], w[1], w[2]);
    }
    if (!is_partial_order(R)) {
        auto w = transitivity_witness(R);
        return violation("Fa:R", w[0], w[1], w[2]);
    }
    if (!is_partial_order(T.union_with(R))) {
        auto w = transitivity_witness(T.union_with(R));
        return violation("Fa:TuR", w[0], w[1], w[2]);
    }

    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int comparabilities = (T.has(x, y) || T.has(y, x)) + (S.has(x, y) || S.has(y, x)) +
                                  (R.has(x, y) || R.has(y, x));
            if (comparabilities != 1) return violation("Fb", x, y);
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !S.has(x, y)) continue;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (R.has(y, z) && !R.has(x, z)) return violation("C1c", x, y, z);
                if (R.has(z, y) && !R.has(z, x)) return violation("C1c*", x, y, z);
            }
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (T.has(x, y) && T.has(x, z) && R.has(y, z)) return violation("C2c", x, y, z);
                if (T.has(y, x) && T.has(z, x) && R.has(z, y)) return violation("C2c", x, y, z);
            }
        }

    return {};
}

AxiomReport is_c1_pair(const RelStructure& pair) {
    if (pair.components.size() != 2)
        throw std::invalid_argument("is_c1_pair expects exactly two components");
    return is_f_triple(
        RelStructure(pair.n, {Relation(pair.n), pair.components[0], pair.components[1]}));
}

AxiomReport is_c2_pair(const RelStructure& pair) {
    if (pair.components.size() != 2)
        throw std::invalid_argument("is_c2_pair expects exactly two components");
    return is_f_triple(
        RelStructure(pair.n, {pair.components[0], Relation(pair.n), pair.components[1]}));
}

namespace {

FTriple build_triple(const FishburnMatrix& m, bool type1) {
    auto [order, cellmap] = matrix_to_order(m);
    int n = order.n;
    const Relation& R = order.components[0];
    Relation T(n), S(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (cellmap[x] == cellmap[y]) {
                // within-cell chain in creation order; S-chain for F1, T-chain for F2
                if (x < y) (type1 ? S : T).add(x, y);
                continue;
            }
            if (type1) {
                if (cell_position(cellmap[x], cellmap[y]) == CellPosition::StrictNW) T.add(x, y);
                if (weakly_sw(cellmap[x], cellmap[y])) S.add(x, y);
            } else {
                if (weakly_nw(cellmap[x], cellmap[y])) T.add(x, y);
                if (cell_position(cellmap[x], cellmap[y]) == CellPosition::StrictSW) S.add(x, y);
            }
        }
    return {RelStructure(n, {T, S, R}), m, std::move(cellmap)};
}

}  // namespace

FTriple f1_triple(const FishburnMatrix& m) { return build_triple(m, true); }
FTriple f2_triple(const FishburnMatrix& m) { return build_triple(m, false); }

FTriple trivial_involution(const FTriple& t) {
    int k = t.matrix.dim();
    std::vector<Cell> reflected;
    reflected.reserve(t.cellmap.size());
    for (Cell c : t.cellmap) reflected.push_back({k + 1 - c.col, k + 1 - c.row});
    return {RelStructure(t.base.n, {t.T().inverse(), t.S(), t.R().inverse()}),
            antidiagonal_transpose(t.matrix), std::move(reflected)};
}

TripleStats triple_stats(const FTriple& t) {
    TripleStats st;
    st.maxT = mmax(t.T());
    st.maxS = mmax(t.S());
    st.maxR = mmax(t.R());
    st.minT = mmin(t.T());
    st.minS = mmin(t.S());
    st.minR = mmin(t.R());
    return st;
}

std::string to_text(const FTriple& t) { return to_text(t.base); }

}  // namespace fishlab
