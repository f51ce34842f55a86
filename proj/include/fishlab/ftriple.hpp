#pragma once

// Fishburn triples (T,S,R): three-relation structures generalizing both kinds
// of Catalan pairs. Provides the axiom checker with violation reports, the F1
// and F2 constructions from a Fishburn matrix, the trivial involution, and the
// component statistics.

#include <array>
#include <string>
#include <vector>

#include "fishlab/fishburn.hpp"
#include "fishlab/relations.hpp"

namespace fishlab {

// A triple together with the matrix of its R component and the representing
// cell of every element. Component order in base is T, S, R.
struct FTriple {
    RelStructure base;
    FishburnMatrix matrix;
    std::vector<Cell> cellmap;

    const Relation& T() const { return base.components[0]; }
    const Relation& S() const { return base.components[1]; }
    const Relation& R() const { return base.components[2]; }
};

struct AxiomReport {
    bool ok = true;
    std::string axiom;              // violated axiom, empty when ok
    std::array<int, 3> witness{};   // witnessing elements (unused slots -1)
};

// Checks the five F-triple axioms: Fa (S, R, T∪R partial orders), Fb (every
// pair comparable by exactly one of T, S, R), C1c, C1c*, C2c. The mirrored
// clause of C2c with yRz in place of zRy is the same constraint after renaming
// y and z, so only one form is tested.
AxiomReport is_f_triple(const RelStructure& t);

// A C1-pair (S,R) is exactly a structure whose extension (∅,S,R) is an
// F-triple, and a C2-pair (T,R) one whose (T,∅,R) is.
AxiomReport is_c1_pair(const RelStructure& pair);
AxiomReport is_c2_pair(const RelStructure& pair);

// F1: T1 joins strictly-NW cell pairs, S1 weakly-SW pairs plus a chain inside
// every cell. F2: T2 weakly-NW pairs plus within-cell chains, S2 strictly-SW
// pairs. Within-cell chains follow element creation order.
FTriple f1_triple(const FishburnMatrix& m);
FTriple f2_triple(const FishburnMatrix& m);

// (T,S,R) -> (T^{-1}, S, R^{-1}); the matrix becomes its antidiagonal
// transpose and the cellmap is reflected accordingly.
FTriple trivial_involution(const FTriple& t);

struct TripleStats {
    int maxT = 0, maxS = 0, maxR = 0;
    int minT = 0, minS = 0, minR = 0;
};

TripleStats triple_stats(const FTriple& t);

// Serialization via the relation text format with components ordered T, S, R.
std::string to_text(const FTriple& t);

}  // namespace fishlab
