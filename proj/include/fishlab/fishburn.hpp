#pragma once

// Fishburn matrices: upper-triangular nonnegative integer matrices whose every
// row and column has positive weight. They are canonical representatives of
// unlabeled interval orders. This module provides the cell-position taxonomy,
// conversion to and from interval orders, the extension/inflation generation
// calculus, extreme-cell statistics, exhaustive enumeration, and the two
// involutions (antidiagonal transpose and the code-reversing map).

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fishlab/relations.hpp"

namespace fishlab {

// 1-based matrix cell, row 1 on top.
struct Cell {
    int row = 0;
    int col = 0;

    bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
    bool operator<(const Cell& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

// Mutual position of two cells on or above the main diagonal. Exactly one
// value holds for every ordered pair. "Greater" mirrors the order relation of
// the represented elements; the four strict diagonal positions and the four
// cardinal positions are all incomparable configurations.
enum class CellPosition {
    Greater,
    Smaller,
    North,
    South,
    East,
    West,
    StrictNE,
    StrictNW,
    StrictSE,
    StrictSW,
    Equal,
};

// Position of c relative to d. Throws if either cell lies below the diagonal.
CellPosition cell_position(Cell c, Cell d);

// Weak regions: the two adjacent cardinal directions plus the strict diagonal.
bool weakly_sw(Cell c, Cell d);
bool weakly_ne(Cell c, Cell d);
bool weakly_nw(Cell c, Cell d);
bool weakly_se(Cell c, Cell d);

class FishburnMatrix {
public:
    // Validates the three Fishburn conditions; throws std::invalid_argument
    // naming the offending row/column otherwise.
    static FishburnMatrix validate(const std::vector<std::vector<int>>& rows);

    int dim() const { return k_; }
    int at(int i, int j) const { return entries_[(i - 1) * k_ + (j - 1)]; }

    int weight() const;
    int row_weight(int i) const;
    int col_weight(int j) const;
    int first_row_weight() const { return row_weight(1); }
    int last_col_weight() const { return col_weight(k_); }
    int preceding_cols_weight() const { return weight() - last_col_weight(); }
    int diagonal_positive_count() const;

    bool is_primitive() const;

    // Nonzero cells in row-major order.
    std::vector<Cell> nonzero_cells() const;

    bool operator==(const FishburnMatrix& o) const {
        return k_ == o.k_ && entries_ == o.entries_;
    }
    bool operator<(const FishburnMatrix& o) const {
        return k_ != o.k_ ? k_ < o.k_ : entries_ < o.entries_;
    }

    std::vector<std::vector<int>> rows() const;

private:
    friend FishburnMatrix unchecked_matrix(int k, std::vector<int> entries);
    FishburnMatrix(int k, std::vector<int> entries) : k_(k), entries_(std::move(entries)) {}

    int k_ = 0;
    std::vector<int> entries_;  // row-major, k_*k_
};

// Internal constructor for matrices produced by operations whose output is
// Fishburn by construction.
FishburnMatrix unchecked_matrix(int k, std::vector<int> entries);

// -- extreme cells ----------------------------------------------------------

enum class ExtremeKind { WeakNE, StrongNE, WeakSE, StrongSE, WeakNW, StrongNW, WeakSW, StrongSW };

// Nonzero cells whose weak/strict region in the given direction contains only
// zero cells, in row-major order.
std::vector<Cell> extreme_cells(const FishburnMatrix& m, ExtremeKind kind);

int extreme_count(const FishburnMatrix& m, ExtremeKind kind);
int extreme_weight(const FishburnMatrix& m, ExtremeKind kind);

// Number of weak-NE extreme cells, the ne statistic.
inline int ne(const FishburnMatrix& m) { return extreme_count(m, ExtremeKind::WeakNE); }

// -- interval order conversion ----------------------------------------------

struct OrderWithCells {
    RelStructure order;          // one poset component
    std::vector<Cell> cellmap;   // representing cell per element
};

// One element per unit of weight, in row-major cell order; x' precedes x iff
// the representing cells satisfy col(x') < row(x).
OrderWithCells matrix_to_order(const FishburnMatrix& m);

// The unique minimal-representation matrix of a (2+2)-free poset. Throws if
// the input is not a partial order or contains 2+2.
FishburnMatrix order_to_matrix(const RelStructure& poset);

// -- extension / inflation calculus ------------------------------------------

// Word over {D,S,I} describing how the last-column 1-cells of a primitive
// matrix split under extension, top to bottom. Valid iff some letter is D or I.
struct ExtensionCode {
    std::string word;

    explicit ExtensionCode(std::string w);
    int length() const { return static_cast<int>(word.size()); }
    bool operator==(const ExtensionCode& o) const { return word == o.word; }
};

// Splits the last column of a primitive matrix into two, governed by the code;
// the result is primitive with dimension one larger.
FishburnMatrix extend(const FishburnMatrix& p, const ExtensionCode& code);

// Inverse of extend: the unique (parent, code) reproducing p. Requires
// dimension at least 2.
std::pair<FishburnMatrix, ExtensionCode> decompose(const FishburnMatrix& p);

// The full code sequence building p from the 1x1 matrix, outermost first.
std::vector<ExtensionCode> code_sequence(const FishburnMatrix& p);

// Per-cell positive values aligned with nonzero_cells() of a primitive matrix.
using Inflation = std::vector<int>;

FishburnMatrix inflate(const FishburnMatrix& p, const Inflation& values);
std::pair<FishburnMatrix, Inflation> deflate(const FishburnMatrix& m);

// -- involutions --------------------------------------------------------------

// Entry (i,j) moves to (k+1-j, k+1-i); realizes duality of interval orders.
FishburnMatrix antidiagonal_transpose(const FishburnMatrix& m);

// The code-reversing, column-value-reversing involution: decompose to the code
// sequence from [1], rebuild with every code reversed, re-inflate each column's
// value list bottom-up. Swaps the wNE/wSE statistics while preserving all
// column weights.
FishburnMatrix phi(const FishburnMatrix& m);

// -- enumeration ---------------------------------------------------------------

enum class AvoidFilter { None, StrictNW, StrictSW };

struct EnumOptions {
    bool primitive_only = false;
    AvoidFilter avoid = AvoidFilter::None;
};

// Streams every Fishburn matrix of the given weight exactly once, in a fixed
// deterministic order: depth-first over valid extensions (codes lexicographic
// with D < I < S), inflation vectors in colexicographic order.
void enumerate_matrices(int weight, const EnumOptions& options,
                        const std::function<void(const FishburnMatrix&)>& visit);

std::vector<FishburnMatrix> enumerate_matrices(int weight, const EnumOptions& options = {});

// Streams every primitive matrix of exact dimension k.
void enumerate_primitive_dim(int k, const std::function<void(const FishburnMatrix&)>& visit);

// -- text / json ---------------------------------------------------------------

// Text: k lines of k space-separated integers.
std::string to_text(const FishburnMatrix& m);
FishburnMatrix matrix_from_text(std::istream& in);
FishburnMatrix matrix_from_text(const std::string& text);

// JSON: {"k":3,"rows":[[...],[...],[...]]}
std::string to_json(const FishburnMatrix& m);
FishburnMatrix matrix_from_json(const std::string& text);

}  // namespace fishlab
