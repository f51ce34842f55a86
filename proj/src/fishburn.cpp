#include "fishlab/fishburn.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fishlab {

CellPosition cell_position(Cell c, Cell d) {
    if (c.row > c.col || d.row > d.col)
        throw std::invalid_argument("cell below the main diagonal");
    if (c.row == d.row && c.col == d.col) return CellPosition::Equal;
    if (d.col < c.row) return CellPosition::Greater;
    if (c.col < d.row) return CellPosition::Smaller;
    // incomparable from here on
    if (c.col == d.col) return c.row > d.row ? CellPosition::South : CellPosition::North;
    if (c.row == d.row) return c.col > d.col ? CellPosition::East : CellPosition::West;
    if (c.row > d.row) return c.col < d.col ? CellPosition::StrictSW : CellPosition::StrictSE;
    return c.col > d.col ? CellPosition::StrictNE : CellPosition::StrictNW;
}

bool weakly_sw(Cell c, Cell d) {
    auto p = cell_position(c, d);
    return p == CellPosition::South || p == CellPosition::West || p == CellPosition::StrictSW;
}

bool weakly_ne(Cell c, Cell d) {
    auto p = cell_position(c, d);
    return p == CellPosition::North || p == CellPosition::East || p == CellPosition::StrictNE;
}

bool weakly_nw(Cell c, Cell d) {
    auto p = cell_position(c, d);
    return p == CellPosition::North || p == CellPosition::West || p == CellPosition::StrictNW;
}

bool weakly_se(Cell c, Cell d) {
    auto p = cell_position(c, d);
    return p == CellPosition::South || p == CellPosition::East || p == CellPosition::StrictSE;
}

FishburnMatrix unchecked_matrix(int k, std::vector<int> entries) {
    return FishburnMatrix(k, std::move(entries));
}

FishburnMatrix FishburnMatrix::validate(const std::vector<std::vector<int>>& rows) {
    int k = static_cast<int>(rows.size());
    if (k == 0) throw std::invalid_argument("empty matrix");
    std::vector<int> entries(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(rows[i].size()) != k)
            throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < k; ++j) {
            int v = rows[i][j];
            if (v < 0) throw std::invalid_argument("negative entry");
            if (v > 0 && i > j)
                throw std::invalid_argument("not upper-triangular: nonzero entry at row " +
                                            std::to_string(i + 1) + ", column " +
                                            std::to_string(j + 1));
            entries[static_cast<std::size_t>(i) * k + j] = v;
        }
    }
    FishburnMatrix m(k, std::move(entries));
    for (int i = 1; i <= k; ++i)
        if (m.row_weight(i) == 0)
            throw std::invalid_argument("zero row " + std::to_string(i));
    for (int j = 1; j <= k; ++j)
        if (m.col_weight(j) == 0)
            throw std::invalid_argument("zero column " + std::to_string(j));
    return m;
}

int FishburnMatrix::weight() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int FishburnMatrix::row_weight(int i) const {
    int s = 0;
    for (int j = 1; j <= k_; ++j) s += at(i, j);
    return s;
}

int FishburnMatrix::col_weight(int j) const {
    int s = 0;
    for (int i = 1; i <= k_; ++i) s += at(i, j);
    return s;
}

int FishburnMatrix::diagonal_positive_count() const {
    int c = 0;
    for (int i = 1; i <= k_; ++i)
        if (at(i, i) > 0) ++c;
    return c;
}

bool FishburnMatrix::is_primitive() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 1; });
}

std::vector<Cell> FishburnMatrix::nonzero_cells() const {
    std::vector<Cell> cells;
    for (int i = 1; i <= k_; ++i)
        for (int j = i; j <= k_; ++j)
            if (at(i, j) > 0) cells.push_back({i, j});
    return cells;
}

std::vector<std::vector<int>> FishburnMatrix::rows() const {
    std::vector<std::vector<int>> out(k_, std::vector<int>(k_));
    for (int i = 1; i <= k_; ++i)
        for (int j = 1; j <= k_; ++j) out[i - 1][j - 1] = at(i, j);
    return out;
}

// -- extreme cells ----------------------------------------------------------

namespace {

bool in_region(Cell d, Cell c, ExtremeKind kind) {
    switch (kind) {
        case ExtremeKind::WeakNE: return weakly_ne(d, c);
        case ExtremeKind::StrongNE: return cell_position(d, c) == CellPosition::StrictNE;
        case ExtremeKind::WeakSE: return weakly_se(d, c);
        case ExtremeKind::StrongSE: return cell_position(d, c) == CellPosition::StrictSE;
        case ExtremeKind::WeakNW: return weakly_nw(d, c);
        case ExtremeKind::StrongNW: return cell_position(d, c) == CellPosition::StrictNW;
        case ExtremeKind::WeakSW: return weakly_sw(d, c);
        case ExtremeKind::StrongSW: return cell_position(d, c) == CellPosition::StrictSW;
    }
    return false;
}

}  // namespace

std::vector<Cell> extreme_cells(const FishburnMatrix& m, ExtremeKind kind) {
    auto cells = m.nonzero_cells();
    std::vector<Cell> out;
    for (Cell c : cells) {
        bool extreme = true;
        for (Cell d : cells) {
            if (d == c) continue;
            if (in_region(d, c, kind)) {
                extreme = false;
                break;
            }
        }
        if (extreme) out.push_back(c);
    }
    return out;
}

int extreme_count(const FishburnMatrix& m, ExtremeKind kind) {
    return static_cast<int>(extreme_cells(m, kind).size());
}

int extreme_weight(const FishburnMatrix& m, ExtremeKind kind) {
    int w = 0;
    for (Cell c : extreme_cells(m, kind)) w += m.at(c.row, c.col);
    return w;
}

// -- interval order conversion ----------------------------------------------

OrderWithCells matrix_to_order(const FishburnMatrix& m) {
    std::vector<Cell> cellmap;
    for (Cell c : m.nonzero_cells())
        for (int copy = 0; copy < m.at(c.row, c.col); ++copy) cellmap.push_back(c);

    int n = static_cast<int>(cellmap.size());
    Relation r(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && cellmap[x].col < cellmap[y].row) r.add(x, y);
    return {RelStructure(n, {r}), std::move(cellmap)};
}

FishburnMatrix order_to_matrix(const RelStructure& poset) {
    if (poset.components.size() != 1)
        throw std::invalid_argument("order_to_matrix expects a single-component structure");
    const Relation& r = poset.components[0];
    if (!is_partial_order(r)) throw std::invalid_argument("not a partial order");
    if (!avoids(poset, PatternId::TwoPlusTwo))
        throw std::invalid_argument("not an interval order: contains 2+2");

    int n = poset.n;
    if (n == 0) throw std::invalid_argument("empty ground set has no Fishburn matrix");

    // Distinct strict down-sets of an interval order form an inclusion chain,
    // as do the up-sets; the ranks give the minimal interval representation.
    std::vector<std::uint32_t> down(n), up(n);
    for (int x = 0; x < n; ++x) {
        down[x] = r.in_mask(x);
        up[x] = r.out_mask(x);
    }

    auto distinct_sorted = [](std::vector<std::uint32_t> sets, bool decreasing) {
        std::sort(sets.begin(), sets.end(), [&](std::uint32_t a, std::uint32_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            if (pa != pb) return decreasing ? pa > pb : pa < pb;
            return a < b;
        });
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        return sets;
    };

    auto down_chain = distinct_sorted(down, false);
    auto up_chain = distinct_sorted(up, true);
    int k = static_cast<int>(down_chain.size());
    if (static_cast<int>(up_chain.size()) != k)
        throw std::logic_error("down-set and up-set chains disagree on magnitude");

    std::vector<int> entries(static_cast<std::size_t>(k) * k, 0);
    for (int x = 0; x < n; ++x) {
        int l = static_cast<int>(std::find(down_chain.begin(), down_chain.end(), down[x]) -
                                 down_chain.begin());
        int rr = static_cast<int>(std::find(up_chain.begin(), up_chain.end(), up[x]) -
                                  up_chain.begin());
        entries[static_cast<std::size_t>(l) * k + rr] += 1;
    }
    auto m = FishburnMatrix::validate([&] {
        std::vector<std::vector<int>> rows(k, std::vector<int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) rows[i][j] = entries[static_cast<std::size_t>(i) * k + j];
        return rows;
    }());
    return m;
}

// -- extension / inflation ----------------------------------------------------

ExtensionCode::ExtensionCode(std::string w) : word(std::move(w)) {
    bool has_d_or_i = false;
    for (char ch : word) {
        if (ch != 'D' && ch != 'S' && ch != 'I')
            throw std::invalid_argument("extension code letters must be D, S or I");
        if (ch == 'D' || ch == 'I') has_d_or_i = true;
    }
    if (!has_d_or_i)
        throw std::invalid_argument("invalid extension code: no letter is D or I");
}

FishburnMatrix extend(const FishburnMatrix& p, const ExtensionCode& code) {
    if (!p.is_primitive()) throw std::invalid_argument("extend requires a primitive matrix");
    int k = p.dim();
    if (code.length() != p.last_col_weight())
        throw std::invalid_argument("code length does not match last-column weight");

    std::vector<int> entries(static_cast<std::size_t>(k + 1) * (k + 1), 0);
    auto set = [&](int i, int j, int v) { entries[static_cast<std::size_t>(i - 1) * (k + 1) + (j - 1)] = v; };

    for (int i = 1; i <= k; ++i)
        for (int j = i; j < k; ++j) set(i, j, p.at(i, j));
    set(k + 1, k + 1, 1);

    int letter = 0;
    for (int i = 1; i <= k; ++i) {
        if (p.at(i, k) == 0) continue;
        switch (code.word[letter++]) {
            case 'D': set(i, k, 1); set(i, k + 1, 1); break;
            case 'S': set(i, k, 0); set(i, k + 1, 1); break;
            case 'I': set(i, k, 1); set(i, k + 1, 0); break;
        }
    }
    return unchecked_matrix(k + 1, std::move(entries));
}

std::pair<FishburnMatrix, ExtensionCode> decompose(const FishburnMatrix& p) {
    if (!p.is_primitive()) throw std::invalid_argument("decompose requires a primitive matrix");
    int k = p.dim();
    if (k < 2) throw std::invalid_argument("the 1x1 matrix has no parent");

    std::vector<int> entries(static_cast<std::size_t>(k - 1) * (k - 1), 0);
    auto set = [&](int i, int j, int v) { entries[static_cast<std::size_t>(i - 1) * (k - 1) + (j - 1)] = v; };

    std::string word;
    for (int i = 1; i <= k - 1; ++i) {
        for (int j = i; j <= k - 2; ++j) set(i, j, p.at(i, j));
        int a = p.at(i, k - 1), b = p.at(i, k);
        if (a == 0 && b == 0) continue;
        set(i, k - 1, 1);
        word.push_back(a && b ? 'D' : (b ? 'S' : 'I'));
    }
    return {unchecked_matrix(k - 1, std::move(entries)), ExtensionCode(std::move(word))};
}

std::vector<ExtensionCode> code_sequence(const FishburnMatrix& p) {
    std::vector<ExtensionCode> codes;
    FishburnMatrix cur = p;
    while (cur.dim() > 1) {
        auto [parent, code] = decompose(cur);
        codes.push_back(code);
        cur = parent;
    }
    std::reverse(codes.begin(), codes.end());
    return codes;
}

FishburnMatrix inflate(const FishburnMatrix& p, const Inflation& values) {
    if (!p.is_primitive()) throw std::invalid_argument("inflate requires a primitive matrix");
    auto cells = p.nonzero_cells();
    if (values.size() != cells.size())
        throw std::invalid_argument("inflation value count does not match 1-cell count");
    int k = p.dim();
    std::vector<int> entries(static_cast<std::size_t>(k) * k, 0);
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        if (values[idx] < 1) throw std::invalid_argument("inflation values must be positive");
        entries[static_cast<std::size_t>(cells[idx].row - 1) * k + (cells[idx].col - 1)] = values[idx];
    }
    return unchecked_matrix(k, std::move(entries));
}

std::pair<FishburnMatrix, Inflation> deflate(const FishburnMatrix& m) {
    int k = m.dim();
    std::vector<int> entries(static_cast<std::size_t>(k) * k, 0);
    Inflation values;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            if (m.at(i, j) > 0) {
                entries[static_cast<std::size_t>(i - 1) * k + (j - 1)] = 1;
                values.push_back(m.at(i, j));
            }
    return {unchecked_matrix(k, std::move(entries)), std::move(values)};
}

// -- involutions --------------------------------------------------------------

FishburnMatrix antidiagonal_transpose(const FishburnMatrix& m) {
    int k = m.dim();
    std::vector<int> entries(static_cast<std::size_t>(k) * k, 0);
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            entries[static_cast<std::size_t>(k - j) * k + (k - i)] = m.at(i, j);
    return unchecked_matrix(k, std::move(entries));
}

FishburnMatrix phi(const FishburnMatrix& m) {
    auto [primitive, values] = deflate(m);
    auto codes = code_sequence(primitive);

    std::vector<int> start(1, 1);
    FishburnMatrix rebuilt = unchecked_matrix(1, start);
    for (const auto& code : codes) {
        std::string reversed(code.word.rbegin(), code.word.rend());
        rebuilt = extend(rebuilt, ExtensionCode(std::move(reversed)));
    }

    // Column weights match column by column; re-inflate with each column's
    // value list reversed top-to-bottom.
    int k = m.dim();
    std::vector<std::vector<int>> column_values(k + 1);
    {
        auto cells = primitive.nonzero_cells();
        for (std::size_t idx = 0; idx < cells.size(); ++idx)
            column_values[cells[idx].col].push_back(values[idx]);
    }
    auto rebuilt_cells = rebuilt.nonzero_cells();
    std::vector<std::vector<int>> reversed_per_column(k + 1);
    for (int j = 1; j <= k; ++j)
        reversed_per_column[j] =
            std::vector<int>(column_values[j].rbegin(), column_values[j].rend());

    std::vector<int> next_in_column(k + 1, 0);
    Inflation new_values(rebuilt_cells.size());
    std::vector<std::vector<Cell>> rebuilt_by_column(k + 1);
    for (Cell c : rebuilt_cells) rebuilt_by_column[c.col].push_back(c);
    std::map<std::pair<int, int>, int> value_of_cell;
    for (int j = 1; j <= k; ++j) {
        const auto& cells_in_col = rebuilt_by_column[j];
        if (cells_in_col.size() != reversed_per_column[j].size())
            throw std::logic_error("phi: column 1-cell counts diverged");
        for (std::size_t t = 0; t < cells_in_col.size(); ++t)
            value_of_cell[{cells_in_col[t].row, cells_in_col[t].col}] = reversed_per_column[j][t];
    }
    for (std::size_t idx = 0; idx < rebuilt_cells.size(); ++idx)
        new_values[idx] = value_of_cell[{rebuilt_cells[idx].row, rebuilt_cells[idx].col}];
    return inflate(rebuilt, new_values);
}

// -- enumeration ---------------------------------------------------------------

namespace {

bool has_strict_pair(const FishburnMatrix& m, CellPosition pos) {
    auto cells = m.nonzero_cells();
    for (Cell c : cells)
        for (Cell d : cells)
            if (!(c == d) && cell_position(c, d) == pos) return true;
    return false;
}

bool passes_filter(const FishburnMatrix& m, AvoidFilter avoid) {
    switch (avoid) {
        case AvoidFilter::None: return true;
        case AvoidFilter::StrictNW: return !has_strict_pair(m, CellPosition::StrictNW);
        case AvoidFilter::StrictSW: return !has_strict_pair(m, CellPosition::StrictSW);
    }
    return true;
}

// Compositions of total into parts positive parts, colexicographic: the last
// coordinate varies slowest.
void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> v(parts);
    auto rec = [&](auto&& self, int index, int remaining) -> void {
        if (index < 0) {
            if (remaining == 0) visit(v);
            return;
        }
        int reserve = index;  // positions 0..index-1 need at least 1 each
        for (int val = 1; val <= remaining - reserve; ++val) {
            v[index] = val;
            self(self, index - 1, remaining - val);
        }
    };
    if (parts > 0 && total >= parts) rec(rec, parts - 1, total);
}

// Codes over {D,I,S} in lexicographic order with D < I < S, all-S skipped.
void for_each_code(int length, const std::function<void(const ExtensionCode&)>& visit) {
    std::string word(length, 'D');
    auto rec = [&](auto&& self, int pos, bool any_di) -> void {
        if (pos == length) {
            if (any_di) visit(ExtensionCode(word));
            return;
        }
        for (char ch : {'D', 'I', 'S'}) {
            word[pos] = ch;
            self(self, pos + 1, any_di || ch != 'S');
        }
    };
    rec(rec, 0, false);
}

struct MatrixEnumerator {
    int target_weight;
    EnumOptions options;
    const std::function<void(const FishburnMatrix&)>& visit;

    void emit_from_primitive(const FishburnMatrix& p) {
        if (!passes_filter(p, options.avoid)) return;  // filter persists under inflation
        int cells = p.weight();
        if (options.primitive_only) {
            if (cells == target_weight) visit(p);
            return;
        }
        if (cells > target_weight) return;
        for_each_composition(target_weight, cells,
                             [&](const std::vector<int>& values) { visit(inflate(p, values)); });
    }

    void dfs(const FishburnMatrix& p) {
        emit_from_primitive(p);
        if (p.weight() >= target_weight) return;  // every extension adds weight
        if (options.avoid != AvoidFilter::None && !passes_filter(p, options.avoid))
            return;  // strict pairs persist under extension
        for_each_code(p.last_col_weight(),
                      [&](const ExtensionCode& code) { dfs(extend(p, code)); });
    }

    void run() {
        if (target_weight < 1) return;
        dfs(unchecked_matrix(1, {1}));
    }
};

}  // namespace

void enumerate_matrices(int weight, const EnumOptions& options,
                        const std::function<void(const FishburnMatrix&)>& visit) {
    MatrixEnumerator e{weight, options, visit};
    e.run();
}

std::vector<FishburnMatrix> enumerate_matrices(int weight, const EnumOptions& options) {
    std::vector<FishburnMatrix> out;
    enumerate_matrices(weight, options, [&](const FishburnMatrix& m) { out.push_back(m); });
    return out;
}

void enumerate_primitive_dim(int k, const std::function<void(const FishburnMatrix&)>& visit) {
    if (k < 1) return;
    auto rec = [&](auto&& self, const FishburnMatrix& p) -> void {
        if (p.dim() == k) {
            visit(p);
            return;
        }
        for_each_code(p.last_col_weight(),
                      [&](const ExtensionCode& code) { self(self, extend(p, code)); });
    };
    rec(rec, unchecked_matrix(1, {1}));
}

// -- text / json ---------------------------------------------------------------

std::string to_text(const FishburnMatrix& m) {
    std::ostringstream out;
    for (int i = 1; i <= m.dim(); ++i) {
        for (int j = 1; j <= m.dim(); ++j) {
            if (j > 1) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

FishburnMatrix matrix_from_text(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (rows.empty()) continue;
            break;
        }
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix text: no rows");
    return FishburnMatrix::validate(rows);
}

FishburnMatrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    return matrix_from_text(in);
}

std::string to_json(const FishburnMatrix& m) {
    nlohmann::ordered_json j;
    j["k"] = m.dim();
    j["rows"] = m.rows();
    return j.dump();
}

FishburnMatrix matrix_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int k = j.at("k").get<int>();
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != k)
        throw std::invalid_argument("matrix json: k does not match row count");
    return FishburnMatrix::validate(rows);
}

}  // namespace fishlab
