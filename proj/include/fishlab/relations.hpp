#pragma once

// Finite binary relations on ground sets {0,..,n-1}, relational structures
// (ordered tuples of relations sharing a ground set), partial-order predicates,
// substructure containment, and a brute-force canonical form for comparing
// structures up to isomorphism.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fishlab {

// A binary irreflexive relation stored as a bitset over n*n pair slots.
// Capacity is fixed at 16 elements; enumeration loops dominate runtime and
// never need more.
class Relation {
public:
    static constexpr int max_elements = 16;

    Relation() = default;
    explicit Relation(int n);

    static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return n_; }

    bool has(int a, int b) const {
        int p = a * n_ + b;
        return (words_[p >> 6] >> (63 - (p & 63))) & 1u;
    }
    void add(int a, int b);

    // Successor set {b : aRb} as a bit mask over elements.
    std::uint32_t out_mask(int a) const;
    // Predecessor set {b : bRa}.
    std::uint32_t in_mask(int a) const;

    std::vector<std::pair<int, int>> pairs() const;
    std::size_t pair_count() const;

    Relation inverse() const;
    Relation union_with(const Relation& other) const;

    bool operator==(const Relation& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }

    // Raw words, most significant bit first; lexicographic comparison of the
    // arrays matches lexicographic comparison of the row-major bit string.
    const std::array<std::uint64_t, 4>& words() const { return words_; }

private:
    int n_ = 0;
    std::array<std::uint64_t, 4> words_{};
};

// An ordered tuple of relations on a common ground set.
struct RelStructure {
    int n = 0;
    std::vector<Relation> components;

    RelStructure() = default;
    RelStructure(int n_, std::vector<Relation> comps);

    bool operator==(const RelStructure& other) const {
        return n == other.n && components == other.components;
    }
};

enum class PatternId { TwoPlusTwo, ThreePlusOne, N };

// The three fixed 4-element forbidden posets.
RelStructure pattern_structure(PatternId id);

bool is_partial_order(const Relation& r);

struct MinMax {
    std::vector<int> minimal;
    std::vector<int> maximal;
};

// Minimal/maximal elements in the sense "no y with yRx" / "no y with xRy";
// meaningful for arbitrary relations, not only posets.
MinMax minmax(const Relation& r);

inline int mmin(const Relation& r) { return static_cast<int>(minmax(r).minimal.size()); }
inline int mmax(const Relation& r) { return static_cast<int>(minmax(r).maximal.size()); }

// Substructure containment: an injection mapping the pattern into the host
// that preserves and reflects every component relation.
bool contains(const RelStructure& host, const RelStructure& pattern);

bool avoids(const RelStructure& host, PatternId p);

// Applies the permutation perm to the ground set: pair (a,b) maps to
// (perm[a], perm[b]).
Relation relabel(const Relation& r, const std::vector<int>& perm);
RelStructure relabel(const RelStructure& s, const std::vector<int>& perm);

// Canonical byte encoding: equal strings iff the structures are isomorphic.
// Brute-force lexicographic minimum of the component-wise adjacency encoding
// over all n! relabelings; n is capped because of that.
std::string canonical_form(const RelStructure& s, int bound = 12);

// Text format: first line "n k", then k blocks, each a line "m" followed by
// m lines "a b".
std::string to_text(const RelStructure& s);
RelStructure rel_structure_from_text(std::istream& in);
RelStructure rel_structure_from_text(const std::string& text);

}  // namespace fishlab
