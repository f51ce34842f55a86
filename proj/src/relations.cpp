#include "fishlab/relations.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fishlab {

Relation::Relation(int n) : n_(n) {
    if (n < 0 || n > max_elements)
        throw std::invalid_argument("relation ground set size out of range: " + std::to_string(n));
}

Relation Relation::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Relation r(n);
    for (auto [a, b] : pairs) r.add(a, b);
    return r;
}

void Relation::add(int a, int b) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw std::invalid_argument("pair index out of range");
    if (a == b) throw std::invalid_argument("relation must be irreflexive");
    int p = a * n_ + b;
    words_[p >> 6] |= std::uint64_t{1} << (63 - (p & 63));
}

std::uint32_t Relation::out_mask(int a) const {
    std::uint32_t m = 0;
    for (int b = 0; b < n_; ++b)
        if (has(a, b)) m |= 1u << b;
    return m;
}

std::uint32_t Relation::in_mask(int a) const {
    std::uint32_t m = 0;
    for (int b = 0; b < n_; ++b)
        if (has(b, a)) m |= 1u << b;
    return m;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int w = 0; w < 4; ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            int lead = std::countl_zero(word);
            int p = w * 64 + lead;
            out.emplace_back(p / n_, p % n_);
            word &= ~(std::uint64_t{1} << (63 - lead));
        }
    }
    return out;
}

std::size_t Relation::pair_count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

Relation Relation::inverse() const {
    Relation r(n_);
    for (auto [a, b] : pairs()) r.add(b, a);
    return r;
}

Relation Relation::union_with(const Relation& other) const {
    if (n_ != other.n_) throw std::invalid_argument("ground set size mismatch");
    Relation r(n_);
    for (int w = 0; w < 4; ++w) r.words_[w] = words_[w] | other.words_[w];
    return r;
}

RelStructure::RelStructure(int n_, std::vector<Relation> comps)
    : n(n_), components(std::move(comps)) {
    for (const auto& c : components)
        if (c.size() != n) throw std::invalid_argument("component ground set size mismatch");
}

RelStructure pattern_structure(PatternId id) {
    switch (id) {
        case PatternId::TwoPlusTwo:
            return RelStructure(4, {Relation::from_pairs(4, {{0, 1}, {2, 3}})});
        case PatternId::ThreePlusOne:
            return RelStructure(4, {Relation::from_pairs(4, {{0, 1}, {1, 2}, {0, 2}})});
        case PatternId::N:
            return RelStructure(4, {Relation::from_pairs(4, {{0, 1}, {0, 3}, {2, 1}})});
    }
    throw std::logic_error("unknown pattern");
}

bool is_partial_order(const Relation& r) {
    int n = r.size();
    for (int a = 0; a < n; ++a) {
        std::uint32_t row_a = r.out_mask(a);
        std::uint32_t rest = row_a;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            // transitivity: successors of b must be successors of a
            if ((r.out_mask(b) & ~row_a) != 0) return false;
        }
    }
    return true;
}

MinMax minmax(const Relation& r) {
    MinMax mm;
    for (int x = 0; x < r.size(); ++x) {
        if (r.in_mask(x) == 0) mm.minimal.push_back(x);
        if (r.out_mask(x) == 0) mm.maximal.push_back(x);
    }
    return mm;
}

namespace {

struct EmbedSearch {
    const RelStructure& host;
    const RelStructure& pattern;
    std::vector<int> image;       // pattern vertex -> host vertex
    std::uint32_t used = 0;

    bool consistent(int v, int hv) const {
        for (std::size_t c = 0; c < pattern.components.size(); ++c) {
            const Relation& pr = pattern.components[c];
            const Relation& hr = host.components[c];
            for (int u = 0; u < v; ++u) {
                if (pr.has(u, v) != hr.has(image[u], hv)) return false;
                if (pr.has(v, u) != hr.has(hv, image[u])) return false;
            }
        }
        return true;
    }

    bool extend(int v) {
        if (v == pattern.n) return true;
        for (int hv = 0; hv < host.n; ++hv) {
            if (used & (1u << hv)) continue;
            bool degrees_ok = true;
            for (std::size_t c = 0; c < pattern.components.size() && degrees_ok; ++c) {
                const Relation& pr = pattern.components[c];
                const Relation& hr = host.components[c];
                if (std::popcount(pr.out_mask(v)) > std::popcount(hr.out_mask(hv)) ||
                    std::popcount(pr.in_mask(v)) > std::popcount(hr.in_mask(hv)))
                    degrees_ok = false;
            }
            if (!degrees_ok || !consistent(v, hv)) continue;
            image[v] = hv;
            used |= 1u << hv;
            if (extend(v + 1)) return true;
            used &= ~(1u << hv);
        }
        return false;
    }
};

}  // namespace

bool contains(const RelStructure& host, const RelStructure& pattern) {
    if (host.components.size() != pattern.components.size())
        throw std::invalid_argument("component count mismatch");
    if (pattern.n > host.n) return false;
    EmbedSearch search{host, pattern, std::vector<int>(pattern.n, -1)};
    return search.extend(0);
}

bool avoids(const RelStructure& host, PatternId p) {
    return !contains(host, pattern_structure(p));
}

Relation relabel(const Relation& r, const std::vector<int>& perm) {
    Relation out(r.size());
    for (auto [a, b] : r.pairs()) out.add(perm[a], perm[b]);
    return out;
}

RelStructure relabel(const RelStructure& s, const std::vector<int>& perm) {
    std::vector<Relation> comps;
    comps.reserve(s.components.size());
    for (const auto& c : s.components) comps.push_back(relabel(c, perm));
    return RelStructure(s.n, std::move(comps));
}

namespace {

using Words = std::array<std::uint64_t, 4>;

void relabel_words(const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& perm,
                   int n, Words& out) {
    out = {};
    for (auto [a, b] : pairs) {
        int p = perm[a] * n + perm[b];
        out[p >> 6] |= std::uint64_t{1} << (63 - (p & 63));
    }
}

}  // namespace

std::string canonical_form(const RelStructure& s, int bound) {
    int n = s.n;
    if (n > bound)
        throw std::invalid_argument("canonical_form: ground set size " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(bound));
    std::size_t k = s.components.size();

    std::vector<std::vector<std::pair<int, int>>> pair_lists;
    pair_lists.reserve(k);
    for (const auto& c : s.components) pair_lists.push_back(c.pairs());

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Words> best(k), candidate(k);
    bool have_best = false;

    do {
        bool better = false, worse = false;
        for (std::size_t c = 0; c < k && !worse; ++c) {
            relabel_words(pair_lists[c], perm, n, candidate[c]);
            if (!have_best || better) continue;
            if (candidate[c] < best[c]) better = true;
            else if (candidate[c] > best[c]) worse = true;
        }
        if (!have_best || (better && !worse)) {
            best = candidate;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Serialize: n, k, then per component the first ceil(n^2/8) bytes of the
    // bit string, big-endian within each word.
    std::string enc;
    enc.push_back(static_cast<char>(n));
    enc.push_back(static_cast<char>(k));
    int bytes = (n * n + 7) / 8;
    for (const auto& w : best)
        for (int byte = 0; byte < bytes; ++byte)
            enc.push_back(static_cast<char>((w[byte / 8] >> (56 - 8 * (byte % 8))) & 0xff));
    return enc;
}

std::string to_text(const RelStructure& s) {
    std::ostringstream out;
    out << s.n << ' ' << s.components.size() << '\n';
    for (const auto& c : s.components) {
        auto pairs = c.pairs();
        out << pairs.size() << '\n';
        for (auto [a, b] : pairs) out << a << ' ' << b << '\n';
    }
    return out.str();
}

RelStructure rel_structure_from_text(std::istream& in) {
    int n = 0;
    std::size_t k = 0;
    if (!(in >> n >> k)) throw std::invalid_argument("relation text: missing header");
    std::vector<Relation> comps;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t m = 0;
        if (!(in >> m)) throw std::invalid_argument("relation text: missing pair count");
        Relation r(n);
        for (std::size_t i = 0; i < m; ++i) {
            int a, b;
            if (!(in >> a >> b)) throw std::invalid_argument("relation text: missing pair");
            r.add(a, b);
        }
        comps.push_back(r);
    }
    return RelStructure(n, std::move(comps));
}

RelStructure rel_structure_from_text(const std::string& text) {
    std::istringstream in(text);
    return rel_structure_from_text(in);
}

}  // namespace fishlab
