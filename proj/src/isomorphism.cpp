#include "minorlab/isomorphism.hpp"

#include <algorithm>

namespace minorlab {

namespace {

// Each level contributes one word: the bits of the newly placed vertex's
// adjacency to the already placed vertices, most significant bit first so
// that integer comparison matches lexicographic comparison. The search keeps
// the best complete assignment found so far and prunes any branch whose
// prefix exceeds it. Twin vertices (interchangeable by a transposition
// automorphism) are expanded only once per node.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<std::uint64_t> rows;
    std::vector<int> twin_class;  // class representative, always the smallest member
    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> path;
    std::vector<int> best_perm;
    std::vector<int> placed;
    std::uint64_t placed_mask = 0;
    long long version = 0;  // bumped whenever best is replaced

    explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        rows.resize(n);
        for (int v = 0; v < n; ++v) rows[v] = g.row64(v);
        twin_class.assign(n, -1);
        for (int v = 0; v < n; ++v) {
            if (twin_class[v] != -1) continue;
            twin_class[v] = v;
            for (int u = v + 1; u < n; ++u) {
                if (twin_class[u] != -1) continue;
                std::uint64_t ru = rows[u] & ~(std::uint64_t{1} << v);
                std::uint64_t rv = rows[v] & ~(std::uint64_t{1} << u);
                if (ru == rv) twin_class[u] = v;
            }
        }
        best.assign(n, ~std::uint64_t{0});
        path.assign(n, 0);
        best_perm.assign(n, 0);
        placed.reserve(n);
    }

    std::uint64_t bits_to_placed(int v) const {
        std::uint64_t bits = 0;
        for (int p : placed) bits = (bits << 1) | ((rows[v] >> p) & 1u);
        return bits;
    }

    // tight: path[0..depth-1] equals best[0..depth-1]; otherwise it is
    // strictly smaller and nothing in this subtree can be pruned against
    // best until a leaf below replaces it.
    void search(bool tight) {
        int depth = static_cast<int>(placed.size());
        if (depth == n) {
            best = path;
            best_perm = placed;
            ++version;
            return;
        }
        std::vector<std::pair<std::uint64_t, int>> cand;
        cand.reserve(n - depth);
        std::uint64_t seen_class = 0;
        for (int v = 0; v < n; ++v) {
            if ((placed_mask >> v) & 1u) continue;
            int cls = twin_class[v];
            if (!((placed_mask >> cls) & 1u)) {
                if ((seen_class >> cls) & 1u) continue;
                seen_class |= std::uint64_t{1} << cls;
            }
            cand.emplace_back(bits_to_placed(v), v);
        }
        std::sort(cand.begin(), cand.end());
        long long seen_version = version;
        for (auto [bits, v] : cand) {
            if (version != seen_version) {
                // best was replaced below this node, so our prefix matches it again
                tight = true;
                seen_version = version;
            }
            bool child_tight;
            if (tight) {
                if (bits > best[depth]) break;  // candidates are sorted
                child_tight = bits == best[depth];
            } else {
                child_tight = false;
            }
            path[depth] = bits;
            placed.push_back(v);
            placed_mask |= std::uint64_t{1} << v;
            search(child_tight);
            placed_mask &= ~(std::uint64_t{1} << v);
            placed.pop_back();
        }
    }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
    int n = g.vertex_count();
    if (n > kCanonicalMaxVertices)
        throw std::runtime_error("canonical_form: graph exceeds canonical-labeling size cap");
    if (n == 0) return {};
    CanonicalSearch s(g);
    s.search(true);
    return s.best_perm;
}

std::vector<std::uint8_t> canonical_form(const Graph& g) {
    auto order = canonical_order(g);
    int n = g.vertex_count();
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n));
    int bitpos = 0;
    std::uint8_t cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = static_cast<std::uint8_t>(cur << 1);
            if (g.has_edge(order[i], order[j])) cur |= 1;
            if (++bitpos == 8) {
                out.push_back(cur);
                bitpos = 0;
                cur = 0;
            }
        }
    }
    if (bitpos != 0) out.push_back(static_cast<std::uint8_t>(cur << (8 - bitpos)));
    return out;
}

std::string canonical_hex(const Graph& g) {
    static const char* digits = "0123456789abcdef";
    std::string hex;
    for (std::uint8_t b : canonical_form(g)) {
        hex.push_back(digits[b >> 4]);
        hex.push_back(digits[b & 15]);
    }
    return hex;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace minorlab
