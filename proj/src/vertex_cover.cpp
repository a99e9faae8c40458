#include "minorlab/vertex_cover.hpp"

#include <algorithm>

namespace minorlab {

namespace {

struct CoverSearch {
    const Graph& g;
    int n;
    std::vector<std::uint64_t> rows;
    std::uint64_t best_cover = 0;
    int best_size = 0;

    explicit CoverSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        rows.resize(n);
        for (int v = 0; v < n; ++v) rows[v] = g.row64(v);
        for (int v = 0; v < n; ++v) best_cover |= rows[v] ? (std::uint64_t{1} << v) : 0;
        // start from "all non-isolated vertices", trivially a cover
        best_size = __builtin_popcountll(best_cover);
    }

    // greedy maximal matching on the graph induced by `active`
    int matching_bound(std::uint64_t active) const {
        int bound = 0;
        std::uint64_t avail = active;
        while (avail) {
            int v = __builtin_ctzll(avail);
            avail &= avail - 1;
            std::uint64_t nbrs = rows[v] & avail;
            if (nbrs) {
                int u = __builtin_ctzll(nbrs);
                avail &= ~(std::uint64_t{1} << u);
                ++bound;
            }
        }
        return bound;
    }

    void search(std::uint64_t active, std::uint64_t cover, int size) {
        // drop vertices with no remaining edges
        int pick = -1, pick_deg = 0;
        for (std::uint64_t m = active; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            int d = __builtin_popcountll(rows[v] & active);
            if (d == 0) {
                active &= ~(std::uint64_t{1} << v);
                continue;
            }
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick == -1) {
            if (size < best_size) {
                best_size = size;
                best_cover = cover;
            }
            return;
        }
        if (size + matching_bound(active) >= best_size) return;
        if (pick_deg == 1) {
            // all active degrees are 1, so the rest is a matching: take the
            // smaller endpoint of each edge
            std::uint64_t done = 0, add = 0;
            int extra = 0;
            for (std::uint64_t m = active; m;) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                if ((done >> v) & 1u) continue;
                std::uint64_t nb = rows[v] & active & ~done;
                done |= std::uint64_t{1} << v;
                if (!nb) continue;
                int u = __builtin_ctzll(nb);
                add |= std::uint64_t{1} << v;
                done |= std::uint64_t{1} << u;
                ++extra;
            }
            if (size + extra < best_size) {
                best_size = size + extra;
                best_cover = cover | add;
            }
            return;
        }
        std::uint64_t pick_bit = std::uint64_t{1} << pick;
        // branch 1: pick joins the cover
        search(active & ~pick_bit, cover | pick_bit, size + 1);
        // branch 2: pick stays out, so all its active neighbors join
        std::uint64_t nbrs = rows[pick] & active;
        int count = __builtin_popcountll(nbrs);
        search(active & ~nbrs & ~pick_bit, cover | nbrs, size + count);
    }
};

}  // namespace

VertexCover min_vertex_cover(const Graph& g) {
    if (g.vertex_count() > 62) throw std::runtime_error("min_vertex_cover: limited to 62 vertices");
    if (g.edge_count() == 0) return {};
    CoverSearch s(g);
    s.search((std::uint64_t{1} << g.vertex_count()) - 1, 0, 0);
    VertexCover out;
    out.size = s.best_size;
    for (std::uint64_t m = s.best_cover; m;) {
        out.vertices.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

int vc_path(int k) {
    if (k < 1) throw std::invalid_argument("vc_path: k must be >= 1");
    return (k + 1) / 2;
}

int vc_claw(int d1, int d2, int d3) {
    if (d1 < 1 || d2 < 1 || d3 < 1) throw std::invalid_argument("vc_claw: branch lengths must be >= 1");
    if (d1 % 2 == 0 && d2 % 2 == 0 && d3 % 2 == 0) return (d1 + d2 + d3) / 2;
    int sum = 1;
    for (int d : {d1, d2, d3}) sum += d / 2;  // ceil((d-1)/2) == floor(d/2)
    return sum;
}

}  // namespace minorlab
