// Copyright 2026 The qces Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qces/graph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qces {

Graph::Graph(size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
    edges_.reserve(edges.size());
    for (const Edge &e : edges) {
        add_edge(e.u, e.v);
    }
}

void Graph::add_edge(uint32_t u, uint32_t v) {
    if (u >= vertex_count_ || v >= vertex_count_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    edges_.push_back(Edge{u, v});
}

std::vector<size_t> Graph::degrees() const {
    std::vector<size_t> deg(vertex_count_, 0);
    for (const Edge &e : edges_) {
        deg[e.u]++;
        deg[e.v]++;
    }
    return deg;
}

std::vector<uint32_t> Graph::component_labels() const {
    std::vector<uint32_t> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Edge &e : edges_) {
        uint32_t a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a < b ? b : a] = a < b ? a : b;
        }
    }
    std::vector<uint32_t> label(vertex_count_);
    std::map<uint32_t, uint32_t> compact;
    for (uint32_t v = 0; v < vertex_count_; v++) {
        uint32_t root = find(v);
        auto [it, _] = compact.try_emplace(root, static_cast<uint32_t>(compact.size()));
        label[v] = it->second;
    }
    return label;
}

size_t Graph::component_count() const {
    auto labels = component_labels();
    return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

bool Graph::is_connected() const { return component_count() <= 1; }

size_t Graph::non_isolated_vertex_count() const {
    auto deg = degrees();
    return std::count_if(deg.begin(), deg.end(), [](size_t d) { return d > 0; });
}

Graph Graph::simplified() const {
    Graph out(vertex_count_);
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (const Edge &e : edges_) {
        auto key = std::minmax(e.u, e.v);
        if (seen.insert(key).second) {
            out.add_edge(e.u, e.v);
        }
    }
    return out;
}

bool Graph::is_simple() const {
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (const Edge &e : edges_) {
        if (!seen.insert(std::minmax(e.u, e.v)).second) {
            return false;
        }
    }
    return true;
}

Graph complete_graph(size_t n) {
    Graph g(n);
    for (uint32_t u = 0; u < n; u++) {
        for (uint32_t v = u + 1; v < n; v++) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph complete_bipartite_graph(size_t a, size_t b) {
    Graph g(a + b);
    for (uint32_t u = 0; u < a; u++) {
        for (uint32_t v = 0; v < b; v++) {
            g.add_edge(u, static_cast<uint32_t>(a + v));
        }
    }
    return g;
}

BitMatrix incidence_matrix(const Graph &g) {
    BitMatrix m(g.vertex_count(), g.edge_count());
    for (size_t e = 0; e < g.edge_count(); e++) {
        m.set(g.edge(e).u, e, true);
        m.set(g.edge(e).v, e, true);
    }
    return m;
}

CycleSpace cycle_space(const Graph &g) {
    CycleSpace cs;
    cs.basis = nullspace_basis(incidence_matrix(g));
    cs.nullity = cs.basis.cols();
    if (cs.nullity >= 64) {
        throw CapExceeded("cycle space dimension " + std::to_string(cs.nullity) +
                          " too large to count even subgraphs");
    }
    cs.even_subgraph_count = uint64_t{1} << cs.nullity;
    return cs;
}

Graph minor_step(const Graph &g, size_t edge_index, MinorOp op, bool drop_isolated) {
    if (edge_index >= g.edge_count()) {
        throw std::out_of_range("minor_step edge index out of range");
    }
    Graph out(g.vertex_count());
    if (op == MinorOp::kDelete) {
        for (size_t e = 0; e < g.edge_count(); e++) {
            if (e != edge_index) {
                out.add_edge(g.edge(e).u, g.edge(e).v);
            }
        }
    } else {
        uint32_t keep = std::min(g.edge(edge_index).u, g.edge(edge_index).v);
        uint32_t gone = std::max(g.edge(edge_index).u, g.edge(edge_index).v);
        out = Graph(g.vertex_count() - 1);
        auto remap = [&](uint32_t v) -> uint32_t {
            if (v == gone) {
                return keep;
            }
            return v > gone ? v - 1 : v;
        };
        for (size_t e = 0; e < g.edge_count(); e++) {
            if (e == edge_index) {
                continue;
            }
            uint32_t u = remap(g.edge(e).u);
            uint32_t v = remap(g.edge(e).v);
            if (u != v) {
                out.add_edge(u, v);
            }
        }
    }
    return drop_isolated ? drop_isolated_vertices(out) : out;
}

Graph drop_isolated_vertices(const Graph &g) {
    auto deg = g.degrees();
    std::vector<uint32_t> remap(g.vertex_count(), 0);
    uint32_t next = 0;
    for (size_t v = 0; v < g.vertex_count(); v++) {
        if (deg[v] > 0) {
            remap[v] = next++;
        }
    }
    Graph out(next);
    for (const Edge &e : g.edges()) {
        out.add_edge(remap[e.u], remap[e.v]);
    }
    return out;
}

namespace {

using AdjCounts = std::vector<std::vector<uint8_t>>;

AdjCounts adjacency_counts(const Graph &g) {
    AdjCounts adj(g.vertex_count(), std::vector<uint8_t>(g.vertex_count(), 0));
    for (const Edge &e : g.edges()) {
        adj[e.u][e.v]++;
        adj[e.v][e.u]++;
    }
    return adj;
}

bool iso_backtrack(const AdjCounts &a, const AdjCounts &b, std::vector<int> &map_ab,
                   std::vector<bool> &used, size_t next) {
    size_t n = a.size();
    if (next == n) {
        return true;
    }
    for (size_t cand = 0; cand < n; cand++) {
        if (used[cand]) {
            continue;
        }
        bool ok = true;
        for (size_t prev = 0; prev < next && ok; prev++) {
            ok = a[next][prev] == b[cand][static_cast<size_t>(map_ab[prev])];
        }
        if (!ok) {
            continue;
        }
        map_ab[next] = static_cast<int>(cand);
        used[cand] = true;
        if (iso_backtrack(a, b, map_ab, used, next + 1)) {
            return true;
        }
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph &a, const Graph &b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    auto da = a.degrees();
    auto db = b.degrees();
    auto sa = da;
    auto sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
        return false;
    }
    AdjCounts ca = adjacency_counts(a);
    AdjCounts cb = adjacency_counts(b);
    std::vector<int> map_ab(a.vertex_count(), -1);
    std::vector<bool> used(a.vertex_count(), false);
    return iso_backtrack(ca, cb, map_ab, used, 0);
}

}  // namespace qces
