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

#ifndef QCES_GRAPH_H
#define QCES_GRAPH_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qces/bits.h"

namespace qces {

struct Edge {
    uint32_t u = 0;
    uint32_t v = 0;
    bool operator==(const Edge &other) const = default;
};

/// Undirected multigraph. Parallel edges are allowed, self-loops are not.
/// Edge order is significant: edge e indexes column e of the incidence
/// matrix and bit e of a bond vector.
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t vertex_count) : vertex_count_(vertex_count) {}
    Graph(size_t vertex_count, std::vector<Edge> edges);

    void add_edge(uint32_t u, uint32_t v);

    size_t vertex_count() const { return vertex_count_; }
    size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(size_t index) const { return edges_.at(index); }

    std::vector<size_t> degrees() const;
    std::vector<uint32_t> component_labels() const;
    size_t component_count() const;
    bool is_connected() const;
    size_t non_isolated_vertex_count() const;

    /// Keeps one copy of each parallel class, preserving first-seen order.
    Graph simplified() const;
    bool is_simple() const;

    bool operator==(const Graph &other) const = default;

   private:
    size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

Graph complete_graph(size_t n);
Graph complete_bipartite_graph(size_t a, size_t b);

/// |V| x |E| matrix; column e has ones exactly at the endpoints of edge e.
BitMatrix incidence_matrix(const Graph &g);

struct CycleSpace {
    BitMatrix basis;  // columns span ker(incidence)
    size_t nullity = 0;
    uint64_t even_subgraph_count = 0;  // 2^nullity
};

/// Kernel of the incidence matrix; its elements select the even subgraphs.
CycleSpace cycle_space(const Graph &g);

enum class MinorOp : uint8_t { kDelete, kContract };

/// One minor-taking step. Contraction merges the edge's endpoints into the
/// smaller label, keeps parallel edges and drops resulting self-loops.
Graph minor_step(const Graph &g, size_t edge_index, MinorOp op,
                 bool drop_isolated = false);

Graph drop_isolated_vertices(const Graph &g);

/// Exact multigraph isomorphism by backtracking; intended for small graphs.
bool are_isomorphic(const Graph &a, const Graph &b);

struct MinorStepRecord {
    size_t edge_index = 0;
    MinorOp op = MinorOp::kDelete;
};

enum class SearchStatus : uint8_t { kFound, kAbsent, kBudgetExceeded };

struct MinorSearchResult {
    SearchStatus status = SearchStatus::kAbsent;
    // Replayable when found: apply minor_step for each record in order
    // (without dropping isolated vertices), then drop isolated vertices;
    // the result is isomorphic to the pattern.
    std::vector<MinorStepRecord> witness;
    uint64_t nodes_visited = 0;
};

/// Decides whether pattern is a minor of g by memoized branch and bound
/// over deletions and contractions. Exponential in the worst case; the
/// node budget turns runaway searches into kBudgetExceeded.
MinorSearchResult find_minor(const Graph &g, const Graph &pattern,
                             uint64_t node_budget = 1000000);

struct ClassifyReport {
    bool planar = false;
    bool outerplanar = false;          // planar and no K4 or K2,3 minor
    bool euler_quick_pass = false;     // |E| <= 3|V| - 6
    bool theta_obstruction_free = false;  // no K4 or (K3,3 minus an edge) minor
};

/// Throws CapExceeded if a minor search exhausts its budget.
ClassifyReport classify(const Graph &g, uint64_t node_budget = 1000000);

}  // namespace qces

#endif
