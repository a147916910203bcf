#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sixj/tableaux.hpp"

namespace sixj {

// The graph of one-box growth on partitions of size <= max_degree: vertices
// are partitions ordered by (size, lex), edges go from each partition to its
// pieri_expand results. Every edge multiplicity is 1, so edges are plain
// vertex pairs. Immutable after build.
class FusionGraph {
public:
    static FusionGraph build(int max_degree);

    int max_degree() const { return max_degree_; }
    const std::vector<Partition>& vertices() const { return vertices_; }

    // Edges grouped by source vertex, targets in pieri_expand order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::optional<int> vertex_index(const Partition& p) const;

private:
    int max_degree_ = 0;
    std::vector<Partition> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::map<Partition, int> index_;
};

// A saturated chain of vertices; chain.front() is the start, each step adds
// one box.
struct FusionPath {
    std::vector<Partition> chain;

    friend bool operator==(const FusionPath&, const FusionPath&) = default;
};

// All monotone chains from `from` to `to`. The order matches
// enumerate_standard of the shape to\from, so path index i corresponds to
// tableau index i. Returns a single length-0 path when from == to, and an
// empty list when no chain exists. Throws DomainError(VertexMissing) when
// either endpoint is not a vertex of the graph.
std::vector<FusionPath> enumerate_paths(const FusionGraph& graph, const Partition& from,
                                        const Partition& to);

// The tableau of shape last\first whose entry at the cell added at step t is
// t. Throws std::invalid_argument on an empty chain.
StandardSkewTableau path_to_tableau(const FusionPath& path);

// Inverse of path_to_tableau.
FusionPath tableau_to_path(const StandardSkewTableau& t);

} // namespace sixj
