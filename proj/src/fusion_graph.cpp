#include "sixj/fusion_graph.hpp"

#include <stdexcept>

namespace sixj {

FusionGraph FusionGraph::build(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    FusionGraph g;
    g.max_degree_ = max_degree;
    for (int n = 0; n <= max_degree; ++n)
        for (Partition& p : partitions_of(n)) g.vertices_.push_back(std::move(p));
    for (size_t i = 0; i < g.vertices_.size(); ++i)
        g.index_[g.vertices_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < g.vertices_.size(); ++i) {
        if (g.vertices_[i].size() == max_degree) continue;
        for (const Partition& child : pieri_expand(g.vertices_[i]))
            g.edges_.emplace_back(static_cast<int>(i), g.index_.at(child));
    }
    return g;
}

std::optional<int> FusionGraph::vertex_index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

void paths_rec(const Partition& cur, const Partition& to, std::vector<Partition>& chain,
               std::vector<FusionPath>& out) {
    if (cur == to) {
        out.push_back(FusionPath{chain});
        return;
    }
    for (const Partition& next : pieri_expand(cur)) {
        if (!contains(next, to)) continue;
        chain.push_back(next);
        paths_rec(next, to, chain, out);
        chain.pop_back();
    }
}

} // namespace

std::vector<FusionPath> enumerate_paths(const FusionGraph& graph, const Partition& from,
                                        const Partition& to) {
    if (!graph.vertex_index(from))
        throw DomainError(ErrorCode::VertexMissing,
                          "'" + from.str() + "' is not a vertex of the fusion graph");
    if (!graph.vertex_index(to))
        throw DomainError(ErrorCode::VertexMissing,
                          "'" + to.str() + "' is not a vertex of the fusion graph");
    std::vector<FusionPath> out;
    if (!contains(from, to)) return out;
    std::vector<Partition> chain{from};
    paths_rec(from, to, chain, out);
    return out;
}

StandardSkewTableau path_to_tableau(const FusionPath& path) {
    if (path.chain.empty()) throw std::invalid_argument("empty fusion path");
    SkewShape shape(path.chain.front(), path.chain.back());
    std::vector<int> entries(shape.cell_count(), 0);
    for (size_t t = 1; t < path.chain.size(); ++t) {
        const Partition& prev = path.chain[t - 1];
        const Partition& cur = path.chain[t];
        Box added{};
        for (int r = 1; r <= cur.length(); ++r) {
            if (cur.part(r) != prev.part(r)) {
                added = Box{r, cur.part(r)};
                break;
            }
        }
        entries[shape.cell_index(added).value()] = static_cast<int>(t);
    }
    return StandardSkewTableau(std::move(shape), std::move(entries));
}

FusionPath tableau_to_path(const StandardSkewTableau& t) {
    return FusionPath{t.chain()};
}

} // namespace sixj
