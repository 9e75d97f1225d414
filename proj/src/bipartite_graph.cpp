#include "sparsenet/bipartite_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparsenet {

SignedBipartiteGraph::SignedBipartiteGraph(
    std::uint32_t n_upper, std::uint32_t n_lower,
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges)
    : n_upper_(n_upper), n_lower_(n_lower) {
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    fwd_off_.assign(n_upper_ + 1, 0);
    bwd_off_.assign(n_lower_ + 1, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v, w] = edges[i];
        if (u >= n_upper_ || v >= n_lower_) throw std::invalid_argument("edge endpoint out of range");
        if (w == 0.0) throw std::invalid_argument("zero edge weight");
        if (i > 0 && std::get<0>(edges[i - 1]) == u && std::get<1>(edges[i - 1]) == v)
            throw std::invalid_argument("duplicate edge");
        fwd_off_[u + 1]++;
        bwd_off_[v + 1]++;
    }
    for (std::uint32_t u = 0; u < n_upper_; ++u) fwd_off_[u + 1] += fwd_off_[u];
    for (std::uint32_t v = 0; v < n_lower_; ++v) bwd_off_[v + 1] += bwd_off_[v];
    fwd_edges_.resize(edges.size());
    bwd_edges_.resize(edges.size());
    std::vector<std::size_t> fpos(fwd_off_.begin(), fwd_off_.end() - 1);
    std::vector<std::size_t> bpos(bwd_off_.begin(), bwd_off_.end() - 1);
    for (const auto& [u, v, w] : edges) {
        fwd_edges_[fpos[u]++] = {v, w};
        bwd_edges_[bpos[v]++] = {u, w};
    }
}

std::size_t SignedBipartiteGraph::positive_degree(std::uint32_t u) const {
    std::size_t c = 0;
    for (const auto& e : forward(u))
        if (e.weight > 0) ++c;
    return c;
}

double SignedBipartiteGraph::weight(std::uint32_t u, std::uint32_t v) const {
    auto f = forward(u);
    auto it = std::lower_bound(f.begin(), f.end(), v,
                               [](const Edge& e, std::uint32_t x) { return e.to < x; });
    if (it != f.end() && it->to == v) return it->weight;
    return 0.0;
}

std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> SignedBipartiteGraph::edge_list() const {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> out;
    out.reserve(fwd_edges_.size());
    for (std::uint32_t u = 0; u < n_upper_; ++u)
        for (const auto& e : forward(u)) out.emplace_back(u, e.to, e.weight);
    return out;
}

SignedBipartiteGraph SignedBipartiteGraph::positive_subgraph() const {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
    for (std::uint32_t u = 0; u < n_upper_; ++u)
        for (const auto& e : forward(u))
            if (e.weight > 0) edges.emplace_back(u, e.to, 1.0);
    return SignedBipartiteGraph(n_upper_, n_lower_, std::move(edges));
}

bool SignedBipartiteGraph::fwd_eq(const SignedBipartiteGraph& o) const {
    if (fwd_edges_.size() != o.fwd_edges_.size()) return false;
    for (std::size_t i = 0; i < fwd_edges_.size(); ++i)
        if (fwd_edges_[i].to != o.fwd_edges_[i].to || fwd_edges_[i].weight != o.fwd_edges_[i].weight)
            return false;
    return true;
}

} // namespace sparsenet
