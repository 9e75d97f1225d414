#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sparsenet {

// One layer's signed weighted bipartite graph, upper (hidden) side U driving
// lower side V. Stored as CSR adjacency both ways; the two views always
// enumerate the same edge set.
class SignedBipartiteGraph {
public:
    struct Edge {
        std::uint32_t to;
        double weight;
    };

    SignedBipartiteGraph() = default;
    // edges as (u, v, w) triples; duplicates and zero weights rejected.
    SignedBipartiteGraph(std::uint32_t n_upper, std::uint32_t n_lower,
                         std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges);

    std::uint32_t n_upper() const { return n_upper_; }
    std::uint32_t n_lower() const { return n_lower_; }
    std::size_t edge_count() const { return fwd_edges_.size(); }

    // F(u): children of upper node u
    std::span<const Edge> forward(std::uint32_t u) const {
        return {fwd_edges_.data() + fwd_off_[u], fwd_off_[u + 1] - fwd_off_[u]};
    }
    // B(v): parents of lower node v
    std::span<const Edge> backward(std::uint32_t v) const {
        return {bwd_edges_.data() + bwd_off_[v], bwd_off_[v + 1] - bwd_off_[v]};
    }

    std::size_t degree(std::uint32_t u) const { return fwd_off_[u + 1] - fwd_off_[u]; }
    std::size_t back_degree(std::uint32_t v) const { return bwd_off_[v + 1] - bwd_off_[v]; }

    std::size_t positive_degree(std::uint32_t u) const;

    // 0 if absent
    double weight(std::uint32_t u, std::uint32_t v) const;
    bool has_edge(std::uint32_t u, std::uint32_t v) const { return weight(u, v) != 0.0; }

    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edge_list() const;

    // graph on the same vertex sets keeping only w > 0 edges (weights +1)
    SignedBipartiteGraph positive_subgraph() const;

    bool operator==(const SignedBipartiteGraph& o) const {
        return n_upper_ == o.n_upper_ && n_lower_ == o.n_lower_ &&
               fwd_off_ == o.fwd_off_ && fwd_eq(o);
    }

private:
    bool fwd_eq(const SignedBipartiteGraph& o) const;

    std::uint32_t n_upper_ = 0, n_lower_ = 0;
    std::vector<std::size_t> fwd_off_, bwd_off_;
    std::vector<Edge> fwd_edges_, bwd_edges_;
};

} // namespace sparsenet
