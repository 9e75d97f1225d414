#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsenet/bipartite_graph.hpp"
#include "sparsenet/rng.hpp"
#include "sparsenet/sparse_vector.hpp"

namespace sparsenet {

enum class WeightMode { PlusMinusOne, UniformReal };
enum class OutputMode { RealValued, Thresholded };

struct DeepNetParams {
    std::uint32_t num_layers = 1;      // l
    std::uint32_t layer_size = 0;      // n
    double expected_degree = 0.0;      // d
    double degree_exponent = 0.0;      // gamma, provenance only
    double top_density = 0.0;          // rho_l
    WeightMode weight_mode = WeightMode::PlusMinusOne;
    OutputMode output_mode = OutputMode::Thresholded;
    std::uint64_t rng_seed = 0;
    // Reject-and-regenerate nodes whose degree (and per-sign degree) falls
    // outside [0.8d, 1.2d] ([0.4d, 0.6d] per sign).
    bool strict_degree = false;

    std::uint32_t top_support_size() const; // k = round(rho_l * n), >= 1
    void validate() const;                  // throws InvalidParams
};

struct DensitySchedule {
    std::vector<double> rho;   // rho[i] for layer i; rho[l]=rho_l .. rho[0]=bottom analogue
    double top_constant = 0.0; // rho_l * (d/2)^l, the O(1) constant
    bool constant_warning = false;
};

DensitySchedule density_schedule(const DeepNetParams& params, double constant_cap = 8.0);

// Ordered stack of layer graphs. graph(i) = G_i drives layer i+1 (upper)
// down to layer i (lower); layer 0 is the observed layer.
class DeepNet {
public:
    DeepNet() = default;
    DeepNet(DeepNetParams params, std::vector<SignedBipartiteGraph> graphs);

    const DeepNetParams& params() const { return params_; }
    std::uint32_t num_layers() const { return params_.num_layers; }
    std::uint32_t layer_size() const { return params_.layer_size; }
    const SignedBipartiteGraph& graph(std::uint32_t i) const { return graphs_[i]; }
    SignedBipartiteGraph& mutable_graph(std::uint32_t i) { return graphs_[i]; }

    bool operator==(const DeepNet& o) const { return graphs_ == o.graphs_; }

private:
    DeepNetParams params_;
    std::vector<SignedBipartiteGraph> graphs_; // graphs_[i] = G_i
};

DeepNet generate_network(const DeepNetParams& params);

// uniform k-subset of [0, n) with k = round(rho_l * n)
SparseBinaryVector sample_top(const DeepNetParams& params, Philox& rng);
void sample_top_into(std::uint32_t n, std::uint32_t k, Philox& rng, std::vector<std::uint32_t>& out);

// Scratch space reused across forward passes.
struct ForwardWorkspace {
    std::vector<double> acc;
    std::vector<std::uint32_t> touched;
};

// Thresholded forward: out = indices with sum strictly > 0.
void forward_layer_into(const SignedBipartiteGraph& g, const std::vector<std::uint32_t>& support,
                        ForwardWorkspace& ws, std::vector<std::uint32_t>& out);
SparseBinaryVector forward_layer(const SignedBipartiteGraph& g, const SparseBinaryVector& h);

// Real-valued forward: y = G h.
std::vector<double> forward_layer_real(const SignedBipartiteGraph& g, const SparseBinaryVector& h);
void forward_layer_real_into(const SignedBipartiteGraph& g, const std::vector<std::uint32_t>& support,
                             std::vector<double>& out);

struct Sample {
    // hidden[j] = h^(l-j): top layer first, then down to h^(1); empty unless retained
    std::vector<SparseBinaryVector> hidden;
    SparseBinaryVector observed;            // Thresholded mode
    std::vector<double> observed_real;      // RealValued mode
};

// Deterministic per-index sampler; instances are independent and cheap to
// copy, so each worker thread can own one.
class NetSampler {
public:
    NetSampler(const DeepNet& net, std::uint64_t sample_seed);

    // observed layer only, thresholded mode
    void observed_into(std::uint64_t index, std::vector<std::uint32_t>& out);
    // observed layer only, real mode (dense, size n)
    void observed_real_into(std::uint64_t index, std::vector<double>& out);
    // all layers
    Sample full_sample(std::uint64_t index);
    // top support and every hidden layer, bottom-most last; out[j] = h^(l-j)
    void hidden_stack_into(std::uint64_t index, std::vector<std::vector<std::uint32_t>>& out);

    std::uint32_t top_k() const { return k_; }

private:
    const DeepNet* net_;
    std::uint64_t seed_;
    std::uint32_t k_;
    ForwardWorkspace ws_;
    std::vector<std::uint32_t> cur_, nxt_;
};

// Convenience batch API (tests, CLI); keep_hidden retains all layers.
std::vector<Sample> generate_samples(const DeepNet& net, std::uint64_t count, std::uint64_t sample_seed,
                                     bool keep_hidden);

} // namespace sparsenet
