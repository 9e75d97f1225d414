#include "sparsenet/net_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "sparsenet/errors.hpp"

namespace sparsenet {

namespace {
constexpr std::uint64_t kLayerTag = 0x4C415945;  // stream tags
constexpr std::uint64_t kSampleTag = 0x53414D50;
constexpr int kMaxNodeAttempts = 100;
} // namespace

std::uint32_t DeepNetParams::top_support_size() const {
    auto k = static_cast<std::uint32_t>(std::llround(top_density * layer_size));
    return k;
}

void DeepNetParams::validate() const {
    if (num_layers < 1) throw InvalidParams("num_layers must be >= 1");
    if (layer_size < 1) throw InvalidParams("layer_size must be >= 1");
    if (expected_degree <= 0) throw InvalidParams("expected_degree must be > 0");
    if (expected_degree > layer_size) throw InvalidParams("expected_degree exceeds layer size");
    if (top_density <= 0 || top_density > 1) throw InvalidParams("top_density must be in (0,1]");
    if (top_density * layer_size < 0.5) throw InvalidParams("top_density * n rounds to zero");
    if (num_layers > 1) {
        double rho1 = top_density * std::pow(expected_degree / 2.0, num_layers - 1);
        if (rho1 >= 1.0) throw InvalidParams("density schedule reaches rho_1 >= 1");
    }
}

DensitySchedule density_schedule(const DeepNetParams& params, double constant_cap) {
    params.validate();
    DensitySchedule s;
    s.rho.resize(params.num_layers + 1);
    s.rho[params.num_layers] = params.top_density;
    for (std::uint32_t i = params.num_layers; i-- > 0;)
        s.rho[i] = s.rho[i + 1] * params.expected_degree / 2.0;
    s.top_constant = s.rho[0];
    s.constant_warning = s.top_constant > constant_cap;
    return s;
}

DeepNet::DeepNet(DeepNetParams params, std::vector<SignedBipartiteGraph> graphs)
    : params_(params), graphs_(std::move(graphs)) {
    if (graphs_.size() != params_.num_layers) throw InvalidParams("layer count mismatch");
    for (const auto& g : graphs_)
        if (g.n_upper() != params_.layer_size || g.n_lower() != params_.layer_size)
            throw InvalidParams("layer dimension mismatch");
}

namespace {

// children of one upper node via geometric gap skipping
void bernoulli_children(std::uint32_t n, double p, Philox& rng, std::vector<std::uint32_t>& out) {
    out.clear();
    if (p >= 1.0) {
        out.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) out[v] = v;
        return;
    }
    if (p <= 0.0) return;
    double log1mp = std::log1p(-p);
    double v = 0;
    for (;;) {
        double u = rng.uniform();
        v += 1.0 + std::floor(std::log1p(-u) / log1mp);
        if (v > n) break;
        out.push_back(static_cast<std::uint32_t>(v - 1));
    }
}

double draw_weight(WeightMode mode, Philox& rng) {
    if (mode == WeightMode::PlusMinusOne) return rng.bernoulli(0.5) ? 1.0 : -1.0;
    double w = 0.0;
    while (w == 0.0) w = rng.uniform_signed();
    return w;
}

} // namespace

DeepNet generate_network(const DeepNetParams& params) {
    params.validate();
    const std::uint32_t n = params.layer_size;
    const double p = params.expected_degree / n;
    const double d = params.expected_degree;
    const auto deg_lo = static_cast<std::size_t>(std::ceil(0.8 * d));
    const auto deg_hi = static_cast<std::size_t>(std::floor(1.2 * d));
    const auto sign_lo = static_cast<std::size_t>(std::ceil(0.4 * d));
    const auto sign_hi = static_cast<std::size_t>(std::floor(0.6 * d));

    Philox root(params.rng_seed, kLayerTag);
    std::vector<SignedBipartiteGraph> graphs;
    graphs.reserve(params.num_layers);
    std::vector<std::uint32_t> children;
    std::vector<double> weights;

    // graphs emitted top-down G_{l-1} .. G_0, stored by graph index
    std::vector<SignedBipartiteGraph> by_index(params.num_layers);
    for (std::uint32_t li = 0; li < params.num_layers; ++li) {
        Philox layer_rng = root.derive(li);
        std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges;
        edges.reserve(static_cast<std::size_t>(double(n) * d * 1.1));
        for (std::uint32_t u = 0; u < n; ++u) {
            Philox node_rng = layer_rng.derive(u);
            bool ok = false;
            for (int attempt = 0; attempt < kMaxNodeAttempts && !ok; ++attempt) {
                bernoulli_children(n, p, node_rng, children);
                weights.resize(children.size());
                std::size_t pos = 0;
                for (auto& w : weights) {
                    w = draw_weight(params.weight_mode, node_rng);
                    if (w > 0) ++pos;
                }
                if (params.strict_degree) {
                    std::size_t deg = children.size();
                    std::size_t neg = deg - pos;
                    ok = deg >= deg_lo && deg <= deg_hi && pos >= sign_lo && pos <= sign_hi &&
                         neg >= sign_lo && neg <= sign_hi;
                } else {
                    ok = true;
                }
            }
            if (!ok) throw InvalidParams("strict_degree: node band not met after 100 attempts");
            for (std::size_t j = 0; j < children.size(); ++j)
                edges.emplace_back(u, children[j], weights[j]);
        }
        // li = 0 is the top graph G_{l-1}
        by_index[params.num_layers - 1 - li] = SignedBipartiteGraph(n, n, std::move(edges));
    }
    return DeepNet(params, std::move(by_index));
}

void sample_top_into(std::uint32_t n, std::uint32_t k, Philox& rng, std::vector<std::uint32_t>& out) {
    out.clear();
    if (k >= n) {
        out.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) out[i] = i;
        return;
    }
    // Floyd's uniform k-subset
    for (std::uint32_t j = n - k; j < n; ++j) {
        auto t = static_cast<std::uint32_t>(rng.uniform_index(j + 1));
        if (std::find(out.begin(), out.end(), t) == out.end())
            out.push_back(t);
        else
            out.push_back(j);
    }
    std::sort(out.begin(), out.end());
}

SparseBinaryVector sample_top(const DeepNetParams& params, Philox& rng) {
    std::uint32_t k = params.top_support_size();
    if (k < 1) throw InvalidParams("top support size rounds to zero");
    std::vector<std::uint32_t> supp;
    sample_top_into(params.layer_size, k, rng, supp);
    return SparseBinaryVector(params.layer_size, std::move(supp));
}

void forward_layer_into(const SignedBipartiteGraph& g, const std::vector<std::uint32_t>& support,
                        ForwardWorkspace& ws, std::vector<std::uint32_t>& out) {
    ws.acc.assign(g.n_lower(), 0.0);
    ws.touched.clear();
    for (auto u : support) {
        for (const auto& e : g.forward(u)) {
            if (ws.acc[e.to] == 0.0) ws.touched.push_back(e.to);
            ws.acc[e.to] += e.weight;
        }
    }
    out.clear();
    for (auto v : ws.touched)
        if (ws.acc[v] > 0.0) out.push_back(v);
    std::sort(out.begin(), out.end());
}

SparseBinaryVector forward_layer(const SignedBipartiteGraph& g, const SparseBinaryVector& h) {
    if (h.dimension != g.n_upper()) throw DimensionMismatch("forward_layer: dimension mismatch");
    ForwardWorkspace ws;
    std::vector<std::uint32_t> out;
    forward_layer_into(g, h.support, ws, out);
    return SparseBinaryVector(g.n_lower(), std::move(out));
}

void forward_layer_real_into(const SignedBipartiteGraph& g, const std::vector<std::uint32_t>& support,
                             std::vector<double>& out) {
    out.assign(g.n_lower(), 0.0);
    for (auto u : support)
        for (const auto& e : g.forward(u)) out[e.to] += e.weight;
}

std::vector<double> forward_layer_real(const SignedBipartiteGraph& g, const SparseBinaryVector& h) {
    if (h.dimension != g.n_upper()) throw DimensionMismatch("forward_layer_real: dimension mismatch");
    std::vector<double> out;
    forward_layer_real_into(g, h.support, out);
    return out;
}

NetSampler::NetSampler(const DeepNet& net, std::uint64_t sample_seed)
    : net_(&net), seed_(sample_seed), k_(net.params().top_support_size()) {}

void NetSampler::observed_into(std::uint64_t index, std::vector<std::uint32_t>& out) {
    Philox rng = Philox(seed_, kSampleTag).derive(index);
    sample_top_into(net_->layer_size(), k_, rng, cur_);
    const std::uint32_t l = net_->num_layers();
    for (std::uint32_t i = l; i-- > 1;) {
        forward_layer_into(net_->graph(i), cur_, ws_, nxt_);
        std::swap(cur_, nxt_);
    }
    forward_layer_into(net_->graph(0), cur_, ws_, out);
}

void NetSampler::observed_real_into(std::uint64_t index, std::vector<double>& out) {
    Philox rng = Philox(seed_, kSampleTag).derive(index);
    sample_top_into(net_->layer_size(), k_, rng, cur_);
    const std::uint32_t l = net_->num_layers();
    for (std::uint32_t i = l; i-- > 1;) {
        forward_layer_into(net_->graph(i), cur_, ws_, nxt_);
        std::swap(cur_, nxt_);
    }
    forward_layer_real_into(net_->graph(0), cur_, out);
}

void NetSampler::hidden_stack_into(std::uint64_t index, std::vector<std::vector<std::uint32_t>>& out) {
    Philox rng = Philox(seed_, kSampleTag).derive(index);
    const std::uint32_t l = net_->num_layers();
    out.resize(l);
    sample_top_into(net_->layer_size(), k_, rng, out[0]);
    for (std::uint32_t j = 1; j < l; ++j)
        forward_layer_into(net_->graph(l - j), out[j - 1], ws_, out[j]);
}

Sample NetSampler::full_sample(std::uint64_t index) {
    Sample s;
    std::vector<std::vector<std::uint32_t>> stack;
    hidden_stack_into(index, stack);
    const std::uint32_t n = net_->layer_size();
    s.hidden.reserve(stack.size());
    for (auto& supp : stack) s.hidden.emplace_back(n, supp);
    if (net_->params().output_mode == OutputMode::Thresholded) {
        std::vector<std::uint32_t> y;
        forward_layer_into(net_->graph(0), stack.back(), ws_, y);
        s.observed = SparseBinaryVector(n, std::move(y));
    } else {
        forward_layer_real_into(net_->graph(0), stack.back(), s.observed_real);
    }
    return s;
}

std::vector<Sample> generate_samples(const DeepNet& net, std::uint64_t count, std::uint64_t sample_seed,
                                     bool keep_hidden) {
    NetSampler sampler(net, sample_seed);
    std::vector<Sample> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Sample s = sampler.full_sample(i);
        if (!keep_hidden) s.hidden.clear();
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace sparsenet
