#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sparsenet/errors.hpp"
#include "sparsenet/net_model.hpp"
#include "sparsenet/serialization.hpp"

using namespace sparsenet;

// U={a,b}, V={1,2,3,4} as indices a=0,b=1 and 1..4 -> 0..3:
// a->1:+1, a->2:+1, a->3:-1; b->3:+1, b->4:+1
static SignedBipartiteGraph tiny_graph() {
    return SignedBipartiteGraph(2, 4,
                                {{0, 0, 1.0}, {0, 1, 1.0}, {0, 2, -1.0}, {1, 2, 1.0}, {1, 3, 1.0}});
}

static DeepNetParams base_params(std::uint32_t l, std::uint32_t n, double d, double rho,
                                 std::uint64_t seed) {
    DeepNetParams p;
    p.num_layers = l;
    p.layer_size = n;
    p.expected_degree = d;
    p.degree_exponent = n > 1 ? std::log(d) / std::log(double(n)) : 0.0;
    p.top_density = rho;
    p.rng_seed = seed;
    return p;
}

TEST_CASE("tiny forward pass") {
    auto g = tiny_graph();
    ForwardWorkspace ws;
    std::vector<std::uint32_t> out;

    forward_layer_into(g, {0}, ws, out);
    CHECK(out == std::vector<std::uint32_t>{0, 1});

    // node 3 (index 2) gets -1+1=0: strict sign keeps it off
    forward_layer_into(g, {0, 1}, ws, out);
    CHECK(out == std::vector<std::uint32_t>{0, 1, 3});

    forward_layer_into(g, {}, ws, out);
    CHECK(out.empty());

    auto y = forward_layer_real(g, SparseBinaryVector(2, {0, 1}));
    CHECK(y == std::vector<double>{1.0, 1.0, 0.0, 1.0});
}

TEST_CASE("forward rejects dimension mismatch") {
    auto g = tiny_graph();
    CHECK_THROWS_AS(forward_layer(g, SparseBinaryVector(5, {0})), DimensionMismatch);
}

TEST_CASE("d = n forces the complete bipartite graph") {
    auto p = base_params(1, 4, 4.0, 0.5, 123);
    auto net = generate_network(p);
    CHECK(net.graph(0).edge_count() == 16);
}

TEST_CASE("generation is deterministic") {
    auto p = base_params(2, 300, 6.0, 0.01, 99);
    auto a = generate_network(p);
    auto b = generate_network(p);
    CHECK(a == b);
    auto sa = generate_samples(a, 20, 5, true);
    auto sb = generate_samples(b, 20, 5, true);
    for (int i = 0; i < 20; ++i) {
        CHECK(sa[i].observed == sb[i].observed);
        CHECK(sa[i].hidden == sb[i].hidden);
    }
    p.rng_seed = 100;
    auto c = generate_network(p);
    CHECK(!(a == c));
}

TEST_CASE("mean degree concentrates around d") {
    // Binomial-tail oracle: total edge count ~ Bin(n^2, d/n) with sd
    // sqrt(n*d*(1-d/n)); the [9,11] band sits far outside 6 sigmas, so
    // >= 99/100 seeds must land inside.
    const std::uint32_t n = 1000;
    const double d = 10;
    double sd_mean_degree = std::sqrt(double(n) * d * (1.0 - d / n)) / n;
    CHECK(1.0 / sd_mean_degree > 6.0);
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto net = generate_network(base_params(1, n, d, 0.01, seed));
        double mean = double(net.graph(0).edge_count()) / n;
        if (mean >= 9.0 && mean <= 11.0) ++ok;
    }
    CHECK(ok >= 99);
}

TEST_CASE("strict_degree bands every node") {
    auto p = base_params(1, 2000, 16.0, 0.005, 7);
    p.strict_degree = true;
    auto net = generate_network(p);
    const auto& g = net.graph(0);
    for (std::uint32_t u = 0; u < g.n_upper(); ++u) {
        auto deg = double(g.degree(u));
        auto pos = double(g.positive_degree(u));
        CHECK(deg >= 0.8 * 16);
        CHECK(deg <= 1.2 * 16);
        CHECK(pos >= 0.4 * 16);
        CHECK(pos <= 0.6 * 16);
    }
}

TEST_CASE("sample_top sizes") {
    Philox rng(1);
    auto p = base_params(1, 10, 2.0, 0.2, 0);
    for (int i = 0; i < 50; ++i) CHECK(sample_top(p, rng).count() == 2);

    auto full = base_params(1, 3, 1.0, 1.0, 0);
    for (int i = 0; i < 5; ++i) {
        auto s = sample_top(full, rng);
        CHECK(s.support == std::vector<std::uint32_t>{0, 1, 2});
    }
}

TEST_CASE("sample_top per-index frequency") {
    // Chernoff oracle: count_i ~ Bin(1e5, 0.01), sd ~= 31.5; the +-0.002
    // band is +-200 counts, beyond 6 sigmas.
    const std::uint32_t n = 1000;
    auto p = base_params(1, n, 2.0, 0.01, 0);
    Philox rng(77);
    std::vector<std::uint32_t> counts(n, 0);
    const int N = 100000;
    for (int i = 0; i < N; ++i) {
        auto s = sample_top(p, rng);
        for (auto idx : s.support) counts[idx]++;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        double freq = double(counts[i]) / N;
        CHECK(freq >= 0.008);
        CHECK(freq <= 0.012);
    }
}

TEST_CASE("density schedule") {
    auto s2 = density_schedule(base_params(2, 10000, 10.0, 0.004, 0));
    CHECK(s2.rho[2] == doctest::Approx(0.004));
    CHECK(s2.rho[1] == doctest::Approx(0.02));

    auto s1 = density_schedule(base_params(1, 100, 4.0, 0.3, 0));
    CHECK(s1.rho[1] == doctest::Approx(0.3));

    auto s3 = density_schedule(base_params(3, 100000, 8.0, 0.001, 0));
    CHECK(s3.rho[3] == doctest::Approx(0.001));
    CHECK(s3.rho[2] == doctest::Approx(0.004));
    CHECK(s3.rho[1] == doctest::Approx(0.016));
}

TEST_CASE("invalid parameter combinations") {
    // rho_1 >= 1
    CHECK_THROWS_AS(generate_network(base_params(2, 1000, 10.0, 0.5, 0)), InvalidParams);
    // d > n
    CHECK_THROWS_AS(generate_network(base_params(1, 4, 5.0, 0.5, 0)), InvalidParams);
    CHECK_THROWS_AS(generate_network(base_params(1, 100, 0.0, 0.5, 0)), InvalidParams);
}

TEST_CASE("forward matches dense matrix oracle") {
    // exhaustive over all supports for n_upper <= 12
    auto p = base_params(1, 12, 3.0, 0.25, 31);
    auto net = generate_network(p);
    const auto& g = net.graph(0);
    ForwardWorkspace ws;
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
        std::vector<std::uint32_t> supp;
        for (std::uint32_t b = 0; b < 12; ++b)
            if (mask & (1u << b)) supp.push_back(b);
        forward_layer_into(g, supp, ws, out);
        // dense recompute
        std::vector<double> acc(12, 0.0);
        for (auto u : supp)
            for (const auto& e : g.forward(u)) acc[e.to] += e.weight;
        std::vector<std::uint32_t> expect;
        for (std::uint32_t v = 0; v < 12; ++v)
            if (acc[v] > 0) expect.push_back(v);
        REQUIRE(out == expect);
    }
}

TEST_CASE("forward matches dense oracle on random 64-dim inputs") {
    auto p = base_params(1, 64, 6.0, 0.1, 8);
    auto net = generate_network(p);
    const auto& g = net.graph(0);
    Philox rng(5);
    ForwardWorkspace ws;
    std::vector<std::uint32_t> out;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::uint32_t> supp;
        for (std::uint32_t u = 0; u < 64; ++u)
            if (rng.bernoulli(0.2)) supp.push_back(u);
        forward_layer_into(g, supp, ws, out);
        std::vector<double> acc(64, 0.0);
        for (auto u : supp)
            for (const auto& e : g.forward(u)) acc[e.to] += e.weight;
        std::vector<std::uint32_t> expect;
        for (std::uint32_t v = 0; v < 64; ++v)
            if (acc[v] > 0) expect.push_back(v);
        REQUIRE(out == expect);
    }
}

TEST_CASE("hidden layers are consistent with the forward rule") {
    auto p = base_params(2, 500, 6.0, 0.01, 17);
    auto net = generate_network(p);
    auto samples = generate_samples(net, 50, 3, true);
    for (const auto& s : samples) {
        REQUIRE(s.hidden.size() == 2);
        // hidden[0] = h^(2) top, hidden[1] = h^(1) = forward(G_1, h^(2))
        auto h1 = forward_layer(net.graph(1), s.hidden[0]);
        CHECK(h1 == s.hidden[1]);
        auto y = forward_layer(net.graph(0), s.hidden[1]);
        CHECK(y == s.observed);
    }
}

TEST_CASE("measured hidden density stays in the 3/4..5/4 band") {
    // rho_1 = 0.008, rho_1*d = 0.064 <= 0.1
    auto p = base_params(2, 2000, 8.0, 0.002, 11);
    auto net = generate_network(p);
    NetSampler sampler(net, 2);
    std::vector<std::vector<std::uint32_t>> stack;
    double total = 0;
    const int N = 10000;
    for (int i = 0; i < N; ++i) {
        sampler.hidden_stack_into(i, stack);
        total += double(stack[1].size());
    }
    double measured = total / N / p.layer_size;
    double rho1 = density_schedule(p).rho[1];
    CHECK(measured >= 0.75 * rho1);
    CHECK(measured <= 1.25 * rho1);
}

TEST_CASE("count=0 gives an empty stream") {
    auto net = generate_network(base_params(1, 50, 3.0, 0.1, 1));
    CHECK(generate_samples(net, 0, 0, false).empty());
}

TEST_CASE("net serialization round-trips") {
    for (auto wm : {WeightMode::PlusMinusOne, WeightMode::UniformReal}) {
        auto p = base_params(2, 120, 5.0, 0.02, 23);
        p.weight_mode = wm;
        p.output_mode = wm == WeightMode::UniformReal ? OutputMode::RealValued : OutputMode::Thresholded;
        auto net = generate_network(p);
        std::stringstream ss;
        save_net(ss, net);
        auto loaded = load_net(ss);
        CHECK(loaded == net);
        CHECK(loaded.params().num_layers == p.num_layers);
        CHECK(loaded.params().weight_mode == p.weight_mode);
        CHECK(loaded.params().output_mode == p.output_mode);
    }
}

TEST_CASE("sample serialization round-trips") {
    auto p = base_params(2, 80, 4.0, 0.05, 3);
    auto net = generate_network(p);
    auto samples = generate_samples(net, 25, 9, true);
    std::stringstream ss;
    save_samples(ss, samples, OutputMode::Thresholded);
    auto loaded = load_samples(ss, 80, OutputMode::Thresholded);
    REQUIRE(loaded.size() == samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(loaded[i].observed == samples[i].observed);
        CHECK(loaded[i].hidden == samples[i].hidden);
    }
}
