#include "sparsenet/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sparsenet/errors.hpp"

namespace sparsenet {

std::string weight_mode_name(WeightMode m) {
    return m == WeightMode::PlusMinusOne ? "pm1" : "real";
}
std::string output_mode_name(OutputMode m) {
    return m == OutputMode::Thresholded ? "thresh" : "real";
}

static WeightMode parse_weight_mode(const std::string& s) {
    if (s == "pm1") return WeightMode::PlusMinusOne;
    if (s == "real") return WeightMode::UniformReal;
    throw IoError("unknown weight mode: " + s);
}
static OutputMode parse_output_mode(const std::string& s) {
    if (s == "thresh") return OutputMode::Thresholded;
    if (s == "real") return OutputMode::RealValued;
    throw IoError("unknown output mode: " + s);
}

void save_net(std::ostream& os, const DeepNet& net) {
    const auto& p = net.params();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p.top_density);
    os << "layers " << p.num_layers << ' ' << p.layer_size << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", p.expected_degree);
    os << buf << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", p.top_density);
    os << buf << ' ' << weight_mode_name(p.weight_mode) << '-' << output_mode_name(p.output_mode)
       << ' ' << p.rng_seed << '\n';
    for (std::uint32_t i = p.num_layers; i-- > 0;) {
        os << "layer " << i << '\n';
        const auto& g = net.graph(i);
        for (std::uint32_t u = 0; u < g.n_upper(); ++u) {
            for (const auto& e : g.forward(u)) {
                os << u << ' ' << e.to << ' ';
                if (p.weight_mode == WeightMode::PlusMinusOne) {
                    os << (e.weight > 0 ? "1" : "-1");
                } else {
                    std::snprintf(buf, sizeof buf, "%.17g", e.weight);
                    os << buf;
                }
                os << '\n';
            }
        }
    }
}

void save_net_file(const std::string& path, const DeepNet& net) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for write: " + path);
    save_net(f, net);
}

DeepNet load_net(std::istream& is) {
    std::string tok;
    if (!(is >> tok) || tok != "layers") throw IoError("bad net header");
    DeepNetParams p;
    std::string mode;
    if (!(is >> p.num_layers >> p.layer_size >> p.expected_degree >> p.top_density >> mode >> p.rng_seed))
        throw IoError("bad net header fields");
    auto dash = mode.find('-');
    if (dash == std::string::npos) throw IoError("bad mode token: " + mode);
    p.weight_mode = parse_weight_mode(mode.substr(0, dash));
    p.output_mode = parse_output_mode(mode.substr(dash + 1));
    p.degree_exponent = p.layer_size > 1 ? std::log(p.expected_degree) / std::log(double(p.layer_size)) : 0.0;

    std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, double>>> edges(p.num_layers);
    std::int64_t cur = -1;
    while (is >> tok) {
        if (tok == "layer") {
            std::uint32_t i;
            if (!(is >> i) || i >= p.num_layers) throw IoError("bad layer index");
            cur = i;
        } else {
            if (cur < 0) throw IoError("edge before layer line");
            std::uint32_t u = 0, v = 0;
            double w = 0;
            try {
                u = static_cast<std::uint32_t>(std::stoul(tok));
            } catch (...) {
                throw IoError("bad edge line");
            }
            if (!(is >> v >> w)) throw IoError("bad edge line");
            edges[cur].emplace_back(u, v, w);
        }
    }
    std::vector<SignedBipartiteGraph> graphs;
    graphs.reserve(p.num_layers);
    for (std::uint32_t i = 0; i < p.num_layers; ++i)
        graphs.emplace_back(p.layer_size, p.layer_size, std::move(edges[i]));
    return DeepNet(p, std::move(graphs));
}

DeepNet load_net_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    return load_net(f);
}

void save_samples(std::ostream& os, const std::vector<Sample>& samples, OutputMode mode) {
    char buf[64];
    for (const auto& s : samples) {
        bool first_field = true;
        for (const auto& h : s.hidden) {
            if (!first_field) os << " | ";
            first_field = false;
            for (std::size_t i = 0; i < h.support.size(); ++i)
                os << (i ? " " : "") << h.support[i];
        }
        if (!first_field) os << " | ";
        if (mode == OutputMode::Thresholded) {
            for (std::size_t i = 0; i < s.observed.support.size(); ++i)
                os << (i ? " " : "") << s.observed.support[i];
        } else {
            for (std::size_t i = 0; i < s.observed_real.size(); ++i) {
                std::snprintf(buf, sizeof buf, "%.17g", s.observed_real[i]);
                os << (i ? " " : "") << buf;
            }
        }
        os << '\n';
    }
}

std::vector<Sample> load_samples(std::istream& is, std::uint32_t n, OutputMode mode) {
    std::vector<Sample> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            auto bar = line.find(" | ", start);
            if (bar == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, bar - start));
            start = bar + 3;
        }
        Sample s;
        for (std::size_t f = 0; f + 1 < fields.size(); ++f) {
            std::istringstream ss(fields[f]);
            std::vector<std::uint32_t> supp;
            std::uint32_t x;
            while (ss >> x) supp.push_back(x);
            s.hidden.emplace_back(n, std::move(supp));
        }
        std::istringstream ss(fields.back());
        if (mode == OutputMode::Thresholded) {
            std::vector<std::uint32_t> supp;
            std::uint32_t x;
            while (ss >> x) supp.push_back(x);
            s.observed = SparseBinaryVector(n, std::move(supp));
        } else {
            double x;
            while (ss >> x) s.observed_real.push_back(x);
            if (s.observed_real.size() != n) throw IoError("real sample has wrong dimension");
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace sparsenet
