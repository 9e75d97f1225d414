#pragma once

#include <iosfwd>
#include <string>

#include "sparsenet/net_model.hpp"

namespace sparsenet {

// Line-oriented net format:
//   layers <l> <n> <d> <rho_l> <mode> <seed>
//   layer <i>
//   <u> <v> <w>     (w as +-1 integers or %.17g reals)
// Layers appear top-down (G_{l-1} first).
void save_net(std::ostream& os, const DeepNet& net);
void save_net_file(const std::string& path, const DeepNet& net);
DeepNet load_net(std::istream& is);
DeepNet load_net_file(const std::string& path);

// One line per sample: hidden supports top-down then observed, fields
// separated by " | "; real observed layer written as decimals.
void save_samples(std::ostream& os, const std::vector<Sample>& samples, OutputMode mode);
std::vector<Sample> load_samples(std::istream& is, std::uint32_t n, OutputMode mode);

std::string weight_mode_name(WeightMode m);
std::string output_mode_name(OutputMode m);

} // namespace sparsenet
