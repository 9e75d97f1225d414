#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sparsenet {

// 0/1 assignment stored by its support (sorted, unique indices).
struct SparseBinaryVector {
    std::uint32_t dimension = 0;
    std::vector<std::uint32_t> support;

    SparseBinaryVector() = default;
    SparseBinaryVector(std::uint32_t dim, std::vector<std::uint32_t> supp)
        : dimension(dim), support(std::move(supp)) {
        normalize();
    }

    void normalize() {
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        if (!support.empty() && support.back() >= dimension)
            throw std::invalid_argument("support index out of range");
    }

    bool contains(std::uint32_t i) const {
        return std::binary_search(support.begin(), support.end(), i);
    }

    std::size_t count() const { return support.size(); }

    std::vector<std::uint8_t> to_dense() const {
        std::vector<std::uint8_t> d(dimension, 0);
        for (auto i : support) d[i] = 1;
        return d;
    }

    bool operator==(const SparseBinaryVector& o) const {
        return dimension == o.dimension && support == o.support;
    }
};

} // namespace sparsenet
