#pragma once

#include <vector>

#include "oracles.hpp"
#include "rankmc/q_system.hpp"

namespace testing {

inline std::vector<std::vector<std::uint32_t>> rows_of(const rankmc::ExtMatrix& g) {
    std::vector<std::vector<std::uint32_t>> out(g.rows(), std::vector<std::uint32_t>(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out[i][j] = g(i, j).v;
    return out;
}

inline std::vector<std::uint32_t> raw(std::span<const rankmc::Elem> v) {
    std::vector<std::uint32_t> out;
    for (auto e : v) out.push_back(e.v);
    return out;
}

inline std::vector<std::vector<std::uint32_t>> basis_of(const rankmc::System& u) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& v : u.basis()) out.push_back(raw(v));
    return out;
}

inline std::vector<rankmc::BigInt> to_big(const std::vector<std::uint64_t>& v) {
    return {v.begin(), v.end()};
}

}  // namespace testing
