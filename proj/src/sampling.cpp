#include "rankmc/sampling.hpp"

#include <stdexcept>

namespace rankmc {

System system_from_coords(FieldPtr f, std::size_t k, const FqMatrix& coords) {
    std::vector<Vec> basis;
    basis.reserve(coords.rows());
    for (std::size_t i = 0; i < coords.rows(); ++i) basis.push_back(unflatten(*f, coords.row(i), k));
    return make_system(std::move(f), k, std::move(basis));
}

System random_system(FieldPtr f, std::size_t k, std::size_t n, Rng& rng) {
    const std::size_t N = k * f->m();
    if (n < k || n > N) throw std::invalid_argument("need k <= n <= km");
    std::uniform_int_distribution<std::uint32_t> digit(0, f->q() - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        FqMatrix a(n, N);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < N; ++j) a(i, j) = digit(rng);
        }
        if (rank_fq(*f, a) != n) continue;
        System u = system_from_coords(f, k, a);
        if (u.spans()) return u;
    }
    throw std::runtime_error("could not sample a spanning system");
}

FqMatrix random_gl(const FieldTower& f, std::size_t n, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> digit(0, f.q() - 1);
    for (;;) {
        FqMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = digit(rng);
        }
        if (rank_fq(f, a) == n) return a;
    }
}

}  // namespace rankmc
