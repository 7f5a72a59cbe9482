#pragma once

#include <vector>

namespace rankmc {

template <class Fn>
void for_each_ext_subspace(const FieldTower& f, std::size_t k, std::size_t r, Fn&& fn) {
    if (r > k) return;
    if (r == 0) {
        fn(std::vector<Vec>{});
        return;
    }
    const std::uint32_t Q = f.order();
    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
    for (;;) {
        // Free slots: row i, column c > pivots[i] with c not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        std::vector<bool> is_pivot(k, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t c = pivots[i] + 1; c < k; ++c) {
                if (!is_pivot[c]) free_slots.emplace_back(i, c);
            }
        }
        std::vector<Vec> rows(r, Vec(k, f.zero()));
        for (std::size_t i = 0; i < r; ++i) rows[i][pivots[i]] = f.one();
        std::vector<std::uint32_t> digits(free_slots.size(), 0);
        for (;;) {
            if (!fn(std::as_const(rows))) return;
            std::size_t j = 0;
            for (; j < digits.size(); ++j) {
                auto [ri, ci] = free_slots[j];
                if (++digits[j] < Q) {
                    rows[ri][ci] = Elem{digits[j]};
                    break;
                }
                digits[j] = 0;
                rows[ri][ci] = f.zero();
            }
            if (j == digits.size()) break;
        }
        // Next pivot combination.
        std::size_t i = r;
        while (i > 0 && pivots[i - 1] == k - r + (i - 1)) --i;
        if (i == 0) return;
        ++pivots[i - 1];
        for (std::size_t t = i; t < r; ++t) pivots[t] = pivots[t - 1] + 1;
    }
}

}  // namespace rankmc
