#include "rankmc/fq_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankmc {

void FqMatrix::append_row(std::span<const std::uint32_t> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

FqMatrix FqMatrix::identity(std::size_t n) {
    FqMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
    return a;
}

Vec ExtMatrix::column(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::size_t rref_in_place(const FieldTower& f, FqMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(rank, j));
        }
        const std::uint32_t inv = f.fq_inv(a(rank, c));
        if (inv != 1) {
            for (std::size_t j = c; j < cols; ++j) a(rank, j) = f.fq_mul(a(rank, j), inv);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const std::uint32_t factor = a(r, c);
            if (!factor) continue;
            for (std::size_t j = c; j < cols; ++j) {
                if (a(rank, j)) a(r, j) = f.fq_sub(a(r, j), f.fq_mul(factor, a(rank, j)));
            }
        }
        ++rank;
    }
    FqMatrix reduced(rank, cols);
    for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t j = 0; j < cols; ++j) reduced(r, j) = a(r, j);
    }
    a = std::move(reduced);
    return rank;
}

std::size_t rank_f2(std::span<const std::uint64_t> rows) {
    // XOR basis keyed by leading bit.
    std::uint64_t basis[64] = {};
    std::size_t rank = 0;
    for (std::uint64_t v : rows) {
        while (v) {
            const int top = 63 - __builtin_clzll(v);
            if (!basis[top]) {
                basis[top] = v;
                ++rank;
                break;
            }
            v ^= basis[top];
        }
    }
    return rank;
}

std::size_t rank_fq(const FieldTower& f, const FqMatrix& a) {
    if (f.q() == 2 && a.cols() <= 64) {
        std::vector<std::uint64_t> bits(a.rows(), 0);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                if (a(r, c)) bits[r] |= std::uint64_t{1} << c;
            }
        }
        return rank_f2(bits);
    }
    FqMatrix copy = a;
    return rref_in_place(f, copy);
}

std::size_t rank_of_elements(const FieldTower& f, std::span<const Elem> xs) {
    if (f.q() == 2) {
        std::uint64_t basis[64] = {};
        std::size_t rank = 0;
        for (Elem x : xs) {
            std::uint64_t v = f.packed_coords(x);
            while (v) {
                const int top = 63 - __builtin_clzll(v);
                if (!basis[top]) {
                    basis[top] = v;
                    ++rank;
                    break;
                }
                v ^= basis[top];
            }
        }
        return rank;
    }
    const std::size_t m = f.m();
    FqMatrix a(xs.size(), m);
    for (std::size_t i = 0; i < xs.size(); ++i) f.coords(xs[i], a.row(i));
    return rref_in_place(f, a);
}

std::size_t rank_of_element_rows(const FieldTower& f, std::span<const Vec> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows[0].size();
    const std::size_t r = rows.size();
    const std::size_t m = f.m();
    if (f.q() == 2 && r * m <= 64) {
        std::vector<std::uint64_t> bits(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t w = 0;
            for (std::size_t i = 0; i < r; ++i) w |= std::uint64_t{f.packed_coords(rows[i][j])} << (i * m);
            bits[j] = w;
        }
        return rank_f2(bits);
    }
    FqMatrix a(n, r * m);
    for (std::size_t j = 0; j < n; ++j) {
        auto row = a.row(j);
        for (std::size_t i = 0; i < r; ++i) f.coords(rows[i][j], row.subspan(i * m, m));
    }
    return rref_in_place(f, a);
}

FqMatrix right_kernel(const FieldTower& f, const FqMatrix& a) {
    FqMatrix red = a;
    const std::size_t cols = a.cols();
    rref_in_place(f, red);
    std::vector<std::size_t> pivot_col(red.rows());
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < red.rows(); ++r) {
        std::size_t c = 0;
        while (red(r, c) == 0) ++c;
        pivot_col[r] = c;
        is_pivot[c] = true;
    }
    FqMatrix ker(0, cols);
    std::vector<std::uint32_t> v(cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < red.rows(); ++r) v[pivot_col[r]] = f.fq_neg(red(r, free));
        ker.append_row(v);
    }
    return ker;
}

FqMatrix left_kernel(const FieldTower& f, const FqMatrix& a) { return right_kernel(f, a.transposed()); }

std::size_t rank_ext(const FieldTower& f, ExtMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(rank, j));
        const Elem inv = f.inv(a(rank, c));
        for (std::size_t j = c; j < cols; ++j) a(rank, j) = f.mul(a(rank, j), inv);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Elem factor = a(r, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < cols; ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(rank, j)));
        }
        ++rank;
    }
    return rank;
}

FqSubspace FqSubspace::span(const FieldTower& f, FqMatrix generators) {
    FqSubspace s;
    rref_in_place(f, generators);
    s.basis_ = std::move(generators);
    return s;
}

bool FqSubspace::contains(const FieldTower& f, std::span<const std::uint32_t> v) const {
    FqMatrix a = basis_;
    a.append_row(v);
    return rank_fq(f, a) == dim();
}

FqSubspace sum(const FieldTower& f, const FqSubspace& a, const FqSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    FqMatrix g = a.basis();
    for (std::size_t r = 0; r < b.dim(); ++r) g.append_row(b.basis().row(r));
    return FqSubspace::span(f, std::move(g));
}

FqSubspace intersect(const FieldTower& f, const FqSubspace& a, const FqSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    // Zassenhaus: rows [a | a] and [b | 0]; rows with zero left half span the meet.
    const std::size_t n = a.ambient_dim();
    FqMatrix z(0, 2 * n);
    std::vector<std::uint32_t> row(2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t j = 0; j < n; ++j) row[j] = row[n + j] = a.basis()(r, j);
        z.append_row(row);
    }
    for (std::size_t r = 0; r < b.dim(); ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = b.basis()(r, j);
            row[n + j] = 0;
        }
        z.append_row(row);
    }
    if (z.rows() == 0) return FqSubspace(n);
    rref_in_place(f, z);
    FqMatrix meet(0, n);
    for (std::size_t r = 0; r < z.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = z(r, j) == 0;
        if (left_zero) meet.append_row(z.row(r).subspan(n, n));
    }
    if (meet.rows() == 0) return FqSubspace(n);
    return FqSubspace::span(f, std::move(meet));
}

namespace {

// Inverse of the matrix whose rows are the default coordinates of gamma.
FqMatrix basis_change(const FieldTower& f, std::span<const Elem> gamma) {
    const std::size_t m = f.m();
    if (gamma.size() != m) throw std::invalid_argument("basis must have m elements");
    FqMatrix aug(m, 2 * m);
    std::vector<std::uint32_t> c(m);
    for (std::size_t i = 0; i < m; ++i) {
        f.coords(gamma[i], c);
        for (std::size_t j = 0; j < m; ++j) aug(i, j) = c[j];
        aug(i, m + i) = 1;
    }
    rref_in_place(f, aug);
    for (std::size_t i = 0; i < m; ++i) {
        if (aug.rows() <= i || aug(i, i) != 1) throw std::invalid_argument("gamma is not an F_q-basis");
    }
    FqMatrix inv(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) inv(i, j) = aug(i, m + j);
    }
    return inv;
}

}  // namespace

FqMatrix expand(const FieldTower& f, std::span<const Elem> x) {
    const std::size_t m = f.m();
    FqMatrix out(x.size(), m);
    for (std::size_t i = 0; i < x.size(); ++i) f.coords(x[i], out.row(i));
    return out;
}

FqMatrix expand(const FieldTower& f, std::span<const Elem> x, std::span<const Elem> gamma) {
    const FqMatrix inv = basis_change(f, gamma);
    const FqMatrix def = expand(f, x);
    const std::size_t m = f.m();
    FqMatrix out(x.size(), m);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::uint32_t acc = 0;
            for (std::size_t l = 0; l < m; ++l) {
                if (def(i, l) && inv(l, j)) acc = f.fq_add(acc, f.fq_mul(def(i, l), inv(l, j)));
            }
            out(i, j) = acc;
        }
    }
    return out;
}

FqSubspace rank_support(const FieldTower& f, std::span<const Elem> x) {
    return FqSubspace::span(f, expand(f, x).transposed());
}

FqSubspace rank_support(const FieldTower& f, std::span<const Elem> x, std::span<const Elem> gamma) {
    return FqSubspace::span(f, expand(f, x, gamma).transposed());
}

std::vector<std::uint32_t> flatten(const FieldTower& f, std::span<const Elem> v) {
    const std::size_t m = f.m();
    std::vector<std::uint32_t> out(v.size() * m);
    for (std::size_t i = 0; i < v.size(); ++i) f.coords(v[i], std::span(out).subspan(i * m, m));
    return out;
}

Vec unflatten(const FieldTower& f, std::span<const std::uint32_t> coords, std::size_t k) {
    const std::size_t m = f.m();
    if (coords.size() != k * m) throw std::invalid_argument("coordinate length mismatch");
    Vec out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = f.from_coords(coords.subspan(i * m, m));
    return out;
}

std::uint64_t projective_count(const FieldTower& f, std::size_t k, std::uint64_t budget) {
    if (k == 0) throw std::invalid_argument("projective dimension needs k >= 1");
    const std::uint64_t Q = f.order();
    std::uint64_t total = 0, power = 1;
    for (std::size_t j = 0; j < k; ++j) {
        total += power;
        if (total > budget) throw BudgetExceeded("projective space PG(k-1,q^m) exceeds the enumeration budget");
        if (j + 1 < k) power *= Q;
        if (power > budget) throw BudgetExceeded("projective space PG(k-1,q^m) exceeds the enumeration budget");
    }
    return total;
}

ProjPoint point_at(const FieldTower& f, std::size_t k, std::uint64_t index) {
    const std::uint64_t Q = f.order();
    ProjPoint pt{Vec(k, f.zero())};
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::uint64_t block = 1;
        for (std::size_t j = lead + 1; j < k; ++j) block *= Q;
        if (index < block) {
            pt.v[lead] = f.one();
            for (std::size_t j = lead + 1; j < k; ++j) {
                pt.v[j] = Elem{static_cast<std::uint32_t>(index % Q)};
                index /= Q;
            }
            return pt;
        }
        index -= block;
    }
    throw std::out_of_range("point index out of range");
}

std::uint64_t point_index(const FieldTower& f, std::span<const Elem> v) {
    const std::uint64_t Q = f.order();
    const std::size_t k = v.size();
    std::uint64_t offset = 0;
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::uint64_t block = 1;
        for (std::size_t j = lead + 1; j < k; ++j) block *= Q;
        if (!v[lead].is_zero()) {
            if (v[lead] != f.one()) throw std::invalid_argument("vector is not normalized");
            std::uint64_t idx = 0;
            for (std::size_t j = k; j-- > lead + 1;) idx = idx * Q + v[j].v;
            return offset + idx;
        }
        offset += block;
    }
    throw std::invalid_argument("zero vector has no projective point");
}

std::vector<ProjPoint> enumerate_points(const FieldTower& f, std::size_t k, std::uint64_t budget) {
    const std::uint64_t count = projective_count(f, k, budget);
    std::vector<ProjPoint> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(point_at(f, k, i));
    return out;
}

std::vector<ProjHyperplane> enumerate_hyperplanes(const FieldTower& f, std::size_t k, std::uint64_t budget) {
    const std::uint64_t count = projective_count(f, k, budget);
    std::vector<ProjHyperplane> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(ProjHyperplane{point_at(f, k, i).v});
    return out;
}

std::optional<Vec> normalize(const FieldTower& f, Vec v) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return !e.is_zero(); });
    if (it == v.end()) return std::nullopt;
    const Elem inv = f.inv(*it);
    for (Elem& e : v) e = f.mul(e, inv);
    return v;
}

std::vector<Vec> annihilator(const FieldTower& f, std::span<const Elem> v) {
    const std::size_t k = v.size();
    std::size_t lead = 0;
    while (lead < k && v[lead].is_zero()) ++lead;
    if (lead == k) throw std::invalid_argument("annihilator of the zero vector");
    const Elem inv_lead = f.inv(v[lead]);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < k; ++i) {
        if (i == lead) continue;
        Vec y(k, f.zero());
        y[i] = f.one();
        y[lead] = f.neg(f.mul(v[i], inv_lead));
        out.push_back(std::move(y));
    }
    return out;
}

Elem dot(const FieldTower& f, std::span<const Elem> a, std::span<const Elem> b) {
    Elem s = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

}  // namespace rankmc
