#include "rankmc/field_tower.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace rankmc {

namespace {

// Polynomials over F_p, constant term first, trimmed.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::size_t shift = a.size() - 1 - df;
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's test.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
    if (n == 1) return true;
    const Poly x{0, 1};
    std::uint64_t pn = 1;
    for (std::uint32_t i = 0; i < n; ++i) pn *= p;
    if (poly_sub(poly_powmod(x, pn, f, p), x, p) != Poly{}) return false;
    for (std::uint64_t r : prime_factors(n)) {
        std::uint64_t pe = 1;
        for (std::uint64_t i = 0; i < n / r; ++i) pe *= p;
        const Poly g = poly_gcd(f, poly_sub(poly_powmod(x, pe, f, p), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t FieldParams::q() const { return static_cast<std::uint32_t>(ipow(p, h)); }

std::uint32_t FieldParams::order() const { return static_cast<std::uint32_t>(ipow(p, std::uint64_t{h} * m)); }

std::string FieldParams::to_string() const {
    std::ostringstream os;
    os << p << '^' << h << ':' << m;
    return os.str();
}

FieldParams FieldParams::parse(const std::string& spec) {
    const auto caret = spec.find('^');
    const auto colon = spec.find(':');
    if (caret == std::string::npos || colon == std::string::npos || caret > colon) {
        throw std::invalid_argument("field spec must look like p^h:m, got '" + spec + "'");
    }
    auto num = [&](std::size_t from, std::size_t to) {
        std::uint32_t v = 0;
        const char* first = spec.data() + from;
        const char* last = spec.data() + to;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last) {
            throw std::invalid_argument("bad number in field spec '" + spec + "'");
        }
        return v;
    };
    FieldParams fp;
    fp.p = num(0, caret);
    fp.h = num(caret + 1, colon);
    fp.m = num(colon + 1, spec.size());
    if (!is_prime(fp.p)) throw std::invalid_argument("field characteristic " + std::to_string(fp.p) + " is not prime");
    if (fp.h < 1 || fp.m < 1) throw std::invalid_argument("h and m must be positive");
    return fp;
}

std::shared_ptr<const FieldTower> FieldTower::make(const FieldParams& params) {
    return make(params.p, params.h, params.m);
}

std::shared_ptr<const FieldTower> FieldTower::make(std::uint32_t p, std::uint32_t h, std::uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (h < 1 || m < 1) throw std::invalid_argument("h and m must be positive");
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < std::uint64_t{h} * m; ++i) {
        order *= p;
        if (order > kMaxFieldOrder) {
            throw std::invalid_argument("field order p^(hm) exceeds the 2^20 cap");
        }
    }
    std::shared_ptr<FieldTower> t(new FieldTower());
    t->params_ = FieldParams{p, h, m};
    t->q_ = static_cast<std::uint32_t>(ipow(p, h));
    t->order_ = static_cast<std::uint32_t>(order);
    t->degree_ = h * m;
    t->build();
    return t;
}

void FieldTower::build() {
    const std::uint32_t p = params_.p;
    const std::uint32_t n = degree_;

    digit_pow_.resize(n + 1);
    digit_pow_[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) digit_pow_[i] = digit_pow_[i - 1] * p;

    // Lexicographically least monic irreducible: c_0 is the most significant key.
    const std::uint64_t candidates = ipow(p, n);
    bool found = false;
    for (std::uint64_t key = 0; key < candidates && !found; ++key) {
        Poly f(n + 1, 0);
        std::uint64_t rest = key;
        for (std::uint32_t i = n; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[n] = 1;
        if (is_irreducible(f, p)) {
            modulus_ = f;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");

    auto to_poly = [&](std::uint32_t v) {
        Poly a(n, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            a[i] = v % p;
            v /= p;
        }
        trim(a);
        return a;
    };
    auto from_poly = [&](const Poly& a) {
        std::uint32_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
        return v;
    };

    // Primitive element: least element whose order is order_-1.
    const std::uint64_t group = order_ - 1;
    std::uint32_t prim = 1;
    if (group > 1) {
        const auto factors = prime_factors(group);
        for (std::uint32_t c = 2; c < order_; ++c) {
            const Poly cp = to_poly(c);
            bool ok = true;
            for (std::uint64_t r : factors) {
                if (poly_powmod(cp, group / r, modulus_, p) == Poly{1}) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                prim = c;
                break;
            }
        }
    }

    exp_.assign(2 * group + 1, 0);
    log_.assign(order_, 0);
    {
        const Poly pp = to_poly(prim);
        Poly cur{1};
        for (std::uint64_t i = 0; i < group; ++i) {
            const std::uint32_t v = from_poly(cur);
            exp_[i] = v;
            log_[v] = static_cast<std::uint32_t>(i);
            cur = poly_mulmod(cur, pp, modulus_, p);
        }
        for (std::uint64_t i = group; i < exp_.size(); ++i) exp_[i] = exp_[i - group];
    }

    // Subfield F_q: fixed points of x -> x^q.
    label_of_.assign(order_, -1);
    for (std::uint32_t v = 0; v < order_; ++v) {
        if (pow(Elem{v}, q_) == Elem{v}) {
            label_of_[v] = static_cast<std::int32_t>(sub_elems_.size());
            sub_elems_.push_back(v);
        }
    }
    if (sub_elems_.size() != q_) throw std::logic_error("subfield has wrong size");

    generator_ = Elem{1};
    for (std::uint32_t v = 1; v < order_; ++v) {
        if (degree_over_fq(Elem{v}) == params_.m) {
            generator_ = Elem{v};
            break;
        }
    }

    basis_.clear();
    Elem g = one();
    for (std::uint32_t j = 0; j < params_.m; ++j) {
        basis_.push_back(g);
        g = mul(g, generator_);
    }

    // Coordinate table: walk F_q^m in odometer order and record each value.
    coords_.assign(order_, 0);
    std::vector<std::uint32_t> digits(params_.m, 0);
    for (std::uint32_t packed = 0; packed < order_; ++packed) {
        Elem v = zero();
        for (std::uint32_t j = 0; j < params_.m; ++j) {
            if (digits[j]) v = add(v, mul(from_label(digits[j]), basis_[j]));
        }
        coords_[v.v] = packed;
        for (std::uint32_t j = 0; j < params_.m; ++j) {
            if (++digits[j] < q_) break;
            digits[j] = 0;
        }
    }
}

Elem FieldTower::z() const {
    if (degree_ == 1) return Elem{modulus_[0] == 0 ? 0u : (params_.p - modulus_[0]) % params_.p};
    return Elem{params_.p};
}

Elem FieldTower::add_digits(Elem a, Elem b, bool subtract) const {
    const std::uint32_t p = params_.p;
    std::uint32_t x = a.v, y = b.v, r = 0;
    for (std::uint32_t i = 0; i < degree_ && (x || y); ++i) {
        const std::uint32_t dx = x % p, dy = y % p;
        x /= p;
        y /= p;
        const std::uint32_t d = subtract ? (dx + p - dy) % p : (dx + dy) % p;
        r += d * digit_pow_[i];
    }
    return Elem{r};
}

Elem FieldTower::add(Elem a, Elem b) const {
    if (params_.p == 2) return Elem{a.v ^ b.v};
    return add_digits(a, b, false);
}

Elem FieldTower::sub(Elem a, Elem b) const {
    if (params_.p == 2) return Elem{a.v ^ b.v};
    return add_digits(a, b, true);
}

Elem FieldTower::neg(Elem a) const { return sub(zero(), a); }

Elem FieldTower::mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    return Elem{exp_[log_[a.v] + log_[b.v]]};
}

Elem FieldTower::inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t group = order_ - 1;
    return Elem{exp_[(group - log_[a.v]) % group]};
}

Elem FieldTower::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.v == 0) return zero();
    const std::uint64_t group = order_ - 1;
    return Elem{exp_[(std::uint64_t{log_[a.v]} * (e % group)) % group]};
}

Elem FieldTower::trace(Elem a) const {
    Elem s = zero();
    Elem t = a;
    for (std::uint32_t i = 0; i < params_.m; ++i) {
        s = add(s, t);
        t = frobenius(t);
    }
    return s;
}

std::uint32_t FieldTower::degree_over_fq(Elem a) const {
    Elem t = frobenius(a);
    std::uint32_t j = 1;
    while (t != a) {
        t = frobenius(t);
        ++j;
    }
    return j;
}

Elem FieldTower::find_subfield_generator(std::uint32_t t) const {
    if (t == 0 || params_.m % t != 0) throw std::invalid_argument("subfield degree must divide m");
    for (std::uint32_t v = 1; v < order_; ++v) {
        if (degree_over_fq(Elem{v}) == t) return Elem{v};
    }
    throw std::logic_error("no generator for intermediate field");
}

std::uint32_t FieldTower::label(Elem a) const {
    const std::int32_t l = label_of_[a.v];
    if (l < 0) throw std::domain_error("element is not in F_q");
    return static_cast<std::uint32_t>(l);
}

std::uint32_t FieldTower::fq_add(std::uint32_t a, std::uint32_t b) const {
    if (params_.h == 1) return (a + b) % params_.p;
    return static_cast<std::uint32_t>(label_of_[add(from_label(a), from_label(b)).v]);
}

std::uint32_t FieldTower::fq_sub(std::uint32_t a, std::uint32_t b) const {
    if (params_.h == 1) return (a + params_.p - b) % params_.p;
    return static_cast<std::uint32_t>(label_of_[sub(from_label(a), from_label(b)).v]);
}

std::uint32_t FieldTower::fq_neg(std::uint32_t a) const { return fq_sub(0, a); }

std::uint32_t FieldTower::fq_mul(std::uint32_t a, std::uint32_t b) const {
    if (params_.h == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % params_.p);
    return static_cast<std::uint32_t>(label_of_[mul(from_label(a), from_label(b)).v]);
}

std::uint32_t FieldTower::fq_inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (params_.h == 1) return inv_mod(a, params_.p);
    return static_cast<std::uint32_t>(label_of_[inv(from_label(a)).v]);
}

void FieldTower::coords(Elem a, std::span<std::uint32_t> out) const {
    std::uint32_t packed = coords_[a.v];
    for (std::uint32_t j = 0; j < params_.m; ++j) {
        out[j] = packed % q_;
        packed /= q_;
    }
}

Elem FieldTower::from_coords(std::span<const std::uint32_t> labels) const {
    Elem v = zero();
    for (std::uint32_t j = 0; j < params_.m; ++j) {
        if (labels[j]) v = add(v, mul(from_label(labels[j]), basis_[j]));
    }
    return v;
}

std::string FieldTower::format(Elem a) const {
    if (a.v == 0) return "0";
    std::string out;
    std::uint32_t v = a.v;
    for (std::uint32_t i = 0; v; ++i) {
        const std::uint32_t c = v % params_.p;
        v /= params_.p;
        if (!c) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += 'z';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

Elem FieldTower::parse(const std::string& literal) const {
    std::string s;
    for (char ch : literal) {
        if (ch != ' ' && ch != '\t') s += ch;
    }
    if (s.empty()) throw std::invalid_argument("empty element literal");
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("bad element literal '" + literal + "': " + why);
    };
    auto read_uint = [&](const std::string& t) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) throw bad("expected a number in '" + t + "'");
        return v;
    };
    const Elem zz = z();
    Elem result = zero();
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find('+', start);
        if (end == std::string::npos) end = s.size();
        const std::string term = s.substr(start, end - start);
        if (term.empty()) throw bad("empty term");
        std::uint64_t coeff = 1;
        std::uint64_t exponent = 0;
        const auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coeff = read_uint(term);
        } else {
            std::string head = term.substr(0, zpos);
            if (!head.empty()) {
                if (head.back() == '*') head.pop_back();
                coeff = read_uint(head);
            }
            const std::string tail = term.substr(zpos + 1);
            if (tail.empty()) {
                exponent = 1;
            } else {
                if (tail[0] != '^') throw bad("expected '^' after z");
                exponent = read_uint(tail.substr(1));
            }
        }
        if (coeff >= params_.p) throw bad("coefficient out of range [0,p)");
        Elem c{static_cast<std::uint32_t>(coeff)};
        result = add(result, mul(c, pow(zz, exponent)));
        start = end + 1;
    }
    return result;
}

BigInt q_binomial(int s, int t, std::uint64_t q) {
    if (s < 0 || t < 0 || t > s) return 0;
    if (t == 0) return 1;
    BigInt num = 1, den = 1;
    for (int i = 1; i <= t; ++i) {
        num *= big_pow(q, static_cast<std::uint64_t>(s - i + 1)) - 1;
        den *= big_pow(q, static_cast<std::uint64_t>(i)) - 1;
    }
    return num / den;
}

}  // namespace rankmc
