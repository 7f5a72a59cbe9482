#include "rankmc/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "rankmc/constructions.hpp"

namespace rankmc {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::uint64_t to_uint(const std::string& s, const std::string& what) {
    std::uint64_t v = 0;
    const auto t = trim(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw std::invalid_argument("expected a non-negative integer for " + what + ", got '" + s + "'");
    }
    return v;
}

std::vector<std::uint64_t> to_uint_list(const std::string& s, const std::string& what) {
    std::vector<std::uint64_t> out;
    for (const auto& part : split(s, ',')) out.push_back(to_uint(part, what));
    return out;
}

// key=value options after the positional part of a spec.
std::string option(const std::vector<std::string>& parts, std::size_t from, const std::string& key,
                   const std::optional<std::string>& fallback = {}) {
    for (std::size_t i = from; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq != std::string::npos && parts[i].substr(0, eq) == key) return parts[i].substr(eq + 1);
    }
    if (fallback) return *fallback;
    throw std::invalid_argument("construction spec is missing '" + key + "='");
}

std::string big(const BigInt& v) { return to_decimal(v); }

}  // namespace

ExtMatrix parse_matrix(const FieldTower& f, const std::string& literal) {
    const auto body = trim(literal);
    if (body.empty()) throw std::invalid_argument("empty matrix literal");
    const auto rows = split(body, ';');
    std::vector<Vec> parsed;
    for (const auto& row : rows) {
        Vec r;
        for (const auto& cell : split(row, ',')) r.push_back(f.parse(cell));
        parsed.push_back(std::move(r));
    }
    const std::size_t cols = parsed.front().size();
    for (const auto& r : parsed) {
        if (r.size() != cols) throw std::invalid_argument("matrix rows have different lengths");
    }
    ExtMatrix g(parsed.size(), cols);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = parsed[i][j];
    }
    return g;
}

std::string format_matrix(const FieldTower& f, const ExtMatrix& g) {
    std::string out;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < g.cols(); ++j) {
            if (j) out += ',';
            out += f.format(g(i, j));
        }
    }
    return out;
}

Code construct(const std::string& spec) {
    const auto parts = split(trim(spec), ':');
    if (parts.size() < 3) throw std::invalid_argument("construction spec needs family:p^h:m");
    const std::string& family = parts[0];
    FieldPtr f = FieldTower::make(FieldParams::parse(parts[1] + ":" + parts[2]));

    if (family == "poly") {
        const auto lam = option(parts, 3, "lambda", std::string("auto"));
        const auto t = to_uint_list(option(parts, 3, "t"), "t");
        if (lam == "auto") return poly_code(f, t);
        const Elem lambda = f->parse(lam);
        return poly_code(f, lambda, t);
    }
    if (family == "lifted") {
        LiftedSpec ls;
        ls.sub_degree = to_uint(option(parts, 3, "sub"), "sub");
        ls.ell = to_uint(option(parts, 3, "ell"), "ell");
        ls.t = to_uint_list(option(parts, 3, "t"), "t");
        const auto mu = option(parts, 3, "mu", std::string("auto"));
        if (mu != "auto") ls.mu = f->parse(mu);
        return lifted_poly_code(f, ls);
    }
    if (family == "gabidulin") {
        if (parts.size() != 5) throw std::invalid_argument("gabidulin spec is gabidulin:p^h:m:n:k");
        return gabidulin(f, to_uint(parts[3], "n"), to_uint(parts[4], "k"));
    }
    if (family == "redei") {
        if (parts.size() != 3) throw std::invalid_argument("redei spec is redei:p^h:m");
        return redei_code(f);
    }
    if (family == "simplex") {
        if (parts.size() != 4) throw std::invalid_argument("simplex spec is simplex:p^h:m:k");
        return simplex_code(f, to_uint(parts[3], "k"));
    }
    throw std::invalid_argument("unknown construction family '" + family + "'");
}

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["applicable"] = r.applicable;
    j["verdict"] = to_string(r.verdict);
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.applicable) return j;
    j["lower"] = big(r.lower);
    j["upper"] = big(r.upper);
    j["refined"] = r.refined;
    if (r.observed) j["observed"] = big(*r.observed);
    if (r.proof_tight_lower) j["proof_tight_lower"] = big(*r.proof_tight_lower);
    return j;
}

nlohmann::json analyze_report(const Code& c, const std::string& description, const Classification& cl,
                              std::optional<double> timing_ms) {
    const FieldTower& f = c.field();
    nlohmann::json j;
    j["tool"] = {{"name", "rmc"}, {"version", kToolVersion}};
    j["field"] = f.params().to_string();
    nlohmann::json code;
    code["description"] = description;
    code["generator"] = format_matrix(f, c.generator());
    code["n"] = c.n();
    code["k"] = c.k();
    code["d"] = cl.d;
    code["e"] = cl.e ? nlohmann::json(*cl.e) : nlohmann::json(nullptr);
    code["mrd"] = cl.mrd;
    j["code"] = code;
    nlohmann::json dist = nlohmann::json::array();
    for (const auto& a : weight_distribution(c)) dist.push_back(big(a));
    j["weight_distribution"] = dist;
    j["M"] = big(cl.M);
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& r : cl.reports) bounds.push_back(to_json(r));
    j["bounds"] = bounds;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& ch : cl.checks) {
        checks.push_back({{"name", ch.name},
                          {"premise", ch.premise},
                          {"conclusion", ch.conclusion},
                          {"biconditional", ch.biconditional},
                          {"agrees", ch.agrees()}});
    }
    j["checks"] = checks;
    j["verdict"] = to_string(cl.verdict);
    j["consistent"] = cl.consistent();
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace rankmc
