#include "rankmc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rankmc/io.hpp"
#include "rankmc/sampling.hpp"
#include "rankmc/verify.hpp"

namespace rankmc {

namespace {


// "3", "2-4" or "2,3,5".
std::vector<std::uint64_t> parse_range(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto dash = part.find('-');
        try {
            std::size_t used = 0;
            if (dash == std::string::npos) {
                out.push_back(std::stoull(part, &used));
                if (used != part.size()) throw std::invalid_argument("");
            } else {
                const auto lo = std::stoull(part.substr(0, dash));
                const auto hi = std::stoull(part.substr(dash + 1));
                for (auto v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad range '" + s + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty range");
    return out;
}

FieldPtr field_for_q(std::uint64_t q, std::uint64_t m) {
    for (std::uint64_t p = 2; p <= q; ++p) {
        if (q % p) continue;
        std::uint64_t h = 0, r = q;
        while (r % p == 0) r /= p, ++h;
        if (r != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
        return FieldTower::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(h),
                                static_cast<std::uint32_t>(m));
    }
    throw std::invalid_argument("q must be at least 2");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    f << text;
}

std::string csv_row(const FieldTower& f, std::size_t n, std::size_t k, const Classification* cl) {
    std::ostringstream os;
    os << f.q() << ',' << f.h() << ',' << f.m() << ',' << n << ',' << k << ',';
    if (!cl) {
        os << ",,,none,,,non-spanning\n";
        return os.str();
    }
    os << cl->d << ',' << (cl->e ? std::to_string(*cl->e) : "") << ',' << to_decimal(cl->M) << ',';
    const BoundReport* primary = nullptr;
    for (const auto& r : cl->reports) {
        if (r.applicable) {
            primary = &r;
            break;
        }
    }
    if (primary) {
        os << primary->name << ',' << to_decimal(primary->lower) << ',' << to_decimal(primary->upper) << ','
           << to_string(primary->verdict) << '\n';
    } else {
        os << "none,,," << to_string(Verdict::Inapplicable) << '\n';
    }
    return os.str();
}

int analyze(const std::string& spec, const std::string& matrix_file, const std::string& field_spec,
            std::uint64_t budget, bool timing, const std::string& json_path, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<Code> code;
    std::string description;
    if (!spec.empty()) {
        code = construct(spec);
        description = spec;
    } else {
        if (field_spec.empty()) throw std::invalid_argument("--matrix needs --field p^h:m");
        std::ifstream in(matrix_file);
        if (!in) throw std::invalid_argument("cannot read '" + matrix_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        auto f = FieldTower::make(FieldParams::parse(field_spec));
        code = make_code(f, parse_matrix(*f, buf.str()));
        description = "matrix";
    }
    weight_distribution(*code, budget);
    const auto cl = classify_extremal(*code, budget);
    std::optional<double> ms;
    if (timing) ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    write_output(canonical_dump(analyze_report(*code, description, cl, ms)), json_path, out);
    return 0;
}

int scan(const std::string& qs, const std::string& ms, const std::string& ks, const std::string& ns,
         std::optional<std::uint64_t> sample, std::uint64_t seed, std::uint64_t budget, const std::string& csv_path,
         std::ostream& out) {
    std::string csv = "q,h,m,n,k,d,e,M,bound,lower,upper,verdict\n";
    Rng rng(seed);
    for (auto q : parse_range(qs)) {
        for (auto m : parse_range(ms)) {
            auto f = field_for_q(q, m);
            for (auto k : parse_range(ks)) {
                for (auto n : parse_range(ns)) {
                    if (k < 1 || n < k || n > k * m) continue;
                    auto row_for = [&](const System& u) {
                        if (!u.spans()) return csv_row(*f, n, k, nullptr);
                        const Code c = code_of(u);
                        const auto cl = classify_extremal(c, budget);
                        return csv_row(*f, n, k, &cl);
                    };
                    if (sample) {
                        for (std::uint64_t i = 0; i < *sample; ++i) csv += row_for(random_system(f, k, n, rng));
                    } else {
                        const auto total = q_binomial(static_cast<int>(k * m), static_cast<int>(n), q);
                        if (total > budget) throw BudgetExceeded("scan would visit " + to_decimal(total) + " subspaces");
                        for_each_fq_subspace(*f, k * m, n, [&](const FqMatrix& a) {
                            csv += row_for(system_from_coords(f, k, a));
                            return true;
                        });
                    }
                }
            }
        }
    }
    write_output(csv, csv_path, out);
    return 0;
}

int verify(const std::string& suite, std::ostream& out) {
    const auto results = run_suite(suite);
    std::size_t failed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << ": " << r.detail << '\n';
        failed += !r.passed;
    }
    out << results.size() << " checks, " << failed << " failed\n";
    return failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rank-metric code analyzer", "rmc"};
    app.require_subcommand(1);

    std::string spec, matrix_file, field_spec, json_path, csv_path;
    std::uint64_t budget = kDefaultBudget, seed = 1;
    bool timing = false;

    auto* an = app.add_subcommand("analyze", "weight distribution, bounds and classification of one code");
    auto* src = an->add_option("--construct", spec, "construction spec, e.g. gabidulin:2^1:3:3:2");
    an->add_option("--matrix", matrix_file, "file holding a matrix literal (rows ';', entries ',')")->excludes(src);
    an->add_option("--field", field_spec, "field p^h:m for --matrix");
    an->add_option("--budget", budget, "work cap (codewords, points)");
    an->add_option("--json", json_path, "write the report here instead of stdout");
    an->add_flag("--timing", timing, "include wall-clock time in the report");

    std::string qs = "2", ms = "2", ks = "2", ns = "2";
    std::optional<std::uint64_t> sample;
    auto* sc = app.add_subcommand("scan", "sweep systems and emit CSV");
    sc->add_option("--q", qs, "q values: 2 | 2-4 | 2,3");
    sc->add_option("--m", ms, "m values");
    sc->add_option("--k", ks, "k values");
    sc->add_option("--n", ns, "n values");
    sc->add_option("--sample", sample, "random systems per parameter set; omit for exhaustive");
    sc->add_option("--seed", seed, "seed for the mt19937_64 generator");
    sc->add_option("--budget", budget, "work cap");
    sc->add_option("--csv", csv_path, "write CSV here instead of stdout");

    std::string suite;
    auto* vf = app.add_subcommand("verify", "run a property suite");
    vf->add_option("suite", suite, "duality | census | bounds | constructions | all")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "rmc: " << e.what() << '\n';
        return 1;
    }

    try {
        if (*an) {
            if (spec.empty() && matrix_file.empty()) throw std::invalid_argument("analyze needs --construct or --matrix");
            return analyze(spec, matrix_file, field_spec, budget, timing, json_path, out);
        }
        if (*sc) return scan(qs, ms, ks, ns, sample, seed, budget, csv_path, out);
        return verify(suite, out);
    } catch (const BudgetExceeded& e) {
        err << "rmc: budget exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "rmc: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace rankmc
