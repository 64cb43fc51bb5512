#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <etaunits/class_group.hpp>
#include <etaunits/io.hpp>
#include <etaunits/numeric.hpp>

using namespace etaunits;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::invalid_argument("cannot write " + tmp);
        out << text;
    }
    std::filesystem::rename(tmp, path);
}

// "m:k:e,m:k:e,..." -> exponent vector
ExponentVector parse_expr(const Level& lv, const std::string& expr) {
    ExponentVector v;
    v.N = lv.N;
    std::istringstream ss(expr);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long m, k;
        long e;
        if (sscanf(item.c_str(), "%ld:%ld:%ld", &m, &k, &e) != 3)
            throw std::invalid_argument("bad term '" + item + "', expected m:k:e");
        EtaLabel lab{m, k};
        validate_label(lv, lab);
        v.add(lab, e);
    }
    return v;
}

int cmd_cusps(long N) {
    Level lv = make_level(N);
    std::vector<Cusp> cs = cusps(lv);
    std::cout << "level " << lv.N << " = " << lv.n << "^2 * " << lv.M << ", psi = "
              << lv.psi << ", cusps = " << cs.size() << "\n";
    for (const Cusp& cu : cs)
        std::cout << cu.a << "/" << cu.c << "  width " << cusp_width(lv, cu) << "\n";
    return 0;
}

int cmd_eta_divisor(long N, long m, long k, bool json) {
    Level lv = make_level(N);
    EtaLabel lab{m, k};
    CuspidalDivisor D = eta_divisor(lv, lab);
    if (json) {
        std::cout << divisor_to_json(D) << "\n";
    } else {
        std::cout << "div eta[" << m << "," << k << "] on X_0(" << N << "):\n";
        for (const auto& [cu, x] : D.mult)
            std::cout << "  " << cu.a << "/" << cu.c << "  " << x.get_str() << "\n";
        std::cout << "degree " << D.degree().get_str() << " (psi/24 = " << lv.psi
                  << "/24)\n";
    }
    return 0;
}

int cmd_qexp(long N, long m, long k, long terms) {
    Level lv = make_level(N);
    std::cout << qexp_pretty(eta_qexp(lv, {m, k}, terms)) << "\n";
    return 0;
}

int cmd_check_unit(long N, const std::string& file, const std::string& expr,
                   bool json) {
    Level lv = make_level(N);
    ExponentVector v;
    if (!file.empty())
        v = vector_from_json(lv, slurp(file));
    else if (!expr.empty())
        v = parse_expr(lv, expr);
    else
        throw std::invalid_argument("check-unit: need --file or --expr");
    CriterionReport rep = check_modularity(lv, v);
    if (json) {
        std::ostringstream os;
        os << "{\"weight\":" << rep.weight_ok << ",\"product\":" << rep.product_ok
           << ",\"dual\":" << rep.dual_ok << ",\"shift\":" << rep.shift_ok
           << ",\"square\":" << rep.square_ok << ",\"unit\":" << rep.ok() << "}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << vector_pretty(v) << "\n";
        std::cout << "weight   " << (rep.weight_ok ? "ok" : "FAIL") << "\n";
        std::cout << "product  " << (rep.product_ok ? "ok" : "FAIL") << "\n";
        std::cout << "dual     " << (rep.dual_ok ? "ok" : "FAIL") << "\n";
        std::cout << "shift    " << (rep.shift_ok ? "ok" : "FAIL") << "\n";
        std::cout << "square   " << (rep.square_ok ? "ok" : "FAIL") << "\n";
        std::cout << (rep.ok() ? "modular unit on Gamma_0(" : "not modular on Gamma_0(")
                  << N << ")\n";
    }
    return rep.ok() ? 0 : 1;
}

int cmd_unit_basis(long N, bool json) {
    Level lv = make_level(N);
    UnitBasis ub = unit_basis(lv);
    if (json) {
        std::ostringstream os;
        os << "{\"level\":" << N << ",\"labels\":[";
        for (size_t i = 0; i < ub.labels.size(); i++)
            os << (i ? "," : "") << "[" << ub.labels[i].m << "," << ub.labels[i].k << "]";
        os << "],\"rows\":[";
        for (size_t j = 0; j < ub.rows.size(); j++) {
            os << (j ? "," : "") << "[";
            for (size_t i = 0; i < ub.rows[j].size(); i++)
                os << (i ? "," : "") << "\"" << ub.rows[j][i].get_str() << "\"";
            os << "]";
        }
        os << "]}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "rank " << ub.rows.size() << " (cusps - 1)\n";
        for (const ExponentVector& u : ub.units) std::cout << vector_pretty(u) << "\n";
    }
    return 0;
}

int cmd_class_group(long N, bool json) {
    Level lv = make_level(N);
    ClassGroup G = class_group(lv);
    std::vector<Int> cq = rational_subgroup_invariants(G);
    std::vector<Int> fx = fixed_subgroup_invariants(G);
    bool equal = cq == fx;
    if (json) {
        auto arr = [](const std::vector<Int>& v) {
            std::ostringstream os;
            os << "[";
            for (size_t i = 0; i < v.size(); i++)
                os << (i ? "," : "") << "\"" << v[i].get_str() << "\"";
            os << "]";
            return os.str();
        };
        std::cout << "{\"level\":" << N << ",\"full\":" << arr(G.invariants)
                  << ",\"rational\":" << arr(cq) << ",\"fixed\":" << arr(fx)
                  << ",\"equal\":" << (equal ? "true" : "false") << "}\n";
    } else {
        std::cout << "C(" << N << ")      = " << invariants_pretty(G.invariants) << "\n";
        std::cout << "C_Q(" << N << ")    = " << invariants_pretty(cq) << "\n";
        std::cout << "C(" << N << ")(Q)   = " << invariants_pretty(fx) << "\n";
        std::cout << (equal ? "subgroups agree" : "MISMATCH") << "\n";
    }
    return equal ? 0 : 1;
}

int cmd_rationalize(long N, const std::string& file, const std::string& cusp_arg,
                    bool json) {
    Level lv = make_level(N);
    ClassGroup G = class_group(lv);
    CuspidalDivisor D;
    if (!file.empty()) {
        D = divisor_from_json(lv, slurp(file));
    } else if (!cusp_arg.empty()) {
        long c, a;
        if (sscanf(cusp_arg.c_str(), "%ld,%ld", &c, &a) != 2)
            throw std::invalid_argument("bad --cusp, expected c,a");
        std::vector<Cusp> cs = cusps(lv);
        if (!std::binary_search(cs.begin(), cs.end(), Cusp{c, a}))
            throw std::invalid_argument("not a canonical cusp");
        D.N = N;
        D.add({c, a}, 1);
        D.add({N, 1}, -1);
    } else {
        throw std::invalid_argument("rationalize: need --file or --cusp");
    }
    RationalizeResult res = rationalize(G, D);
    if (json) {
        std::cout << "{\"order\":\"" << res.class_ord.get_str() << "\",\"unit\":"
                  << vector_to_json(res.g) << ",\"rational_divisor\":"
                  << divisor_to_json(res.rational_divisor)
                  << ",\"correction\":" << (res.used_correction ? "true" : "false")
                  << ",\"fallback\":" << (res.used_fallback ? "true" : "false") << "}\n";
    } else {
        std::cout << "class order " << res.class_ord.get_str() << "\n";
        std::cout << "unit g = " << vector_pretty(res.g) << "\n";
        std::cout << "D - div(g) = " << divisor_pretty(res.rational_divisor) << "\n";
        if (res.used_correction) std::cout << "(used 2-power correction)\n";
        if (res.used_fallback) std::cout << "(used direct lattice fallback)\n";
    }
    return 0;
}

struct LevelRow {
    long N = 0;
    std::string inv_c, inv_cq, inv_fixed;
    bool equal = false;
    bool from_cache = false;
};

LevelRow compute_row(long N) {
    Level lv = make_level(N);
    ClassGroup G = class_group(lv);
    LevelRow row;
    row.N = N;
    row.inv_c = invariants_pretty(G.invariants);
    row.inv_cq = invariants_pretty(rational_subgroup_invariants(G));
    row.inv_fixed = invariants_pretty(fixed_subgroup_invariants(G));
    row.equal = row.inv_cq == row.inv_fixed;
    return row;
}

int cmd_verify_rational(long max_level, std::vector<long> levels, int jobs,
                        const std::string& report, const std::string& cache) {
    if (levels.empty()) levels = valid_levels(max_level);
    if (!cache.empty()) std::filesystem::create_directories(cache);

    std::vector<LevelRow> rows(levels.size());
    std::atomic<size_t> next{0};
    std::mutex log_mutex;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= levels.size()) return;
            long N = levels[i];
            std::string cpath =
                cache.empty() ? "" : cache + "/level_" + std::to_string(N) + ".txt";
            bool cached = false;
            if (!cpath.empty() && std::filesystem::exists(cpath)) {
                std::istringstream in(slurp(cpath));
                LevelRow r;
                r.N = N;
                std::string eq;
                if (std::getline(in, r.inv_c) && std::getline(in, r.inv_cq) &&
                    std::getline(in, r.inv_fixed) && std::getline(in, eq)) {
                    r.equal = eq == "equal";
                    r.from_cache = true;
                    rows[i] = r;
                    cached = true;
                }
            }
            if (!cached) {
                rows[i] = compute_row(N);
                if (!cpath.empty())
                    atomic_write(cpath, rows[i].inv_c + "\n" + rows[i].inv_cq + "\n" +
                                            rows[i].inv_fixed + "\n" +
                                            (rows[i].equal ? "equal" : "mismatch") + "\n");
            }
            std::lock_guard<std::mutex> lk(log_mutex);
            std::cerr << "  level " << N << (rows[i].from_cache ? " (cache)" : "")
                      << (rows[i].equal ? " ok" : " MISMATCH") << "\n";
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; t++) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    bool all_ok = true;
    for (const LevelRow& r : rows) {
        std::cout << "N=" << r.N << "  C = " << r.inv_c << "  |  C_Q = " << r.inv_cq
                  << "  |  fixed = " << r.inv_fixed
                  << (r.equal ? "  [ok]" : "  [MISMATCH]") << "\n";
        all_ok = all_ok && r.equal;
    }
    std::cout << (all_ok ? "all levels verified" : "verification FAILED") << " ("
              << rows.size() << " levels)\n";
    if (!report.empty()) {
        std::ostringstream os;
        os << "level,full,rational,fixed,equal\n";
        for (const LevelRow& r : rows)
            os << r.N << ",\"" << r.inv_c << "\",\"" << r.inv_cq << "\",\""
               << r.inv_fixed << "\"," << (r.equal ? "1" : "0") << "\n";
        atomic_write(report, os.str());
    }
    return all_ok ? 0 : 1;
}

int cmd_oracle_check(long N, int trials, unsigned long seed, double tol) {
    Level lv = make_level(N);
    UnitBasis ub = unit_basis(lv);
    std::mt19937_64 rng(seed);

    // exact: every basis unit has trivial multiplier at random gamma
    long checked = 0;
    for (const ExponentVector& u : ub.units)
        for (int t = 0; t < trials; t++) {
            MatrixSL2 g = random_gamma0(N, rng);
            if (!product_multiplier(lv, u, g).is_one()) {
                std::cout << "exact multiplier NONTRIVIAL on basis unit\n";
                return 1;
            }
            checked++;
        }
    std::cout << "exact multipliers trivial: " << checked << " samples over "
              << ub.units.size() << " basis units\n";

    // exact: random weight-0 vectors agree with the criterion
    std::vector<EtaLabel> labs = all_labels(lv);
    std::uniform_int_distribution<size_t> pick(0, labs.size() - 1);
    std::uniform_int_distribution<int> amp(1, 3);
    int agree = 0, vetted = 0;
    for (int t = 0; t < trials; t++) {
        ExponentVector v;
        v.N = N;
        for (int p = 0; p < 3; p++) {
            int e = amp(rng);
            v.add(labs[pick(rng)], e);
            v.add(labs[pick(rng)], -e);
        }
        bool crit = is_modular_unit(lv, v);
        bool triv = true;
        for (int s = 0; s < 40 && triv; s++)
            triv = product_multiplier(lv, v, random_gamma0(N, rng)).is_one();
        vetted++;
        if (crit == triv) agree++;
    }
    std::cout << "criterion vs sampled multipliers: " << agree << "/" << vetted
              << " agree\n";
    if (agree != vetted) return 1;

    // numeric: transformation law at random tau for a few basis units
    double worst = 0;
    for (size_t j = 0; j < ub.units.size() && j < 4; j++) {
        NumericCheck nc = multiplier_numeric_check(lv, ub.units[j], 5, seed + j, tol);
        worst = std::max(worst, nc.max_err);
        if (!nc.ok) {
            std::cout << "numeric transformation check FAILED (err " << nc.max_err
                      << ")\n";
            return 1;
        }
    }
    std::cout << "numeric transformation law ok (max rel err " << worst << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular units and cuspidal divisor classes on X_0(N), N = n^2 M"};
    app.require_subcommand(1);

    long N = 0, m = 1, k = 0, terms = 12, max_level = 100;
    bool json = false;
    std::string file, expr, cusp_arg, report, cache;
    std::vector<long> levels;
    int jobs = 1, trials = 200;
    unsigned long seed = 1;
    double tol = 1e-8;

    std::function<int()> run;

    auto* c1 = app.add_subcommand("cusps", "list the cusps of X_0(N)");
    c1->add_option("N", N, "level")->required();
    c1->callback([&] { run = [&] { return cmd_cusps(N); }; });

    auto* c2 = app.add_subcommand("eta-divisor", "divisor of a generalized eta function");
    c2->add_option("N", N, "level")->required();
    c2->add_option("m", m, "divisor of N")->required();
    c2->add_option("k", k, "shift numerator")->required();
    c2->add_flag("--json", json, "JSON output");
    c2->callback([&] { run = [&] { return cmd_eta_divisor(N, m, k, json); }; });

    auto* c3 = app.add_subcommand("q-expansion", "q-expansion of eta[m,k]");
    c3->add_option("N", N, "level")->required();
    c3->add_option("m", m, "divisor of N")->required();
    c3->add_option("k", k, "shift numerator")->required();
    c3->add_option("--terms", terms, "number of terms");
    c3->callback([&] { run = [&] { return cmd_qexp(N, m, k, terms); }; });

    auto* c4 = app.add_subcommand("check-unit", "test the modularity criterion");
    c4->add_option("N", N, "level")->required();
    c4->add_option("--file", file, "exponent vector JSON file");
    c4->add_option("--expr", expr, "inline vector m:k:e,m:k:e,...");
    c4->add_flag("--json", json, "JSON output");
    c4->callback([&] { run = [&] { return cmd_check_unit(N, file, expr, json); }; });

    auto* c5 = app.add_subcommand("unit-basis", "basis of the modular units");
    c5->add_option("N", N, "level")->required();
    c5->add_flag("--json", json, "JSON output");
    c5->callback([&] { run = [&] { return cmd_unit_basis(N, json); }; });

    auto* c6 = app.add_subcommand("class-group", "cuspidal class group and subgroups");
    c6->add_option("N", N, "level")->required();
    c6->add_flag("--json", json, "JSON output");
    c6->callback([&] { run = [&] { return cmd_class_group(N, json); }; });

    auto* c7 = app.add_subcommand("rationalize", "move a stable class to a rational divisor");
    c7->add_option("N", N, "level")->required();
    c7->add_option("--file", file, "divisor JSON file");
    c7->add_option("--cusp", cusp_arg, "c,a: rationalize (c,a) - (infinity)");
    c7->add_flag("--json", json, "JSON output");
    c7->callback([&] { run = [&] { return cmd_rationalize(N, file, cusp_arg, json); }; });

    auto* c8 = app.add_subcommand("verify-rational",
                                  "check rational = fixed subgroup across levels");
    c8->add_option("--max-level", max_level, "sweep all valid levels up to this bound");
    c8->add_option("--level", levels, "explicit level (repeatable)");
    c8->add_option("--jobs", jobs, "worker threads");
    c8->add_option("--report", report, "write CSV report");
    c8->add_option("--cache", cache, "cache directory");
    c8->callback([&] {
        run = [&] { return cmd_verify_rational(max_level, levels, jobs, report, cache); };
    });

    auto* c9 = app.add_subcommand("oracle-check",
                                  "exact and numeric transformation-law checks");
    c9->add_option("N", N, "level")->required();
    c9->add_option("--trials", trials, "random samples");
    c9->add_option("--seed", seed, "RNG seed");
    c9->add_option("--tolerance", tol, "numeric tolerance");
    c9->callback([&] { run = [&] { return cmd_oracle_check(N, trials, seed, tol); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
