// Command-line front end for the cyclerees library.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage error,
// 3 budget exceeded.

#include "cyclerees/cyclerees.hpp"
#include "cyclerees/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

namespace cr = cyclerees;
using nlohmann::json;

namespace {

enum exit_code { ok = 0, math_failure = 1, usage = 2, over_budget = 3 };

struct config {
    std::string format = "text";
    double budget_secs = 60;
    std::size_t jobs = 1;
    bool timings = false;
};

cr::budget cell_budget(const config& cfg) { return cr::budget::seconds(cfg.budget_secs); }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_classify(const config& cfg, std::size_t n, std::size_t t) {
    const auto rec = cr::classify(n, t, cell_budget(cfg));
    if (cfg.format == "json") {
        print_json(cr::to_json(rec, cfg.timings));
    } else if (cfg.format == "csv") {
        std::cout << cr::render_csv({rec}, cfg.timings);
    } else {
        std::cout << cr::to_string(rec.cls) << '\n';
        if (rec.witness) {
            std::cout << "witness: " << *rec.witness << '\n';
        }
    }
    return rec.cls == cr::rees_class::timeout ? over_budget : ok;
}

int run_table(const config& cfg, std::size_t n_min, std::size_t n_max) {
    const auto recs = cr::classification_table(n_min, n_max, cfg.budget_secs, cfg.jobs);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : recs) {
            arr.push_back(cr::to_json(r, cfg.timings));
        }
        print_json(arr);
    } else if (cfg.format == "csv") {
        std::cout << cr::render_csv(recs, cfg.timings);
    } else {
        std::cout << cr::render_grid(recs);
    }
    const bool timed_out = std::any_of(recs.begin(), recs.end(),
                                       [](const auto& r) { return r.cls == cr::rees_class::timeout; });
    return timed_out ? over_budget : ok;
}

int run_fiber_dim(const config& cfg, std::size_t n, std::size_t t, bool check_rank) {
    const std::size_t dim = cr::fiber_dimension(n, t);
    std::optional<std::size_t> rank;
    if (check_rank) {
        rank = cr::circulant_rank(n, t);
    }
    const bool good = !rank || *rank == dim;
    if (cfg.format == "json") {
        json j{{"n", n}, {"t", t}, {"fiber_dim", dim}};
        if (rank) {
            j["circulant_rank"] = *rank;
            j["rank_check"] = good ? "ok" : "failed";
        }
        print_json(j);
    } else if (cfg.format == "csv") {
        std::cout << "n,t,fiber_dim,circulant_rank\n" << n << ',' << t << ',' << dim << ',';
        if (rank) {
            std::cout << *rank;
        }
        std::cout << '\n';
    } else {
        std::cout << dim;
        if (rank) {
            std::cout << (good ? " (rank check: ok)" : " (rank check: failed, rank " + std::to_string(*rank) + ")");
        }
        std::cout << '\n';
    }
    return good ? ok : math_failure;
}

int run_hilbert(const config& cfg, std::size_t n, bool verify) {
    const auto computed = cr::computed_hilbert_n_minus_2(n, cell_budget(cfg));
    const auto closed = cr::hilbert_closed_form_n_minus_2(n);
    const bool good = !verify || computed == closed;
    if (cfg.format == "json") {
        json j{{"n", n}, {"t", n - 2}, {"series", cr::to_json(computed)}, {"palindromic", computed.is_palindromic()}};
        if (verify) {
            j["closed_form"] = cr::to_json(closed);
            j["verified"] = good;
        }
        print_json(j);
    } else if (cfg.format == "csv") {
        std::cout << "k,h_k\n";
        for (std::size_t k = 0; k < computed.numerator.size(); ++k) {
            std::cout << k << ',' << computed.numerator[k] << '\n';
        }
    } else {
        std::cout << cr::to_string(computed) << '\n';
        if (verify) {
            std::cout << "closed form: " << cr::to_string(closed) << (good ? " (match)" : " (MISMATCH)") << '\n';
        }
    }
    return good ? ok : math_failure;
}

int run_cm_type(const config& cfg, std::size_t n) {
    const auto rep = cr::cm_type_report(n, cell_budget(cfg));
    if (cfg.format == "json") {
        print_json({{"n", n}, {"cm_type", rep.type}, {"length", rep.length}, {"socle_by_degree", rep.socle_by_degree}});
    } else if (cfg.format == "csv") {
        std::cout << "n,cm_type,length\n" << n << ',' << rep.type << ',' << rep.length << '\n';
    } else {
        std::cout << rep.type << '\n';
    }
    return ok;
}

int run_verify_gb(const config& cfg, const std::string& family, std::size_t n) {
    const bool n2 = family == "n2";
    const auto named = n2 ? cr::family_n_minus_2(n) : cr::family_half(n);
    const auto polys = cr::polys_of(named);
    const auto order = polys.front().order();
    const auto cert = cr::is_groebner_basis(polys, order);
    const cr::monomial_ideal in(polys.front().ring(), [&] {
        std::vector<cr::monomial> lead;
        for (const auto& p : polys) {
            lead.push_back(p.leading_monomial());
        }
        return lead;
    }());
    const bool squarefree = cr::is_squarefree(in);
    const std::optional<bool> xcond = n2 ? std::optional<bool>(cr::x_condition(in)) : std::nullopt;
    const bool good = cert.is_groebner && squarefree && xcond.value_or(true);
    if (cfg.format == "json") {
        json j = cr::to_json(cert, order, polys);
        j["family"] = family;
        j["n"] = n;
        j["squarefree_initial_ideal"] = squarefree;
        if (xcond) {
            j["x_condition"] = *xcond;
        }
        print_json(j);
    } else if (cfg.format == "csv") {
        std::cout << "family,n,groebner,squarefree,x_condition\n"
                  << family << ',' << n << ',' << cert.is_groebner << ',' << squarefree << ','
                  << (xcond ? std::to_string(*xcond) : "") << '\n';
    } else {
        std::cout << "groebner basis: " << (cert.is_groebner ? "yes" : "no") << '\n';
        if (!cert.is_groebner) {
            std::cout << "  failing pair: " << named[cert.failing_pair->first].name << ", "
                      << named[cert.failing_pair->second].name << '\n'
                      << "  remainder: " << cr::to_string(cert.remainder) << '\n';
        }
        std::cout << "squarefree initial ideal: " << (squarefree ? "yes" : "no") << '\n';
        if (xcond) {
            std::cout << "x-condition: " << (*xcond ? "yes" : "no") << '\n';
        }
    }
    return good ? ok : math_failure;
}

int run_pfaffian(const config& cfg, std::size_t n) {
    const auto A = cr::jacobian_dual(n);
    const auto pf = cr::pfaffian(A);
    const auto h = cr::fiber_relation_h(n);
    const int sign = pf == h ? 1 : pf == -h ? -1 : 0;
    if (cfg.format == "json") {
        print_json({{"n", n}, {"pfaffian", cr::to_string(pf)}, {"h", cr::to_string(h)}, {"sign", sign}});
    } else if (cfg.format == "csv") {
        std::cout << "n,pfaffian,sign\n" << n << ",\"" << cr::to_string(pf) << "\"," << sign << '\n';
    } else {
        std::cout << cr::to_string(pf) << '\n';
        std::cout << (sign == 1 ? "= h" : sign == -1 ? "= -h" : "differs from h") << '\n';
    }
    return sign != 0 ? ok : math_failure;
}

int run_ideal(const config& cfg, std::size_t n, std::size_t t, const std::string& which, std::string family) {
    const cr::path_spec spec{n, t};
    std::vector<cr::polynomial> gens;
    std::vector<std::string> names;
    if (which == "path") {
        gens = cr::path_ideal(spec).generators();
    } else if (which == "sym") {
        gens = cr::sym_relations(spec).generators();
    } else if (which == "rees") {
        const auto J = cr::rees_ideal(spec, cell_budget(cfg));
        gens = J.groebner(cr::make_product_order(J.ring()))->elements;
    } else if (which == "fiber") {
        const auto H = cr::fiber_ideal(spec, cell_budget(cfg));
        gens = H.groebner(cr::make_product_order(H.ring()))->elements;
    } else {
        cr::check_path_spec(spec);
        if (family.empty()) {
            family = t + 2 == n ? "n2" : "half";
        }
        if (family == "n2" && t + 2 != n) {
            throw std::invalid_argument("the n2 family needs t = n-2");
        }
        if (family == "half" && 2 * t != n) {
            throw std::invalid_argument("the half family needs t = n/2");
        }
        for (auto& f : family == "n2" ? cr::family_n_minus_2(n) : cr::family_half(n)) {
            names.push_back(f.name);
            gens.push_back(f.poly);
        }
    }
    if (cfg.format == "json") {
        json j{{"n", n}, {"t", t}, {"which", which}, {"generators", cr::to_json(gens)}};
        if (!names.empty()) {
            j["names"] = names;
        }
        print_json(j);
    } else if (cfg.format == "csv") {
        std::cout << "index,name,polynomial\n";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::cout << i << ',' << (names.empty() ? "" : names[i]) << ",\"" << cr::to_string(gens[i]) << "\"\n";
        }
    } else {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!names.empty()) {
                std::cout << names[i] << " = ";
            }
            std::cout << cr::to_string(gens[i]) << '\n';
        }
    }
    return ok;
}

std::optional<double> env_budget() {
    const char* raw = std::getenv("CYCLE_REES_BUDGET_SECS");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != std::string(raw).size()) {
        throw std::invalid_argument("CYCLE_REES_BUDGET_SECS is not a number");
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rees algebras of t-path ideals of cycles"};
    app.require_subcommand(1);

    config cfg;
    try {
        if (auto b = env_budget()) {
            cfg.budget_secs = *b;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--budget", cfg.budget_secs, "Per-cell budget in seconds (env CYCLE_REES_BUDGET_SECS)")
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "Worker threads for table")->capture_default_str();
    app.add_flag("--timings", cfg.timings, "Include per-stage timings in json/csv records");

    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    bool check_rank = false;
    bool verify = false;
    std::string family;
    std::string which;

    auto* classify = app.add_subcommand("classify", "Classify one (n, t) cell as linear, fiber or neither");
    classify->add_option("--n", n)->required();
    classify->add_option("--t", t)->required();

    auto* table = app.add_subcommand("table", "Classification grid for a range of cycle sizes");
    table->add_option("--n-min", n_min)->required();
    table->add_option("--n-max", n_max)->required();

    auto* fiber_dim = app.add_subcommand("fiber-dim", "Dimension of the fiber cone");
    fiber_dim->add_option("--n", n)->required();
    fiber_dim->add_option("--t", t)->required();
    fiber_dim->add_flag("--check-rank", check_rank, "Cross-check against the circulant rank");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the Rees algebra for t = n-2");
    hilbert->add_option("--n", n)->required();
    hilbert->add_flag("--verify", verify, "Compare with the closed form");

    auto* cm_type = app.add_subcommand("cm-type", "Cohen-Macaulay type for t = n-2, n odd");
    cm_type->add_option("--n", n)->required();

    auto* verify_gb = app.add_subcommand("verify-gb", "Check a generator family is a Groebner basis");
    verify_gb->add_option("--family", family)->required()->check(CLI::IsMember({"n2", "half"}));
    verify_gb->add_option("--n", n)->required();

    auto* pfaffian = app.add_subcommand("pfaffian", "Pfaffian of the Jacobian dual relation matrix (n even)");
    pfaffian->add_option("--n", n)->required();

    auto* ideal = app.add_subcommand("ideal", "Print the generators of an ideal");
    ideal->add_option("--n", n)->required();
    ideal->add_option("--t", t)->required();
    ideal->add_option("--which", which)->required()->check(CLI::IsMember({"path", "sym", "rees", "fiber", "family"}));
    ideal->add_option("--family", family, "n2 or half (default from t)")->check(CLI::IsMember({"n2", "half"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    if (!(cfg.budget_secs > 0) || cfg.jobs < 1) {
        std::cerr << "error: budget must be positive and jobs at least 1\n";
        return usage;
    }

    try {
        if (*classify) {
            return run_classify(cfg, n, t);
        }
        if (*table) {
            return run_table(cfg, n_min, n_max);
        }
        if (*fiber_dim) {
            return run_fiber_dim(cfg, n, t, check_rank);
        }
        if (*hilbert) {
            return run_hilbert(cfg, n, verify);
        }
        if (*cm_type) {
            return run_cm_type(cfg, n);
        }
        if (*verify_gb) {
            return run_verify_gb(cfg, family, n);
        }
        if (*pfaffian) {
            return run_pfaffian(cfg, n);
        }
        if (*ideal) {
            return run_ideal(cfg, n, t, which, family);
        }
    } catch (const cr::budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return over_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return math_failure;
    }
    return usage;
}
