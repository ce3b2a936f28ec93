#include "pqpoly/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqpoly/families.hpp"
#include "pqpoly/identity_suite.hpp"
#include "pqpoly/serialization.hpp"
#include "pqpoly/special_sequences.hpp"

namespace pqpoly {

namespace {

/// A bad flag value; the message names the flag.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenOptions {
    std::string family;
    long k = 1;
    std::string p = "1/2";
    std::string q = "1/3";
    long n_max = 5;
    long s = 1;
    std::string u = "-1";
    std::string route = "gf";
    std::string format = "json";
    std::string output;
};

struct VerifyOptions {
    long n_max = 10;
    std::vector<std::string> only;
    std::string output;
};

struct ClosedFormOptions {
    long k = 0;
    std::string p = "1/2";
    std::string q = "1/3";
    std::string format = "json";
    std::string output;
};

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError("invalid value for " + flag + ": '" + text + "' is not a rational a/b");
    }
}

PQParams parse_params(const std::string& p_text, const std::string& q_text) {
    const Rational p = parse_flag_rational("--p", p_text);
    const Rational q = parse_flag_rational("--q", q_text);
    try {
        return PQParams(p, q);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid --p/--q: ") + e.what());
    }
}

/// Writes to --output when given, otherwise to `out`.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw ConfigError("invalid value for --output: cannot open '" + path + "'");
    file << text;
}

/// One table row: n plus either a polynomial or a triangle row.
struct Row {
    long n;
    std::optional<XPoly> poly;
    std::vector<XPoly> row;
    bool scalar_row = false;  // row entries are constants printed as scalars
};

std::string render(const std::vector<Row>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j{{"n", r.n}};
            if (r.poly) {
                j["poly"] = to_json(*r.poly);
            } else {
                auto vals = nlohmann::json::array();
                for (const auto& v : r.row) {
                    if (r.scalar_row) vals.push_back(v.coeff(0).to_string());
                    else vals.push_back(to_json(v));
                }
                j["row"] = std::move(vals);
            }
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << '\n';
        return os.str();
    }
    if (!rows.empty() && rows.front().poly) {
        os << "n,poly\n";
        for (const auto& r : rows) os << r.n << ',' << to_csv_cell(*r.poly) << '\n';
    } else {
        os << "n,m,value\n";
        for (const auto& r : rows)
            for (std::size_t m = 0; m < r.row.size(); ++m)
                os << r.n << ',' << m << ','
                   << (r.scalar_row ? r.row[m].coeff(0).to_string() : to_csv_cell(r.row[m])) << '\n';
    }
    return os.str();
}

std::vector<Row> triangle(long n_max, const std::function<XPoly(long, long)>& entry, bool scalar) {
    std::vector<Row> rows;
    for (long n = 0; n <= n_max; ++n) {
        Row r{n, std::nullopt, {}, scalar};
        for (long m = 0; m <= n; ++m) r.row.push_back(entry(n, m));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Row> polys(long n_max, const std::function<XPoly(long)>& value) {
    std::vector<Row> rows;
    for (long n = 0; n <= n_max; ++n) rows.push_back(Row{n, value(n), {}, false});
    return rows;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
    if (o.n_max < 0) throw ConfigError("invalid value for --nmax: must be >= 0");
    if (o.format != "json" && o.format != "csv") throw ConfigError("invalid value for --format: " + o.format);
    const std::string& f = o.family;
    std::vector<Row> rows;
    if (f == "stirling1") {
        rows = triangle(o.n_max, [](long n, long m) { return XPoly(stirling1_unsigned(n, m)); }, true);
    } else if (f == "stirling2") {
        rows = triangle(o.n_max, [](long n, long m) { return XPoly(stirling2(n, m)); }, true);
    } else if (f == "weighted-stirling1") {
        rows = triangle(o.n_max, weighted_stirling1, false);
    } else if (f == "weighted-stirling2") {
        rows = triangle(o.n_max, weighted_stirling2, false);
    } else if (f == "euler") {
        rows = polys(o.n_max, euler_poly);
    } else if (f == "bernoulli-order") {
        if (o.s < 1) throw ConfigError("invalid value for --s: must be >= 1");
        rows = polys(o.n_max, [&](long n) { return bernoulli_order(n, o.s); });
    } else if (f == "frobenius-euler") {
        if (o.s < 1) throw ConfigError("invalid value for --s: must be >= 1");
        const Rational u = parse_flag_rational("--u", o.u);
        if (u == Rational(1)) throw ConfigError("invalid value for --u: u = 1 is not allowed");
        rows = polys(o.n_max, [&](long n) { return frobenius_euler(n, o.s, u); });
    } else {
        Family family;
        Route route;
        try {
            family = parse_family(f);
        } catch (const std::invalid_argument&) {
            throw ConfigError("invalid value for --family: '" + f + "'");
        }
        try {
            route = parse_route(o.route);
        } catch (const std::invalid_argument&) {
            throw ConfigError("invalid value for --route: '" + o.route + "'");
        }
        const PQParams params = parse_params(o.p, o.q);
        try {
            FamilyRequest{family, o.n_max, o.k, params, route}.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid --route/--k: ") + e.what());
        }
        if (route == Route::gf) {
            const auto table = family_table(family, o.n_max, o.k, params);
            rows = polys(o.n_max, [&](long n) { return table[static_cast<std::size_t>(n)]; });
        } else {
            rows = polys(o.n_max, [&](long n) { return evaluate({family, n, o.k, params, route}); });
        }
    }
    emit(o.output, out, render(rows, o.format));
    return 0;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    SuiteConfig cfg;
    if (o.n_max < 0) throw ConfigError("invalid value for --nmax: must be >= 0");
    cfg.n_max = o.n_max;
    cfg.only = o.only;
    for (const auto& id : cfg.only) {
        const auto ids = identity_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw ConfigError("invalid value for --only: unknown identity '" + id + "'");
    }
    if (const char* env = std::getenv("PQPOLY_THREADS"); env && *env) {
        try {
            cfg.threads = std::stoi(env);
        } catch (const std::exception&) {
            throw ConfigError("invalid PQPOLY_THREADS value '" + std::string(env) + "'");
        }
        if (cfg.threads < 1) throw ConfigError("invalid PQPOLY_THREADS value: must be >= 1");
    }
    const auto reports = run_all(cfg);
    emit(o.output, out, to_json(reports).dump(2) + "\n");
    for (const auto& r : reports) {
        err << (r.passed() ? "PASS " : (r.vacuous() ? "VACUOUS " : "FAIL ")) << r.id << " " << r.cells_passed << "/"
            << r.cells_total << '\n';
    }
    return all_passed(reports) ? 0 : 1;
}

int cmd_closed_form(const ClosedFormOptions& o, std::ostream& out) {
    if (o.k > 0) throw ConfigError("invalid value for --k: closed forms exist only for k <= 0");
    const PQParams params = parse_params(o.p, o.q);
    if (params.is_equal_limit()) throw ConfigError("invalid --p/--q: closed form requires p != q");
    const RationalFunction rf = li_pq_closed_form(o.k, params);
    std::string text;
    if (o.format == "json") {
        nlohmann::json j{{"k", o.k},
                         {"p", params.p().to_string()},
                         {"q", params.q().to_string()},
                         {"numerator", to_json(rf.numerator())},
                         {"denominator", to_json(rf.denominator())}};
        text = j.dump(2) + "\n";
    } else if (o.format == "csv") {
        text = "part,coeffs\nnumerator," + to_csv_cell(rf.numerator()) + "\ndenominator," +
               to_csv_cell(rf.denominator()) + "\n";
    } else {
        throw ConfigError("invalid value for --format: " + o.format);
    }
    emit(o.output, out, text);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact (p,q)-poly-Euler, poly-Bernoulli and poly-Cauchy polynomials"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Tabulate a polynomial family or sequence for n = 0..nmax");
    gen_cmd->add_option("--family", gen.family,
                        "poly-euler, poly-bernoulli, poly-cauchy-1, poly-cauchy-2, euler, bernoulli-order, "
                        "frobenius-euler, stirling1, stirling2, weighted-stirling1, weighted-stirling2")
        ->required();
    gen_cmd->add_option("--k", gen.k, "Polylogarithm index k");
    gen_cmd->add_option("--p", gen.p, "Parameter p as a/b");
    gen_cmd->add_option("--q", gen.q, "Parameter q as a/b");
    gen_cmd->add_option("--nmax", gen.n_max, "Largest n");
    gen_cmd->add_option("--s", gen.s, "Order s (bernoulli-order, frobenius-euler)");
    gen_cmd->add_option("--u", gen.u, "Frobenius-Euler parameter u as a/b");
    gen_cmd->add_option("--route", gen.route, "gf, stirling or integral");
    gen_cmd->add_option("--format", gen.format, "json or csv");
    gen_cmd->add_option("--output", gen.output, "Output file (default stdout)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite and write a JSON report");
    verify_cmd->add_option("--nmax", verify.n_max, "Largest n on the grid");
    verify_cmd->add_option("--only", verify.only, "Identity ids to run (repeatable or comma separated)")
        ->delimiter(',');
    verify_cmd->add_option("--output", verify.output, "Report file (default stdout)");

    ClosedFormOptions closed;
    auto* closed_cmd = app.add_subcommand("closed-form", "Print Li_{k,p,q} for k <= 0 as a rational function");
    closed_cmd->add_option("--k", closed.k, "Index k <= 0");
    closed_cmd->add_option("--p", closed.p, "Parameter p as a/b");
    closed_cmd->add_option("--q", closed.q, "Parameter q as a/b");
    closed_cmd->add_option("--format", closed.format, "json or csv");
    closed_cmd->add_option("--output", closed.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*verify_cmd) return cmd_verify(verify, out, err);
        if (*closed_cmd) return cmd_closed_form(closed, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace pqpoly
