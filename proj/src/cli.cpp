#include "qsu2/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsu2/contour.hpp"
#include "qsu2/verify.hpp"
#include "qsu2/vilenkin.hpp"

namespace qsu2::cli {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_complex(Complex z) {
    if (z.imag() == 0.0) return fmt(z.real());
    std::string s = fmt(z.real());
    s += (z.imag() < 0.0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
    return s;
}

struct Shared {
    std::string q_spec;
    std::string j = "0", m = "0", n = "0";
    double tol = 0.0;
    int max_terms = 0; // 0 = default
    std::string format = "csv";
    std::string out_path;
};

TruncationPolicy make_policy(const Shared& shared, double tau) {
    TruncationPolicy policy = policy_for_tau(tau);
    const char* env = std::getenv("QSU2_MAX_TERMS");
    if (env != nullptr) {
        int cap = std::atoi(env);
        if (cap >= 1 && policy.max_terms > cap) policy.max_terms = cap;
    }
    if (shared.max_terms >= 1 && policy.max_terms > shared.max_terms)
        policy.max_terms = shared.max_terms;
    return policy;
}

int write_or_print(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::fputs(payload.c_str(), stdout);
        return kExitOk;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::fprintf(stderr, "error: cannot open output file '%s'\n", out_path.c_str());
        return kExitIo;
    }
    os << payload;
    if (!os) {
        std::fprintf(stderr, "error: failed writing '%s'\n", out_path.c_str());
        return kExitIo;
    }
    return kExitOk;
}

json config_json(const Shared& shared, const std::string& fn_or_suite, const char* key) {
    json cfg;
    cfg[key] = fn_or_suite;
    cfg["q"] = shared.q_spec;
    cfg["J"] = shared.j;
    cfg["M"] = shared.m;
    cfg["N"] = shared.n;
    if (shared.tol > 0.0) cfg["tol"] = shared.tol;
    if (shared.max_terms > 0) cfg["max_terms"] = shared.max_terms;
    cfg["format"] = shared.format;
    if (!shared.out_path.empty()) cfg["out"] = shared.out_path;
    return cfg;
}

int cmd_eval(const Shared& shared, const std::string& fn, std::optional<double> eta,
             std::optional<double> xi, std::optional<double> theta, std::optional<double> phi) {
    HalfInt J = parse_half_int(shared.j);
    QParam q = parse_q_spec(shared.q_spec, guard_order_for(J));
    TruncationPolicy policy = make_policy(shared, q.tau());

    Complex value;
    if (fn == "Q") {
        if (!eta) throw std::invalid_argument("eval --fn Q needs --eta");
        value = QFunction(J, q, policy)(*eta);
    } else if (fn == "L") {
        if (!eta) throw std::invalid_argument("eval --fn L needs --eta");
        value = LqEvaluator(q).l_q(Complex(*eta, 0.0));
    } else if (fn == "R") {
        if (!eta) throw std::invalid_argument("eval --fn R needs --eta");
        SpinTriple s(J, parse_half_int(shared.m), parse_half_int(shared.n));
        value = r_polynomial(s, q, Complex(*eta, 0.0));
    } else if (fn == "P") {
        if (!xi) throw std::invalid_argument("eval --fn P needs --xi");
        SpinTriple s(J, parse_half_int(shared.m), parse_half_int(shared.n));
        value = VilenkinFunction(s, q, policy).p_vilenkin(*xi);
    } else if (fn == "Psi") {
        if (!theta) throw std::invalid_argument("eval --fn Psi needs --theta");
        SpinTriple s(J, parse_half_int(shared.m), parse_half_int(shared.n));
        value = VilenkinFunction(s, q, policy).psi_spherical(*theta, phi.value_or(0.0));
    } else {
        throw std::invalid_argument("unknown function '" + fn + "' (use Q, P, Psi, L, R)");
    }
    std::printf("%s\n", fmt_complex(value).c_str());
    return kExitOk;
}

int cmd_table(const Shared& shared, const std::string& fn, const GridSpec& grid, double phi) {
    HalfInt J = parse_half_int(shared.j);
    HalfInt M = parse_half_int(shared.m);
    HalfInt N = parse_half_int(shared.n);
    QParam q = parse_q_spec(shared.q_spec, guard_order_for(J));
    TruncationPolicy policy = make_policy(shared, q.tau());

    const std::string regime = q.is_real() ? "real" : "circle";
    struct Row {
        double x;
        Complex value;
    };
    std::vector<Row> rows;
    rows.reserve(grid.n);

    if (fn == "Q") {
        QFunction Q(J, q, policy);
        for (int i = 0; i < grid.n; ++i) {
            double x = grid.lo + (grid.hi - grid.lo) * (grid.n == 1 ? 0.0 : double(i) / (grid.n - 1));
            rows.push_back({x, Q(x)});
        }
    } else if (fn == "P") {
        VilenkinFunction psi(SpinTriple(J, M, N), q, policy);
        for (int i = 0; i < grid.n; ++i) {
            double x = grid.lo + (grid.hi - grid.lo) * (grid.n == 1 ? 0.0 : double(i) / (grid.n - 1));
            rows.push_back({x, psi.p_vilenkin(x)});
        }
    } else if (fn == "Psi") {
        VilenkinFunction psi(SpinTriple(J, M, N), q, policy);
        for (int i = 0; i < grid.n; ++i) {
            double x = grid.lo + (grid.hi - grid.lo) * (grid.n == 1 ? 0.0 : double(i) / (grid.n - 1));
            rows.push_back({x, psi.psi_spherical(std::acos(x), phi)});
        }
    } else {
        throw std::invalid_argument("table --fn must be one of Q, P, Psi");
    }

    std::string payload;
    if (shared.format == "csv") {
        payload = "J,M,N,q_regime,tau,xi,re,im\n";
        for (const Row& r : rows) {
            payload += J.to_string() + "," + M.to_string() + "," + N.to_string() + "," + regime +
                       "," + fmt17(q.tau()) + "," + fmt17(r.x) + "," + fmt17(r.value.real()) +
                       "," + fmt17(r.value.imag()) + "\n";
        }
    } else if (shared.format == "json") {
        json doc;
        doc["schema_version"] = 1;
        doc["command"] = "table";
        doc["config"] = config_json(shared, fn, "fn");
        doc["rows"] = json::array();
        for (const Row& r : rows) {
            json row;
            row["J"] = J.to_string();
            row["M"] = M.to_string();
            row["N"] = N.to_string();
            row["q_regime"] = regime;
            row["tau"] = q.tau();
            row["xi"] = r.x;
            row["re"] = r.value.real();
            row["im"] = r.value.imag();
            doc["rows"].push_back(row);
        }
        payload = doc.dump(2);
        payload += "\n";
    } else {
        throw std::invalid_argument("format must be csv or json");
    }
    return write_or_print(shared.out_path, payload);
}

int cmd_limits(const Shared& shared, double epsilon, const GridSpec& grid) {
    HalfInt J = parse_half_int(shared.j);
    HalfInt M = parse_half_int(shared.m);
    HalfInt N = parse_half_int(shared.n);
    SpinTriple s(J, M, N);
    QParam q = QParam::positive_real(epsilon);
    TruncationPolicy policy = policy_for_tau(epsilon);
    VilenkinFunction psi(s, q, policy);

    std::string payload;
    const bool csv = shared.format == "csv";
    json doc;
    if (csv) {
        payload = "J,M,N,epsilon,xi,q_re,q_im,classical_re,classical_im,abs_diff\n";
    } else if (shared.format == "json") {
        doc["schema_version"] = 1;
        doc["command"] = "limits";
        doc["config"] = config_json(shared, "P", "fn");
        doc["config"]["epsilon"] = epsilon;
        doc["rows"] = json::array();
    } else {
        throw std::invalid_argument("format must be csv or json");
    }

    for (int i = 0; i < grid.n; ++i) {
        double xi = grid.lo + (grid.hi - grid.lo) * (grid.n == 1 ? 0.0 : double(i) / (grid.n - 1));
        Complex a = psi.p_vilenkin(xi);
        Complex b = classical_vilenkin(s, xi);
        if (csv) {
            payload += J.to_string() + "," + M.to_string() + "," + N.to_string() + "," +
                       fmt17(epsilon) + "," + fmt17(xi) + "," + fmt17(a.real()) + "," +
                       fmt17(a.imag()) + "," + fmt17(b.real()) + "," + fmt17(b.imag()) + "," +
                       fmt17(std::abs(a - b)) + "\n";
        } else {
            json row;
            row["xi"] = xi;
            row["q_re"] = a.real();
            row["q_im"] = a.imag();
            row["classical_re"] = b.real();
            row["classical_im"] = b.imag();
            row["abs_diff"] = std::abs(a - b);
            doc["rows"].push_back(row);
        }
    }
    if (!csv) {
        payload = doc.dump(2);
        payload += "\n";
    }
    return write_or_print(shared.out_path, payload);
}

int cmd_verify(const Shared& shared, const std::string& suite, const std::string& jmax_text) {
    verify::Options opts;
    if (!shared.q_spec.empty()) {
        HalfInt guard_j = jmax_text.empty() ? parse_half_int("5/2") : parse_half_int(jmax_text);
        opts.qs.push_back(parse_q_spec(shared.q_spec, guard_order_for(guard_j)));
    }
    if (!jmax_text.empty()) opts.j_max = parse_half_int(jmax_text);
    if (shared.m != "0" || shared.n != "0") {
        opts.m = parse_half_int(shared.m);
        opts.n = parse_half_int(shared.n);
    }
    if (shared.tol > 0.0) opts.tol = shared.tol;
    if (shared.max_terms > 0) opts.policy.max_terms = shared.max_terms;
    const char* env = std::getenv("QSU2_MAX_TERMS");
    if (env != nullptr) {
        int cap = std::atoi(env);
        if (cap >= 1 && opts.policy.max_terms > cap) opts.policy.max_terms = cap;
    }

    auto checks = verify::run_suite(suite, opts);

    for (const auto& c : checks) {
        std::printf("[%s] %-60s residual %.3e  tol %.1e\n",
                    c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL"), c.name.c_str(), c.residual,
                    c.tolerance);
    }
    const bool ok = verify::all_pass(checks);
    std::printf("%s: %zu checks\n", ok ? "PASS" : "FAIL", checks.size());

    json doc;
    doc["schema_version"] = 1;
    doc["command"] = "verify";
    doc["config"] = config_json(shared, suite, "suite");
    if (!jmax_text.empty()) doc["config"]["Jmax"] = jmax_text;
    doc["checks"] = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["suite"] = c.suite;
        jc["name"] = c.name;
        jc["identity"] = c.identity;
        jc["residual"] = c.residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        jc["skipped"] = c.skipped;
        if (!c.note.empty()) jc["note"] = c.note;
        doc["checks"].push_back(jc);
    }
    doc["all_pass"] = ok;

    if (!shared.out_path.empty()) {
        int io = write_or_print(shared.out_path, doc.dump(2) + "\n");
        if (io != kExitOk) return io;
    } else if (shared.format == "json") {
        std::printf("%s\n", doc.dump(2).c_str());
    }
    return ok ? kExitOk : kExitVerifyFail;
}

} // namespace

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    std::size_t a = text.find(':');
    std::size_t b = text.rfind(':');
    if (a == std::string::npos || b == a)
        throw std::invalid_argument("grid must be lo:hi:n, got '" + text + "'");
    try {
        g.lo = std::stod(text.substr(0, a));
        g.hi = std::stod(text.substr(a + 1, b - a - 1));
        g.n = std::stoi(text.substr(b + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must be lo:hi:n, got '" + text + "'");
    }
    if (g.n < 1) throw std::invalid_argument("grid needs at least one point");
    return g;
}

QParam parse_q_spec(const std::string& text, int guard_order) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("q must be real:<value> or circle:<tau>, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    double value;
    try {
        value = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value in q spec '" + text + "'");
    }
    if (kind == "real") return QParam::from_real_q(value);
    if (kind == "circle") return QParam::unit_circle(value, guard_order);
    throw std::invalid_argument("q regime must be 'real' or 'circle', got '" + kind + "'");
}

int run(int argc, const char* const* argv) {
    CLI::App app{"su_q(2) basis functions on the sphere: evaluation and verification"};
    app.require_subcommand(1);

    Shared shared;
    std::string fn = "Q";
    std::optional<double> eta, xi, theta;
    double phi = 0.0;
    std::string grid_text = "-0.9:0.9:11";
    std::string suite = "all";
    std::string jmax_text;
    double epsilon = 1e-4;

    auto add_shared = [&](CLI::App* cmd, bool spins) {
        cmd->add_option("--q", shared.q_spec, "deformation: real:<q> or circle:<tau>");
        cmd->add_option("--J", shared.j, "spin J as an exact rational, e.g. 3/2");
        if (spins) {
            cmd->add_option("--M", shared.m, "weight M");
            cmd->add_option("--N", shared.n, "realization label N");
        }
        cmd->add_option("--tol", shared.tol, "tolerance override");
        cmd->add_option("--max-terms", shared.max_terms, "cap on product/series terms");
        cmd->add_option("--format", shared.format, "output format: csv or json");
        cmd->add_option("--out", shared.out_path, "output file path");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function at a point");
    eval->add_option("--fn", fn, "function family: Q, P, Psi, L, R")->required();
    add_shared(eval, true);
    eval->add_option("--eta", eta, "radial argument eta >= 0");
    eval->add_option("--xi", xi, "xi = cos(theta) in [-1, 1)");
    eval->add_option("--theta", theta, "polar angle");
    eval->add_option("--phi", phi, "azimuthal angle");

    CLI::App* table = app.add_subcommand("table", "tabulate a function over a grid");
    table->add_option("--fn", fn, "function family: Q, P, Psi")->required();
    add_shared(table, true);
    table->add_option("--grid", grid_text, "grid as lo:hi:n");
    table->add_option("--phi", phi, "azimuthal angle for Psi tables");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd
        ->add_option("--suite", suite,
                     "ladder|casimir|functional-eq|lemma1|ortho|norms|qbeta|classical-limit|all")
        ->required();
    add_shared(verify_cmd, true);
    verify_cmd->add_option("--Jmax", jmax_text, "largest spin in the suite");

    CLI::App* limits = app.add_subcommand("limits", "compare against the q -> 1 functions");
    add_shared(limits, true);
    limits->add_option("--epsilon", epsilon, "deformation q = e^epsilon");
    limits->add_option("--grid", grid_text, "xi grid as lo:hi:n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (eval->parsed()) {
            if (shared.q_spec.empty()) throw std::invalid_argument("eval needs --q");
            return cmd_eval(shared, fn, eta, xi, theta,
                            theta.has_value() ? std::optional<double>(phi) : std::nullopt);
        }
        if (table->parsed()) {
            if (shared.q_spec.empty()) throw std::invalid_argument("table needs --q");
            return cmd_table(shared, fn, parse_grid(grid_text), phi);
        }
        if (verify_cmd->parsed()) return cmd_verify(shared, suite, jmax_text);
        if (limits->parsed()) return cmd_limits(shared, epsilon, parse_grid(grid_text));
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    } catch (const TruncationError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
}

} // namespace qsu2::cli
