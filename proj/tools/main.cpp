#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qeuler/analytic.hpp"
#include "qeuler/character.hpp"
#include "qeuler/json_io.hpp"
#include "qeuler/tables.hpp"
#include "qeuler/verify.hpp"

namespace {

using nlohmann::json;
using qeuler::Rational;

double parse_double(const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw qeuler::DomainError("malformed " + what + ": " + tok);
    }
}

std::complex<double> parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {parse_double(s, "complex literal"), 0.0};
    return {parse_double(s.substr(0, comma), "complex literal"),
            parse_double(s.substr(comma + 1), "complex literal")};
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find(',', pos);
        const std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw qeuler::DomainError("malformed integer list: " + s);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

qeuler::DirichletCharacter resolve_character(const std::string& chi_spec,
                                             const std::string& chi_file, bool strict) {
    if (!chi_spec.empty() && !chi_file.empty())
        throw qeuler::DomainError("--chi and --chi-file are mutually exclusive");
    if (!chi_file.empty()) {
        std::ifstream in(chi_file);
        if (!in) throw qeuler::DomainError("cannot open character file: " + chi_file);
        return qeuler::DirichletCharacter::load(in, strict);
    }
    if (chi_spec == "trivial") return qeuler::DirichletCharacter::trivial();
    const std::string prefix = "quadratic:";
    if (chi_spec.rfind(prefix, 0) == 0) {
        try {
            return qeuler::DirichletCharacter::quadratic(
                std::stol(chi_spec.substr(prefix.size())));
        } catch (const std::invalid_argument&) {
            throw qeuler::DomainError("malformed character spec: " + chi_spec);
        }
    }
    throw qeuler::DomainError("unknown character spec (want \"trivial\" or "
                              "\"quadratic:p\"): " + chi_spec);
}

double default_eps() {
    if (const char* env = std::getenv("QEULER_EPS_DEFAULT")) {
        try {
            const double eps = std::stod(env);
            if (eps > 0.0) return eps;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring malformed QEULER_EPS_DEFAULT\n";
    }
    return 1e-12;
}

void emit_report(const std::string& command, const json& payload,
                 std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    // wall time stays outside the payload so payload bytes are reproducible
    json report{{"command", command}, {"payload", payload}, {"wall_time_ms", elapsed}};
    std::cout << report.dump(2) << '\n';
}

struct TableArgs {
    unsigned r = 1;
    std::string a = "1";
    std::string b = "1";
    std::string q;
    std::string x = "0";
    unsigned n_max = 10;
    std::string chi;
    std::string chi_file;
    bool permissive = false;
    std::string format = "json";
};

int run_table(const TableArgs& args, std::chrono::steady_clock::time_point start) {
    qeuler::QEulerSpec spec;
    spec.r = args.r;
    spec.a = parse_long_list(args.a);
    spec.b = parse_long_list(args.b);
    spec.q = Rational::from_string(args.q);
    spec.x = Rational::from_string(args.x);

    json payload;
    payload["params"] = qeuler::to_json(spec);
    payload["params"]["n_max"] = args.n_max;

    std::vector<Rational> values;
    if (!args.chi.empty() || !args.chi_file.empty()) {
        const auto chi = resolve_character(args.chi, args.chi_file, !args.permissive);
        payload["params"]["chi"] = {{"conductor", chi.conductor()},
                                    {"true_conductor", chi.true_conductor()}};
        values = qeuler::generalized_q_euler_table(chi, spec, args.n_max);
        json jvalues = json::array();
        for (const auto& v : values) jvalues.push_back(v.str());
        payload["table"] = {{"spec", qeuler::to_json(spec)}, {"values", jvalues}};
    } else {
        const auto table = qeuler::q_euler_table(spec, args.n_max);
        values = table.values;
        payload["table"] = qeuler::to_json(table);
    }

    if (args.format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n)
            std::cout << n << ',' << values[n].str() << '\n';
        return 0;
    }
    emit_report("table", payload, start);
    return 0;
}

struct EvalArgs {
    std::string s = "0,0";
    std::string t = "0,0";
    std::string q;
    double x = 0.0;
    std::string a = "1";
    std::string b = "1";
    double eps = 1e-12;
    std::string chi;
    std::string chi_file;
};

int run_eval(const std::string& which, const EvalArgs& args,
             std::chrono::steady_clock::time_point start) {
    qeuler::ComplexParams params;
    params.q = parse_complex(args.q);
    params.a = parse_long_list(args.a);
    params.b = parse_long_list(args.b);
    params.eps = args.eps;

    json payload;
    payload["params"] = {{"q", {params.q.real(), params.q.imag()}},
                         {"a", params.a},
                         {"b", params.b},
                         {"eps", params.eps}};

    qeuler::AnalyticResult result;
    if (which == "zeta") {
        const auto s = parse_complex(args.s);
        payload["params"]["s"] = {s.real(), s.imag()};
        payload["params"]["x"] = args.x;
        result = qeuler::zeta_r(s, args.x, params);
    } else if (which == "l") {
        const auto s = parse_complex(args.s);
        const auto chi = resolve_character(args.chi, args.chi_file, /*strict=*/true);
        payload["params"]["s"] = {s.real(), s.imag()};
        payload["params"]["chi"] = {{"conductor", chi.conductor()}};
        result = qeuler::dirichlet_l(s, chi, params);
    } else {  // genfun
        const auto t = parse_complex(args.t);
        payload["params"]["t"] = {t.real(), t.imag()};
        payload["params"]["x"] = args.x;
        result = qeuler::genfun_series(t, params, args.x);
    }
    payload["result"] = qeuler::to_json(result);
    emit_report("eval " + which, payload, start);
    return 0;
}

int run_verify(const std::string& suite, const qeuler::VerifyOptions& options,
               std::chrono::steady_clock::time_point start) {
    const auto report = qeuler::verify_suite(suite, options);
    json payload{{"suite", suite},
                 {"checks", report.checks},
                 {"all_passed", report.all_passed}};
    emit_report("verify " + suite, payload, start);
    return report.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();

    CLI::App app{"Changhee q-Euler numbers and polynomials: exact tables, "
                 "p-adic integrals, and q-zeta / L-function evaluation"};
    app.require_subcommand(1);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "compute a q-Euler value table");
    table->add_option("--r", table_args.r, "order r");
    table->add_option("--a", table_args.a, "comma list a_1..a_r");
    table->add_option("--b", table_args.b, "comma list b_1..b_r");
    table->add_option("--q", table_args.q, "rational q, e.g. 1/2")->required();
    table->add_option("--x", table_args.x, "rational shift x");
    table->add_option("--n-max", table_args.n_max, "highest degree");
    table->add_option("--chi", table_args.chi, "character spec: trivial | quadratic:p");
    table->add_option("--chi-file", table_args.chi_file, "character table file");
    table->add_flag("--permissive", table_args.permissive,
                    "accept non-primitive character tables");
    table->add_option("--format", table_args.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    EvalArgs eval_args;
    eval_args.eps = default_eps();
    auto* eval = app.add_subcommand("eval", "evaluate an analytic series");
    eval->require_subcommand(1);
    auto* zeta = eval->add_subcommand("zeta", "Hurwitz-type q-zeta function");
    auto* lfun = eval->add_subcommand("l", "multivariate Dirichlet L-function");
    auto* genfun = eval->add_subcommand("genfun", "generating-function series");
    for (auto* sub : {zeta, lfun, genfun}) {
        sub->add_option("--q", eval_args.q, "complex q as re,im with |q| < 1")->required();
        sub->add_option("--a", eval_args.a, "comma list a_1..a_r");
        sub->add_option("--b", eval_args.b, "comma list b_1..b_r");
        sub->add_option("--eps", eval_args.eps, "truncation tolerance");
    }
    zeta->add_option("--s", eval_args.s, "complex s as re,im")->required();
    zeta->add_option("--x", eval_args.x, "real shift x > 0")->required();
    lfun->add_option("--s", eval_args.s, "complex s as re,im")->required();
    lfun->add_option("--chi", eval_args.chi, "character spec");
    lfun->add_option("--chi-file", eval_args.chi_file, "character table file");
    genfun->add_option("--t", eval_args.t, "complex t as re,im")->required();
    genfun->add_option("--x", eval_args.x, "real shift x");

    std::string suite;
    qeuler::VerifyOptions verify_options;
    long verify_f = 0;
    unsigned verify_n = 0;
    unsigned verify_n_max = 0;
    auto* verify = app.add_subcommand("verify", "run a theorem verification suite");
    verify->add_option("suite", suite,
                       "theorem1|theorem2|theorem3|theorem4|genfun|padic|all")
        ->required();
    auto* opt_f = verify->add_option("--f", verify_f, "twist conductor");
    auto* opt_n = verify->add_option("--n", verify_n, "restrict to one degree");
    auto* opt_n_max = verify->add_option("--n-max", verify_n_max, "degree-grid cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        emit_report("parse", json{{"error", e.what()}}, start);
        return 2;
    }

    try {
        if (*table) return run_table(table_args, start);
        if (*eval) {
            const std::string which = (*zeta) ? "zeta" : (*lfun) ? "l" : "genfun";
            return run_eval(which, eval_args, start);
        }
        if (*opt_f) verify_options.f = verify_f;
        if (*opt_n) verify_options.n = verify_n;
        if (*opt_n_max) verify_options.n_max = verify_n_max;
        return run_verify(suite, verify_options, start);
    } catch (const qeuler::Error& e) {
        emit_report(argv[1] ? argv[1] : "", json{{"error", e.what()}}, start);
        return 2;
    } catch (const std::exception& e) {
        emit_report(argv[1] ? argv[1] : "", json{{"error", e.what()}}, start);
        return 2;
    }
}
