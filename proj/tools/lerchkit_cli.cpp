// Command-line front end: evaluate the special functions, integrate any
// registered left-hand side, verify a single identity case, or run the full
// verification suite over the default parameter grids.
//
// Exit codes: 0 success (and Pass-only suites), 1 any Fail, 2 usage error.
// LERCHKIT_MAX_LEVEL in the environment caps quadrature refinement levels.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lerchkit/lerchkit.hpp"

namespace {

using lerchkit::cplx;

// Angles arrive either as decimal radians or as exact tokens so that pole
// checks at rational multiples of pi are not polluted by decimal truncation.
std::optional<double> parse_angle_token(const std::string& text) {
    double sign = 1.0;
    std::string t = text;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        if (t[0] == '-') sign = -1.0;
        t = t.substr(1);
    }
    static const std::map<std::string, double> table = {
        {"pi", lerchkit::kPi},           {"pi/2", lerchkit::kPi / 2.0},
        {"pi/3", lerchkit::kPi / 3.0},   {"pi/4", lerchkit::kPi / 4.0},
        {"pi/6", lerchkit::kPi / 6.0},   {"2pi/3", 2.0 * lerchkit::kPi / 3.0},
    };
    const auto it = table.find(t);
    if (it == table.end()) return std::nullopt;
    return sign * it->second;
}

cplx parse_value(const std::string& name, const std::string& text) {
    if (name == "t")
        if (const auto angle = parse_angle_token(text)) return cplx{*angle, 0.0};
    return lerchkit::parse_complex(text);
}

struct ParamFlags {
    std::map<std::string, std::string> raw; // flag name -> literal text

    void attach(CLI::App* cmd, const std::vector<std::string>& names) {
        for (const auto& n : names)
            cmd->add_option("--" + n, raw[n], "parameter " + n + " (complex literal a+bi)");
    }

    lerchkit::ParamMap parse() const {
        lerchkit::ParamMap out;
        for (const auto& [name, text] : raw)
            if (!text.empty()) out[name] = parse_value(name, text);
        return out;
    }
};

int fail_usage(const std::string& message) {
    std::cerr << "usage error: " << message << "\n";
    return 2;
}

void print_scalar(const cplx& value, const std::string& output) {
    if (output == "json")
        std::cout << nlohmann::json{{"value", lerchkit::complex_to_json(value)}}.dump() << "\n";
    else if (output == "csv")
        std::cout << "re,im\n"
                  << lerchkit::format_double(value.real()) << ","
                  << lerchkit::format_double(value.imag()) << "\n";
    else
        std::cout << lerchkit::format_complex(value) << "\n";
}

std::string list_line(const lerchkit::FamilyInfo& info) {
    std::string params = "-";
    if (!info.params.empty()) {
        params.clear();
        for (size_t i = 0; i < info.params.size(); ++i) {
            if (i) params += ",";
            params += info.params[i];
        }
    }
    return info.key + ": " + params;
}

void print_report_text(const lerchkit::VerificationReport& r) {
    std::cout << r.case_id;
    for (const auto& [name, value] : r.params)
        std::cout << " " << name << "=" << lerchkit::format_complex(value);
    std::cout << " lhs=" << lerchkit::format_complex(r.lhs)
              << " rhs=" << lerchkit::format_complex(r.rhs)
              << " abs_err=" << lerchkit::format_double(r.abs_err)
              << " rel_err=" << lerchkit::format_double(r.rel_err)
              << " quad_err=" << lerchkit::format_double(r.quad_error_estimate) << " "
              << lerchkit::status_name(r.status) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lerchkit: complex Lerch transcendent, relatives, and a numerical"
                 " verification harness for semi-infinite hyperbolic/logarithmic integrals"};
    app.require_subcommand(1);

    std::string output = "text";
    double rel_tol = 1e-8, abs_tol = 1e-10;
    std::uint64_t seed = 0x5EED;
    std::string families_arg = "all";
    std::string case_key;

    std::string footer = "registered identity families:\n";
    for (const auto& info : lerchkit::registry()) footer += "  " + list_line(info) + "\n";
    app.footer(footer);

    auto add_common = [&](CLI::App* cmd, bool with_tols) {
        cmd->add_option("--output", output, "output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        if (with_tols) {
            cmd->add_option("--rel-tol", rel_tol, "relative comparison tolerance");
            cmd->add_option("--abs-tol", abs_tol, "absolute comparison tolerance");
        }
    };

    // function evaluation commands
    ParamFlags phi_flags, zeta_flags, poly_flags;
    CLI::App* phi = app.add_subcommand("phi", "evaluate the Lerch transcendent Phi(z, s, v)");
    phi_flags.attach(phi, {"z", "s", "v"});
    add_common(phi, false);

    CLI::App* zeta = app.add_subcommand("zeta", "evaluate the Hurwitz zeta zeta(s, v)");
    zeta_flags.attach(zeta, {"s", "v"});
    add_common(zeta, false);

    CLI::App* poly = app.add_subcommand("polygamma", "evaluate psi^(k)(v), k a non-negative integer");
    poly_flags.attach(poly, {"k", "v"});
    add_common(poly, false);

    // identity commands
    ParamFlags int_flags, ver_flags;
    CLI::App* integ = app.add_subcommand("integrate", "quadrature of a registered LHS integrand");
    integ->add_option("--case", case_key, "registry family id")->required();
    int_flags.attach(integ, {"k", "a", "m", "t", "alpha", "beta", "s"});
    integ->add_option("--rel-tol", rel_tol, "quadrature tolerance");
    integ->add_option("--output", output, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* verify = app.add_subcommand("verify", "verify one identity case");
    verify->add_option("--case", case_key, "registry family id")->required();
    ver_flags.attach(verify, {"k", "a", "m", "t", "alpha", "beta", "s"});
    add_common(verify, true);

    CLI::App* suite = app.add_subcommand("suite", "run grid verification over identity families");
    suite->add_option("--families", families_arg, "comma-separated family ids, or 'all'");
    suite->add_option("--seed", seed, "seed for the complex-perturbation grid");
    add_common(suite, true);

    CLI::App* list = app.add_subcommand("list", "list registered identity families");
    (void)list;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return (code == 0) ? 0 : 2;
    }

    try {
        if (*list) {
            for (const auto& info : lerchkit::registry()) std::cout << list_line(info) << "\n";
            return 0;
        }

        if (*phi || *zeta || *poly) {
            const ParamFlags& flags = *phi ? phi_flags : (*zeta ? zeta_flags : poly_flags);
            lerchkit::ParamMap params;
            try {
                params = flags.parse();
            } catch (const lerchkit::DomainError& e) {
                return fail_usage(e.what());
            }
            auto need = [&](const char* n) -> cplx {
                const auto it = params.find(n);
                if (it == params.end()) throw lerchkit::DomainError(std::string("missing --") + n);
                return it->second;
            };
            cplx value;
            if (*phi)
                value = lerchkit::lerch_phi(need("z"), need("s"), need("v"));
            else if (*zeta)
                value = lerchkit::hurwitz_zeta(need("s"), need("v"));
            else {
                const cplx order = need("k");
                if (order.imag() != 0.0 || order.real() != std::round(order.real()))
                    return fail_usage("polygamma order --k must be a non-negative integer");
                value = lerchkit::polygamma(static_cast<int>(order.real()), need("v"));
            }
            print_scalar(value, output);
            return 0;
        }

        if (*integ || *verify) {
            const auto info = lerchkit::find_family(case_key);
            if (!info) return fail_usage("unknown case id '" + case_key + "'");
            lerchkit::ParamMap params;
            try {
                params = (*integ ? int_flags : ver_flags).parse();
            } catch (const lerchkit::DomainError& e) {
                return fail_usage(e.what());
            }
            for (const auto& [name, value] : params) {
                (void)value;
                bool known = false;
                for (const auto& p : info->params) known |= (p == name);
                if (!known)
                    return fail_usage("parameter --" + name + " does not apply to " + info->key);
            }
            for (const auto& p : info->params)
                if (!params.count(p)) return fail_usage("case " + info->key + " requires --" + p);
            const lerchkit::IntegralCase c{info->family, params};

            if (*integ) {
                const auto q = lerchkit::integrate_semi_infinite(
                    lerchkit::lhs_integrand(c), std::clamp(rel_tol, 1e-13, 1e-4));
                if (output == "json")
                    std::cout << nlohmann::json{{"value", lerchkit::complex_to_json(q.value)},
                                                {"error_estimate", q.error_estimate},
                                                {"evaluations", q.evaluations}}
                                     .dump()
                              << "\n";
                else if (output == "csv")
                    std::cout << "value_re,value_im,error_estimate,evaluations\n"
                              << lerchkit::format_double(q.value.real()) << ","
                              << lerchkit::format_double(q.value.imag()) << ","
                              << lerchkit::format_double(q.error_estimate) << "," << q.evaluations
                              << "\n";
                else
                    std::cout << "value=" << lerchkit::format_complex(q.value)
                              << " error_estimate=" << lerchkit::format_double(q.error_estimate)
                              << " evaluations=" << q.evaluations << "\n";
                return 0;
            }

            const auto report = lerchkit::verify_case(c, rel_tol, abs_tol);
            if (output == "json")
                std::cout << lerchkit::report_to_json(report).dump() << "\n";
            else if (output == "csv")
                std::cout << lerchkit::reports_to_csv({report});
            else
                print_report_text(report);
            return report.status == lerchkit::Status::Fail ? 1 : 0;
        }

        if (*suite) {
            lerchkit::GridSpec grid;
            grid.seed = seed;
            if (families_arg == "all") {
                grid.families = lerchkit::all_family_keys();
            } else {
                std::string rest = families_arg;
                while (!rest.empty()) {
                    const auto comma = rest.find(',');
                    const std::string key = rest.substr(0, comma);
                    rest = (comma == std::string::npos) ? "" : rest.substr(comma + 1);
                    const auto info = lerchkit::find_family(key);
                    if (!info) return fail_usage("unknown family id '" + key + "'");
                    grid.families.push_back(info->key);
                }
            }
            const auto reports = lerchkit::verify_suite(grid, rel_tol, abs_tol);
            const auto summary = lerchkit::summarize(reports);
            if (output == "json")
                std::cout << lerchkit::reports_to_json(reports).dump() << "\n";
            else if (output == "csv")
                std::cout << lerchkit::reports_to_csv(reports);
            else
                for (const auto& r : reports) print_report_text(r);
            std::cerr << "suite: total=" << summary.total << " pass=" << summary.pass
                      << " fail=" << summary.fail << " skipped_pole=" << summary.skipped_pole
                      << " skipped_domain=" << summary.skipped_domain
                      << " discrepant=" << summary.discrepant << "\n";
            return summary.fail > 0 ? 1 : 0;
        }
    } catch (const lerchkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
