#ifndef LERCHKIT_VERIFY_HPP
#define LERCHKIT_VERIFY_HPP

// Identity verification: integrates each registered left-hand side over
// parameter grids, compares against the closed-form right-hand side under a
// relative/absolute tolerance policy, and emits structured reports.
// Quadrature is run a decade tighter than the comparison tolerance so a
// failed comparison is attributable to the formula, not quadrature noise.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lerchkit/errors.hpp"
#include "lerchkit/identities.hpp"
#include "lerchkit/quad.hpp"

namespace lerchkit {

enum class Status { Pass, Fail, SkippedPole, SkippedDomain, Discrepant };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "Pass";
        case Status::Fail: return "Fail";
        case Status::SkippedPole: return "SkippedPole";
        case Status::SkippedDomain: return "SkippedDomain";
        case Status::Discrepant: return "Discrepant";
    }
    return "Fail";
}

inline Status status_from_name(const std::string& name) {
    if (name == "Pass") return Status::Pass;
    if (name == "Fail") return Status::Fail;
    if (name == "SkippedPole") return Status::SkippedPole;
    if (name == "SkippedDomain") return Status::SkippedDomain;
    if (name == "Discrepant") return Status::Discrepant;
    throw DomainError("unknown status name: " + name);
}

struct VerificationReport {
    std::string case_id;
    ParamMap params;
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double quad_error_estimate = 0.0;
    Status status = Status::Fail;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct SuiteSummary {
    long total = 0, pass = 0, fail = 0, skipped_pole = 0, skipped_domain = 0, discrepant = 0;
};

inline SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
    SuiteSummary s;
    s.total = static_cast<long>(reports.size());
    for (const auto& r : reports) {
        switch (r.status) {
            case Status::Pass: ++s.pass; break;
            case Status::Fail: ++s.fail; break;
            case Status::SkippedPole: ++s.skipped_pole; break;
            case Status::SkippedDomain: ++s.skipped_domain; break;
            case Status::Discrepant: ++s.discrepant; break;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Single-case verification
// ---------------------------------------------------------------------------

inline void validate_tolerances(double rel_tol, double abs_tol) {
    if (!(rel_tol >= 1e-13 && rel_tol <= 1e-4))
        throw DomainError("rel_tol must lie in [1e-13, 1e-4]");
    if (!(abs_tol >= 1e-13 && abs_tol <= 1e-4))
        throw DomainError("abs_tol must lie in [1e-13, 1e-4]");
}

inline VerificationReport verify_case(const IntegralCase& c, double rel_tol, double abs_tol) {
    validate_tolerances(rel_tol, abs_tol);
    VerificationReport r;
    r.case_id = family_info(c.family).key;
    r.params = c.params;
    const bool discrepant = family_info(c.family).discrepant_printed;
    try {
        const Integrand f = lhs_integrand(c);
        r.rhs = rhs_closed_form(c);
        const double quad_tol = std::clamp(rel_tol / 10.0, 1e-13, 1e-4);
        const QuadResult q = integrate_semi_infinite(f, quad_tol);
        r.lhs = q.value;
        r.quad_error_estimate = q.error_estimate;
        r.abs_err = std::abs(r.lhs - r.rhs);
        r.rel_err = r.abs_err / std::max(std::abs(r.rhs), 1e-30);
        const double comparison = std::max(rel_tol * std::abs(r.rhs), abs_tol);
        const bool pass = (r.abs_err <= comparison) && (r.quad_error_estimate <= comparison / 10.0);
        r.status = discrepant ? Status::Discrepant : (pass ? Status::Pass : Status::Fail);
    } catch (const PoleError&) {
        r.status = Status::SkippedPole;
    } catch (const DomainError&) {
        r.status = Status::SkippedDomain;
    } catch (const Error&) {
        // convergence / singularity trouble is a hard failure, never a skip
        r.status = Status::Fail;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Default grid policy
// ---------------------------------------------------------------------------

struct GridSpec {
    std::vector<std::string> families; // registry keys; helper all_family_keys() selects everything
    std::uint64_t seed = 0x5EED;
    int perturbations = 50; // random complex perturbations per family, |Im| <= 0.3
};

inline std::vector<std::string> all_family_keys() {
    std::vector<std::string> keys;
    for (const auto& e : registry()) keys.push_back(e.key);
    return keys;
}

namespace detail {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

inline const std::vector<double>& grid_k() {
    static const std::vector<double> v = {0.0, 1.0, 2.0, 3.0};
    return v;
}
inline const std::vector<double>& grid_a() {
    static const std::vector<double> v = {1.0, 2.0, 3.0};
    return v;
}
inline const std::vector<double>& grid_m() {
    static const std::vector<double> v = {0.5, 1.0, 1.5};
    return v;
}
inline const std::vector<double>& grid_t() {
    static const std::vector<double> v = {kPi / 6.0,       -kPi / 6.0,      kPi / 3.0,
                                          -kPi / 3.0,      kPi / 2.0,       -kPi / 2.0,
                                          2.0 * kPi / 3.0, -2.0 * kPi / 3.0};
    return v;
}
inline const std::vector<cplx>& grid_alpha() {
    static const std::vector<cplx> v = {cplx{1.0, 0.0}, std::exp(cplx{0.0, kPi / 5.0})};
    return v;
}
inline const std::vector<double>& grid_beta() {
    static const std::vector<double> v = {0.5, 1.0, 2.0};
    return v;
}
inline const std::vector<double>& grid_s() {
    static const std::vector<double> v = {1.5, 2.0, 2.5, 3.5};
    return v;
}

// Base (real-parameter) grid per the default grid policy.  Parity poles are
// enumerated too; they surface as SkippedPole reports rather than silently
// shrinking the grid.
inline std::vector<IntegralCase> base_cases(const FamilyInfo& info) {
    std::vector<IntegralCase> cases;
    auto add = [&](ParamMap p) { cases.push_back({info.family, std::move(p)}); };
    switch (info.family) {
        case Family::Master:
        case Family::DiffSinhSinh:
            for (double k : grid_k())
                for (double a : grid_a())
                    for (double m : grid_m()) {
                        if (!(a > m)) continue;
                        for (double t : grid_t())
                            for (const cplx& alpha : grid_alpha())
                                add({{"k", cplx{k, 0}}, {"a", cplx{a, 0}}, {"m", cplx{m, 0}},
                                     {"t", cplx{t, 0}}, {"alpha", alpha}});
                    }
            break;
        case Family::CoshCase:
        case Family::XkSinhSinh:
            for (double k : grid_k())
                for (double a : grid_a())
                    for (double m : grid_m()) {
                        if (!(a > m)) continue;
                        for (double t : grid_t())
                            add({{"k", cplx{k, 0}}, {"a", cplx{a, 0}}, {"m", cplx{m, 0}},
                                 {"t", cplx{t, 0}}});
                    }
            break;
        case Family::Gr35144:
            for (double a : grid_a())
                for (double b : grid_m()) {
                    if (!(a > b)) continue;
                    for (double t : grid_t())
                        add({{"a", cplx{a, 0}}, {"m", cplx{b, 0}}, {"t", cplx{t, 0}}});
                }
            break;
        case Family::XkSinh:
            for (double k : grid_k())
                for (double a : grid_a())
                    for (double t : grid_t())
                        add({{"k", cplx{k, 0}}, {"a", cplx{a, 0}}, {"t", cplx{t, 0}}});
            break;
        case Family::MellinTanhSech:
            for (double s : grid_s())
                for (double a : {1.0, 2.0})
                    add({{"s", cplx{s, 0}}, {"a", cplx{a, 0}}});
            break;
        case Family::HurwitzA2M1:
            for (double k : grid_k())
                for (double t : grid_t())
                    add({{"k", cplx{k, 0}}, {"t", cplx{t, 0}}});
            break;
        case Family::XSinhSinhK0:
        case Family::LogSinhSinh:
            for (double t : grid_t()) add({{"t", cplx{t, 0}}});
            break;
        case Family::TrigammaAlg:
        case Family::ZetaThreeAlg:
            for (double a : grid_a())
                for (double b : grid_beta())
                    add({{"a", cplx{a, 0}}, {"beta", cplx{b, 0}}});
            break;
        case Family::NewEntry351x:
        case Family::LogGammaEx1:
        case Family::LogGammaEx2:
        case Family::LogGammaEx3:
        case Family::LogGammaEx4:
        case Family::CatalanT0:
            add({});
            break;
    }
    return cases;
}

// Complex perturbations of the base grid: imaginary jitter (|Im| <= 0.3) on
// the continuously-variable parameters.  Im(m) >= 0 keeps |e^{2 i m pi / a}|
// inside the closed unit disk.  Entries flagged discrepant document typos;
// their printed forms are not perturbed.
inline std::vector<IntegralCase> perturbed_cases(const FamilyInfo& info, std::uint64_t seed,
                                                 int count) {
    std::vector<IntegralCase> cases;
    if (info.discrepant_printed || info.params.empty()) return cases;
    const std::vector<IntegralCase> base = base_cases(info);
    if (base.empty()) return cases;
    SplitMix64 rng{seed ^ fnv1a(info.key)};
    for (int i = 0; i < count; ++i) {
        IntegralCase c = base[static_cast<size_t>(rng.next() % base.size())];
        for (auto& [name, value] : c.params) {
            if (name == "m" || name == "beta")
                value += cplx{0.0, rng.uniform(0.0, 0.3)};
            else if (name == "t" || name == "s")
                value += cplx{0.0, rng.uniform(-0.3, 0.3)};
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

inline bool param_map_less(const ParamMap& a, const ParamMap& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second.real() != ib->second.real()) return ia->second.real() < ib->second.real();
        if (ia->second.imag() != ib->second.imag()) return ia->second.imag() < ib->second.imag();
    }
    return ia == a.end() && ib != b.end();
}

} // namespace detail

// Runs the selected families over the default grid policy plus seeded
// complex perturbations.  Report order is canonical (case_id, then params)
// regardless of generation order; identical inputs give identical output.
inline std::vector<VerificationReport> verify_suite(const GridSpec& grid, double rel_tol,
                                                    double abs_tol) {
    validate_tolerances(rel_tol, abs_tol);
    std::vector<VerificationReport> reports;
    for (const auto& info : registry()) {
        bool selected = false;
        for (const auto& key : grid.families)
            if (key == info.key) selected = true;
        if (!selected) continue;

        std::vector<IntegralCase> cases = detail::base_cases(info);
        std::vector<IntegralCase> extra = detail::perturbed_cases(info, grid.seed, grid.perturbations);
        cases.insert(cases.end(), extra.begin(), extra.end());
        for (const auto& c : cases) reports.push_back(verify_case(c, rel_tol, abs_tol));

        if (info.family == Family::NewEntry351x) {
            // quadrature self-consistency companion: the same integral with the
            // effective upper cut doubled must reproduce itself
            VerificationReport r;
            r.case_id = info.key + std::string("-quad");
            Integrand f = lhs_integrand({info.family, {}});
            const double quad_tol = std::clamp(rel_tol / 10.0, 1e-13, 1e-4);
            const QuadResult q1 = integrate_semi_infinite(f, quad_tol);
            f.decay_rate *= 0.5;
            const QuadResult q2 = integrate_semi_infinite(f, quad_tol);
            r.lhs = q1.value;
            r.rhs = q2.value;
            r.quad_error_estimate = std::max(q1.error_estimate, q2.error_estimate);
            r.abs_err = std::abs(r.lhs - r.rhs);
            r.rel_err = r.abs_err / std::max(std::abs(r.rhs), 1e-30);
            r.status = (r.abs_err <= std::max(rel_tol * std::abs(r.rhs), abs_tol)) ? Status::Pass
                                                                                   : Status::Fail;
            reports.push_back(std::move(r));
        }
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& x, const VerificationReport& y) {
                         if (x.case_id != y.case_id) return x.case_id < y.case_id;
                         return detail::param_map_less(x.params, y.params);
                     });
    return reports;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Complex literal of the form "a", "a+bi" or "a-bi"; round-trips doubles.
inline std::string format_complex(const cplx& c) {
    if (c.imag() == 0.0) return format_double(c.real());
    std::string s = format_double(c.real());
    if (!(c.imag() < 0.0)) s += "+";
    s += format_double(c.imag());
    s += "i";
    return s;
}

inline cplx parse_complex(const std::string& text) {
    const char* p = text.c_str();
    char* end = nullptr;
    double first = std::strtod(p, &end);
    if (end == p) {
        // forms like "i", "-i", "+i"
        std::string t = text;
        if (t == "i" || t == "+i") return cplx{0.0, 1.0};
        if (t == "-i") return cplx{0.0, -1.0};
        throw DomainError("cannot parse complex literal '" + text + "'");
    }
    if (*end == '\0') return cplx{first, 0.0};
    if (*end == 'i' && *(end + 1) == '\0') return cplx{0.0, first}; // pure imaginary "bi"
    const char* q = end;
    char* end2 = nullptr;
    double second = std::strtod(q, &end2);
    if (end2 == q) {
        if ((*q == '+' || *q == '-') && *(q + 1) == 'i' && *(q + 2) == '\0')
            return cplx{first, (*q == '-') ? -1.0 : 1.0};
        throw DomainError("cannot parse complex literal '" + text + "'");
    }
    if (*end2 == 'i' && *(end2 + 1) == '\0') return cplx{first, second};
    throw DomainError("cannot parse complex literal '" + text + "'");
}

inline nlohmann::json complex_to_json(const cplx& c) {
    return nlohmann::json{{"re", c.real()}, {"im", c.imag()}};
}

inline cplx complex_from_json(const nlohmann::json& j) {
    return cplx{j.at("re").get<double>(), j.at("im").get<double>()};
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : r.params) params[name] = complex_to_json(value);
    return nlohmann::json{{"case_id", r.case_id},
                          {"params", params},
                          {"lhs", complex_to_json(r.lhs)},
                          {"rhs", complex_to_json(r.rhs)},
                          {"abs_err", r.abs_err},
                          {"rel_err", r.rel_err},
                          {"quad_error_estimate", r.quad_error_estimate},
                          {"status", status_name(r.status)}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.case_id = j.at("case_id").get<std::string>();
    for (const auto& [name, value] : j.at("params").items()) r.params[name] = complex_from_json(value);
    r.lhs = complex_from_json(j.at("lhs"));
    r.rhs = complex_from_json(j.at("rhs"));
    r.abs_err = j.at("abs_err").get<double>();
    r.rel_err = j.at("rel_err").get<double>();
    r.quad_error_estimate = j.at("quad_error_estimate").get<double>();
    r.status = status_from_name(j.at("status").get<std::string>());
    return r;
}

inline nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

inline std::vector<VerificationReport> reports_from_json(const nlohmann::json& arr) {
    std::vector<VerificationReport> reports;
    for (const auto& j : arr) reports.push_back(report_from_json(j));
    return reports;
}

inline const std::vector<std::string>& csv_param_columns() {
    static const std::vector<std::string> cols = {"k", "a", "m", "t", "alpha", "beta", "s"};
    return cols;
}

inline std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "case_id";
    for (const auto& p : csv_param_columns()) out << ",param_" << p;
    out << ",lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,status\n";
    for (const auto& r : reports) {
        out << r.case_id;
        for (const auto& p : csv_param_columns()) {
            out << ",";
            const auto it = r.params.find(p);
            if (it != r.params.end()) out << format_complex(it->second);
        }
        out << "," << format_double(r.lhs.real()) << "," << format_double(r.lhs.imag());
        out << "," << format_double(r.rhs.real()) << "," << format_double(r.rhs.imag());
        out << "," << format_double(r.abs_err) << "," << format_double(r.rel_err);
        out << "," << status_name(r.status) << "\n";
    }
    return out.str();
}

} // namespace lerchkit

#endif // LERCHKIT_VERIFY_HPP
