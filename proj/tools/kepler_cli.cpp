// Command-line front end: numerical invariants, diagonal kernel values and
// the verification suites, emitted as JSON or CSV with reproducible
// 17-significant-digit numbers.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kepler/asymptotics.hpp"
#include "kepler/errors.hpp"
#include "kepler/jack.hpp"
#include "kepler/jordan.hpp"
#include "kepler/kernels.hpp"
#include "kepler/measures.hpp"
#include "kepler/verify.hpp"

namespace {

std::string num(double x) {
    if (!std::isfinite(x)) return "null"; // JSON has no inf/nan literals
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out += "\"";
    return out;
}

struct TypeArgs {
    std::string name;
    int r = 0;
    double a = 0.0, b = -1.0;

    kepler::JordanType resolve(std::string& resolved_name) const {
        if (!name.empty()) {
            auto jt = kepler::parse_type_name(name);
            if (!jt) throw kepler::domain_error("unknown type name: " + name);
            resolved_name = name;
            return *jt;
        }
        if (r <= 0) throw kepler::domain_error("pass --type or all of --r --a --b");
        kepler::JordanType jt(r, a, b);
        resolved_name.clear();
        return jt;
    }
};

void add_type_options(CLI::App* cmd, TypeArgs& args) {
    cmd->add_option("--type", args.name,
                    "named type: sym:R | full:R,S | asym:N | spin:D | ball:D | exc:16 | exc:27");
    cmd->add_option("--r", args.r, "rank (with --a, --b)");
    cmd->add_option("--a", args.a, "Peirce multiplicity a");
    cmd->add_option("--b", args.b, "characteristic multiplicity b");
}

std::string type_json(const std::string& name, const kepler::JordanType& jt) {
    std::ostringstream os;
    os << "{\"name\": " << (name.empty() ? std::string("null") : quoted(name))
       << ", \"r\": " << jt.r << ", \"a\": " << num(jt.a) << ", \"b\": " << num(jt.b)
       << ", \"classified\": " << (jt.classified() ? "true" : "false") << "}";
    return os.str();
}

void warn_unclassified(const kepler::JordanType& jt) {
    if (!jt.classified())
        std::cerr << "warning: (r=" << jt.r << ", a=" << jt.a << ", b=" << jt.b
                  << ") is not a classified Jordan type; computing formally\n";
}

int run_invariants(const TypeArgs& targs, int ell, const std::string& format) {
    std::string name;
    kepler::JordanType jt = targs.resolve(name);
    warn_unclassified(jt);
    kepler::KeplerRank kr = kepler::derive_invariants(jt, ell);
    double peirce = kepler::peirce_volume(jt, ell);
    double shilov = kepler::tripotent_volume(jt, ell);
    double conformal = kepler::conformal_volume(jt);

    if (format == "csv") {
        std::printf("r,a,b,d,p,ell,d_ell,dprime_ell,dsecond_ell,"
                    "peirce_volume_reduced,tripotent_volume,conformal_volume_reduced\n");
        std::printf("%d,%s,%s,%s,%s,%d,%s,%s,%s,%s,%s,%s\n", jt.r, num(jt.a).c_str(),
                    num(jt.b).c_str(), num(jt.dim()).c_str(), num(jt.genus()).c_str(), ell,
                    num(kr.d_ell).c_str(), num(kr.dprime_ell).c_str(),
                    num(kr.dsecond_ell).c_str(), num(peirce).c_str(), num(shilov).c_str(),
                    num(conformal).c_str());
    } else {
        std::printf("{\"schema\": 1, \"command\": \"invariants\", \"type\": %s, "
                    "\"ell\": %d, \"d\": %s, \"p\": %s, \"d_ell\": %s, \"dprime_ell\": %s, "
                    "\"dsecond_ell\": %s, \"peirce_volume_reduced\": %s, "
                    "\"tripotent_volume\": %s, \"conformal_volume_reduced\": %s}\n",
                    type_json(name, jt).c_str(), ell, num(jt.dim()).c_str(),
                    num(jt.genus()).c_str(), num(kr.d_ell).c_str(),
                    num(kr.dprime_ell).c_str(), num(kr.dsecond_ell).c_str(),
                    num(peirce).c_str(), num(shilov).c_str(), num(conformal).c_str());
    }
    return 0;
}

std::string series_json(const kepler::SeriesResult& r) {
    std::ostringstream os;
    os << "{\"value\": " << num(r.value) << ", \"log_abs\": " << num(r.log_value.log_abs)
       << ", \"sign\": " << r.log_value.sign
       << ", \"converged\": " << (r.converged ? "true" : "false")
       << ", \"degrees_used\": " << r.degrees_used
       << ", \"last_shell\": " << num(r.last_shell) << "}";
    return os.str();
}

int run_kernel(const TypeArgs& targs, int ell, const std::string& potential,
               double lambda_exp, double nu, const std::string& t_arg, int max_degree,
               double abs_tol, double rel_tol, const std::string& format) {
    std::string name;
    kepler::JordanType jt = targs.resolve(name);
    warn_unclassified(jt);

    std::vector<double> t;
    {
        std::stringstream ss(t_arg);
        std::string item;
        while (std::getline(ss, item, ',')) t.push_back(std::stod(item));
    }
    if (static_cast<int>(t.size()) != ell)
        throw kepler::domain_error("--t must list exactly ell eigenvalues");

    kepler::KernelSpec spec =
        potential == "bounded" ? kepler::KernelSpec::bounded(jt, ell, nu)
                               : kepler::KernelSpec::flat(jt, ell, lambda_exp, nu);
    kepler::DiagonalPoint point = potential == "bounded"
                                      ? kepler::DiagonalPoint::bounded(t)
                                      : kepler::DiagonalPoint::cone(t);
    kepler::SeriesControl ctl(max_degree, abs_tol, rel_tol);
    kepler::SeriesResult direct = kepler::kernel_diag(spec, point, ctl);
    kepler::SeriesResult spectral = kepler::kernel_spectral(spec, point, ctl);
    double gap = std::fabs(direct.log_value.log_abs - spectral.log_value.log_abs);
    if (direct.log_value.sign != spectral.log_value.sign) gap = 1.0;

    if (format == "csv") {
        std::printf("potential,nu,lambda_exp,direct_value,spectral_value,relative_gap,"
                    "direct_converged,degrees_used\n");
        std::printf("%s,%s,%s,%s,%s,%s,%d,%d\n", potential.c_str(), num(nu).c_str(),
                    num(lambda_exp).c_str(), num(direct.value).c_str(),
                    num(spectral.value).c_str(), num(gap).c_str(),
                    direct.converged ? 1 : 0, direct.degrees_used);
    } else {
        std::printf("{\"schema\": 1, \"command\": \"kernel\", \"type\": %s, \"ell\": %d, "
                    "\"potential\": %s, \"lambda_exp\": %s, \"nu\": %s, \"t\": [",
                    type_json(name, jt).c_str(), ell, quoted(potential).c_str(),
                    num(lambda_exp).c_str(), num(nu).c_str());
        for (size_t i = 0; i < t.size(); ++i)
            std::printf("%s%s", i ? ", " : "", num(t[i]).c_str());
        std::printf("], \"direct\": %s, \"spectral\": %s, \"relative_gap\": %s}\n",
                    series_json(direct).c_str(), series_json(spectral).c_str(),
                    num(gap).c_str());
    }
    return 0;
}

int run_verify(const std::string& suite, const std::string& format) {
    std::vector<kepler::verify::SuiteReport> reports;
    if (suite == "all") {
        reports = kepler::verify::run_all();
    } else {
        reports.push_back(kepler::verify::run_suite(suite));
    }
    bool all_pass = true;
    for (const auto& rep : reports) all_pass = all_pass && rep.pass;

    if (format == "csv") {
        std::printf("suite,label,measured,threshold,pass\n");
        for (const auto& rep : reports) {
            for (const auto& line : rep.lines)
                std::printf("%s,%s,%s,%s,%d\n", rep.name.c_str(),
                            quoted(line.label).c_str(), num(line.measured).c_str(),
                            num(line.threshold).c_str(), line.pass ? 1 : 0);
        }
    } else {
        std::printf("{\"schema\": 1, \"command\": \"verify\", \"pass\": %s, \"suites\": [",
                    all_pass ? "true" : "false");
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& rep = reports[i];
            std::printf("%s{\"name\": %s, \"pass\": %s, \"checks\": [", i ? ", " : "",
                        quoted(rep.name).c_str(), rep.pass ? "true" : "false");
            for (size_t j = 0; j < rep.lines.size(); ++j) {
                const auto& l = rep.lines[j];
                std::printf("%s{\"label\": %s, \"measured\": %s, \"threshold\": %s, "
                            "\"pass\": %s}",
                            j ? ", " : "", quoted(l.label).c_str(), num(l.measured).c_str(),
                            num(l.threshold).c_str(), l.pass ? "true" : "false");
            }
            std::printf("]}");
        }
        std::printf("]}\n");
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reproducing kernels and asymptotic expansions on Kepler manifolds"};
    app.require_subcommand(1);

    if (const char* env = std::getenv("CACHE_MB")) {
        long mb = std::strtol(env, nullptr, 10);
        if (mb > 0) kepler::jack_cache_set_budget_mb(static_cast<size_t>(mb));
    }

    TypeArgs inv_type, ker_type;
    int inv_ell = 1, ker_ell = 1;
    std::string inv_format = "json", ker_format = "json", ver_format = "json";
    std::string potential = "flat", t_arg = "0.3", suite = "all";
    double lambda_exp = 1.0, nu = 1.0, abs_tol = 1e-14, rel_tol = 1e-12;
    int max_degree = 80;

    CLI::App* inv = app.add_subcommand("invariants", "dimension and volume table");
    add_type_options(inv, inv_type);
    inv->add_option("--ell", inv_ell, "Kepler rank")->default_val(1);
    inv->add_option("--format", inv_format, "json|csv")->default_val("json");

    CLI::App* ker = app.add_subcommand("kernel", "diagonal kernel, direct vs spectral");
    add_type_options(ker, ker_type);
    ker->add_option("--ell", ker_ell, "Kepler rank")->default_val(1);
    ker->add_option("--potential", potential, "flat|bounded")->default_val("flat");
    ker->add_option("--lambda-exp", lambda_exp, "flat potential exponent")->default_val(1.0);
    ker->add_option("--nu", nu, "weight")->required();
    ker->add_option("--t", t_arg, "comma-separated eigenvalues of the squared point")
        ->required();
    ker->add_option("--max-degree", max_degree)->default_val(80);
    ker->add_option("--abs-tol", abs_tol)->default_val(1e-14);
    ker->add_option("--rel-tol", rel_tol)->default_val(1e-12);
    ker->add_option("--format", ker_format, "json|csv")->default_val("json");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name or 'all'")->required();
    ver->add_option("--format", ver_format, "json|csv")->default_val("json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (inv->parsed()) return run_invariants(inv_type, inv_ell, inv_format);
        if (ker->parsed())
            return run_kernel(ker_type, ker_ell, potential, lambda_exp, nu, t_arg,
                              max_degree, abs_tol, rel_tol, ker_format);
        if (ver->parsed()) return run_verify(suite, ver_format);
    } catch (const kepler::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
