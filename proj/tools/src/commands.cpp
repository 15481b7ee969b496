#include "mopquad_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mopquad/catalog.hpp"
#include "mopquad/error.hpp"
#include "mopquad/hessenberg.hpp"
#include "mopquad/oracle.hpp"
#include "mopquad/quadrature.hpp"
#include "mopquad_cli/fixtures.hpp"
#include "mopquad_cli/rule_document.hpp"

namespace mopquad::cli {
namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  usage, parameter validation or I/O error\n"
    "  2  Ehrlich-Aberth iteration did not converge (ier != 0)\n"
    "  3  check: error threshold missed at n = nmax\n";

// Gate applied by `check` to the n = nmax row.
double check_threshold(int nmax) { return nmax >= 100 ? 1e-12 : 1e-2; }

std::vector<double> parse_reals(const std::string& s)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        std::size_t pos = 0;
        double x = 0.0;
        try {
            x = std::stod(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size())
            throw std::invalid_argument("not a real number: '" + tok + "'");
        v.push_back(x);
    }
    return v;
}

std::vector<int> parse_sizes(const std::string& s)
{
    std::vector<int> v;
    for (double x : parse_reals(s)) {
        if (x != std::floor(x) || x < 2 || x > 1e7)
            throw std::invalid_argument("size must be an integer >= 2, got " + format_double(x));
        v.push_back(static_cast<int>(x));
    }
    return v;
}

std::string sci(double x, int digits = 3)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*e", digits, x);
    return buf;
}

std::string join(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += format_double(v[i]);
    }
    return s;
}

struct Common {
    int class_id = 0;
    std::string params;
    bool params_given = false;
};

std::vector<double> resolve_params(const Common& c)
{
    return c.params_given ? parse_reals(c.params) : reference_params(c.class_id);
}

int cmd_rule(const Common& c, int n, const std::string& format, const std::string& out_path, double tol,
             std::ostream& out, std::ostream& err)
{
    const MopSpec spec = validate_spec(c.class_id, resolve_params(c), n);
    const QuadratureRule rule = gauss_mop(spec, {tol, nullptr});
    const RuleDocument doc = make_document(rule);
    const std::string text = format == "csv" ? to_csv(doc) : to_json(doc).dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "error: cannot write " << out_path << '\n';
            return kExitUsage;
        }
        f << text;
    }
    if (rule.ier != 0) {
        err << "error: node " << rule.ier << " did not converge within 30 sweeps (ier = " << rule.ier << ")\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

int cmd_check(const Common& c, int nmax, const std::string& fixtures_flag, std::ostream& out, std::ostream& err)
{
    const std::vector<double> params = resolve_params(c);
    validate_spec(c.class_id, params, 2);
    if (nmax < 2) {
        err << "error: --nmax must be >= 2\n";
        return kExitUsage;
    }
    const std::string path = resolve_fixtures_path(fixtures_flag);
    FixtureSet set;
    try {
        set = load_fixtures(path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const FixtureEntry* ref1 = set.find(c.class_id, params, 1);
    const FixtureEntry* ref2 = set.find(c.class_id, params, 2);
    if (!ref1 || !ref2) {
        err << "error: " << path << " has no x_exp_minus_x entry for class " << c.class_id << " params "
            << join(params) << '\n';
        return kExitUsage;
    }

    std::vector<int> sizes;
    for (int n = 10; n < nmax; n += 10)
        sizes.push_back(n);
    sizes.push_back(nmax);

    const auto f = [](double x) { return x * std::exp(-x); };
    out << "class " << c.class_id << " (" << class_name(c.class_id) << "), params " << join(params)
        << ", f(x) = x exp(-x)\n";
    out << "   n      |err w1|      |err w2|\n";
    double e1 = 0.0;
    double e2 = 0.0;
    for (int n : sizes) {
        const QuadratureRule rule = gauss_mop({c.class_id, params, n});
        if (rule.ier != 0) {
            err << "error: class " << c.class_id << " n=" << n << ": node " << rule.ier << " did not converge\n";
            return kExitNotConverged;
        }
        const auto [i1, i2] = apply_rule(rule, f);
        e1 = std::abs(static_cast<double>(dd(i1) - ref1->value()));
        e2 = std::abs(static_cast<double>(dd(i2) - ref2->value()));
        char line[80];
        std::snprintf(line, sizeof line, "%4d  %12.3e  %12.3e\n", n, e1, e2);
        out << line;
    }
    const double thr = check_threshold(nmax);
    bool ok = true;
    if (!(e1 <= thr)) {
        err << "FAIL class " << c.class_id << " n=" << nmax << " weight 1: " << sci(e1) << " > " << sci(thr) << '\n';
        ok = false;
    }
    if (!(e2 <= thr)) {
        err << "FAIL class " << c.class_id << " n=" << nmax << " weight 2: " << sci(e2) << " > " << sci(thr) << '\n';
        ok = false;
    }
    if (!ok)
        return kExitCheckFailed;
    out << "ok: n=" << nmax << " errors within " << sci(thr, 0) << '\n';
    return kExitOk;
}

int cmd_bench(const Common& c, const std::string& sizes_text, std::ostream& out, std::ostream& err)
{
    const std::vector<double> params = resolve_params(c);
    validate_spec(c.class_id, params, 2);
    const std::vector<int> sizes = parse_sizes(sizes_text);
    if (sizes.empty()) {
        err << "error: --sizes must list at least one size\n";
        return kExitUsage;
    }
    using clock = std::chrono::steady_clock;
    out << "n,seconds\n";
    std::vector<double> medians;
    for (int n : sizes) {
        std::vector<double> t;
        for (int rep = 0; rep < 5; ++rep) {
            const auto t0 = clock::now();
            const QuadratureRule rule = gauss_mop({c.class_id, params, n});
            const auto t1 = clock::now();
            if (rule.ier != 0)
                err << "warning: n=" << n << " ier=" << rule.ier << '\n';
            t.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        std::sort(t.begin(), t.end());
        medians.push_back(t[2]);
        out << n << ',' << sci(t[2]) << '\n';
    }
    for (std::size_t i = 1; i < medians.size(); ++i)
        out << "# ratio row" << i + 1 << "/row" << i << " = " << sci(medians[i] / medians[i - 1], 2) << '\n';
    return kExitOk;
}

int cmd_fixtures(const std::string& out_flag, std::ostream& out)
{
    const std::string path = resolve_fixtures_path(out_flag);
    const FixtureSet set = generate_reference_fixtures();
    save_fixtures(set, path);
    for (const FixtureEntry& e : set.entries)
        out << "class " << e.class_id << " w" << e.which << ": " << format_double(e.value_hi) << " (err "
            << sci(e.err_est, 1) << ")\n";
    out << "wrote " << set.entries.size() << " entries to " << path << '\n';
    return kExitOk;
}

int cmd_cond(const Common& c, int n, std::ostream& out, std::ostream& err)
{
    if (n > static_cast<int>(kOracleMaxN)) {
        err << "error: --n must be <= " << kOracleMaxN << " for the dense oracle\n";
        return kExitUsage;
    }
    const MopSpec spec = validate_spec(c.class_id, resolve_params(c), n);
    const RecurrenceSystem rs = class_mop(spec);
    const DenseEigen plain = dense_eigen_dd(rs.h);
    const DenseEigen bal = dense_eigen_dd(as_banded(balance(rs.h)));
    const std::vector<double> k1 = condition_numbers(plain);
    const std::vector<double> k2 = condition_numbers(bal);
    out << "j,node,kappa_H,kappa_H_balanced\n";
    for (std::size_t j = 0; j < k1.size(); ++j)
        out << j + 1 << ',' << format_double(static_cast<double>(plain.values[j])) << ',' << sci(k1[j]) << ','
            << sci(k2[j]) << '\n';
    const double m1 = *std::max_element(k1.begin(), k1.end());
    const double m2 = *std::max_element(k2.begin(), k2.end());
    out << "# max kappa H = " << sci(m1) << ", balanced = " << sci(m2) << ", ratio = " << sci(m2 / m1) << '\n';
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Simultaneous Gaussian quadrature rules for multiple orthogonal polynomials", "mopquad"};
    app.footer(kExitCodeHelp);
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    Common common;
    int n = 0;
    int nmax = 100;
    std::string format = "json";
    std::string out_path;
    std::string fixtures;
    std::string sizes;
    double tol = 0.0;

    const auto add_class = [&](CLI::App* sub, bool params_required) {
        sub->add_option("--class", common.class_id, "MOP class 1..9")->required();
        auto* p = sub->add_option("--params", common.params, "comma-separated parameters");
        if (params_required)
            p->required();
        p->allow_extra_args(false);
    };

    CLI::App* rule = app.add_subcommand("rule", "compute nodes and both weight vectors");
    add_class(rule, true);
    rule->add_option("--n", n, "number of nodes (>= 2)")->required();
    rule->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    rule->add_option("--out", out_path, "output file (default stdout)");
    rule->add_option("--tol", tol, "Ehrlich-Aberth tolerance (default n^2 eps)");

    CLI::App* check = app.add_subcommand("check", "integrate x exp(-x) for n = 10, 20, ..., nmax against fixtures");
    add_class(check, false);
    check->add_option("--nmax", nmax, "largest n (gated row)");
    check->add_option("--fixtures", fixtures, "reference integrals (default $MOPQUAD_FIXTURES or built-in path)");

    CLI::App* bench = app.add_subcommand("bench", "median wall-clock seconds of 5 runs per size");
    add_class(bench, false);
    bench->add_option("--sizes", sizes, "comma-separated sizes")->required();

    CLI::App* fix = app.add_subcommand("fixtures", "regenerate the reference integral fixtures");
    fix->add_option("--out", fixtures, "output path (default $MOPQUAD_FIXTURES or built-in path)");

    CLI::App* cond = app.add_subcommand("cond", "eigenvalue condition numbers of H and its balanced form");
    add_class(cond, false);
    n = 20;
    cond->add_option("--n", n, "matrix order (<= 32)");

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i)
            args.emplace_back(argv[i]);
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    for (CLI::App* sub : app.get_subcommands())
        if (const CLI::Option* opt = sub->get_option_no_throw("--params"))
            common.params_given = opt->count() > 0;

    try {
        if (rule->parsed())
            return cmd_rule(common, n, format, out_path, tol, out, err);
        if (check->parsed())
            return cmd_check(common, nmax, fixtures, out, err);
        if (bench->parsed())
            return cmd_bench(common, sizes, out, err);
        if (fix->parsed())
            return cmd_fixtures(fixtures, out);
        if (cond->parsed())
            return cmd_cond(common, n, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace mopquad::cli
