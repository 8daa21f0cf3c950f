// Command-line front end: tables, kernel expansions, verification batteries,
// and curvature comparisons, emitted as JSON-lines (or CSV where tabular).
// Exit codes: 0 = all requested checks passed, 1 = a check failed,
// 2 = invalid configuration or a resource cap was hit.
#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "symmod/errors.hpp"
#include "symmod/geometry.hpp"
#include "symmod/hilbmod.hpp"
#include "symmod/json_io.hpp"
#include "symmod/kernels.hpp"
#include "symmod/permgroup.hpp"
#include "symmod/rng.hpp"
#include "symmod/symfunc.hpp"

using namespace symmod;

namespace {

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

// One summary row per emitted report when CSV output is requested.
std::string csv_summary(const Json& j) {
    std::ostringstream os;
    os << j.value("check", std::string("report")) << ','
       << (j.value("pass", false) ? "true" : "false");
    return os.str();
}

void emit(Output& out, const Json& j, const std::string& format) {
    if (format == "csv")
        out.stream() << csv_summary(j) << '\n';
    else
        out.stream() << j.dump() << '\n';
}

std::vector<SparsePoly> elementary_images(int n) {
    std::vector<SparsePoly> e;
    for (int k = 1; k <= n; ++k) e.push_back(elementary(k, n));
    return e;
}

int run_chartable(int n, const std::string& format, Output& out) {
    CharacterTable t = character_table(n);
    if (format == "csv")
        out.stream() << chartable_to_csv(t);
    else
        out.stream() << chartable_to_json(t).dump() << '\n';
    return 0;
}

int run_irreps(int n, const std::string& form, const std::string& format, Output& out) {
    if (format == "csv") throw std::invalid_argument("csv output is not available for irreps");
    for (const Partition& p : partitions_of(n)) {
        if (parse_form(form) == IrrepForm::Seminormal)
            out.stream() << irrep_to_json(irrep_seminormal(n, p)).dump() << '\n';
        else
            out.stream() << irrep_to_json(irrep_orthogonal(n, p)).dump() << '\n';
    }
    return 0;
}

int run_schur(int n, int degree, const std::string& format, Output& out) {
    auto e = elementary_images(n);
    bool all_match = true;
    for (const Partition& p : partitions_up_to(degree, n)) {
        SparsePoly g = schur_giambelli(p, n);
        bool match = g.substitute(e) == schur_bialternant(p, n);
        all_match = all_match && match;
        if (format == "csv") {
            out.stream() << p.str() << ',' << (match ? "true" : "false") << '\n';
        } else {
            Json j;
            j["partition"] = p.parts();
            j["elementary_form"] = poly_to_json(g);
            j["matches_quotient"] = match;
            out.stream() << j.dump() << '\n';
        }
    }
    return all_match ? 0 : 1;
}

int run_kernel(const std::string& kind, int n, const std::string& lambda_s,
               const std::string& mu_s, int degree, const std::string& format, Output& out) {
    KernelSeries k;
    if (kind == "BGn") {
        if (mu_s.empty()) throw std::invalid_argument("kernel kind BGn requires --mu");
        k = kernel_Bergman_Gn(parse_rational(mu_s), n, degree);
    } else {
        if (lambda_s.empty())
            throw std::invalid_argument("kernel kind " + kind + " requires --lambda");
        Rat lambda = parse_rational(lambda_s);
        if (kind == "polydisc")
            k = kernel_polydisc(lambda, n, degree);
        else if (kind == "sym")
            k = kernel_sym(lambda, n, degree);
        else if (kind == "KGn")
            k = kernel_Gn_monomial(lambda, n, degree);
        else
            throw std::invalid_argument("unknown kernel kind: " + kind);
    }
    if (format == "csv") {
        out.stream() << "label,coef\n";
        for (const KernelTerm& t : k.terms) {
            out.stream() << '"';
            for (std::size_t i = 0; i < t.label.size(); ++i)
                out.stream() << (i ? " " : "") << t.label[i];
            out.stream() << '"' << ',' << rat_str(t.coef) << '\n';
        }
    } else {
        out.stream() << kernel_to_json(k).dump() << '\n';
    }
    return 0;
}

int run_verify(int n, const std::string& lambda_s, int degree, unsigned long seed, int trials,
               const std::string& form, const std::string& format, Output& out) {
    Rat lambda = parse_rational(lambda_s);
    check_group_size(n);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    bool all_pass = true;
    auto note = [&](const Json& j) {
        emit(out, j, format);
        if (j.contains("pass") && !j["pass"].get<bool>()) all_pass = false;
    };
    bool want_sem = form == "seminormal" || form == "both";
    bool want_orth = form == "orthogonal" || form == "both";

    // matrix-coefficient orthogonality over all partition pairs
    auto parts = partitions_of(n);
    if (want_sem) {
        std::vector<IrrepTable<Rat>> reps;
        for (const auto& p : parts) reps.push_back(irrep_seminormal(n, p));
        for (const auto& a : reps)
            for (const auto& b : reps) note(orth_to_json(verify_orthogonality(a, b)));
    }
    if (want_orth) {
        std::vector<IrrepTable<double>> reps;
        for (const auto& p : parts) reps.push_back(irrep_orthogonal(n, p));
        for (const auto& a : reps)
            for (const auto& b : reps) note(orth_to_json(verify_orthogonality(a, b)));
    }

    // block algebra and reducing commutators on the truncation
    TruncatedModule mod = build_module(n, degree, lambda);
    if (want_sem) {
        note(report_to_json(verify_projection_algebra(mod, IrrepForm::Seminormal)));
        note(report_to_json(verify_reducing(mod, IrrepForm::Seminormal)));
    }
    if (want_orth) {
        note(report_to_json(verify_projection_algebra(mod, IrrepForm::Orthogonal)));
        note(report_to_json(verify_reducing(mod, IrrepForm::Orthogonal)));
    }

    // joint-kernel ranks at seeded off-diagonal points
    {
        int dj = std::max(degree, n * (n - 1) / 2 + 2);
        TruncatedModule jmod = dj == degree ? mod : build_module(n, dj, lambda);
        CharacterTable t = character_table(n);
        RandomSource rng(seed);
        long long nfact = 1;
        for (int i = 2; i <= n; ++i) nfact *= i;
        bool ok = true;
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<Rat> w = rng.rational_point_distinct(n);
            if (joint_kernel(jmod, w).rank != static_cast<int>(nfact)) ok = false;
            for (std::size_t r = 0; r < parts.size(); ++r) {
                int dim = static_cast<int>(t.chi[r][0]);
                if (isotype_dimension(jmod, parts[r], w) != dim * dim) ok = false;
            }
        }
        Json j;
        j["check"] = "joint_kernel_ranks";
        j["n"] = n;
        j["d"] = dj;
        j["trials"] = trials;
        j["seed"] = seed;
        j["expected_rank"] = nfact;
        j["pass"] = ok;
        note(j);
    }

    // orbit determinant against the Vandermonde power
    note(artin_to_json(artin_determinant_check(n, trials, seed)));

    // elementary-coordinate kernel is the exact pullback of the symmetrized one
    {
        KernelSeries sym = kernel_sym(lambda, n, degree);
        KernelSeries gn = kernel_Gn_monomial(lambda, n, degree);
        auto e = elementary_images(n);
        bool ok = sym.terms.size() == gn.terms.size();
        for (std::size_t t = 0; ok && t < sym.terms.size(); ++t)
            ok = sym.terms[t].label == gn.terms[t].label &&
                 sym.terms[t].coef == gn.terms[t].coef &&
                 gn.terms[t].factor.substitute(e) == sym.terms[t].factor;
        Json j;
        j["check"] = "kernel_pullback";
        j["n"] = n;
        j["lambda"] = rat_str(lambda);
        j["d"] = degree;
        j["pass"] = ok;
        note(j);
    }

    // low-order diagonal coefficients against the closed forms
    {
        int dc = std::max(degree, 4);
        KernelSeries kg = kernel_Gn_monomial(lambda, n, dc);
        KernelSeries nb = normalize_at_zero(kernel_Bergman_Gn(lambda, n, dc));
        bool ok = extract_e1_coefficient(kg, 1) == lambda / n &&
                  extract_e1_coefficient(kg, 2) == lambda * (lambda + 1) / (2 * n) &&
                  extract_e1_coefficient(nb, 1) == (lambda + n - 1) / Rat(n) &&
                  extract_e1_coefficient(nb, 2) ==
                      (lambda + n - 1) * (lambda + n) / (Rat(n) * (n + 1));
        Json j;
        j["check"] = "coefficient_formulas";
        j["n"] = n;
        j["lambda"] = rat_str(lambda);
        j["d"] = dc;
        j["pass"] = ok;
        note(j);
    }

    // first-coefficient witness
    {
        InequivalenceWitness w = witness_inequivalence(lambda, n);
        bool expected = n == 1 ? (!w.differ && w.system_solvable)
                               : (w.differ && !w.system_solvable);
        Json j = witness_to_json(w);
        j["pass"] = expected;
        note(j);
    }

    // permanent crosscheck, inside its caps
    if (n <= 4) note(crosscheck_to_json(crosscheck_permanent(lambda, n, std::min(degree, 6))));

    return all_pass ? 0 : 1;
}

int run_curvature(int n, const std::string& lambda_s, int degree, double step, unsigned long seed,
                  int trials, const std::string& points_s, const std::string& format,
                  Output& out) {
    Rat lambda = parse_rational(lambda_s);
    std::vector<std::vector<std::complex<double>>> pts;
    if (!points_s.empty()) {
        pts = parse_points(Json::parse(points_s), n);
    } else {
        if (trials < 1) throw std::invalid_argument("trials must be >= 1");
        RandomSource rng(seed);
        for (int i = 0; i < trials; ++i) pts.push_back(rng.complex_point_distinct(n, 0.5));
    }
    int d = degree > 0 ? degree : default_geometry_degree(n);
    CurvatureComparison cmp = compare_curvatures(n, lambda, pts, step, d);
    Json j = curvature_to_json(cmp);
    j["seed"] = seed;
    j["step"] = step;
    j["d"] = d;
    bool hermitian_ok = cmp.hermiticity_dev <= 1e-6;
    j["pass"] = hermitian_ok;
    emit(out, j, format);
    return hermitian_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for symmetrized weighted kernels"};
    app.require_subcommand(1);

    struct {
        int n = 0;
        std::string format = "json", out;
    } ct;
    struct {
        int n = 0;
        std::string form = "seminormal", format = "json", out;
    } ir;
    struct {
        int n = 0, degree = 4;
        std::string format = "json", out;
    } sc;
    struct {
        std::string kind;
        int n = 0, degree = 6;
        std::string lambda, mu, format = "json", out;
    } ke;
    struct {
        int n = 0, degree = 4, trials = 3;
        unsigned long seed = 1;
        std::string lambda = "2", form = "both", format = "json", out;
    } ve;
    struct {
        int n = 0, degree = 0, trials = 3;
        unsigned long seed = 1;
        double step = 1e-3;
        std::string lambda = "2", points, format = "json", out;
    } cu;

    auto add_common = [](CLI::App* cmd, std::string& format, std::string& out_path) {
        cmd->add_option("--out", out_path, "write reports to this file instead of stdout");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* chartable = app.add_subcommand("chartable", "irreducible character table");
    chartable->add_option("--n", ct.n, "number of variables")->required();
    add_common(chartable, ct.format, ct.out);

    CLI::App* irreps = app.add_subcommand("irreps", "matrix models of the irreducibles");
    irreps->add_option("--n", ir.n, "number of variables")->required();
    irreps->add_option("--form", ir.form, "matrix form (seminormal|orthogonal)")
        ->check(CLI::IsMember({"seminormal", "orthogonal"}));
    add_common(irreps, ir.format, ir.out);

    CLI::App* schur = app.add_subcommand(
        "schur", "Schur polynomials in elementary coordinates, with cross-form checks");
    schur->add_option("--n", sc.n, "number of variables")->required();
    schur->add_option("--degree", sc.degree, "maximum partition weight (default 4)");
    add_common(schur, sc.format, sc.out);

    CLI::App* kernel = app.add_subcommand("kernel", "series expansion of a reproducing kernel");
    kernel->add_option("--kind", ke.kind, "kernel family")
        ->required()
        ->check(CLI::IsMember({"polydisc", "sym", "KGn", "BGn"}));
    kernel->add_option("--n", ke.n, "number of variables")->required();
    kernel->add_option("--lambda", ke.lambda, "weight for polydisc/sym/KGn");
    kernel->add_option("--mu", ke.mu, "weight for BGn");
    kernel->add_option("--degree", ke.degree, "degree cap (default 6)");
    add_common(kernel, ke.format, ke.out);

    CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("--n", ve.n, "number of variables")->required();
    verify->add_option("--lambda", ve.lambda, "weight as a rational string (default 2)");
    verify->add_option("--degree", ve.degree, "truncation degree (default 4)");
    verify->add_option("--seed", ve.seed, "seed for random points (default 1)");
    verify->add_option("--trials", ve.trials, "number of random points (default 3)");
    verify->add_option("--form", ve.form, "matrix forms to exercise (default both)")
        ->check(CLI::IsMember({"seminormal", "orthogonal", "both"}));
    add_common(verify, ve.format, ve.out);

    CLI::App* curvature =
        app.add_subcommand("curvature", "compare curvatures of the two kernel families");
    curvature->add_option("--n", cu.n, "number of variables")->required();
    curvature->add_option("--lambda", cu.lambda, "weight as a rational string (default 2)");
    curvature->add_option("--degree", cu.degree, "truncation degree (0 = per-size default)");
    curvature->add_option("--step", cu.step, "finite-difference step (default 1e-3)");
    curvature->add_option("--seed", cu.seed, "seed for random points (default 1)");
    curvature->add_option("--trials", cu.trials, "number of random points (default 3)");
    curvature->add_option("--points", cu.points,
                          "JSON list of base points (rational strings or [re,im] pairs)");
    add_common(curvature, cu.format, cu.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Output out;
        if (chartable->parsed()) {
            out.open(ct.out);
            return run_chartable(ct.n, ct.format, out);
        }
        if (irreps->parsed()) {
            out.open(ir.out);
            return run_irreps(ir.n, ir.form, ir.format, out);
        }
        if (schur->parsed()) {
            out.open(sc.out);
            return run_schur(sc.n, sc.degree, sc.format, out);
        }
        if (kernel->parsed()) {
            out.open(ke.out);
            return run_kernel(ke.kind, ke.n, ke.lambda, ke.mu, ke.degree, ke.format, out);
        }
        if (verify->parsed()) {
            out.open(ve.out);
            return run_verify(ve.n, ve.lambda, ve.degree, ve.seed, ve.trials, ve.form, ve.format,
                              out);
        }
        if (curvature->parsed()) {
            out.open(cu.out);
            return run_curvature(cu.n, cu.lambda, cu.degree, cu.step, cu.seed, cu.trials,
                                 cu.points, cu.format, out);
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
