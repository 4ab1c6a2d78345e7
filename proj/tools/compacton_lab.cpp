// compacton-lab: classify travelling-wave parameters of the K_N(m,n)
// equation, emit profile samples, run the quadrature oracle, execute
// verification suites, and dump special-function roots.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpmn/classify.hpp"
#include "kpmn/families.hpp"
#include "kpmn/params.hpp"
#include "kpmn/quadrature.hpp"
#include "kpmn/specfun.hpp"
#include "kpmn/verify.hpp"

using json = nlohmann::json;
using namespace kpmn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadFlags = 2;
constexpr int kExitValidity = 3;
constexpr int kExitParity = 4;
constexpr int kExitCheckFailed = 5;
constexpr int kExitNoRoot = 6;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12e", x);
    return buf;
}

// All output goes through a buffer, written atomically at the end: no
// partial files on error.
struct Output {
    std::string path; // empty: stdout
    std::ostringstream buf;

    void flush() {
        if (path.empty()) {
            std::cout << buf.str();
            return;
        }
        namespace fs = std::filesystem;
        const std::string tmp = path + ".tmp";
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) throw DomainError("cannot open output file " + tmp);
            os << buf.str();
        }
        fs::rename(tmp, path);
    }
};

struct CommonOpts {
    double a = 1.0, b = 1.0;
    int s = 1;
    std::string m_str = "2", n_str = "2";
    std::vector<double> mu;
    double nu = 0.0;
    double C2 = 0.0, C3 = 0.0;

    std::string family;
    std::optional<double> alpha, c3, phase;
    int root_index = 1;

    std::string format = "csv";
    std::string out_path;
    unsigned seed = 0;
    int samples = 513;
    double xi_max = 10.0;
    double tol_scale = 1.0;
    bool with_V = false;

    EquationParams equation() const {
        const int N = std::max<int>(1, static_cast<int>(mu.size()) + 1);
        return make_equation(a, b, s, Rational::parse(m_str), Rational::parse(n_str), N);
    }
    WaveParams wave() const { return WaveParams{mu, nu}; }

    std::map<std::string, double> extras() const {
        std::map<std::string, double> ex;
        if (alpha) ex["alpha"] = *alpha;
        if (c3) ex["C3"] = *c3;
        if (phase) ex["phase"] = *phase;
        if (root_index != 1) ex["root_index"] = root_index;
        return ex;
    }
};

void add_equation_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--a", o.a, "convection coefficient a (nonzero)");
    cmd->add_option("--b", o.b, "dispersion coefficient b (nonzero)");
    cmd->add_option("--s", o.s, "transverse sign: -1, 0 or 1 (0 => N=1)");
    cmd->add_option("--m", o.m_str, "convection power m (rational, e.g. 9/5)");
    cmd->add_option("--n", o.n_str, "dispersion power n (rational)");
    cmd->add_option("--mu", o.mu, "transverse slopes mu (repeatable; N = len+1)");
    cmd->add_option("--nu", o.nu, "temporal frequency nu");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out_path, "output file (atomic write); default stdout");
    cmd->add_option("--seed", o.seed, "random seed for test-function draws");
}

void add_family_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--family", o.family, "family name (see `catalog`)")->required();
    cmd->add_option_function<double>(
        "--alpha", [&o](const double& v) { o.alpha = v; },
        "amplitude extra for the free-amplitude families");
    cmd->add_option_function<double>(
        "--C3", [&o](const double& v) { o.c3 = v; }, "amplitude constant C3 (LinMixed)");
    cmd->add_option_function<double>(
        "--phase", [&o](const double& v) { o.phase = v; },
        "phase sign +-1 (LinMixed, C4 = +-pi/2)");
    cmd->add_option("--root-index", o.root_index, "tan fixed-point index (LinMixed)");
}

FamilyId parse_family(const std::string& name) {
    auto id = family_from_name(name);
    if (!id) throw DomainError("unknown family '" + name + "'");
    return *id;
}

double env_tolerance_scale() {
    const char* env = std::getenv("COMPACTON_LAB_TOLERANCE");
    if (!env) return 1.0;
    try {
        const double v = std::stod(env);
        if (v > 0.0) return v;
    } catch (...) {
    }
    return 1.0;
}

json kinematics_json(const EquationParams& eq, const WaveParams& w) {
    const Kinematics k = kinematics(eq, w);
    json j{{"kappa", k.kappa}, {"speed", k.speed}, {"theta", k.theta}};
    if (k.phi) j["phi"] = *k.phi;
    return j;
}

json case_report_json(const CaseReport& rep) {
    json j;
    j["leading"] = quadrature_case_name(rep.leading);
    j["pn"] = rep.pn_value;
    j["exists_weak"] = rep.exists_weak;
    j["exists_compacton"] = rep.exists_compacton;
    j["compacton_cases"] = rep.compacton_cases;
    if (rep.vmax) j["vmax"] = *rep.vmax;
    if (rep.vstar) j["vstar"] = *rep.vstar;
    j["pstar_condition"] = rep.pstar_condition;
    j["detail"] = rep.detail;
    return j;
}

// Families listed by the stated predicates; parity-restricted ones stay
// listed with a note since only the sign-changing branch is blocked.
struct CatalogRow {
    FamilyId id;
    std::string note;
    bool constructible;
    std::string klass;
};

std::vector<CatalogRow> catalog_rows(const EquationParams& eq, const WaveParams& w) {
    std::vector<CatalogRow> rows;
    for (FamilyId id : all_families()) {
        CatalogRow row{id, "", true, ""};
        try {
            Profile pr = make_profile(id, eq, w);
            row.klass = pr.compact() ? solution_class_name(classify_profile(pr))
                                     : "Solitary (non-compact)";
        } catch (const ParityError& e) {
            row.constructible = false;
            row.note = std::string("parity restriction: ") + e.what();
            const SolutionKind k = expected_class(id);
            row.klass = (k == SolutionKind::Compacton)       ? "Compacton"
                        : (k == SolutionKind::WeakCompacton) ? "WeakCompacton"
                                                             : "-";
        } catch (const Error&) {
            continue;
        }
        if (row.note.empty()) {
            for (const auto& adm : catalog_admissible(eq, w))
                if (adm.family == id) row.note = adm.note;
        }
        rows.push_back(row);
    }
    return rows;
}

int cmd_classify(const CommonOpts& o) {
    Output out;
    out.path = o.out_path;
    const EquationParams eq = o.equation();
    const WaveParams w = o.wave();
    const Kinematics kin = kinematics(eq, w);
    const ReducedConstants rc = reduced_constants(eq, w, o.C2, o.C3);
    const CaseReport rep = quadrature_case(rc, eq);
    const auto rows = catalog_rows(eq, w);

    if (o.format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = "classify";
        j["equation"] = {{"a", eq.a}, {"b", eq.b}, {"s", eq.s},
                         {"m", eq.m.str()}, {"n", eq.n.str()}, {"N", eq.N}};
        j["kinematics"] = kinematics_json(eq, w);
        j["constants"] = {{"E", rc.E}, {"C", rc.C}, {"B", rc.B}, {"A", rc.A}};
        j["case"] = case_report_json(rep);
        j["families"] = json::array();
        for (const auto& r : rows)
            j["families"].push_back({{"name", family_name(r.id)},
                                     {"class", r.klass},
                                     {"constructible", r.constructible},
                                     {"note", r.note}});
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "kinematics: kappa=" << fmt(kin.kappa) << " speed=" << fmt(kin.speed)
                << " theta=" << fmt(kin.theta) << "\n";
        out.buf << "constants: E=" << fmt(rc.E) << " C=" << fmt(rc.C) << " B=" << fmt(rc.B)
                << " A=" << fmt(rc.A) << "\n";
        out.buf << "quadrature-case: " << quadrature_case_name(rep.leading)
                << " pn=" << fmt(rep.pn_value) << " weak=" << (rep.exists_weak ? "yes" : "no")
                << " compacton=" << (rep.exists_compacton ? "yes" : "no") << " (" << rep.detail
                << ")\n";
        out.buf << "admissible families:\n";
        for (const auto& r : rows) {
            out.buf << "  " << family_name(r.id) << "  class=" << r.klass;
            if (!r.note.empty()) out.buf << "  [" << r.note << "]";
            out.buf << "\n";
        }
    }
    out.flush();
    return kExitOk;
}

int cmd_catalog(const CommonOpts& o) {
    Output out;
    out.path = o.out_path;
    const EquationParams eq = o.equation();
    const WaveParams w = o.wave();
    const auto rows = catalog_rows(eq, w);
    if (o.format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = "catalog";
        j["families"] = json::array();
        for (const auto& r : rows)
            j["families"].push_back({{"name", family_name(r.id)},
                                     {"class", r.klass},
                                     {"constructible", r.constructible},
                                     {"note", r.note}});
        out.buf << j.dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            out.buf << family_name(r.id) << "  class=" << r.klass;
            if (!r.note.empty()) out.buf << "  [" << r.note << "]";
            out.buf << "\n";
        }
    }
    out.flush();
    return kExitOk;
}

int cmd_profile(const CommonOpts& o) {
    Output out;
    out.path = o.out_path;
    const EquationParams eq = o.equation();
    const WaveParams w = o.wave();
    const Profile pr = make_profile(parse_family(o.family), eq, w, o.extras());

    const double span = pr.compact() ? 1.1 * pr.L : o.xi_max;
    std::vector<double> xs(static_cast<std::size_t>(o.samples));
    for (int i = 0; i < o.samples; ++i)
        xs[static_cast<std::size_t>(i)] = -span + 2.0 * span * i / (o.samples - 1);
    std::vector<double> us;
    sample_profile(pr, xs, us);

    const Kinematics kin = kinematics(eq, w);
    if (o.format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = "profile";
        j["family"] = family_name(pr.family);
        j["L"] = pr.L;
        j["p"] = pr.compact() ? pr.p.value() : 0.0;
        j["q"] = pr.q.str();
        j["sign_class"] = sign_class_name(pr.sign_class);
        j["alpha"] = pr.alpha;
        j["beta"] = pr.beta;
        j["kappa"] = kin.kappa;
        j["speed"] = kin.speed;
        j["theta"] = kin.theta;
        j["C1"] = pr.C1;
        j["C2"] = pr.C2;
        json samples = json::array();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (o.with_V)
                samples.push_back({xs[i], us[i], evaluate_V(pr, xs[i])});
            else
                samples.push_back({xs[i], us[i]});
        }
        j["samples"] = samples;
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << (o.with_V ? "xi,u,V\n" : "xi,u\n");
        for (std::size_t i = 0; i < xs.size(); ++i) {
            out.buf << fmt(xs[i]) << ',' << fmt(us[i]);
            if (o.with_V) out.buf << ',' << fmt(evaluate_V(pr, xs[i]));
            out.buf << '\n';
        }
    }
    out.flush();
    return kExitOk;
}

int cmd_quadrature(const CommonOpts& o, bool direct_constants, double E, double C, double B,
                   double A, const std::string& compare) {
    Output out;
    out.path = o.out_path;
    const EquationParams eq = o.equation();

    ReducedConstants rc;
    if (direct_constants) {
        rc.E = E;
        rc.C = C;
        rc.B = B;
        rc.A = A;
    } else {
        rc = reduced_constants(eq, o.wave(), o.C2, o.C3);
    }
    PotentialSpec spec{rc, eq.m, eq.n};

    const CaseReport rep = quadrature_case(rc, eq);
    const NumericProfile np = invert_profile(spec, std::max(o.samples, 16));

    std::optional<double> deviation;
    if (!compare.empty()) {
        const Profile pr = make_profile(parse_family(compare), eq, o.wave(), o.extras());
        double worst = 0.0;
        for (std::size_t i = 0; i < np.xi.size(); ++i)
            worst = std::max(worst, std::abs(np.U[i] - evaluate(pr, np.xi[i])));
        deviation = worst;
    }

    if (o.format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = "quadrature";
        j["constants"] = {{"E", rc.E}, {"C", rc.C}, {"B", rc.B}, {"A", rc.A}};
        j["vmax"] = np.V.front();
        j["L"] = np.L;
        j["case"] = case_report_json(rep);
        if (rc.E != 0.0)
            j["warning"] = "E != 0: pn=1, classified NotASolution (finite L reported)";
        if (deviation) j["compare"] = {{"family", compare}, {"sup_deviation", *deviation}};
        json samples = json::array();
        for (std::size_t i = 0; i < np.xi.size(); ++i)
            samples.push_back({np.xi[i], np.V[i], np.U[i]});
        j["samples"] = samples;
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "# vmax=" << fmt(np.V.front()) << " L=" << fmt(np.L) << "\n";
        if (rc.E != 0.0)
            out.buf << "# warning: E != 0 gives pn=1 -> NotASolution (finite L reported)\n";
        if (deviation)
            out.buf << "# compare family=" << compare << " sup_deviation=" << fmt(*deviation)
                    << "\n";
        out.buf << "xi,V,U\n";
        for (std::size_t i = 0; i < np.xi.size(); ++i)
            out.buf << fmt(np.xi[i]) << ',' << fmt(np.V[i]) << ',' << fmt(np.U[i]) << '\n';
    }
    out.flush();
    return kExitOk;
}

int cmd_verify(const CommonOpts& o, std::vector<std::string> checks) {
    Output out;
    out.path = o.out_path;
    if (checks.empty())
        checks = {"residual", "singular", "weakform2", "weakform4", "conslaw", "power"};
    for (const auto& c : checks)
        if (!is_known_check(c)) throw DomainError("unknown check name '" + c + "'");

    const EquationParams eq = o.equation();
    const WaveParams w = o.wave();
    const Profile pr = make_profile(parse_family(o.family), eq, w, o.extras());
    const Tolerances tol = Tolerances{}.scaled(o.tol_scale * env_tolerance_scale());
    const VerificationReport rep = run_verification(pr, checks, o.seed, tol);

    json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["family"] = family_name(pr.family);
    j["seed"] = o.seed;
    j["checks"] = json::array();
    for (const auto& e : rep.entries)
        j["checks"].push_back({{"name", e.check_name},
                               {"measured", e.measured},
                               {"tolerance", e.tolerance},
                               {"pass", e.pass},
                               {"details", e.details}});
    j["pass"] = rep.all_pass();
    out.buf << j.dump(2) << "\n";
    out.flush();
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_roots(const CommonOpts& o, int count) {
    Output out;
    out.path = o.out_path;
    if (count < 1) throw DomainError("roots: count must be >= 1");
    const auto roots = tan_fixed_points(count);
    const double k_half = elliptic_K(1.0 / std::sqrt(2.0));
    const double ki = elliptic_K_imag(1.0);
    if (o.format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = "roots";
        j["tan_fixed_points"] = roots;
        j["K_1_over_sqrt2"] = k_half;
        j["K_i"] = ki;
        j["first_sn_imag_zero"] = 2.0 * ki;
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "K(1/sqrt2)=" << fmt(k_half) << "\n";
        out.buf << "K(i)=" << fmt(ki) << "  2K(i)=" << fmt(2.0 * ki) << "\n";
        for (std::size_t i = 0; i < roots.size(); ++i)
            out.buf << "z" << (i + 1) << "=" << fmt(roots[i]) << "\n";
    }
    out.flush();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"travelling-wave families of the nonlinearly dispersive K_N(m,n) equation"};
    app.require_subcommand(1);

    CommonOpts o;
    double E = 0.0, C = 0.0, B = 0.0, A = 0.0;
    std::string compare;
    std::vector<std::string> checks;
    int count = 5;

    auto* classify_cmd =
        app.add_subcommand("classify", "admissible families and solution classes");
    add_equation_flags(classify_cmd, o);
    add_output_flags(classify_cmd, o);
    classify_cmd->add_option("--C2", o.C2, "integration constant C2");
    classify_cmd->add_option("--C3", o.C3, "integration constant C3");

    auto* catalog_cmd = app.add_subcommand("catalog", "list admissible families");
    add_equation_flags(catalog_cmd, o);
    add_output_flags(catalog_cmd, o);

    auto* profile_cmd = app.add_subcommand("profile", "sample a closed-form profile");
    add_equation_flags(profile_cmd, o);
    add_output_flags(profile_cmd, o);
    add_family_flags(profile_cmd, o);
    profile_cmd->add_option("--samples", o.samples, "number of xi samples");
    profile_cmd->add_option("--xi-max", o.xi_max, "half window for solitary profiles");
    profile_cmd->add_flag("--with-V", o.with_V, "emit the V=U^n column too");

    auto* quad_cmd = app.add_subcommand("quadrature", "invert the first-integral quadrature");
    add_equation_flags(quad_cmd, o);
    add_output_flags(quad_cmd, o);
    quad_cmd->add_option("--C2", o.C2, "integration constant C2");
    quad_cmd->add_option("--C3", o.C3, "integration constant C3");
    auto* optE = quad_cmd->add_option("--E", E, "potential constant E (direct mode)");
    quad_cmd->add_option("--C", C, "potential constant C (direct mode)")->needs(optE);
    quad_cmd->add_option("--B", B, "potential constant B (direct mode)")->needs(optE);
    quad_cmd->add_option("--A", A, "potential constant A (direct mode)")->needs(optE);
    quad_cmd->add_option("--samples", o.samples, "grid points for the inversion");
    quad_cmd->add_option("--compare", compare, "compare against a closed-form family");
    quad_cmd->add_option_function<double>(
        "--alpha", [&o](const double& v) { o.alpha = v; }, "amplitude extra for --compare");

    auto* verify_cmd = app.add_subcommand("verify", "run verification checks on a family");
    add_equation_flags(verify_cmd, o);
    add_output_flags(verify_cmd, o);
    add_family_flags(verify_cmd, o);
    verify_cmd->add_option("--checks", checks,
                           "subset of residual,singular,weakform2,weakform4,conslaw,power");
    verify_cmd->add_option("--tol", o.tol_scale, "tolerance scale factor");

    auto* roots_cmd = app.add_subcommand("roots", "tan fixed points and elliptic constants");
    add_output_flags(roots_cmd, o);
    roots_cmd->add_option("--count", count, "number of tan fixed points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(o);
        if (catalog_cmd->parsed()) return cmd_catalog(o);
        if (profile_cmd->parsed()) return cmd_profile(o);
        if (quad_cmd->parsed())
            return cmd_quadrature(o, optE->count() > 0, E, C, B, A, compare);
        if (verify_cmd->parsed()) return cmd_verify(o, checks);
        if (roots_cmd->parsed()) return cmd_roots(o, count);
    } catch (const ParityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParity;
    } catch (const ValidityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidity;
    } catch (const NoRoot& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoRoot;
    } catch (const DivergentIntegral& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoRoot;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    }
    return kExitBadFlags;
}
