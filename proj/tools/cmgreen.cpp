// cmgreen: batch verification front end.
//
// Every subcommand builds one run record: inputs, exact results as strings,
// numeric results as decimal strings with error bounds, and a list of named
// checks. The record is printed as a table, or as JSON with --json.
// Exit status: 0 all checks pass, 1 a check failed, 2 bad input.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmg/cohomology/torsion.hpp"
#include "cmg/cycles/intersect.hpp"
#include "cmg/errors.hpp"
#include "cmg/green/conjecture.hpp"
#include "cmg/green/eichler.hpp"
#include "cmg/green/global.hpp"
#include "cmg/hypercover/branch.hpp"
#include "cmg/verify/series_suite.hpp"

using json = nlohmann::ordered_json;
using namespace cmg;
using num::Complex;
using num::Real;

namespace
{

constexpr int kSchemaVersion = 1;
constexpr long kDefaultPrec = 256;

struct RunRecord {
    json inputs = json::object();
    json exact = json::object();
    json numeric = json::object();
    json checks = json::array();
    bool pass = true;

    void check(const std::string &name, bool ok, const std::string &detail = "")
    {
        json c{{"name", name}, {"pass", ok}};
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        pass = pass && ok;
    }
    void number(const std::string &name, const std::string &value, const std::string &bound)
    {
        numeric[name] = json{{"value", value}, {"error_bound", bound}};
    }
};

struct Options {
    bool json = false;
    bool timing = false;
    long prec = kDefaultPrec;
};

int digits_for(long prec) { return std::max(10, static_cast<int>(prec * 0.30103) - 6); }

std::string dec(const Real &x, long prec) { return x.str(digits_for(prec)); }
std::string dec(const Complex &z, long prec) { return z.str(digits_for(prec)); }

std::string sci(double x)
{
    std::ostringstream os;
    os << std::setprecision(3) << std::scientific << x;
    return os.str();
}

long default_prec()
{
    const char *env = std::getenv("CMG_PREC");
    if (!env || !*env) return kDefaultPrec;
    char *end = nullptr;
    long p = std::strtol(env, &end, 10);
    if (*end != '\0' || p < 32 || p > 1 << 20) throw DomainError(std::string("CMG_PREC must be an integer in [32, 2^20], got '") + env + "'");
    return p;
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

long parse_long(const std::string &s)
{
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception &) {
        throw ParseError("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("not an integer: '" + s + "'");
    return v;
}

// A point of the upper half plane: "i", "rho", "tau7", "cm:A,B,C" or "x,y".
struct PointArg {
    Complex z;
    std::optional<green::CMPoint> cm;
};

PointArg parse_point(const std::string &s, mpfr_prec_t P)
{
    auto cm = [&](long A, long B, long C) {
        green::CMPoint p = green::CMPoint::make(A, B, C);
        return PointArg{p.tau(P), p};
    };
    if (s == "i") return cm(1, 0, 1);
    if (s == "rho") return cm(1, 1, 1);
    if (s == "tau7") return cm(1, 1, 2);
    if (s.rfind("cm:", 0) == 0) {
        auto f = split(s.substr(3), ',');
        if (f.size() != 3) throw ParseError("expected cm:A,B,C, got '" + s + "'");
        return cm(parse_long(f[0]), parse_long(f[1]), parse_long(f[2]));
    }
    auto f = split(s, ',');
    if (f.size() != 2) throw ParseError("expected a point as x,y or i, rho, tau7, cm:A,B,C; got '" + s + "'");
    Complex z(Real(f[0], P), Real(f[1], P));
    if (z.im().sign() <= 0) throw DomainError("point must lie in the upper half plane");
    return {z, std::nullopt};
}

Gaussian at_point(const ws::Coef &c, const Rational &a, const Rational &b)
{
    return c.substitute<Gaussian>({Gaussian(a), Gaussian(b), Gaussian(0)},
                                  {std::nullopt, Gaussian(b.inverse()), std::nullopt},
                                  [](const Gaussian &x) { return x; });
}

// ---------------------------------------------------------------- commands

void cmd_series_verify(RunRecord &r, int order, const std::string &corrupt)
{
    verify::SuiteOptions opt;
    opt.order = order;
    if (!corrupt.empty()) {
        auto colon = corrupt.rfind(':');
        if (colon == std::string::npos) throw ParseError("--corrupt expects SERIES:POWER");
        opt.corrupt = std::make_pair(corrupt.substr(0, colon), static_cast<int>(parse_long(corrupt.substr(colon + 1))));
    }
    r.inputs["order"] = order;
    if (opt.corrupt) r.inputs["corrupt"] = corrupt;
    verify::SuiteResult s = verify::series_suite(opt);
    long passed = 0, truncated = 0, failed = 0;
    json table = json::array();
    for (const auto &c : s.checks) {
        table.push_back({{"series", c.series},
                         {"power", c.power},
                         {"expected", c.expected},
                         {"got", c.got},
                         {"status", verify::status_name(c.status)}});
        if (c.status == verify::CheckStatus::Pass) ++passed;
        else if (c.status == verify::CheckStatus::Truncated) ++truncated;
        else ++failed;
    }
    r.exact["coefficients"] = table;
    r.exact["f1_f2_known_below"] = s.product_order;
    r.check("coefficients", failed == 0 && truncated == 0,
            std::to_string(passed) + " pass, " + std::to_string(failed) + " fail, " + std::to_string(truncated) +
                " truncated");
    r.check("f1_f2_equals_2b", s.product_identity, "known below z^" + std::to_string(s.product_order));
    if (const auto *f = s.first_failure()) {
        std::string var = f->series.find("(t)") != std::string::npos ? " at t^" : " at z^";
        std::string where = f->series + var + std::to_string(f->power);
        if (f->status == verify::CheckStatus::Truncated)
            r.check("first_failure", false, "TruncationExhausted: " + where + " needs order > " + std::to_string(order));
        else
            r.check("first_failure", false, where + ": expected " + f->expected + ", got " + f->got);
    }
}

void cmd_psi(RunRecord &r, int order)
{
    r.inputs["order"] = order;
    auto th = hc::theta_basis(order);
    auto br = hc::branches_W(order);
    std::vector<hc::BranchData> W(br.begin(), br.end());
    using ws::a;
    using ws::b;
    using ws::ci;
    using ws::cq;
    const ws::Coef expect_ds[3] = {cq(0), ci() * cq(-8, 3) * a() * a() * b().pow(-1), ci() * cq(4) * a()};
    for (int k = 0; k < 3; ++k) {
        hc::PsiPair p = hc::psi1(th[k], W);
        std::string key = "psi1_theta" + std::to_string(k);
        r.exact[key] = json{{"de", p.de.str()}, {"ds", p.ds.str()}};
        r.check(key, p.de.is_zero() && p.ds == expect_ds[k]);
    }
    hc::EvalB e = hc::eval_B();
    ws::Coef expect = ci() * cq(24) * a() + ci() * cq(32, 9) * a().pow(4) * b().pow(-2);
    r.exact["psi_alg_B_scalar"] = e.scalar.str();
    r.exact["transported"] = "pi * (" + e.pi_coeff.str() + ")";
    r.exact["closed_form"] = "pi * (" + e.closed_form.str() + ")";
    r.exact["j_form"] = "pi * (" + e.j_form.str() + ")";
    r.exact["multiplier"] = e.multiplier.str() + " [omega]^4";
    Gaussian at = at_point(e.scalar, Rational(-35), Rational(-98));
    r.exact["scalar_at_-35_-98"] = at.str();
    r.check("psi_alg_B_scalar", e.scalar == expect);
    r.check("closed_form", e.closed_form_ok);
    r.check("j_form", e.j_form_ok);
    r.check("specialization", at == Gaussian(Rational(0), Rational(-2560, 9)));
}

void cmd_intersect(RunRecord &r, const std::string &curve, const std::string &endo_file, const std::string &builtin)
{
    std::optional<cyc::Endomorphism> e;
    if (!endo_file.empty()) {
        e = cyc::load_endo(endo_file);
        r.inputs["endo"] = endo_file;
    } else if (!builtin.empty()) {
        e = green::builtin_endo(builtin);
        r.inputs["builtin"] = builtin;
    }
    cyc::CurveParams p;
    if (!curve.empty()) {
        auto f = split(curve, ',');
        if (f.size() != 2) throw ParseError("--curve expects a,b");
        p = {Rational::parse(f[0]), Rational::parse(f[1])};
        r.inputs["curve"] = curve;
        if (e && !(e->curve.a == p.a && e->curve.b == p.b))
            throw DomainError("endomorphism is defined on y^2 = x^3 + " + e->curve.a.str() + " x + " + e->curve.b.str());
    } else if (e) {
        p = e->curve;
    } else {
        throw ParseError("intersect needs --curve, --endo or --builtin");
    }
    p.require_valid();
    r.exact["curve"] = json{{"a", p.a.str()}, {"b", p.b.str()}, {"j", cyc::j_invariant(p).str()}};

    BiField z1 = cyc::intersect_basic(cyc::BasicCycle::Z1, p);
    BiField z2 = cyc::intersect_basic(cyc::BasicCycle::Z2, p);
    BiField dg = cyc::intersect_basic(cyc::BasicCycle::DiagE, p);
    r.exact["Z1"] = z1.str();
    r.exact["Z2"] = z2.str();
    r.exact["Delta"] = dg.str();
    BiField b(p.b);
    r.check("Z1_Z2_Delta", z1 == BiField(2) * b && z2 == BiField(-2) * b && dg == BiField(-4) * b * b);
    if (!e) return;

    cyc::validate(*e);
    cyc::GraphIntersection g = cyc::intersect_graph(*e);
    cyc::AlgCycle zt = cyc::z_tau_cycle(*e);
    BiField vz = cyc::intersect_cycle(zt, p);
    r.exact["Gamma"] = g.total.str();
    r.exact["Z_tau_cycle"] = zt.str();
    r.exact["Z_tau"] = vz.str();
    r.check("endomorphism_valid", e->validated);
    if (g.norms_available) r.check("finite_norms_vs_resultant", g.finite_norms == g.finite_resultant);

    // (c1 + c2) -> product, on a fixed pseudo-random pair
    std::mt19937 rng(20240);
    std::uniform_int_distribution<int> dist(-3, 3);
    cyc::AlgCycle c1, c2, s;
    c1 = {dist(rng), dist(rng), dist(rng), {{&*e, dist(rng)}}};
    c2 = {dist(rng), dist(rng), dist(rng), {{&*e, dist(rng)}}};
    s = {c1.z1 + c2.z1, c1.z2 + c2.z2, c1.diag + c2.diag, {{&*e, c1.graphs[0].second + c2.graphs[0].second}}};
    r.check("homomorphism", cyc::intersect_cycle(s, p) == cyc::intersect_cycle(c1, p) * cyc::intersect_cycle(c2, p),
            c1.str() + " + " + c2.str());

    if (p.a == Rational(-35) && p.b == Rational(-98) && e->degree == 2) {
        // u = -1 + mu - (2 + mu) i
        const BiField u(-1, 1, -2, -1);
        r.exact["u"] = u.str();
        r.check("u^2 = i(8 - 3 sqrt 7)", u * u == BiField::i() * (BiField(8) - BiField(3) * cyc::sqrt_7()));
        r.check("Z1 = -14^2", z1 == BiField(-196));
        r.check("Z2 = 14^2", z2 == BiField(196));
        r.check("Delta = -14^4", dg == BiField(-38416));
        r.check("Gamma = 14^6 u^4", g.total == BiField(7529536) * u.pow(4));
        r.check("Z_tau = u^8", vz == u.pow(8));
        r.check("Norm(u) = 1", u.norm_to_q() == Rational(1));
    }
}

void cmd_green(RunRecord &r, const std::string &z1s, const std::string &z2s, const std::string &method, long P,
               double bound, const std::string &path)
{
    PointArg z1 = parse_point(z1s, P), z2 = parse_point(z2s, P);
    r.inputs["z1"] = z1s;
    r.inputs["z2"] = z2s;
    r.inputs["method"] = method;
    r.inputs["bound"] = sci(bound);
    bool poincare = method == "poincare" || method == "both";
    bool eichler = method == "eichler" || method == "both";

    std::optional<green::GlobalGreen> gg;
    if (poincare) {
        gg = green::global_green(2, z1.z, z2.z, bound, P);
        r.number("G", dec(gg->value, P), sci(gg->tail.to_double()));
        r.exact["terms"] = gg->terms;
        r.exact["near_terms"] = gg->near_terms;
        r.exact["kernel"] = gg->kernel == green::Kernel::Avx2 ? "avx2" : "scalar";
        r.check("tail_bound", gg->tail.to_double() < 1e-2, "tail " + sci(gg->tail.to_double()));
    }
    if (eichler) {
        if (!z1.cm) throw DomainError("the eichler method needs z1 given as a CM point (tau7, rho, cm:A,B,C)");
        if (z2s != "i") throw DomainError("the eichler method is implemented for z2 = i");
        green::PathOptions opt;
        if (path == "straight") opt.policy = green::PathPolicy::Straight;
        else if (path == "upoverdown") opt.policy = green::PathPolicy::UpOverDown;
        green::EichlerResult e = green::eichler_lift(*z1.cm, P, opt);
        Real qbound = Real::pow2(-static_cast<long>(P) / 2, P);
        r.number("G_hat", dec(e.value, P), sci(qbound.to_double()));
        r.number("two_re_G_hat", dec(e.value.re() * 2L, P), sci(2 * qbound.to_double()));
        r.exact["evaluations"] = e.evaluations;
        r.exact["path_clearance"] = sci(e.min_clearance);
        // G-hat is only defined modulo periods; sqrt(-4D) G-hat is reported modulo pi i
        Complex scaled = e.value * sqrt(Real(-4 * z1.cm->disc(), P));
        r.number("sqrt_minus_4D_G_hat_mod_pi_i", dec(green::reduce_mod_i(scaled, Real::pi(P)), P),
                 sci(qbound.to_double()));
        if (gg) {
            Real diff = abs(gg->value - e.value.re() * 2L);
            double tol = std::max(1e-6, 2 * gg->tail.to_double());
            r.number("poincare_minus_eichler", dec(diff, P), sci(tol));
            r.check("methods_agree", diff.to_double() <= tol);
        }
    }
}

green::CMPoint principal_point(long D)
{
    if (D >= 0 || (D % 4 != 0 && (D % 4 + 4) % 4 != 1)) throw DomainError("discriminant must be negative and 0 or 1 mod 4");
    long B = (D % 2 == 0) ? 0 : 1;
    return green::CMPoint::make(1, B, (B * B - D) / 4);
}

void cmd_conjecture(RunRecord &r, long D, long P, const std::string &endo_file, const std::string &form)
{
    r.inputs["disc"] = D;
    green::CMPoint z;
    if (!form.empty()) {
        auto f = split(form, ',');
        if (f.size() != 3) throw ParseError("--form expects A,B,C");
        z = green::CMPoint::make(parse_long(f[0]), parse_long(f[1]), parse_long(f[2]));
        if (z.disc() != D) throw DomainError("form has discriminant " + std::to_string(z.disc()));
        r.inputs["form"] = form;
    } else {
        z = endo_file.empty() ? green::builtin_point(D) : principal_point(D);
    }
    green::ConjectureReport c = endo_file.empty()
                                    ? green::conjecture_check(z, green::builtin_endo("tau7"), P)
                                    : green::conjecture_check(z, endo_file, P);
    if (!endo_file.empty()) r.inputs["endo"] = endo_file;
    r.exact["point"] = json{{"A", z.A}, {"B", z.B}, {"C", z.C}};
    r.exact["cycle"] = c.cycle;
    r.exact["intersection"] = c.intersection.str();
    Real qb = Real::pow2(-static_cast<long>(P) / 2, P);
    r.number("G_hat", dec(c.ghat, P), sci(qb.to_double()));
    r.number("lhs", dec(c.lhs, P), sci(qb.to_double()));
    r.number("rhs", dec(c.rhs, P), sci(qb.to_double()));
    r.number("residual_mod_pi_i", dec(c.residual, P), sci(qb.to_double()));
    r.number("j_mismatch", dec(c.j_mismatch, P), sci(qb.to_double()));
    r.exact["evaluations"] = c.evaluations;
    r.check("residual", c.residual_abs < Real(1e-6, P), "|residual| = " + sci(c.residual_abs.to_double()));
}

void cmd_torsion(RunRecord &r)
{
    coh::H0Result h0 = coh::h0_coinvariants();
    coh::H1Result h1 = coh::h1_parabolic();
    coh::TorsionConstants t = coh::torsion_constants();
    r.exact["H0_invariant_factors"] = h0.invariant_factors;
    r.exact["H0_generator"] = h0.generator.str();
    json lv = json::array();
    for (const auto &l : h1.levels) lv.push_back({{"L", l[0]}, {"cocycles", l[1]}, {"coboundaries", l[2]}});
    r.exact["H1_levels"] = lv;
    r.exact["NA"] = t.NA;
    r.exact["NB"] = t.NB;
    r.exact["N"] = t.N;
    r.check("NA = 1", t.NA == 1);
    r.check("NB = 2", t.NB == 2);
    r.check("N = 2", t.N == 2);
}

// ---------------------------------------------------------------- output

std::string flat(const json &v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void print_table(const std::string &command, const RunRecord &r, double seconds, bool timing)
{
    std::cout << command << "\n" << std::left;
    for (const auto &[k, v] : r.inputs.items()) std::cout << "  input    " << std::left << std::setw(24) << k << ' ' << flat(v) << "\n";
    for (const auto &[k, v] : r.exact.items()) {
        if (k == "coefficients") {
            for (const auto &c : v)
                std::cout << "  coef     " << std::setw(24) << (flat(c["series"]) + (flat(c["series"]).find("(t)") != std::string::npos ? " t^" : " z^") + flat(c["power"]))
                          << std::setw(10) << flat(c["status"]) << flat(c["got"]) << "\n";
            continue;
        }
        std::cout << "  exact    " << std::setw(24) << k << ' ' << flat(v) << "\n";
    }
    for (const auto &[k, v] : r.numeric.items())
        std::cout << "  numeric  " << std::setw(24) << k << ' ' << flat(v["value"]) << "  (+- " << flat(v["error_bound"]) << ")\n";
    for (const auto &c : r.checks)
        std::cout << "  check    " << std::setw(24) << flat(c["name"]) << ' ' << (c["pass"].get<bool>() ? "PASS" : "FAIL")
                  << (c.contains("detail") ? "  " + flat(c["detail"]) : "") << "\n";
    std::cout << "  status   " << (r.pass ? "PASS" : "FAIL");
    if (timing) std::cout << "  (" << std::fixed << std::setprecision(2) << seconds << " s)";
    std::cout << "\n";
}

json envelope(const std::string &command, long prec)
{
    return json{{"schema_version", kSchemaVersion}, {"command", command}, {"precision_bits", prec}};
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Verification runs for exact series, higher-cycle intersections and Green function values"};
    app.require_subcommand(1);
    Options o;
    try {
        o.prec = default_prec();
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    app.add_flag("--json", o.json, "emit one JSON record instead of the table");
    app.add_flag("--timing", o.timing, "report wall time (makes output run-dependent)");

    int order = ws::kDefaultOrder;
    std::string corrupt;
    auto *sv = app.add_subcommand("series-verify", "check the reference series coefficients");
    sv->add_option("--order", order, "truncation order N")->check(CLI::Range(1, 200));
    sv->add_option("--corrupt", corrupt, "test fixture: perturb SERIES:POWER")->group("");

    auto *ps = app.add_subcommand("psi", "Psi1 on theta^0..2 and the evaluation on B");
    ps->add_option("--order", order, "truncation order N")->check(CLI::Range(8, 200));

    std::string curve, endo, builtin;
    auto *is = app.add_subcommand("intersect", "intersections of the higher cycle with curves on E x E");
    is->add_option("--curve", curve, "a,b of y^2 = x^3 + a x + b");
    auto *endo_opt = is->add_option("--endo", endo, "endomorphism file");
    is->add_option("--builtin", builtin, "shipped endomorphism (tau7)")->excludes(endo_opt);

    std::string z1 = "tau7", z2 = "i", method = "poincare", path = "auto";
    double bound = 1e5;
    auto *gr = app.add_subcommand("green", "global Green function G_2(z1, z2)");
    gr->add_option("--z1", z1, "point: x,y | i | rho | tau7 | cm:A,B,C");
    gr->add_option("--z2", z2, "point, as --z1");
    gr->add_option("--method", method)->check(CLI::IsMember({"poincare", "eichler", "both"}));
    gr->add_option("--bound", bound, "cutoff T on cosh of the hyperbolic distance (tail ~ 4/T)");
    gr->add_option("--path", path, "Eichler integration path")->check(CLI::IsMember({"auto", "straight", "upoverdown"}));

    long disc = -7;
    std::string form;
    auto *cj = app.add_subcommand("conjecture", "compare G-hat at a CM point with the higher-cycle value");
    cj->add_option("--disc", disc, "discriminant D < 0");
    cj->add_option("--endo", endo, "endomorphism file (required unless D = -7)");
    cj->add_option("--form", form, "A,B,C of the CM point (default: principal form)");

    auto *ts = app.add_subcommand("torsion", "torsion constants of V2 cohomology");

    for (auto *sub : {gr, cj}) sub->add_option("--prec", o.prec, "working precision in bits")->check(CLI::Range(32L, 1L << 20));
    for (auto *sub : {sv, ps, is, gr, cj, ts}) {
        sub->add_flag("--json", o.json, "emit one JSON record instead of the table");
        sub->add_flag("--timing", o.timing, "report wall time");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    RunRecord r;
    auto t0 = std::chrono::steady_clock::now();
    std::optional<Error> failure;
    try {
        if (command == "series-verify") cmd_series_verify(r, order, corrupt);
        else if (command == "psi") cmd_psi(r, order);
        else if (command == "intersect") cmd_intersect(r, curve, endo, builtin);
        else if (command == "green") cmd_green(r, z1, z2, method, o.prec, bound, path);
        else if (command == "conjecture") cmd_conjecture(r, disc, o.prec, endo, form);
        else if (command == "torsion") cmd_torsion(r);
    } catch (const Error &e) {
        failure = e;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (failure) {
        if (o.json) {
            json j = envelope(command, o.prec);
            j["inputs"] = r.inputs;
            j["status"] = "error";
            j["error"] = json{{"kind", failure->kind()}, {"message", failure->what()}};
            std::cout << j.dump(2) << "\n";
        }
        std::cerr << "cmgreen " << command << ": " << failure->what() << "\n";
        return 2;
    }

    if (o.json) {
        json j = envelope(command, o.prec);
        j["inputs"] = r.inputs;
        j["exact"] = r.exact;
        j["numeric"] = r.numeric;
        j["checks"] = r.checks;
        j["status"] = r.pass ? "pass" : "fail";
        if (o.timing) j["wall_time_s"] = sci(seconds);
        std::cout << j.dump(2) << "\n";
    } else {
        print_table(command, r, seconds, o.timing);
    }
    if (!r.pass)
        for (const auto &c : r.checks)
            if (!c["pass"].get<bool>()) {
                std::cerr << "cmgreen " << command << ": check " << flat(c["name"]) << " failed"
                          << (c.contains("detail") ? ": " + flat(c["detail"]) : "") << "\n";
                break;
            }
    return r.pass ? 0 : 1;
}
