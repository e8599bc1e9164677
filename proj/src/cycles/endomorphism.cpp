#include "cmg/cycles/endomorphism.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cmg/errors.hpp"

namespace cmg::cyc
{

Rational CurveParams::discriminant() const { return Rational(-16) * (Rational(4) * a * a * a + Rational(27) * b * b); }

void CurveParams::require_valid() const
{
    if (discriminant().is_zero()) throw DegenerateCurve("discriminant vanishes");
    if (b.is_zero()) throw DegenerateCurve("b = 0 is excluded by the cycle construction");
}

PolyK CurveParams::cubic() const { return PolyK(std::vector<BiField>{BiField(b), BiField(a), BiField(0), BiField(1)}); }

Rational j_invariant(const CurveParams &p)
{
    Rational d = p.discriminant();
    if (d.is_zero()) throw DegenerateCurve("discriminant vanishes");
    return Rational(-4096 * 27) * p.a * p.a * p.a / d;
}

Endomorphism identity_endo(const CurveParams &p)
{
    Endomorphism e;
    e.name = "identity";
    e.curve = p;
    e.tangent = BiField(1);
    e.degree = 1;
    e.triple = {1, 1, 0};
    e.x_num = PolyK::x();
    e.x_den = PolyK(BiField(1));
    e.y_num = PolyK(BiField(1));
    e.y_den = PolyK(BiField(1));
    e.validated = true;
    return e;
}

Endomorphism negation_endo(const CurveParams &p)
{
    Endomorphism e = identity_endo(p);
    e.name = "negation";
    e.tangent = BiField(-1);
    e.triple = {1, 1, 4};
    e.y_num = PolyK(BiField(-1));
    return e;
}

Rational norm_q_mu(const BiField &x)
{
    if (!x.in_q_mu()) throw FieldMismatch("norm_q_mu of an element with an i-component");
    BiField n = x * x.conj_mu();
    return n[0];
}

namespace
{

PolyK parse_poly(std::istringstream &ss)
{
    std::vector<BiField> c;
    std::string tok;
    while (ss >> tok) c.push_back(BiField::parse(tok));
    if (c.empty()) throw ParseError("empty polynomial");
    return PolyK(c);
}

} // namespace

Endomorphism parse_endo(std::istream &in, const std::string &name)
{
    Endomorphism e;
    e.name = name;
    std::map<std::string, bool> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string key;
        if (!(ss >> key)) continue;
        try {
            if (key == "cm_minpoly") {
                long c0, c1, c2;
                if (!(ss >> c0 >> c1 >> c2)) throw ParseError("expected three integers");
                if (c0 != 2 || c1 != 1 || c2 != 1)
                    throw FieldMismatch("only the field Q(mu), mu^2 + mu + 2 = 0, is supported");
            } else if (key == "curve") {
                std::string sa, sb;
                if (!(ss >> sa >> sb)) throw ParseError("expected a and b");
                e.curve = CurveParams{Rational::parse(sa), Rational::parse(sb)};
            } else if (key == "tangent") {
                std::string t;
                if (!(ss >> t)) throw ParseError("expected a field element");
                e.tangent = BiField::parse(t);
            } else if (key == "degree") {
                if (!(ss >> e.degree)) throw ParseError("expected an integer");
            } else if (key == "triple") {
                if (!(ss >> e.triple[0] >> e.triple[1] >> e.triple[2])) throw ParseError("expected three integers");
            } else if (key == "x_num") {
                e.x_num = parse_poly(ss);
            } else if (key == "x_den") {
                e.x_den = parse_poly(ss);
            } else if (key == "y_num") {
                e.y_num = parse_poly(ss);
            } else if (key == "y_den") {
                e.y_den = parse_poly(ss);
            } else {
                throw ParseError("unknown key '" + key + "'");
            }
        } catch (const Error &err) {
            throw ParseError("line " + std::to_string(lineno) + ": " + err.what());
        }
        seen[key] = true;
    }
    for (const char *k : {"curve", "tangent", "degree", "triple", "x_num", "x_den", "y_num", "y_den"})
        if (!seen[k]) throw ParseError(std::string("missing record '") + k + "'");
    return e;
}

Endomorphism load_endo(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    auto slash = path.find_last_of('/');
    std::string base = path.substr(slash == std::string::npos ? 0 : slash + 1);
    return parse_endo(in, base.substr(0, base.find('.')));
}

EndoCheck check_endo(const Endomorphism &e)
{
    EndoCheck r;
    const PolyK &N = e.x_num, &D = e.x_den, &NY = e.y_num, &DY = e.y_den;
    if (D.is_zero() || DY.is_zero()) {
        r.detail = "zero denominator";
        return r;
    }
    BiField a(e.curve.a), b(e.curve.b);
    // c(x) NY^2 D^3 == (N^3 + a N D^2 + b D^3) DY^2
    PolyK D2 = D * D, D3 = D2 * D;
    PolyK lhs = e.curve.cubic() * NY * NY * D3;
    PolyK rhs = (N * N * N + N * D2 * a + D3 * b) * DY * DY;
    r.curve_equation = lhs == rhs;
    if (!r.curve_equation) r.detail += "curve equation not preserved; ";

    if (e.tangent.is_zero()) {
        r.detail += "zero tangent; ";
    } else {
        BiField ti = e.tangent.inverse();
        bool xs = N.degree() == D.degree() + 1 && N.lead() / D.lead() == ti * ti;
        bool ys = NY.degree() == DY.degree() && NY.lead() / DY.lead() == ti * ti * ti;
        r.tangent = xs && ys;
        if (!r.tangent) r.detail += "tangent does not match the expansion at infinity; ";
    }

    if (e.tangent.in_q_mu()) {
        Rational nt = norm_q_mu(e.tangent);
        long dx = std::max(N.degree(), D.degree());
        r.degree = nt == Rational(e.degree) && dx == e.degree;
        Rational n1 = norm_q_mu(e.tangent - BiField(1));
        r.triple = e.triple[0] == 1 && e.triple[1] == e.degree && Rational(e.triple[2]) == n1;
    }
    if (!r.degree) r.detail += "degree differs from the norm of the tangent; ";
    if (!r.triple) r.detail += "intersection triple inconsistent; ";
    return r;
}

void validate(Endomorphism &e)
{
    e.curve.require_valid();
    EndoCheck c = check_endo(e);
    if (!c.ok()) throw UnvalidatedEndo(e.name + ": " + c.detail);
    e.validated = true;
}

} // namespace cmg::cyc
