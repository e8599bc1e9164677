#include "cmg/green/conjecture.hpp"

#include <fstream>
#include <sstream>

#include "cmg/errors.hpp"

namespace cmg::green
{

namespace
{

const char *kTau7 = R"(cm_minpoly 2 1 1
curve -35 -98
tangent 0,1,0,0
degree 2
triple 1 2 4
x_num 7,21,0,0 4,1,0,0 1
x_den -6,-5,0,0 -2,-1,0,0
y_num 7,-14,0,0 8,2,0,0 1
y_den 42,7,0,0 20,-2,0,0 2,-1,0,0
)";

} // namespace

cyc::Endomorphism builtin_endo(const std::string &name)
{
    if (name != "tau7") throw DecompositionMissing("no builtin endomorphism named '" + name + "'");
    std::istringstream in(kTau7);
    cyc::Endomorphism e = cyc::parse_endo(in, name);
    cyc::validate(e);
    return e;
}

CMPoint builtin_point(long D)
{
    if (D == -7) return CMPoint::make(1, 1, 2);
    throw DecompositionMissing("no endomorphism data for discriminant " + std::to_string(D) +
                               "; pass an endomorphism file");
}

Complex to_complex(const BiField &x, mpfr_prec_t P)
{
    Complex mu(Real(-0.5, P), sqrt(Real(7L, P)) / 2L);
    Complex i = Complex::i(P);
    auto R = [&](int k) { return Complex(Real(x[k], P)); };
    return R(0) + R(1) * mu + i * (R(2) + R(3) * mu);
}

ConjectureReport conjecture_check(const CMPoint &z, const cyc::Endomorphism &e, mpfr_prec_t P, const PathOptions &opt)
{
    mpfr_prec_t W = P + 32;
    // the endomorphism must belong to the curve with CM by the order of z
    Complex jz = num::j_invariant(z.tau(W), W);
    Complex je(Real(cyc::j_invariant(e.curve), W));
    Real mismatch = abs(jz - je);
    if (mismatch > Real::pow2(-static_cast<long>(P) / 2, W) * max(abs(je), Real::one(W)))
        throw DomainError("endomorphism file describes a curve with j = " + cyc::j_invariant(e.curve).str());

    cyc::AlgCycle cyc_z = cyc::z_tau_cycle(e);
    BiField val = cyc::intersect_cycle(cyc_z, e.curve);
    EichlerResult lift = eichler_lift(z, P, opt);

    Real pi = Real::pi(W);
    Complex lhs = lift.value * sqrt(Real(-4 * z.disc(), W));
    Complex rhs = log(to_complex(val, W)) * 2L;
    Complex res = reduce_mod_i(lhs - rhs, pi);
    return {z, cyc_z.str(), val, lift.value, lhs, rhs, res, abs(res), mismatch, lift.evaluations};
}

ConjectureReport conjecture_check(const CMPoint &z, const std::string &endo_file, mpfr_prec_t P, const PathOptions &opt)
{
    std::ifstream in(endo_file);
    if (!in) throw DecompositionMissing("cannot read endomorphism file '" + endo_file + "'");
    cyc::Endomorphism e = cyc::load_endo(endo_file);
    cyc::validate(e);
    return conjecture_check(z, e, P, opt);
}

} // namespace cmg::green
