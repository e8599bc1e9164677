#ifndef CMG_GREEN_CONJECTURE_HPP
#define CMG_GREEN_CONJECTURE_HPP

#include <string>

#include "cmg/cycles/intersect.hpp"
#include "cmg/green/eichler.hpp"

namespace cmg::green
{

// Endomorphism data shipped with the library, by name ("tau7").
cyc::Endomorphism builtin_endo(const std::string &name);
// The reduced CM point of discriminant D for which builtin data exists.
// Throws DecompositionMissing for other discriminants.
CMPoint builtin_point(long D);

struct ConjectureReport {
    CMPoint point;
    std::string cycle;        // Z_z as a combination of curves
    BiField intersection;     // exact value of the higher cycle on Z_z
    Complex ghat;             // G-hat_2(z, i)
    Complex lhs;              // sqrt(-4D) G-hat
    Complex rhs;              // 2 log(intersection)
    Complex residual;         // lhs - rhs reduced modulo pi i
    Real residual_abs;
    Real j_mismatch;          // |j(z) - j(curve)|
    long evaluations = 0;
};

// Throws DecompositionMissing when the endomorphism file cannot be read and
// DomainError when the file describes a different curve.
ConjectureReport conjecture_check(const CMPoint &z, const cyc::Endomorphism &e, mpfr_prec_t P,
                                  const PathOptions &opt = {});
ConjectureReport conjecture_check(const CMPoint &z, const std::string &endo_file, mpfr_prec_t P,
                                  const PathOptions &opt = {});

// Multiprecision value of an element of Q(mu, i).
Complex to_complex(const BiField &x, mpfr_prec_t P);

} // namespace cmg::green

#endif
