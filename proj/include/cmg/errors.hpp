#ifndef CMG_ERRORS_HPP
#define CMG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmg
{

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can separate input problems from verification failures.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string &what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind))
    {
    }
    const std::string &kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define CMG_DEFINE_ERROR(Name)                                                                     \
    class Name : public Error                                                                      \
    {                                                                                              \
    public:                                                                                        \
        explicit Name(const std::string &what) : Error(#Name, what) {}                            \
    };

// exact-algebra
CMG_DEFINE_ERROR(NonInvertibleLead)
CMG_DEFINE_ERROR(OddOrderSqrt)
CMG_DEFINE_ERROR(CompositionOrderViolation)
CMG_DEFINE_ERROR(TruncationExhausted)
CMG_DEFINE_ERROR(DivisionByZero)
CMG_DEFINE_ERROR(FieldMismatch)
CMG_DEFINE_ERROR(ParseError)

// weierstrass / hypercover
CMG_DEFINE_ERROR(UnknownWeight)
CMG_DEFINE_ERROR(DivisionByZeroSeries)

// cycles
CMG_DEFINE_ERROR(DegenerateCurve)
CMG_DEFINE_ERROR(NonProperIntersection)
CMG_DEFINE_ERROR(UnvalidatedEndo)
CMG_DEFINE_ERROR(SingularSystem)

// numerics
CMG_DEFINE_ERROR(PrecisionUnreachable)
CMG_DEFINE_ERROR(PoleAtI)
CMG_DEFINE_ERROR(DomainError)
CMG_DEFINE_ERROR(NonConvergent)
CMG_DEFINE_ERROR(CoincidentPoints)
CMG_DEFINE_ERROR(OrbitCollision)
CMG_DEFINE_ERROR(PathTooClosePole)
CMG_DEFINE_ERROR(DecompositionMissing)
CMG_DEFINE_ERROR(NotInBoundaryLattice)

#undef CMG_DEFINE_ERROR

} // namespace cmg

#endif
