#include "cmg/exact/tower.hpp"

#include "cmg/errors.hpp"

namespace cmg
{

void TowerElem::check(const TowerElem &o) const
{
    if (!(m_ == o.m_)) throw FieldMismatch("tower elements over different minimal polynomials");
}

TowerElem &TowerElem::operator+=(const TowerElem &o)
{
    check(o);
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
}

TowerElem &TowerElem::operator-=(const TowerElem &o)
{
    check(o);
    lo_ -= o.lo_;
    hi_ -= o.hi_;
    return *this;
}

TowerElem &TowerElem::operator*=(const TowerElem &o)
{
    check(o);
    // t^2 = -p t - q
    BiField hh = hi_ * o.hi_;
    BiField nlo = lo_ * o.lo_ - hh * m_.q;
    BiField nhi = lo_ * o.hi_ + hi_ * o.lo_ - hh * m_.p;
    lo_ = std::move(nlo);
    hi_ = std::move(nhi);
    return *this;
}

TowerElem &TowerElem::operator*=(const BiField &c)
{
    lo_ *= c;
    hi_ *= c;
    return *this;
}

TowerElem TowerElem::conj() const { return TowerElem(lo_ - hi_ * m_.p, -hi_, m_); }

BiField TowerElem::norm() const { return lo_ * lo_ - lo_ * hi_ * m_.p + hi_ * hi_ * m_.q; }

TowerElem TowerElem::inverse() const
{
    BiField n = norm();
    if (n.is_zero()) throw DivisionByZero("tower element with zero norm");
    TowerElem c = conj();
    return c * n.inverse();
}

} // namespace cmg
