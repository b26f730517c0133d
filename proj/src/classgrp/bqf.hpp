#ifndef CT2_CLASSGRP_BQF_HPP
#define CT2_CLASSGRP_BQF_HPP

#include <string>
#include <vector>

#include "base/abgroup.hpp"
#include "base/ints.hpp"
#include "classgrp/ideal.hpp"

namespace ct2 {

// Primitive integral binary quadratic form a x^2 + b xy + c y^2 of fundamental
// discriminant D = b^2 - 4ac. For D < 0 only positive definite forms (a > 0).
struct QForm {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    std::string key() const { return a.get_str() + "," + b.get_str() + "," + c.get_str(); }
    bool operator<(const QForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
    bool operator==(const QForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

// The form class group of fundamental discriminant D (narrow group when
// D > 0); composition via oriented module multiplication in the order of
// discriminant D -- independent of the relation machinery.
class FormClassGroup {
  public:
    explicit FormClassGroup(const Int& D);

    const Int& disc() const { return D_; }
    QForm principal() const;
    // canonical class label of an arbitrary form of discriminant D
    QForm canonical(const QForm& f) const;
    QForm compose(const QForm& f, const QForm& g) const;
    QForm inverse(const QForm& f) const;

    // all classes, as canonical labels, sorted
    const std::vector<QForm>& classes() const { return classes_; }
    Int class_number() const { return Int(static_cast<long>(classes_.size())); }
    const AbGroupStructure& structure() const { return structure_; }
    Int h2() const { return structure_.torsion_count(Int(2)); }

  private:
    Int D_;
    std::vector<QForm> classes_;
    AbGroupStructure structure_;
    std::map<std::string, QForm> cycle_canon_; // reduced form -> cycle representative (D > 0)

    QForm reduce_neg(QForm f) const;
    QForm rho(const QForm& f) const; // D > 0 reduction step
    bool is_reduced_pos(const QForm& f) const;
};

// The form class of a fractional ideal of the (quadratic) field, using a
// positively oriented Z-basis. K must be quadratic with disc(K) = D.
QForm form_of_ideal(const NumberField& K, const FracIdeal& I);

// Wide (ordinary) class data derived from the narrow form group by killing
// the class of (sqrt(D)) when D > 0.
struct QuadraticClassData {
    Int h_narrow;
    std::vector<Int> narrow_divisors;
    Int h_wide;
    std::vector<Int> wide_divisors;
    Int h2_narrow; // = 2^(omega(D)-1) by genus theory
    Int h2_wide;
};
QuadraticClassData quadratic_class_data(const NumberField& K);

} // namespace ct2

#endif
