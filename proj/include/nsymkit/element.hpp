#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "nsymkit/composition.hpp"

namespace nsymkit {

using Integer = boost::multiprecision::cpp_int;

/// Bases of NSym: complete homogeneous (H), ribbon (R), noncommutative Schur
/// (S) and power sums of the first kind (PSI, input only).
enum class Basis { H, R, S, PSI };

std::string_view basis_name(Basis b);
/// Accepts "H", "R", "S", "PSI" (case-insensitive). Throws BasisError otherwise.
Basis parse_basis(std::string_view name);

/// A formal integer combination of compositions in one basis. Zero
/// coefficients are never stored; terms iterate in canonical order.
class Element {
public:
    using Terms = std::map<Composition, Integer>;

    explicit Element(Basis basis) : basis_(basis) {}
    Element(Basis basis, Terms terms);

    static Element monomial(Basis basis, const Composition& alpha, const Integer& coeff = 1);
    /// The multiplicative unit, indexed by the empty composition.
    static Element unit(Basis basis) { return monomial(basis, Composition{}); }

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coeff(const Composition& alpha) const;

    void add(const Composition& alpha, const Integer& coeff);

    std::set<int> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }
    /// The terms of one degree.
    Element component(int degree) const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Integer& scalar);
    Element operator-() const;
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Integer& s, Element a) { return a *= s; }

    bool operator==(const Element&) const = default;

    /// Human-readable sum such as "s_(2,1) - 3 s_(1,2)"; "0" when empty.
    std::string to_string() const;

private:
    void require_same_basis(const Element& other) const;

    Basis basis_;
    Terms terms_;
};

}  // namespace nsymkit
