#include "nsymkit/element.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nsymkit/errors.hpp"

namespace nsymkit {

std::string_view basis_name(Basis b) {
    switch (b) {
        case Basis::H: return "H";
        case Basis::R: return "R";
        case Basis::S: return "S";
        case Basis::PSI: return "PSI";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "H") return Basis::H;
    if (upper == "R") return Basis::R;
    if (upper == "S") return Basis::S;
    if (upper == "PSI") return Basis::PSI;
    throw BasisError("unknown basis '" + std::string(name) + "'");
}

Element::Element(Basis basis, Terms terms) : basis_(basis), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Element Element::monomial(Basis basis, const Composition& alpha, const Integer& coeff) {
    Element e(basis);
    e.add(alpha, coeff);
    return e;
}

Integer Element::coeff(const Composition& alpha) const {
    const auto it = terms_.find(alpha);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Element::add(const Composition& alpha, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::set<int> Element::degrees() const {
    std::set<int> out;
    for (const auto& [alpha, c] : terms_) out.insert(alpha.size());
    return out;
}

Element Element::component(int degree) const {
    Element out(basis_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha.size() == degree) out.terms_.emplace(alpha, c);
    }
    return out;
}

void Element::require_same_basis(const Element& other) const {
    if (basis_ != other.basis_) {
        throw BasisError("cannot combine elements in bases " + std::string(basis_name(basis_)) + " and " +
                         std::string(basis_name(other.basis_)));
    }
}

Element& Element::operator+=(const Element& other) {
    require_same_basis(other);
    for (const auto& [alpha, c] : other.terms_) add(alpha, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    require_same_basis(other);
    for (const auto& [alpha, c] : other.terms_) add(alpha, -c);
    return *this;
}

Element& Element::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_) c *= scalar;
    return *this;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [alpha, c] : out.terms_) c = -c;
    return out;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string_view prefix = "s_";
    switch (basis_) {
        case Basis::H: prefix = "h_"; break;
        case Basis::R: prefix = "R_"; break;
        case Basis::S: prefix = "s_"; break;
        case Basis::PSI: prefix = "Psi_"; break;
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        if (magnitude != 1) out << magnitude << ' ';
        out << prefix << alpha.to_string();
        first = false;
    }
    return out.str();
}

}  // namespace nsymkit
