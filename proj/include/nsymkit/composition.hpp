#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace nsymkit {

/// A finite ordered list of positive integers. The empty composition is a
/// valid value. Diagrams use English coordinates: row 1 on top, column 1 on
/// the left, box (i, j) present iff j <= part i.
///
/// The defaulted ordering is lexicographic on the part lists and serves as the
/// canonical total order wherever one is needed (term order, matrix indices).
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Sum of the parts.
    int size() const noexcept;
    /// Number of parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// Largest part, 0 for the empty composition.
    int max_part() const noexcept;

    /// "(2,1,3)"; the empty composition prints as "()".
    std::string to_string() const;

    auto operator<=>(const Composition&) const = default;
    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// Partial sums excluding the total: {a1, a1+a2, ..., a1+...+a_{k-1}}.
std::set<int> set_of(const Composition& alpha);

/// Inverse of set_of. Throws DomainError if an element lies outside [1, n-1].
Composition comp_of(const std::set<int>& s, int n);

/// True iff `coarse` is obtained from `fine` by adding adjacent parts.
bool is_coarsening(const Composition& coarse, const Composition& fine);

/// All 2^(n-1) compositions of n in canonical order ([()] for n = 0).
std::vector<Composition> compositions_of(int n);

/// Every coarsening of `fine`, in canonical order.
std::vector<Composition> coarsenings_of(const Composition& fine);

/// Parses "2,1,3"; "empty" (or an empty string) is the empty composition.
/// Throws DomainError on anything else.
Composition parse_composition(const std::string& text);

}  // namespace nsymkit
