#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nsymkit/box_ops.hpp"
#include "nsymkit/composition.hpp"

namespace nsymkit {

/// A skew reverse composition shape outer // inner: the boxes of the outer
/// diagram not covered by the inner one, in outer coordinates.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Composition outer, Composition inner, std::set<Cell> boxes);

    const Composition& outer() const noexcept { return outer_; }
    const Composition& inner() const noexcept { return inner_; }
    const std::set<Cell>& boxes() const noexcept { return boxes_; }
    int size() const noexcept { return static_cast<int>(boxes_.size()); }

    bool contains(const Cell& c) const { return boxes_.contains(c); }
    /// True iff (row, col) lies in the outer diagram but is not a skew box.
    bool is_inner_cell(const Cell& c) const;
    /// True iff (row, col) lies in the outer diagram.
    bool in_outer(const Cell& c) const;

    /// English-convention picture: '#' skew box, '.' inner box, one line per row.
    std::string render() const;

    bool operator==(const SkewShape&) const = default;

private:
    Composition outer_;
    Composition inner_;
    std::set<Cell> boxes_;
};

/// Parts of `small` bottom-aligned against `big` never exceed big's parts.
/// Every cover prepends a row or grows an existing one, so this is necessary
/// for small <=_c big.
bool fits_under(const Composition& small, const Composition& big);

/// A word carrying `lower` to `upper` through covers, if one exists.
std::optional<Word> find_chain(const Composition& lower, const Composition& upper);

/// lower <_c upper in the reverse composition poset (strict).
bool less_c(const Composition& lower, const Composition& upper);

/// The skew shape outer // inner. Throws OrderError unless inner <_c outer or
/// inner == outer.
SkewShape skew(const Composition& outer, const Composition& inner);

struct ShapeStats {
    std::set<int> supp;
    bool is_interval = false;
    bool is_horizontal_strip = false;
    bool is_vertical_strip = false;
    bool is_nc_border_strip = false;
    /// Column relations; present only for interval shapes.
    std::optional<std::set<int>> east;
    std::optional<std::set<int>> south_east;
    std::optional<std::set<int>> north_east;
    /// Occupied rows minus one; present only for nc border strips.
    std::optional<int> height;
};

ShapeStats classify(const SkewShape& s);

using ShapeList = std::vector<std::pair<Composition, SkewShape>>;

/// Every beta reachable from alpha by n box additions, with beta // alpha, in
/// canonical order of beta. Throws ConsistencyError if two chains to the same
/// beta disagree on the box set.
ShapeList enumerate_outers(const Composition& alpha, int n);

/// The outers whose skew shape is an nc border strip of size n (n >= 1).
ShapeList enumerate_B(const Composition& alpha, int n);

/// The nc border strips of enumerate_B with empty north-east set (n >= 1).
ShapeList enumerate_P(const Composition& alpha, int n);

}  // namespace nsymkit
