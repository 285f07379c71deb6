#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsymkit/box_ops.hpp"
#include "nsymkit/composition.hpp"
#include "nsymkit/skew_shape.hpp"

namespace nsymkit {

/// An assignment of positive integers to the boxes of a skew shape.
class Filling {
public:
    Filling() = default;
    /// Throws DomainError unless `entries` covers exactly the shape's boxes
    /// with positive values.
    Filling(SkewShape shape, std::map<Cell, int> entries);

    const SkewShape& shape() const noexcept { return shape_; }
    const std::map<Cell, int>& entries() const noexcept { return entries_; }
    int at(const Cell& c) const { return entries_.at(c); }
    int size() const noexcept { return static_cast<int>(entries_.size()); }

    /// Row-major picture; inner boxes print as '.'.
    std::string render() const;

    bool operator==(const Filling&) const = default;

private:
    SkewShape shape_;
    std::map<Cell, int> entries_;
};

/// Standard reverse composition tableau test: entries are a permutation of
/// [n], rows weakly decrease, column 1 strictly increases downward, and no
/// triple rule violation occurs.
bool is_srct(const Filling& f);

/// comp_of(Des(f), n), where i is a descent iff i+1 sits weakly right of i.
/// Throws DomainError on non-SRCT input.
Composition descent_composition(const Filling& f);

/// The SRCT of shape w(alpha) // alpha that places n-s+1 in the s-th added box.
std::optional<Filling> srct_from_word(const Word& w, const Composition& alpha);

/// Inverse of srct_from_word. Throws DomainError on non-SRCT input.
Word word_from_srct(const Filling& f);

using FillingVisitor = std::function<void(const Filling&)>;

/// Every SRCT of straight shape alpha, once each, via maximal chains from ().
void for_each_srct(const Composition& alpha, const FillingVisitor& visit);
std::vector<Filling> enumerate_srct(const Composition& alpha);

/// Number of SRCTs of shape alpha with descent composition beta.
std::int64_t d_coeff(const Composition& alpha, const Composition& beta);

/// d_{alpha,beta} for all compositions of one degree, rows alpha and columns
/// beta indexed by compositions_of(degree).
struct DMatrix {
    int degree = 0;
    std::vector<Composition> index;
    /// rows[a] holds (b, d_{index[a], index[b]}) for nonzero entries, b ascending.
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows;
    /// columns[b] holds (a, d_{index[a], index[b]}), a ascending.
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

    std::size_t dimension() const noexcept { return index.size(); }
    std::size_t position(const Composition& c) const;
    std::int64_t at(std::size_t a, std::size_t b) const;
};

DMatrix d_matrix(int degree);

/// The filling of an nc border strip built column by column: the east
/// columns receive the largest entries at their joining box, the rest are
/// filled right to left (top to bottom, bottom to top in column 1). Throws
/// DomainError unless `s` is an nc border strip.
Filling canonical_strip_filling(const SkewShape& s);

}  // namespace nsymkit
