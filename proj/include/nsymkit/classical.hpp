#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "nsymkit/composition.hpp"
#include "nsymkit/element.hpp"

namespace nsymkit {

/// A weakly decreasing list of positive integers.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept;
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// Part i (0-based), 0 past the end.
    int part(int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    bool contains(const Partition& inner) const noexcept;
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

using PartitionCoefficients = std::map<Partition, Integer>;

/// All partitions of n, in lexicographic order of their part lists.
std::vector<Partition> partitions_of(int n);

/// Sort the parts of alpha into weakly decreasing order.
Partition sort_to_partition(const Composition& alpha);

/// True iff outer/inner is nonempty, edge-connected and free of 2x2 blocks.
/// Throws DomainError unless inner is contained in outer.
bool is_border_strip(const Partition& outer, const Partition& inner);

/// Rows occupied minus one. Throws DomainError if outer/inner is not a border strip.
int strip_height(const Partition& outer, const Partition& inner);

/// Coefficients of p_k * s_lambda in the Schur basis.
PartitionCoefficients classical_mn(int k, const Partition& lambda);

/// The forgetful image of an S-basis element: s_alpha -> s_{sorted alpha}.
/// Zero sums are dropped.
PartitionCoefficients chi_project(const Element& e);

/// chi(Psi_n * s_alpha) computed by mn_rule agrees with p_n * s_{sorted alpha}.
bool chi_consistency(int n, const Composition& alpha);

}  // namespace nsymkit
