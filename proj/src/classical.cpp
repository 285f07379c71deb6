#include "nsymkit/classical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "nsymkit/errors.hpp"
#include "nsymkit/nsym.hpp"

namespace nsymkit {

namespace {

void check_partition(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw DomainError("partition parts must be positive");
        if (i && parts[i] > parts[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { check_partition(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { check_partition(parts_); }

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.part(i) > part(i)) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = 1; p <= std::min(remaining, cap); ++p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

Partition sort_to_partition(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool is_border_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) throw DomainError("is_border_strip: inner not contained in outer");
    std::set<std::pair<int, int>> cells;  // (row, column), 0-based
    for (int r = 0; r < outer.length(); ++r) {
        for (int c = inner.part(r); c < outer.part(r); ++c) cells.emplace(r, c);
    }
    if (cells.empty()) return false;
    for (const auto& [r, c] : cells) {
        if (cells.contains({r + 1, c}) && cells.contains({r, c + 1}) && cells.contains({r + 1, c + 1})) {
            return false;
        }
    }
    std::set<std::pair<int, int>> reached{*cells.begin()};
    std::vector<std::pair<int, int>> stack{*cells.begin()};
    while (!stack.empty()) {
        const auto [r, c] = stack.back();
        stack.pop_back();
        for (const auto& nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}}) {
            if (cells.contains(nb) && reached.insert(nb).second) stack.push_back(nb);
        }
    }
    return reached.size() == cells.size();
}

int strip_height(const Partition& outer, const Partition& inner) {
    if (!is_border_strip(outer, inner)) throw DomainError("strip_height: not a border strip");
    int rows = 0;
    for (int r = 0; r < outer.length(); ++r) {
        if (outer.part(r) > inner.part(r)) ++rows;
    }
    return rows - 1;
}

PartitionCoefficients classical_mn(int k, const Partition& lambda) {
    if (k < 1) throw DomainError("classical_mn: k must be >= 1");
    PartitionCoefficients out;
    for (const auto& mu : partitions_of(lambda.size() + k)) {
        if (!mu.contains(lambda) || !is_border_strip(mu, lambda)) continue;
        out.emplace(mu, strip_height(mu, lambda) % 2 == 0 ? 1 : -1);
    }
    return out;
}

PartitionCoefficients chi_project(const Element& e) {
    if (e.basis() != Basis::S) throw BasisError("chi_project expects an S-basis element");
    PartitionCoefficients out;
    for (const auto& [alpha, c] : e.terms()) out[sort_to_partition(alpha)] += c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool chi_consistency(int n, const Composition& alpha) {
    return chi_project(mn_rule(n, alpha)) == classical_mn(n, sort_to_partition(alpha));
}

}  // namespace nsymkit
