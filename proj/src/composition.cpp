#include "nsymkit/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "nsymkit/errors.hpp"

namespace nsymkit {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (int p : parts) {
        if (p < 1) {
            throw DomainError("composition parts must be positive, got " + std::to_string(p));
        }
    }
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : parts_(parts) { check_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) { check_parts(parts_); }

int Composition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Composition::max_part() const noexcept {
    int m = 0;
    for (int p : parts_) m = std::max(m, p);
    return m;
}

std::string Composition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

std::set<int> set_of(const Composition& alpha) {
    std::set<int> result;
    int partial = 0;
    for (int i = 0; i + 1 < alpha.length(); ++i) {
        partial += alpha[i];
        result.insert(partial);
    }
    return result;
}

Composition comp_of(const std::set<int>& s, int n) {
    if (n < 0) throw DomainError("comp_of: negative size");
    std::vector<int> parts;
    int previous = 0;
    for (int x : s) {
        if (x < 1 || x > n - 1) {
            throw DomainError("comp_of: element " + std::to_string(x) + " outside [1," +
                              std::to_string(n - 1) + "]");
        }
        parts.push_back(x - previous);
        previous = x;
    }
    if (n > 0) parts.push_back(n - previous);
    return Composition(std::move(parts));
}

bool is_coarsening(const Composition& coarse, const Composition& fine) {
    if (coarse.size() != fine.size()) return false;
    const auto a = set_of(coarse);
    const auto b = set_of(fine);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw DomainError("compositions_of: negative size");
    std::vector<Composition> result;
    if (n == 0) {
        result.emplace_back();
        return result;
    }
    // Lexicographic order on part lists: depth-first, smallest first part first.
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    rec(rec, n);
    return result;
}

std::vector<Composition> coarsenings_of(const Composition& fine) {
    const int n = fine.size();
    const std::set<int> cut_set = set_of(fine);
    const std::vector<int> cuts(cut_set.begin(), cut_set.end());
    std::vector<Composition> result;
    const std::size_t k = cuts.size();
    result.reserve(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::set<int> kept;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::size_t{1} << i)) kept.insert(cuts[i]);
        }
        result.push_back(comp_of(kept, n));
    }
    std::sort(result.begin(), result.end());
    return result;
}

Composition parse_composition(const std::string& text) {
    if (text.empty() || text == "empty") return Composition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        int value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (first == last || ec != std::errc{} || ptr != last) {
            throw DomainError("cannot parse composition '" + text + "'");
        }
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

}  // namespace nsymkit
