#include "nsymkit/box_ops.hpp"

#include <algorithm>
#include <sstream>

#include "nsymkit/errors.hpp"

namespace nsymkit {

namespace {

void check_indices(const std::vector<int>& indices) {
    for (int i : indices) {
        if (i < 1) throw DomainError("operator indices must be >= 1, got " + std::to_string(i));
    }
}

// Index of the part t_i acts on, or -1; for i = 1 the answer is "new row", reported as -2.
int target_row(int i, const std::vector<int>& parts) {
    if (i == 1) return -2;
    const auto it = std::find(parts.begin(), parts.end(), i - 1);
    return it == parts.end() ? -1 : static_cast<int>(it - parts.begin());
}

}  // namespace

Word::Word(std::initializer_list<int> indices) : indices_(indices) { check_indices(indices_); }

Word::Word(std::vector<int> indices) : indices_(std::move(indices)) { check_indices(indices_); }

std::string Word::to_string() const {
    if (indices_.empty()) return "id";
    std::ostringstream out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out << ' ';
        out << 't' << indices_[i];
    }
    return out.str();
}

std::string Word::compact() const {
    const bool wide = std::any_of(indices_.begin(), indices_.end(), [](int i) { return i > 9; });
    std::ostringstream out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (wide && i) out << '.';
        out << indices_[i];
    }
    return out.str();
}

std::optional<Composition> apply(int i, const Composition& alpha) {
    if (i < 1) throw DomainError("operator index must be >= 1");
    std::vector<int> parts = alpha.parts();
    const int row = target_row(i, parts);
    if (row == -1) return std::nullopt;
    if (row == -2) {
        parts.insert(parts.begin(), 1);
    } else {
        ++parts[static_cast<std::size_t>(row)];
    }
    return Composition(std::move(parts));
}

std::optional<Composition> apply_word(const Word& w, const Composition& alpha) {
    std::optional<Composition> current = alpha;
    for (int s = 1; s <= w.length() && current; ++s) {
        current = apply(w.applied(s), *current);
    }
    return current;
}

std::optional<TrackedResult> apply_word_tracked(const Word& w, const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    // row_ids[r] is the stable identity of the row currently at index r.
    std::vector<int> row_ids(parts.size());
    for (std::size_t r = 0; r < row_ids.size(); ++r) row_ids[r] = static_cast<int>(r);
    int next_id = static_cast<int>(parts.size());

    struct StableBox {
        int row_id;
        int col;
    };
    std::vector<StableBox> added;
    added.reserve(static_cast<std::size_t>(w.length()));

    for (int s = 1; s <= w.length(); ++s) {
        const int i = w.applied(s);
        const int row = target_row(i, parts);
        if (row == -1) return std::nullopt;
        if (row == -2) {
            parts.insert(parts.begin(), 1);
            row_ids.insert(row_ids.begin(), next_id);
            added.push_back({next_id, 1});
            ++next_id;
        } else {
            ++parts[static_cast<std::size_t>(row)];
            added.push_back({row_ids[static_cast<std::size_t>(row)], i});
        }
    }

    std::vector<int> final_row(static_cast<std::size_t>(next_id), 0);
    for (std::size_t r = 0; r < row_ids.size(); ++r) {
        final_row[static_cast<std::size_t>(row_ids[r])] = static_cast<int>(r) + 1;
    }
    TrackedResult out{Composition(std::move(parts)), {}};
    out.added_boxes.reserve(added.size());
    for (const auto& b : added) {
        out.added_boxes.push_back({final_row[static_cast<std::size_t>(b.row_id)], b.col});
    }
    return out;
}

std::optional<int> hook_k(const Word& w) {
    const auto& x = w.indices();
    const int n = w.length();
    if (n == 0) return std::nullopt;
    int top = 0;  // last position (0-based) of the maximal weakly increasing prefix
    while (top + 1 < n && x[static_cast<std::size_t>(top)] <= x[static_cast<std::size_t>(top + 1)]) ++top;
    for (int j = top; j + 1 < n; ++j) {
        if (x[static_cast<std::size_t>(j)] <= x[static_cast<std::size_t>(j + 1)]) return std::nullopt;
    }
    return top;
}

bool is_connected(const Word& w) {
    if (w.empty()) return false;
    const std::set<int> supp(w.indices().begin(), w.indices().end());
    return *supp.rbegin() - *supp.begin() + 1 == static_cast<int>(supp.size());
}

WordStats word_stats(const Word& w) {
    WordStats stats;
    const auto& x = w.indices();
    stats.supp.insert(x.begin(), x.end());
    stats.is_connected = is_connected(w);
    if (!stats.supp.empty()) {
        stats.content.assign(static_cast<std::size_t>(*stats.supp.rbegin()), 0);
        for (int i : x) ++stats.content[static_cast<std::size_t>(i - 1)];
    }
    stats.hook_k = hook_k(w);
    if (stats.hook_k) {
        const int k = *stats.hook_k;
        for (int j = 0; j <= k; ++j) stats.arm.insert(x[static_cast<std::size_t>(j)]);
        for (int j = k; j < w.length(); ++j) stats.leg.insert(x[static_cast<std::size_t>(j)]);
        stats.asc = static_cast<int>(stats.arm.size()) - 1;
    }
    return stats;
}

Word make_hookword(const std::vector<int>& content, const std::set<int>& leg) {
    int top = 0;
    for (std::size_t i = 0; i < content.size(); ++i) {
        if (content[i] < 0) throw DomainError("make_hookword: negative content");
        if (content[i] > 0) top = static_cast<int>(i) + 1;
    }
    if (top == 0) throw DomainError("make_hookword: empty content");
    if (!leg.contains(top)) throw DomainError("make_hookword: leg must contain the largest index");
    std::vector<int> indices;
    for (int i = 1; i <= top; ++i) {
        int count = content[static_cast<std::size_t>(i - 1)];
        if (leg.contains(i)) {
            if (count == 0) throw DomainError("make_hookword: leg index with zero content");
            --count;
        }
        indices.insert(indices.end(), static_cast<std::size_t>(count), i);
    }
    for (auto it = leg.rbegin(); it != leg.rend(); ++it) {
        if (*it < 1 || *it > top) throw DomainError("make_hookword: leg index outside support");
        indices.push_back(*it);
    }
    return Word(std::move(indices));
}

void for_each_rhw(int n, int k, int max_index, const WordVisitor& visit) {
    if (n < 1 || k < 0 || k > n - 1) {
        throw DomainError("enumerate_rhw: need 0 <= k <= n-1, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
    if (max_index < 1) throw DomainError("enumerate_rhw: max_index must be >= 1");
    std::vector<int> current(static_cast<std::size_t>(n));
    // Positions 0..k weakly increase; positions k+1..n-1 strictly decrease below the peak.
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            visit(Word(current));
            return;
        }
        int lo = 1;
        int hi = max_index;
        if (pos > 0 && pos <= k) lo = current[static_cast<std::size_t>(pos - 1)];
        if (pos > k && pos > 0) hi = current[static_cast<std::size_t>(pos - 1)] - 1;
        // Leave room for the strictly decreasing tail.
        const int tail = pos <= k ? n - 1 - k : n - 1 - pos;
        if (pos > k) lo = std::max(lo, tail + 1);
        for (int v = lo; v <= hi; ++v) {
            if (pos == k && v < tail + 1) continue;
            current[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

std::vector<Word> enumerate_rhw(int n, int k, int max_index) {
    std::vector<Word> out;
    for_each_rhw(n, k, max_index, [&](const Word& w) { out.push_back(w); });
    return out;
}

void for_each_crhw(int n, int max_index, const WordVisitor& visit) {
    if (n < 1) throw DomainError("enumerate_crhw: n must be >= 1");
    for (int k = 0; k < n; ++k) {
        for_each_rhw(n, k, max_index, [&](const Word& w) {
            if (is_connected(w)) visit(w);
        });
    }
}

std::vector<Word> enumerate_crhw(int n, int max_index) {
    std::vector<Word> out;
    for_each_crhw(n, max_index, [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace nsymkit
