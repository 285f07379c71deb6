#include "nsymkit/tableau.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "nsymkit/errors.hpp"

namespace nsymkit {

Filling::Filling(SkewShape shape, std::map<Cell, int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != shape_.boxes().size()) {
        throw DomainError("filling must assign exactly one entry per box");
    }
    for (const auto& [cell, value] : entries_) {
        if (!shape_.contains(cell)) throw DomainError("filling entry outside the shape");
        if (value < 1) throw DomainError("filling entries must be positive");
    }
}

std::string Filling::render() const {
    std::ostringstream out;
    const auto& outer = shape_.outer();
    for (int r = 1; r <= outer.length(); ++r) {
        for (int c = 1; c <= outer[static_cast<std::size_t>(r - 1)]; ++c) {
            if (c > 1) out << ' ';
            const auto it = entries_.find({r, c});
            if (it == entries_.end()) {
                out << '.';
            } else {
                out << it->second;
            }
        }
        out << '\n';
    }
    return out.str();
}

bool is_srct(const Filling& f) {
    const auto& shape = f.shape();
    const auto& entries = f.entries();
    const int n = f.size();

    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& [cell, v] : entries) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }

    // Inner boxes read as +infinity and boxes off the outer diagram as 0, so
    // both forbidden triple configurations become x >= z > y.
    constexpr int inner_value = std::numeric_limits<int>::max();
    auto value = [&](const Cell& c) -> int {
        const auto it = entries.find(c);
        if (it != entries.end()) return it->second;
        return shape.in_outer(c) ? inner_value : 0;
    };

    int previous_first_column = 0;
    for (const auto& [cell, v] : entries) {
        const auto right = entries.find({cell.row, cell.col + 1});
        if (right != entries.end() && right->second > v) return false;
        if (cell.col == 1) {
            // std::map iterates row-major, so column-1 boxes come top to bottom.
            if (v <= previous_first_column) return false;
            previous_first_column = v;
        }
    }

    for (const auto& [low, z] : entries) {
        if (low.col < 2) continue;
        for (int i = 1; i < low.row; ++i) {
            const int x = value({i, low.col - 1});
            const int y = value({i, low.col});
            if (x >= z && z > y) return false;
        }
    }
    return true;
}

Composition descent_composition(const Filling& f) {
    if (!is_srct(f)) throw DomainError("descent_composition requires an SRCT");
    const int n = f.size();
    std::vector<int> column_of(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [cell, v] : f.entries()) column_of[static_cast<std::size_t>(v)] = cell.col;
    std::set<int> descents;
    for (int i = 1; i < n; ++i) {
        if (column_of[static_cast<std::size_t>(i + 1)] >= column_of[static_cast<std::size_t>(i)]) {
            descents.insert(i);
        }
    }
    return comp_of(descents, n);
}

std::optional<Filling> srct_from_word(const Word& w, const Composition& alpha) {
    auto tracked = apply_word_tracked(w, alpha);
    if (!tracked) return std::nullopt;
    const int n = w.length();
    std::map<Cell, int> entries;
    std::set<Cell> boxes;
    for (int s = 1; s <= n; ++s) {
        const Cell& c = tracked->added_boxes[static_cast<std::size_t>(s - 1)];
        entries.emplace(c, n - s + 1);
        boxes.insert(c);
    }
    return Filling(SkewShape(tracked->result, alpha, std::move(boxes)), std::move(entries));
}

Word word_from_srct(const Filling& f) {
    if (!is_srct(f)) throw DomainError("word_from_srct requires an SRCT");
    // Display position v holds the column of entry v (entry n-s+1 is applied s-th).
    std::vector<int> indices(static_cast<std::size_t>(f.size()));
    for (const auto& [cell, v] : f.entries()) indices[static_cast<std::size_t>(v - 1)] = cell.col;
    return Word(std::move(indices));
}

void for_each_srct(const Composition& alpha, const FillingVisitor& visit) {
    const int n = alpha.size();
    const int max_col = alpha.max_part();
    std::vector<int> applied;  // application order
    auto rec = [&](auto&& self, const Composition& current) -> void {
        if (current.size() == n) {
            if (current == alpha) {
                Word w(std::vector<int>(applied.rbegin(), applied.rend()));
                visit(*srct_from_word(w, Composition{}));
            }
            return;
        }
        for (int i = 1; i <= max_col; ++i) {
            auto next = apply(i, current);
            if (!next || !fits_under(*next, alpha)) continue;
            applied.push_back(i);
            self(self, *next);
            applied.pop_back();
        }
    };
    rec(rec, Composition{});
}

std::vector<Filling> enumerate_srct(const Composition& alpha) {
    std::vector<Filling> out;
    for_each_srct(alpha, [&](const Filling& f) { out.push_back(f); });
    return out;
}

std::int64_t d_coeff(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw DomainError("d_coeff: sizes differ");
    std::int64_t count = 0;
    for_each_srct(alpha, [&](const Filling& f) {
        if (descent_composition(f) == beta) ++count;
    });
    return count;
}

std::size_t DMatrix::position(const Composition& c) const {
    const auto it = std::lower_bound(index.begin(), index.end(), c);
    if (it == index.end() || !(*it == c)) {
        throw DomainError("composition " + c.to_string() + " is not of degree " + std::to_string(degree));
    }
    return static_cast<std::size_t>(it - index.begin());
}

std::int64_t DMatrix::at(std::size_t a, std::size_t b) const {
    for (const auto& [col, v] : rows.at(a)) {
        if (col == b) return v;
    }
    return 0;
}

DMatrix d_matrix(int degree) {
    DMatrix m;
    m.degree = degree;
    m.index = compositions_of(degree);
    const std::size_t dim = m.index.size();
    m.rows.resize(dim);
    m.columns.resize(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        std::map<std::size_t, std::int64_t> counts;
        for_each_srct(m.index[a], [&](const Filling& f) { ++counts[m.position(descent_composition(f))]; });
        for (const auto& [b, v] : counts) {
            m.rows[a].emplace_back(b, v);
            m.columns[b].emplace_back(a, v);
        }
    }
    return m;
}

Filling canonical_strip_filling(const SkewShape& s) {
    const auto stats = classify(s);
    if (!stats.is_nc_border_strip) throw DomainError("canonical_strip_filling requires an nc border strip");
    const int n = s.size();
    std::map<int, std::vector<int>> rows_in_col;
    for (const auto& b : s.boxes()) rows_in_col[b.col].push_back(b.row);
    for (auto& [c, rows] : rows_in_col) std::sort(rows.begin(), rows.end());

    std::map<Cell, int> entries;
    int next = n;
    for (int x : *stats.east) {
        const auto& rows = rows_in_col.at(x);
        entries.emplace(Cell{x == 1 ? rows.back() : rows.front(), x}, next--);
    }
    for (auto it = rows_in_col.rbegin(); it != rows_in_col.rend(); ++it) {
        const int col = it->first;
        std::vector<int> order = it->second;
        if (col == 1) std::reverse(order.begin(), order.end());
        for (int r : order) {
            if (entries.emplace(Cell{r, col}, next).second) --next;
        }
    }
    return Filling(s, std::move(entries));
}

}  // namespace nsymkit
