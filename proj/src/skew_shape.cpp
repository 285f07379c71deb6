#include "nsymkit/skew_shape.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "nsymkit/errors.hpp"

namespace nsymkit {

namespace {

std::set<Cell> shift_down(const std::set<Cell>& boxes) {
    std::set<Cell> out;
    for (const auto& b : boxes) out.insert({b.row + 1, b.col});
    return out;
}

}  // namespace

bool fits_under(const Composition& small, const Composition& big) {
    const int ls = small.length();
    const int lb = big.length();
    if (ls > lb) return false;
    for (int r = 0; r < ls; ++r) {
        if (small[static_cast<std::size_t>(r)] > big[static_cast<std::size_t>(r + lb - ls)]) return false;
    }
    return true;
}

SkewShape::SkewShape(Composition outer, Composition inner, std::set<Cell> boxes)
    : outer_(std::move(outer)), inner_(std::move(inner)), boxes_(std::move(boxes)) {
    if (static_cast<int>(boxes_.size()) != outer_.size() - inner_.size()) {
        throw DomainError("skew shape box count does not match outer/inner sizes");
    }
    for (const auto& b : boxes_) {
        if (!in_outer(b)) throw DomainError("skew shape box outside the outer diagram");
    }
}

bool SkewShape::in_outer(const Cell& c) const {
    return c.row >= 1 && c.row <= outer_.length() && c.col >= 1 &&
           c.col <= outer_[static_cast<std::size_t>(c.row - 1)];
}

bool SkewShape::is_inner_cell(const Cell& c) const { return in_outer(c) && !boxes_.contains(c); }

std::string SkewShape::render() const {
    std::ostringstream out;
    for (int r = 1; r <= outer_.length(); ++r) {
        for (int c = 1; c <= outer_[static_cast<std::size_t>(r - 1)]; ++c) {
            out << (boxes_.contains({r, c}) ? '#' : '.');
        }
        out << '\n';
    }
    return out.str();
}

std::optional<Word> find_chain(const Composition& lower, const Composition& upper) {
    if (!fits_under(lower, upper) || lower.size() > upper.size()) return std::nullopt;
    // Breadth-first search over covers; parent links rebuild the word.
    std::map<Composition, std::pair<Composition, int>> parent;
    std::deque<Composition> queue{lower};
    parent.emplace(lower, std::make_pair(lower, 0));
    const int max_col = upper.max_part();
    while (!queue.empty()) {
        Composition current = std::move(queue.front());
        queue.pop_front();
        if (current == upper) {
            std::vector<int> applied;
            Composition at = current;
            while (!(at == lower)) {
                const auto& [prev, index] = parent.at(at);
                applied.push_back(index);
                at = prev;
            }
            // `applied` lists the last operator first, which is display order.
            return Word(std::move(applied));
        }
        if (current.size() >= upper.size()) continue;
        for (int i = 1; i <= max_col; ++i) {
            auto next = apply(i, current);
            if (!next || !fits_under(*next, upper) || parent.contains(*next)) continue;
            parent.emplace(*next, std::make_pair(current, i));
            queue.push_back(std::move(*next));
        }
    }
    return std::nullopt;
}

bool less_c(const Composition& lower, const Composition& upper) {
    return !(lower == upper) && find_chain(lower, upper).has_value();
}

SkewShape skew(const Composition& outer, const Composition& inner) {
    if (outer == inner) return SkewShape(outer, inner, {});
    const auto chain = find_chain(inner, outer);
    if (!chain) {
        throw OrderError(inner.to_string() + " is not below " + outer.to_string() +
                         " in the reverse composition poset");
    }
    auto tracked = apply_word_tracked(*chain, inner);
    return SkewShape(outer, inner, std::set<Cell>(tracked->added_boxes.begin(), tracked->added_boxes.end()));
}

ShapeStats classify(const SkewShape& s) {
    ShapeStats st;
    std::map<int, std::vector<int>> rows_in_col;  // column -> rows, ascending
    std::map<int, int> count_in_row;
    for (const auto& b : s.boxes()) {
        st.supp.insert(b.col);
        rows_in_col[b.col].push_back(b.row);
        ++count_in_row[b.row];
    }
    for (auto& [c, rows] : rows_in_col) std::sort(rows.begin(), rows.end());

    st.is_horizontal_strip = std::all_of(rows_in_col.begin(), rows_in_col.end(),
                                         [](const auto& kv) { return kv.second.size() <= 1; });
    st.is_vertical_strip = std::all_of(count_in_row.begin(), count_in_row.end(),
                                       [](const auto& kv) { return kv.second <= 1; });
    st.is_interval = !st.supp.empty() &&
                     *st.supp.rbegin() - *st.supp.begin() + 1 == static_cast<int>(st.supp.size());
    if (!st.is_interval) return st;

    std::set<int> east, south_east, north_east;
    const int top_col = *st.supp.rbegin();
    for (int j : st.supp) {
        if (j == top_col) continue;
        const auto& here = rows_in_col.at(j);
        const auto& next = rows_in_col.at(j + 1);
        const bool is_east = std::any_of(here.begin(), here.end(), [&](int r) {
            return std::binary_search(next.begin(), next.end(), r);
        });
        if (is_east) {
            east.insert(j);
        } else if (next.back() > here.front()) {
            // some box of column j+1 lies strictly below some box of column j
            south_east.insert(j);
        }
        if (next.back() < here.front()) north_east.insert(j);
    }

    bool strip = true;
    for (const auto& b : s.boxes()) {
        if (!s.contains({b.row, b.col + 1})) continue;
        const auto& col_rows = rows_in_col.at(b.col);
        const int required = b.col == 1 ? col_rows.back() : col_rows.front();
        if (b.row != required) strip = false;
    }
    st.is_nc_border_strip = strip;
    if (strip) st.height = static_cast<int>(count_in_row.size()) - 1;
    st.east = std::move(east);
    st.south_east = std::move(south_east);
    st.north_east = std::move(north_east);
    return st;
}

ShapeList enumerate_outers(const Composition& alpha, int n) {
    if (n < 0) throw DomainError("enumerate_outers: n must be >= 0");
    // Box sets are kept in the current composition's coordinates.
    std::map<Composition, std::set<Cell>> level{{alpha, {}}};
    for (int step = 0; step < n; ++step) {
        std::map<Composition, std::set<Cell>> next_level;
        for (const auto& [comp, boxes] : level) {
            const int max_col = comp.max_part() + 1;
            for (int i = 1; i <= max_col; ++i) {
                auto next = apply(i, comp);
                if (!next) continue;
                std::set<Cell> grown;
                if (i == 1) {
                    grown = shift_down(boxes);
                    grown.insert({1, 1});
                } else {
                    grown = boxes;
                    const auto& p = comp.parts();
                    const int row = static_cast<int>(std::find(p.begin(), p.end(), i - 1) - p.begin()) + 1;
                    grown.insert({row, i});
                }
                auto [it, inserted] = next_level.emplace(*next, grown);
                if (!inserted && it->second != grown) {
                    throw ConsistencyError("two cover chains from " + alpha.to_string() + " to " +
                                           next->to_string() + " add different boxes");
                }
            }
        }
        level = std::move(next_level);
    }
    ShapeList out;
    out.reserve(level.size());
    for (auto& [comp, boxes] : level) out.emplace_back(comp, SkewShape(comp, alpha, std::move(boxes)));
    return out;
}

ShapeList enumerate_B(const Composition& alpha, int n) {
    if (n < 1) throw DomainError("enumerate_B: n must be >= 1");
    ShapeList out;
    for (auto& entry : enumerate_outers(alpha, n)) {
        if (classify(entry.second).is_nc_border_strip) out.push_back(std::move(entry));
    }
    return out;
}

ShapeList enumerate_P(const Composition& alpha, int n) {
    if (n < 1) throw DomainError("enumerate_P: n must be >= 1");
    ShapeList out;
    for (auto& entry : enumerate_B(alpha, n)) {
        if (classify(entry.second).north_east->empty()) out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace nsymkit
