#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nsymkit/composition.hpp"

namespace nsymkit {

/// A box position (row, column), 1-based, English convention.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// A word t_{i1} t_{i2} ... t_{in} of box-adding operators. Indices are stored
/// in display order (left to right); application is right to left, so the
/// last stored index acts first.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> indices);
    explicit Word(std::vector<int> indices);

    const std::vector<int>& indices() const noexcept { return indices_; }
    int length() const noexcept { return static_cast<int>(indices_.size()); }
    bool empty() const noexcept { return indices_.empty(); }
    /// Index of the s-th operator applied, s = 1..length().
    int applied(int s) const { return indices_[indices_.size() - static_cast<std::size_t>(s)]; }

    /// Display form, e.g. "t2 t4 t1 t2 t3".
    std::string to_string() const;
    /// Compact digit form used in listings, e.g. "24123" (indices joined by '.' if any exceeds 9).
    std::string compact() const;

    auto operator<=>(const Word&) const = default;
    bool operator==(const Word&) const = default;

private:
    std::vector<int> indices_;
};

/// t_i(alpha): for i = 1 prepend a part 1; for i >= 2 increment the leftmost
/// part equal to i-1, or std::nullopt when there is none.
std::optional<Composition> apply(int i, const Composition& alpha);

/// Right-to-left application; std::nullopt is absorbing.
std::optional<Composition> apply_word(const Word& w, const Composition& alpha);

struct TrackedResult {
    Composition result;
    /// Final position of each added box, in application order.
    std::vector<Cell> added_boxes;
};

/// apply_word plus the final coordinates of every added box. Rows keep a
/// stable identity through t_1 prepends and are resolved at the end.
std::optional<TrackedResult> apply_word_tracked(const Word& w, const Composition& alpha);

/// Statistics of a word. arm/leg/asc/hook_k are set only for reverse hookwords.
struct WordStats {
    std::set<int> supp;
    bool is_connected = false;
    /// content[i-1] = number of occurrences of t_i, up to the largest index.
    std::vector<int> content;
    std::optional<int> hook_k;
    std::multiset<int> arm;
    std::multiset<int> leg;
    std::optional<int> asc;
};

WordStats word_stats(const Word& w);

/// The unique k with i1 <= ... <= i_{k+1} > i_{k+2} > ... > i_n, if any.
std::optional<int> hook_k(const Word& w);

/// True iff the set of indices is a nonempty integer interval.
bool is_connected(const Word& w);

/// The reverse hookword with the given content vector whose leg is `leg`.
/// `leg` must contain the largest index with nonzero content; throws
/// DomainError otherwise or when the content cannot support the leg.
Word make_hookword(const std::vector<int>& content, const std::set<int>& leg);

using WordVisitor = std::function<void(const Word&)>;

/// Every reverse k-hookword of length n over indices [1, max_index], in
/// lexicographic display order. Throws DomainError unless 0 <= k <= n-1.
void for_each_rhw(int n, int k, int max_index, const WordVisitor& visit);
std::vector<Word> enumerate_rhw(int n, int k, int max_index);

/// Every connected reverse hookword of length n over [1, max_index],
/// grouped by k ascending, lexicographic within a group.
void for_each_crhw(int n, int max_index, const WordVisitor& visit);
std::vector<Word> enumerate_crhw(int n, int max_index);

/// Largest column any length-n word can reach acting on alpha.
inline int index_bound(const Composition& alpha, int n) { return alpha.max_part() + n; }

}  // namespace nsymkit
