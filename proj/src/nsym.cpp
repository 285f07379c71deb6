#include "nsymkit/nsym.hpp"

#include <future>
#include <map>
#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

#include "nsymkit/box_ops.hpp"
#include "nsymkit/errors.hpp"
#include "nsymkit/skew_shape.hpp"

namespace nsymkit {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using SparseRow = std::map<std::size_t, Rational>;

void require_basis(const Element& e, Basis b, const char* op) {
    if (e.basis() != b) {
        throw BasisError(std::string(op) + ": expected basis " + std::string(basis_name(b)) + ", got " +
                         std::string(basis_name(e.basis())));
    }
}

// Rows of M^{-1} for a square sparse M, by Gauss-Jordan elimination over the
// rationals. Pivots prefer short rows and short columns to limit fill-in.
std::vector<SparseRow> invert_exact(const DMatrix& m) {
    const std::size_t dim = m.dimension();
    std::vector<SparseRow> a(dim), b(dim);
    std::vector<std::set<std::size_t>> rows_with(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (const auto& [c, v] : m.rows[r]) {
            a[r].emplace(c, Rational(v));
            rows_with[c].insert(r);
        }
        b[r].emplace(r, Rational(1));
    }
    std::vector<bool> done(dim, false);
    std::vector<std::size_t> pivot_col(dim, 0);

    for (std::size_t step = 0; step < dim; ++step) {
        std::size_t r = dim;
        for (std::size_t cand = 0; cand < dim; ++cand) {
            if (done[cand]) continue;
            if (r == dim || a[cand].size() < a[r].size()) r = cand;
        }
        if (a[r].empty()) throw ConsistencyError("d_matrix(" + std::to_string(m.degree) + ") is singular");
        std::size_t c = a[r].begin()->first;
        for (const auto& [col, v] : a[r]) {
            if (rows_with[col].size() < rows_with[c].size()) c = col;
        }
        const Rational p = a[r].at(c);
        if (p != 1) {
            for (auto& [col, v] : a[r]) v /= p;
            for (auto& [col, v] : b[r]) v /= p;
        }
        const std::vector<std::size_t> targets(rows_with[c].begin(), rows_with[c].end());
        for (std::size_t r2 : targets) {
            if (r2 == r) continue;
            const Rational f = a[r2].at(c);
            for (const auto& [col, v] : a[r]) {
                Rational& slot = a[r2][col];
                slot -= f * v;
                if (slot == 0) {
                    a[r2].erase(col);
                    rows_with[col].erase(r2);
                } else {
                    rows_with[col].insert(r2);
                }
            }
            for (const auto& [col, v] : b[r]) {
                Rational& slot = b[r2][col];
                slot -= f * v;
                if (slot == 0) b[r2].erase(col);
            }
        }
        done[r] = true;
        pivot_col[r] = c;
    }
    // Row r of B satisfies B[r] * M = e_{pivot_col[r]}.
    std::vector<SparseRow> inverse(dim);
    for (std::size_t r = 0; r < dim; ++r) inverse[pivot_col[r]] = std::move(b[r]);
    return inverse;
}

template <class Value>
class OnceCache {
public:
    template <class Make>
    std::shared_ptr<const Value> get(int degree, Make&& make) {
        std::shared_future<std::shared_ptr<const Value>> future;
        std::promise<std::shared_ptr<const Value>> promise;
        bool owner = false;
        {
            std::lock_guard lock(mutex_);
            auto it = entries_.find(degree);
            if (it == entries_.end()) {
                future = promise.get_future().share();
                entries_.emplace(degree, future);
                owner = true;
            } else {
                future = it->second;
            }
        }
        if (owner) {
            try {
                promise.set_value(std::make_shared<const Value>(make(degree)));
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return future.get();
    }

private:
    std::mutex mutex_;
    std::map<int, std::shared_future<std::shared_ptr<const Value>>> entries_;
};

OnceCache<DMatrix>& d_cache() {
    static OnceCache<DMatrix> cache;
    return cache;
}

OnceCache<SchurTables>& schur_cache() {
    static OnceCache<SchurTables> cache;
    return cache;
}

SchurTables build_schur_tables(int degree) {
    SchurTables t{*cached_d_matrix(degree), {}};
    const auto inverse_rows = invert_exact(t.d);
    t.inverse_columns.resize(t.d.dimension());
    for (std::size_t b = 0; b < inverse_rows.size(); ++b) {
        for (const auto& [a, v] : inverse_rows[b]) {
            if (denominator(v) != 1) {
                throw ConsistencyError("inverse of d_matrix(" + std::to_string(degree) + ") is not integral");
            }
            t.inverse_columns[a].emplace_back(b, numerator(v));
        }
    }
    return t;
}

// Visits every strictly increasing sequence of n indices in [1, bound].
template <class Visit>
void for_each_strict_subset(int n, int bound, Visit&& visit) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            visit(chosen);
            return;
        }
        for (int i = from; i <= bound; ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 1);
}

// Visits every weakly increasing sequence of n indices in [1, bound].
template <class Visit>
void for_each_multiset(int n, int bound, Visit&& visit) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            visit(chosen);
            return;
        }
        for (int i = from; i <= bound; ++i) {
            chosen.push_back(i);
            self(self, i);
            chosen.pop_back();
        }
    };
    rec(rec, 1);
}

void require_positive(int n, const char* op) {
    if (n < 1) throw DomainError(std::string(op) + ": n must be >= 1");
}

}  // namespace

std::shared_ptr<const DMatrix> cached_d_matrix(int degree) {
    if (degree < 0) throw DomainError("negative degree");
    return d_cache().get(degree, [](int d) { return d_matrix(d); });
}

std::shared_ptr<const SchurTables> cached_schur_tables(int degree) {
    if (degree < 0) throw DomainError("negative degree");
    return schur_cache().get(degree, [](int d) { return build_schur_tables(d); });
}

Element ribbon_to_h(const Element& e) {
    require_basis(e, Basis::R, "ribbon_to_h");
    Element out(Basis::H);
    for (const auto& [beta, c] : e.terms()) {
        for (const auto& alpha : coarsenings_of(beta)) {
            const bool odd = (beta.length() - alpha.length()) % 2 != 0;
            out.add(alpha, odd ? Integer(-c) : c);
        }
    }
    return out;
}

Element h_to_ribbon(const Element& e) {
    require_basis(e, Basis::H, "h_to_ribbon");
    Element out(Basis::R);
    for (const auto& [beta, c] : e.terms()) {
        for (const auto& alpha : coarsenings_of(beta)) out.add(alpha, c);
    }
    return out;
}

Element ribbon_to_schur(const Element& e) {
    require_basis(e, Basis::R, "ribbon_to_schur");
    Element out(Basis::S);
    for (const auto& [beta, c] : e.terms()) {
        const auto d = cached_d_matrix(beta.size());
        for (const auto& [a, count] : d->columns[d->position(beta)]) out.add(d->index[a], c * count);
    }
    return out;
}

Element schur_to_ribbon(const Element& e) {
    require_basis(e, Basis::S, "schur_to_ribbon");
    Element out(Basis::R);
    for (const auto& [alpha, c] : e.terms()) {
        const auto t = cached_schur_tables(alpha.size());
        for (const auto& [b, v] : t->inverse_columns[t->d.position(alpha)]) out.add(t->d.index[b], c * v);
    }
    return out;
}

Element psi_expand(const Composition& alpha) {
    Element result = Element::unit(Basis::R);
    for (int part : alpha.parts()) {
        Element psi(Basis::R);
        for (int k = 0; k < part; ++k) {
            std::vector<int> hook(static_cast<std::size_t>(k), 1);
            hook.push_back(part - k);
            psi.add(Composition(std::move(hook)), k % 2 == 0 ? 1 : -1);
        }
        result = mul_ribbon(result, psi);
    }
    return result;
}

Element psi_to_ribbon(const Element& e) {
    require_basis(e, Basis::PSI, "psi_to_ribbon");
    Element out(Basis::R);
    for (const auto& [alpha, c] : e.terms()) out += c * psi_expand(alpha);
    return out;
}

Element to_basis(const Element& e, Basis target) {
    if (target == Basis::PSI) throw BasisError("elements are never expressed in the PSI basis");
    if (e.basis() == target) return e;
    Element ribbon(Basis::R);
    switch (e.basis()) {
        case Basis::R: ribbon = e; break;
        case Basis::H: ribbon = h_to_ribbon(e); break;
        case Basis::S: ribbon = schur_to_ribbon(e); break;
        case Basis::PSI: ribbon = psi_to_ribbon(e); break;
    }
    switch (target) {
        case Basis::H: return ribbon_to_h(ribbon);
        case Basis::S: return ribbon_to_schur(ribbon);
        default: return ribbon;
    }
}

Element mul_ribbon(const Element& a, const Element& b) {
    require_basis(a, Basis::R, "mul_ribbon");
    require_basis(b, Basis::R, "mul_ribbon");
    Element out(Basis::R);
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            const Integer c = ca * cb;
            if (alpha.empty() || beta.empty()) {
                std::vector<int> parts = alpha.parts();
                parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
                out.add(Composition(std::move(parts)), c);
                continue;
            }
            std::vector<int> concat = alpha.parts();
            concat.insert(concat.end(), beta.parts().begin(), beta.parts().end());
            std::vector<int> joined = alpha.parts();
            joined.back() += beta[0];
            joined.insert(joined.end(), beta.parts().begin() + 1, beta.parts().end());
            out.add(Composition(std::move(concat)), c);
            out.add(Composition(std::move(joined)), c);
        }
    }
    return out;
}

Element mul_row_schur(int n, const Element& e) {
    require_positive(n, "mul_row_schur");
    require_basis(e, Basis::S, "mul_row_schur");
    Element out(Basis::S);
    for (const auto& [alpha, c] : e.terms()) {
        // t_{i_n} ... t_{i_1} with i_n > ... > i_1: the smallest index acts first.
        for_each_strict_subset(n, index_bound(alpha, n), [&](const std::vector<int>& increasing) {
            std::optional<Composition> cur = alpha;
            for (int i : increasing) {
                cur = apply(i, *cur);
                if (!cur) return;
            }
            out.add(*cur, c);
        });
    }
    return out;
}

Element mul_col_schur(int n, const Element& e) {
    require_positive(n, "mul_col_schur");
    require_basis(e, Basis::S, "mul_col_schur");
    Element out(Basis::S);
    for (const auto& [alpha, c] : e.terms()) {
        // t_{i_n} ... t_{i_1} with i_n <= ... <= i_1: the largest index acts first.
        for_each_multiset(n, index_bound(alpha, n), [&](const std::vector<int>& increasing) {
            std::optional<Composition> cur = alpha;
            for (auto it = increasing.rbegin(); it != increasing.rend(); ++it) {
                cur = apply(*it, *cur);
                if (!cur) return;
            }
            out.add(*cur, c);
        });
    }
    return out;
}

Element mul_hook_ribbon_schur(int n, int k, const Element& e) {
    require_positive(n, "mul_hook_ribbon_schur");
    require_basis(e, Basis::S, "mul_hook_ribbon_schur");
    if (k < 0 || k > n - 1) throw DomainError("mul_hook_ribbon_schur: need 0 <= k <= n-1");
    Element out(Basis::S);
    for (const auto& [alpha, c] : e.terms()) {
        for_each_rhw(n, k, index_bound(alpha, n), [&](const Word& w) {
            if (auto beta = apply_word(w, alpha)) out.add(*beta, c);
        });
    }
    return out;
}

Element mul(const Element& a, const Element& b, Basis out) {
    return to_basis(mul_ribbon(to_basis(a, Basis::R), to_basis(b, Basis::R)), out);
}

Element mn_primordial(int n, const Composition& alpha) {
    require_positive(n, "mn_primordial");
    Element out(Basis::S);
    const int bound = index_bound(alpha, n);
    for (int k = 0; k < n; ++k) {
        // A reverse k-hookword has an arm of k+1 letters, so asc = k.
        const Integer sign = k % 2 == 0 ? 1 : -1;
        for_each_rhw(n, k, bound, [&](const Word& w) {
            if (auto beta = apply_word(w, alpha)) out.add(*beta, sign);
        });
    }
    return out;
}

Element mn_connected(int n, const Composition& alpha) {
    require_positive(n, "mn_connected");
    Element out(Basis::S);
    for_each_crhw(n, index_bound(alpha, n), [&](const Word& w) {
        if (auto beta = apply_word(w, alpha)) out.add(*beta, *hook_k(w) % 2 == 0 ? 1 : -1);
    });
    return out;
}

Element mn_rule(int n, const Composition& alpha) {
    require_positive(n, "mn_rule");
    Element out(Basis::S);
    for (const auto& [beta, shape] : enumerate_P(alpha, n)) {
        const int height = *classify(shape).height;
#ifdef NSYMKIT_MUTATE_MN_SIGN
        // Deliberately wrong sign; only built into the mutation-check binary.
        out.add(beta, height % 2 == 0 ? -1 : 1);
#else
        out.add(beta, height % 2 == 0 ? 1 : -1);
#endif
    }
    return out;
}

Element mn_ribbon_route(int n, const Composition& alpha) {
    require_positive(n, "mn_ribbon_route");
    const Element schur_in_ribbons = schur_to_ribbon(Element::monomial(Basis::S, alpha));
    return ribbon_to_schur(mul_ribbon(psi_expand(Composition{n}), schur_in_ribbons));
}

}  // namespace nsymkit
