#include "nsymkit/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "nsymkit/box_ops.hpp"
#include "nsymkit/classical.hpp"
#include "nsymkit/errors.hpp"
#include "nsymkit/nsym.hpp"
#include "nsymkit/skew_shape.hpp"
#include "nsymkit/tableau.hpp"

namespace nsymkit {

namespace {

enum CheckId : std::size_t {
    kThreeWay,
    kAEqualsB,
    kWordCount,
    kCoefficientLaw,
    kHeight,
    kSupportPartition,
    kChainIndependence,
    kCanonicalFilling,
    kChi,
    kRoundTrip,
    kCommutation,
    kConditionalCommutation,
    kCheckCount
};

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "Psi_n s_alpha: mn_rule = mn_connected = mn_primordial = ribbon route",
    "images of connected hookwords = nc border strips (A = B)",
    "#connected hookwords per strip = 2^|NE|",
    "signed hookword sum per strip = (-1)^(n-1-|E|) [NE empty], else 0",
    "ht = n - 1 - |E| on nc border strips",
    "supp = {max} + E + SE + NE disjointly, NE within j >= 2",
    "skew shapes independent of the cover chain",
    "canonical strip filling: SRCT with connected hookword",
    "chi(Psi_n s_alpha) = p_n s_sort(alpha)",
    "basis round trips H<->R and R<->S are identities",
    "t_i t_j = t_j t_i for |i - j| >= 2",
    "t_j t_{j+1}^k = t_{j+1}^k t_j for k <= m",
};

struct Tally {
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::optional<std::string> first;

    void record(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (ok) return;
        ++failures;
        if (!first) first = describe();
    }
};

using CellTallies = std::array<Tally, kCheckCount>;

std::string cell_label(const Composition& alpha, int n) {
    return "alpha=" + alpha.to_string() + " n=" + std::to_string(n);
}

std::string set_string(const std::set<int>& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int x : s) {
        if (!first) out << ',';
        out << x;
        first = false;
    }
    out << '}';
    return out.str();
}

void check_cell(const Composition& alpha, int n, CellTallies& t) {
    const std::string label = cell_label(alpha, n);

    const Element rule = mn_rule(n, alpha);
    const Element connected = mn_connected(n, alpha);
    const Element primordial = mn_primordial(n, alpha);
    const Element ribbon = mn_ribbon_route(n, alpha);
    t[kThreeWay].record(rule == connected && connected == primordial && primordial == ribbon, [&] {
        return label + ": rule = " + rule.to_string() + "; connected = " + connected.to_string() +
               "; primordial = " + primordial.to_string() + "; ribbon = " + ribbon.to_string();
    });

    t[kChi].record(chi_consistency(n, alpha), [&] { return label; });

    ShapeList outers;
    try {
        outers = enumerate_outers(alpha, n);
        for (const auto& [beta, shape] : outers) {
            const SkewShape searched = skew(beta, alpha);
            t[kChainIndependence].record(searched == shape, [&] { return label + " beta=" + beta.to_string(); });
        }
    } catch (const ConsistencyError& e) {
        t[kChainIndependence].record(false, [&] { return label + ": " + e.what(); });
        return;
    }

    std::map<Composition, std::vector<Word>> images;
    for_each_crhw(n, index_bound(alpha, n), [&](const Word& w) {
        if (auto beta = apply_word(w, alpha)) images[*beta].push_back(w);
    });

    std::set<Composition> strip_outers;
    for (const auto& [beta, shape] : outers) {
        const ShapeStats st = classify(shape);
        if (!st.is_nc_border_strip) continue;
        strip_outers.insert(beta);
        const std::string where = label + " beta=" + beta.to_string();
        const auto& east = *st.east;
        const auto& ne = *st.north_east;
        const auto& se = *st.south_east;

        const auto found = images.find(beta);
        const std::vector<Word> none;
        const auto& words = found == images.end() ? none : found->second;
        t[kWordCount].record(words.size() == (std::size_t{1} << ne.size()), [&] {
            return where + ": " + std::to_string(words.size()) + " words, |NE|=" + std::to_string(ne.size());
        });

        std::int64_t signed_sum = 0;
        for (const auto& w : words) signed_sum += *hook_k(w) % 2 == 0 ? 1 : -1;
        const int exponent = n - 1 - static_cast<int>(east.size());
        const std::int64_t expected = ne.empty() ? (exponent % 2 == 0 ? 1 : -1) : 0;
        t[kCoefficientLaw].record(signed_sum == expected, [&] {
            return where + ": sum " + std::to_string(signed_sum) + ", expected " + std::to_string(expected);
        });

        t[kHeight].record(*st.height == exponent, [&] {
            return where + ": ht " + std::to_string(*st.height) + " vs " + std::to_string(exponent);
        });

        std::set<int> rebuilt{*st.supp.rbegin()};
        std::size_t total = 1 + east.size() + se.size() + ne.size();
        rebuilt.insert(east.begin(), east.end());
        rebuilt.insert(se.begin(), se.end());
        rebuilt.insert(ne.begin(), ne.end());
        const bool ne_ok = std::all_of(ne.begin(), ne.end(), [](int j) { return j >= 2; });
        t[kSupportPartition].record(rebuilt == st.supp && total == st.supp.size() && ne_ok, [&] {
            return where + ": supp " + set_string(st.supp) + " E " + set_string(east) + " SE " + set_string(se) +
                   " NE " + set_string(ne);
        });

        const Filling canonical = canonical_strip_filling(shape);
        bool filling_ok = is_srct(canonical);
        if (filling_ok) {
            const Word w = word_from_srct(canonical);
            const auto image = apply_word(w, alpha);
            filling_ok = hook_k(w).has_value() && is_connected(w) && w.length() == n && image && *image == beta;
        }
        t[kCanonicalFilling].record(filling_ok, [&] { return where; });
    }

    std::set<Composition> image_set;
    for (const auto& [beta, words] : images) image_set.insert(beta);
    t[kAEqualsB].record(image_set == strip_outers, [&] {
        return label + ": " + std::to_string(image_set.size()) + " hookword images vs " +
               std::to_string(strip_outers.size()) + " strips";
    });
}

Composition random_composition(std::mt19937_64& rng, int max_length, int max_part) {
    std::uniform_int_distribution<int> length(0, max_length);
    std::uniform_int_distribution<int> part(1, max_part);
    std::vector<int> parts(static_cast<std::size_t>(length(rng)));
    for (auto& p : parts) p = part(rng);
    return Composition(std::move(parts));
}

void random_commutation(std::uint64_t seed, int trials, Tally& plain, Tally& conditional) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> index(1, 8);
    for (int trial = 0; trial < trials; ++trial) {
        const Composition alpha = random_composition(rng, 7, 6);
        int i = index(rng);
        int j = index(rng);
        while (std::abs(i - j) < 2) j = index(rng);
        const auto left = apply_word(Word{i, j}, alpha);
        const auto right = apply_word(Word{j, i}, alpha);
        plain.record(left == right, [&] {
            return "alpha=" + alpha.to_string() + " i=" + std::to_string(i) + " j=" + std::to_string(j);
        });
    }

    std::uniform_int_distribution<int> column(2, 5);
    for (int trial = 0; trial < trials; ++trial) {
        const int j = column(rng);
        // Parts drawn from {j-1, j, anything}; both j-1 and j must occur.
        std::uniform_int_distribution<int> length(2, 8);
        std::uniform_int_distribution<int> kind(0, 2);
        std::uniform_int_distribution<int> any(1, 7);
        std::vector<int> parts;
        while (true) {
            parts.assign(static_cast<std::size_t>(length(rng)), 0);
            for (auto& p : parts) {
                const int k = kind(rng);
                p = k == 0 ? j - 1 : k == 1 ? j : any(rng);
            }
            const bool has_low = std::find(parts.begin(), parts.end(), j - 1) != parts.end();
            const bool has_high = std::find(parts.begin(), parts.end(), j) != parts.end();
            if (has_low && has_high) break;
        }
        const Composition mu(parts);
        const auto low_at = std::find(parts.begin(), parts.end(), j - 1);
        const int m = static_cast<int>(std::count(parts.begin(), low_at, j));
        bool ok = true;
        int bad_k = -1;
        for (int k = 0; k <= m && ok; ++k) {
            std::vector<int> lhs(static_cast<std::size_t>(k), j + 1);  // t_j t_{j+1}^k
            lhs.insert(lhs.begin(), j);
            std::vector<int> rhs(static_cast<std::size_t>(k), j + 1);  // t_{j+1}^k t_j
            rhs.push_back(j);
            if (apply_word(Word(lhs), mu) != apply_word(Word(rhs), mu)) {
                ok = false;
                bad_k = k;
            }
        }
        conditional.record(ok, [&] {
            return "mu=" + mu.to_string() + " j=" + std::to_string(j) + " k=" + std::to_string(bad_k);
        });
    }
}

void round_trips(int max_degree, Tally& t) {
    for (int d = 0; d <= max_degree; ++d) {
        try {
            cached_schur_tables(d);
        } catch (const ConsistencyError& e) {
            t.record(false, [&] { return "degree " + std::to_string(d) + ": " + e.what(); });
            continue;
        }
        for (const auto& alpha : compositions_of(d)) {
            const Element h = Element::monomial(Basis::H, alpha);
            const Element r = Element::monomial(Basis::R, alpha);
            const Element s = Element::monomial(Basis::S, alpha);
            t.record(ribbon_to_h(h_to_ribbon(h)) == h, [&] { return "h" + alpha.to_string() + " via R"; });
            t.record(h_to_ribbon(ribbon_to_h(r)) == r, [&] { return "R" + alpha.to_string() + " via H"; });
            t.record(schur_to_ribbon(ribbon_to_schur(r)) == r, [&] { return "R" + alpha.to_string() + " via S"; });
            t.record(ribbon_to_schur(schur_to_ribbon(s)) == s, [&] { return "s" + alpha.to_string() + " via R"; });
        }
    }
}

}  // namespace

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::string VerifyReport::render_text() const {
    std::ostringstream out;
    out << "verify: |alpha| <= " << options.max_size << ", 1 <= n <= " << options.max_n << ", seed "
        << options.seed << ", " << options.trials << " random trials\n";
    for (const auto& c : checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.name << "  [" << c.cases << " cases";
        if (!c.passed()) out << ", " << c.failures << " failed";
        out << "]\n";
        if (c.counterexample) out << "     first counterexample: " << *c.counterexample << '\n';
    }
    out << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

Json VerifyReport::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        Json row = Json::object();
        row["name"] = c.name;
        row["cases"] = c.cases;
        row["failures"] = c.failures;
        row["passed"] = c.passed();
        row["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
        checks_json.push_back(std::move(row));
    }
    Json out = Json::object();
    out["max_size"] = options.max_size;
    out["max_n"] = options.max_n;
    out["seed"] = options.seed;
    out["trials"] = options.trials;
    out["passed"] = passed();
    out["checks"] = std::move(checks_json);
    return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.max_size < 1 || options.max_n < 1) throw DomainError("verify bounds must be >= 1");
    if (options.trials < 0) throw DomainError("verify trials must be >= 0");

    struct Cell {
        Composition alpha;
        int n;
    };
    std::vector<Cell> cells;
    for (int size = 0; size <= options.max_size; ++size) {
        for (int n = 1; n <= options.max_n; ++n) {
            for (const auto& alpha : compositions_of(size)) cells.push_back({alpha, n});
        }
    }

    std::vector<CellTallies> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < cells.size(); c = next++) {
            try {
                check_cell(cells[c].alpha, cells[c].n, results[c]);
            } catch (const std::exception& e) {
                results[c][kThreeWay].record(false, [&] {
                    return cell_label(cells[c].alpha, cells[c].n) + ": " + e.what();
                });
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    CellTallies total;
    for (const auto& cell : results) {
        for (std::size_t k = 0; k < kCheckCount; ++k) {
            total[k].cases += cell[k].cases;
            total[k].failures += cell[k].failures;
            if (!total[k].first && cell[k].first) total[k].first = cell[k].first;
        }
    }
    round_trips(options.max_size, total[kRoundTrip]);
    random_commutation(options.seed, options.trials, total[kCommutation], total[kConditionalCommutation]);

    VerifyReport report{options, {}};
    for (std::size_t k = 0; k < kCheckCount; ++k) {
        report.checks.push_back({kCheckNames[k], total[k].cases, total[k].failures, total[k].first});
    }
    return report;
}

}  // namespace nsymkit
