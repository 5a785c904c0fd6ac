#include "triset/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <thread>

#include <json.hpp>

#include "triset/triple.hpp"

namespace triset {

bool TripleConstraint::holds(const Family& f) const {
    if (kind == Kind::min_score) return is_triple_intersecting(f, bound);
    return is_dual_bounded(f, bound);
}

std::string method_name(SearchMethod m) {
    return m == SearchMethod::brute ? "brute" : "shifted-bb";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Context {
    std::vector<std::uint64_t> masks; // in the search's visiting order
    std::vector<int> sizes;
    std::vector<std::vector<std::uint8_t>> pair; // pairwise intersection sizes
    TripleConstraint constraint;

    explicit Context(std::vector<std::uint64_t> ms, TripleConstraint c)
        : masks(std::move(ms)), constraint(c) {
        std::size_t m = masks.size();
        sizes.resize(m);
        pair.assign(m, std::vector<std::uint8_t>(m, 0));
        for (std::size_t i = 0; i < m; ++i) sizes[i] = std::popcount(masks[i]);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                pair[i][j] = pair[j][i] = (std::uint8_t)std::popcount(masks[i] & masks[j]);
    }

    bool triple_ok(int i, int j, int l) const {
        int d = pair[(std::size_t)i][(std::size_t)j] + pair[(std::size_t)j][(std::size_t)l] +
                pair[(std::size_t)l][(std::size_t)i];
        if (constraint.kind == TripleConstraint::Kind::min_score) return d >= constraint.bound;
        int s = sizes[(std::size_t)i] + sizes[(std::size_t)j] + sizes[(std::size_t)l];
        return 2 * s - d <= constraint.bound;
    }
};

// ---------------------------------------------------------------------------
// Brute force: include/exclude DFS over an explicit candidate list. Including
// a candidate filters the tail down to candidates still compatible with every
// chosen pair, so each include step only rechecks pairs through the newcomer.

struct BruteWorker {
    const Context* ctx;
    long long hard_cap;                   // provable ceiling; reaching it stops the search
    std::atomic<long long>* shared_best;  // monotone incumbent across workers
    long long best = -1;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
    bool stop = false;

    void record(const std::vector<int>& chosen) {
        best = (long long)chosen.size();
        witness = chosen;
        if (shared_best) {
            long long seen = shared_best->load(std::memory_order_relaxed);
            while (seen < best &&
                   !shared_best->compare_exchange_weak(seen, best, std::memory_order_relaxed)) {
            }
        }
        if (best >= hard_cap) stop = true;
    }

    long long prune_floor() const {
        long long floor = best;
        if (shared_best) floor = std::max(floor, shared_best->load(std::memory_order_relaxed) - 1);
        return floor;
    }

    void dfs(const std::vector<int>& rest, std::vector<int>& chosen) {
        ++nodes;
        if ((long long)chosen.size() > best) record(chosen);
        if (stop || rest.empty()) return;
        if ((long long)(chosen.size() + rest.size()) <= prune_floor()) return;

        int c = rest.front();
        std::vector<int> tail;
        tail.reserve(rest.size() - 1);
        for (std::size_t t = 1; t < rest.size(); ++t) {
            int c2 = rest[t];
            bool ok = true;
            for (int a : chosen)
                if (!ctx->triple_ok(a, c, c2)) {
                    ok = false;
                    break;
                }
            if (ok) tail.push_back(c2);
        }
        chosen.push_back(c);
        dfs(tail, chosen);
        chosen.pop_back();
        if (stop) return;

        std::vector<int> skipped(rest.begin() + 1, rest.end());
        dfs(skipped, chosen);
    }
};

struct BruteTask {
    std::vector<int> rest;
    std::vector<int> chosen;
};

// Expand the first `depth` include/exclude decisions, include-first, so the
// task list preserves the sequential visiting order.
void collect_brute_tasks(const Context& ctx, std::vector<int> rest, std::vector<int>& chosen,
                         int depth, std::vector<BruteTask>& out) {
    if (depth == 0 || rest.empty()) {
        out.push_back({std::move(rest), chosen});
        return;
    }
    int c = rest.front();
    std::vector<int> tail;
    for (std::size_t t = 1; t < rest.size(); ++t) {
        int c2 = rest[t];
        bool ok = true;
        for (int a : chosen)
            if (!ctx.triple_ok(a, c, c2)) {
                ok = false;
                break;
            }
        if (ok) tail.push_back(c2);
    }
    chosen.push_back(c);
    collect_brute_tasks(ctx, std::move(tail), chosen, depth - 1, out);
    chosen.pop_back();
    std::vector<int> skipped(rest.begin() + 1, rest.end());
    collect_brute_tasks(ctx, std::move(skipped), chosen, depth - 1, out);
}

struct RunOutcome {
    long long value = 0;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
};

RunOutcome run_brute(const Context& ctx, long long hard_cap, int jobs) {
    std::vector<int> all((std::size_t)ctx.masks.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = (int)i;

    if (jobs <= 1 || all.size() < 8) {
        BruteWorker w{&ctx, hard_cap, nullptr};
        std::vector<int> chosen;
        w.dfs(all, chosen);
        return {w.best, std::move(w.witness), w.nodes};
    }

    int depth = 1;
    while ((1 << depth) < 4 * jobs && depth < (int)all.size()) ++depth;
    std::vector<BruteTask> tasks;
    std::vector<int> chosen;
    collect_brute_tasks(ctx, all, chosen, depth, tasks);

    std::vector<RunOutcome> results(tasks.size());
    std::atomic<long long> incumbent{-1};
    std::atomic<std::size_t> next{0};
    std::atomic<bool> cap_hit{false};
    auto drain = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || cap_hit.load()) break;
            BruteWorker w{&ctx, hard_cap, &incumbent};
            w.best = (long long)tasks[i].chosen.size() - 1; // let the prefix re-record
            std::vector<int> prefix = tasks[i].chosen;
            w.dfs(tasks[i].rest, prefix);
            results[i] = {w.best, std::move(w.witness), w.nodes};
            if (w.best >= hard_cap) cap_hit.store(true);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(drain);
    for (auto& th : pool) th.join();

    RunOutcome merged;
    merged.value = -1;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        merged.nodes += results[i].nodes;
        if (results[i].value > merged.value) {
            merged.value = results[i].value;
            merged.witness = results[i].witness;
        }
    }
    return merged;
}

// ---------------------------------------------------------------------------
// Downset DFS: candidates come in a linear extension of a forcing order given
// by per-candidate cover lists (all covers sit earlier in the order). Taking
// a candidate is legal once its covers are taken, so every DFS state is a
// downset; the club of reachable families is exactly the downsets.

struct DownsetSearcher {
    const Context* ctx;
    const std::vector<std::vector<int>>* covers;
    long long hard_cap;
    // optional split bound: group[i] in {0,1}, each group's final count capped
    const std::vector<int>* group = nullptr;
    long long group_cap[2] = {LLONG_MAX, LLONG_MAX};

    std::vector<char> taken;     // decided-in
    std::vector<char> violates;  // clashes with a chosen pair somewhere below
    std::vector<int> chosen;
    long long best = -1;
    std::vector<int> witness;
    std::uint64_t nodes = 0;
    bool stop = false;
    std::vector<char> potential; // scratch for the bound

    void init() {
        std::size_t m = ctx->masks.size();
        taken.assign(m, 0);
        violates.assign(m, 0);
        potential.assign(m, 0);
    }

    long long bound_at(int idx) {
        int m = (int)ctx->masks.size();
        long long cnt = 0, cnt_group[2] = {0, 0};
        for (int t = idx; t < m; ++t) {
            bool ok = !violates[(std::size_t)t];
            if (ok)
                for (int c : (*covers)[(std::size_t)t]) {
                    bool present = c < idx ? (bool)taken[(std::size_t)c]
                                           : (bool)potential[(std::size_t)c];
                    if (!present) {
                        ok = false;
                        break;
                    }
                }
            potential[(std::size_t)t] = ok ? 1 : 0;
            if (ok) {
                ++cnt;
                if (group) ++cnt_group[(std::size_t)(*group)[(std::size_t)t]];
            }
        }
        long long simple = (long long)chosen.size() + cnt;
        if (!group) return simple;
        long long in_group[2] = {0, 0};
        for (int c : chosen) ++in_group[(std::size_t)(*group)[(std::size_t)c]];
        long long split = std::min(in_group[0] + cnt_group[0], group_cap[0]) +
                          std::min(in_group[1] + cnt_group[1], group_cap[1]);
        return std::min(simple, split);
    }

    void dfs(int idx) {
        ++nodes;
        if ((long long)chosen.size() > best) {
            best = (long long)chosen.size();
            witness = chosen;
            if (best >= hard_cap) stop = true;
        }
        if (stop || idx == (int)ctx->masks.size()) return;
        if (bound_at(idx) <= best) return;

        bool can_take = !violates[(std::size_t)idx];
        if (can_take)
            for (int c : (*covers)[(std::size_t)idx])
                if (!taken[(std::size_t)c]) {
                    can_take = false;
                    break;
                }

        if (can_take) {
            taken[(std::size_t)idx] = 1;
            std::vector<int> flipped;
            for (int t = idx + 1; t < (int)ctx->masks.size(); ++t) {
                if (violates[(std::size_t)t]) continue;
                for (int a : chosen)
                    if (!ctx->triple_ok(a, idx, t)) {
                        violates[(std::size_t)t] = 1;
                        flipped.push_back(t);
                        break;
                    }
            }
            chosen.push_back(idx);
            dfs(idx + 1);
            chosen.pop_back();
            for (int t : flipped) violates[(std::size_t)t] = 0;
            taken[(std::size_t)idx] = 0;
            if (stop) return;
        }

        dfs(idx + 1);
    }
};

// dominance covers within one layer: decrement one element into a free slot
std::vector<std::vector<int>> dominance_covers(const std::vector<std::uint64_t>& masks) {
    std::vector<std::vector<int>> covers(masks.size());
    auto index_of = [&](std::uint64_t m) {
        auto it = std::lower_bound(masks.begin(), masks.end(), m, mask_canonical_less);
        return (int)(it - masks.begin());
    };
    for (std::size_t i = 0; i < masks.size(); ++i) {
        std::uint64_t m = masks[i];
        for (std::uint64_t rest = m; rest; rest &= rest - 1) {
            int z = std::countr_zero(rest) + 1;
            if (z == 1) continue;
            std::uint64_t lower_bit = 1ull << (z - 2);
            if (m & lower_bit) continue;
            covers[i].push_back(index_of((m ^ (1ull << (z - 1))) | lower_bit));
        }
    }
    return covers;
}

long long clamp_to_ll(const mpz_class& v) {
    if (!v.fits_slong_p()) return LLONG_MAX / 2;
    return (long long)v.get_si();
}

SearchResult finish(RunOutcome out, const GroundSet& ground,
                    const std::vector<std::uint64_t>& masks, SearchMethod method,
                    Clock::time_point started) {
    SearchResult r;
    r.value = std::max(out.value, 0ll);
    std::vector<std::uint64_t> picked;
    picked.reserve(out.witness.size());
    for (int i : out.witness) picked.push_back(masks[(std::size_t)i]);
    r.witness = Family(ground, picked);
    r.method = method;
    r.nodes_explored = out.nodes;
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started)
                   .count();
    return r;
}

} // namespace

SearchResult max_family_brute(const Family& candidates, TripleConstraint constraint, int jobs,
                              int cap) {
    auto started = Clock::now();
    if ((int)candidates.size() > cap)
        throw ResourceCapError("candidate pool exceeds the brute-force cap of " +
                               std::to_string(cap) + "; use the downset search instead");
    Context ctx(candidates.masks(), constraint);
    RunOutcome out = run_brute(ctx, (long long)ctx.masks.size(), jobs);
    return finish(std::move(out), candidates.ground(), ctx.masks, SearchMethod::brute, started);
}

SearchResult exact_max_uniform(int n, int k, int ell, SearchMethod method, int jobs) {
    auto started = Clock::now();
    GroundSet ground(n);
    if (k < 0 || ell < 0) throw std::invalid_argument("k and ell must be nonnegative");

    std::vector<std::uint64_t> masks = k_subset_masks(ground.full_mask(), k);
    std::sort(masks.begin(), masks.end(), mask_canonical_less);

    // provable ceiling used as an early-stop and as the split caps
    long long cap = (long long)masks.size();
    if (ell == 2 && k >= 2 && n >= 3 * k - 2)
        cap = std::min(cap, clamp_to_ll(upper_bound_ell2(n, k)));
    if (ell == 3 && k >= 2 && n >= 3 * k - 3)
        cap = std::min(cap, clamp_to_ll(upper_bound_ell3(n, k)));

    TripleConstraint constraint = TripleConstraint::min_score(ell);

    if (method == SearchMethod::brute) {
        if ((long long)masks.size() > kBruteCandidateCap)
            throw ResourceCapError("C(n,k) exceeds the brute-force cap; use shifted-bb");
        Context ctx(masks, constraint);
        RunOutcome out = run_brute(ctx, cap, jobs);
        return finish(std::move(out), ground, ctx.masks, SearchMethod::brute, started);
    }

    Context ctx(masks, constraint);
    auto covers = dominance_covers(ctx.masks);
    DownsetSearcher searcher;
    searcher.ctx = &ctx;
    searcher.covers = &covers;
    searcher.hard_cap = cap;

    // split bound through the deletion recursion, valid for ell 2 and 3
    std::vector<int> group(ctx.masks.size(), 0);
    long long cap_without = LLONG_MAX / 2, cap_with = LLONG_MAX / 2;
    bool use_group = false;
    if ((ell == 2 || ell == 3) && k >= 3 && n > 3 * k - ell) {
        std::uint64_t top = 1ull << (n - 1);
        for (std::size_t i = 0; i < ctx.masks.size(); ++i)
            group[i] = (ctx.masks[i] & top) ? 1 : 0;
        int base = ell == 2 ? 3 * k - 2 : 3 * k - 3;
        if (n - 1 >= base) {
            cap_without = clamp_to_ll(ell == 2 ? upper_bound_ell2(n - 1, k)
                                               : upper_bound_ell3(n - 1, k));
            use_group = true;
        }
        int base_smaller = ell == 2 ? 3 * (k - 1) - 2 : 3 * (k - 1) - 3;
        if (k - 1 >= 2 && n - 1 >= base_smaller) {
            cap_with = clamp_to_ll(ell == 2 ? upper_bound_ell2(n - 1, k - 1)
                                            : upper_bound_ell3(n - 1, k - 1));
            use_group = true;
        }
    }
    if (use_group) {
        searcher.group = &group;
        searcher.group_cap[0] = cap_without;
        searcher.group_cap[1] = cap_with;
    }

    searcher.init();
    searcher.dfs(0);
    (void)jobs;
    RunOutcome out{searcher.best, std::move(searcher.witness), searcher.nodes};
    return finish(std::move(out), ground, ctx.masks, SearchMethod::shifted_bb, started);
}

SearchResult exact_max_nonuniform(int n, int ell, SearchMethod method, int jobs) {
    auto started = Clock::now();
    GroundSet ground(n);

    if (method == SearchMethod::brute) {
        if (n > 5)
            throw ResourceCapError("brute nonuniform search handles n <= 5; use shifted-bb");
        std::vector<std::uint64_t> masks;
        for (std::uint64_t m = 0;; ++m) {
            masks.push_back(m);
            if (m == ground.full_mask()) break;
        }
        std::sort(masks.begin(), masks.end(), mask_canonical_less);
        Context ctx(masks, TripleConstraint::min_score(ell));
        RunOutcome out = run_brute(ctx, (long long)ctx.masks.size(), jobs);
        return finish(std::move(out), ground, ctx.masks, SearchMethod::brute, started);
    }

    if (n > 6)
        throw ResourceCapError("the canonicalized nonuniform search handles n <= 6");

    // upward-closed shifted families are the downsets of the forcing order
    // "supersets first, then dominance within a layer"
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0;; ++m) {
        masks.push_back(m);
        if (m == ground.full_mask()) break;
    }
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa > pb; // larger sets first
        return mask_lex_less(a, b);
    });

    auto index_of = [&](std::uint64_t m) {
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (masks[i] == m) return (int)i;
        return -1;
    };
    std::vector<std::vector<int>> covers(masks.size());
    std::uint64_t full = ground.full_mask();
    for (std::size_t i = 0; i < masks.size(); ++i) {
        std::uint64_t m = masks[i];
        for (std::uint64_t rest = full & ~m; rest; rest &= rest - 1)
            covers[i].push_back(index_of(m | (rest & -rest)));
        for (std::uint64_t rest = m; rest; rest &= rest - 1) {
            int z = std::countr_zero(rest) + 1;
            if (z == 1) continue;
            std::uint64_t lower_bit = 1ull << (z - 2);
            if (m & lower_bit) continue;
            covers[i].push_back(index_of((m ^ (1ull << (z - 1))) | lower_bit));
        }
    }

    Context ctx(masks, TripleConstraint::min_score(ell));
    DownsetSearcher searcher;
    searcher.ctx = &ctx;
    searcher.covers = &covers;
    searcher.hard_cap = (long long)masks.size();
    searcher.init();
    searcher.dfs(0);
    (void)jobs;
    RunOutcome out{searcher.best, std::move(searcher.witness), searcher.nodes};
    return finish(std::move(out), ground, ctx.masks, SearchMethod::shifted_bb, started);
}

SearchMethod default_nonuniform_method(int n) {
    return n <= 5 ? SearchMethod::brute : SearchMethod::shifted_bb;
}

std::vector<SweepRow> best_j_sweep(int ell, int n, int k_from, int k_to) {
    if (k_from > k_to) throw std::invalid_argument("empty sweep range");
    std::vector<SweepRow> rows;
    rows.reserve((std::size_t)(k_to - k_from + 1));
    for (int k = k_from; k <= k_to; ++k) {
        auto lo = lower_bound_uniform(n, k, ell);
        rows.push_back({k, lo.value, lo.best_j});
    }
    return rows;
}

std::string to_json(const SearchResult& result) {
    nlohmann::json j;
    j["value"] = result.value;
    j["method"] = method_name(result.method);
    nlohmann::json witness = nlohmann::json::array();
    for (const Subset& s : result.witness.members()) witness.push_back(s.elements());
    j["witness"] = witness;
    j["nodes"] = result.nodes_explored;
    j["millis"] = result.millis;
    return j.dump();
}

} // namespace triset
