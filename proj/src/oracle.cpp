#include "wvc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

namespace wvc {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::size_t tally_width(const RuleSpec& r, std::size_t m) { return is_pairwise(r) ? m * m : m; }

// Advances `c` (strictly increasing, values < n) to the next combination in
// lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void atomic_min(std::atomic<std::size_t>& target, std::size_t v) {
    auto cur = target.load();
    while (v < cur && !target.compare_exchange_weak(cur, v)) {
    }
}

void check_pool_cap(const ControlInstance& inst, const OracleOptions& opt) {
    if (inst.pool().size() > opt.pool_cap)
        throw CapExceeded("pool of " + std::to_string(inst.pool().size()) + " voters exceeds oracle cap " +
                          std::to_string(opt.pool_cap));
}

std::size_t search_limit(const ControlInstance& inst) { return std::min(inst.budget, inst.pool().size()); }

void check_subset_count(std::size_t n, std::size_t limit, const OracleOptions& opt) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j <= limit; ++j) total = sat_add(total, binomial(n, j));
    if (total > opt.eval_cap)
        throw CapExceeded("search needs " + std::to_string(total) + " subset evaluations, cap is " +
                          std::to_string(opt.eval_cap));
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        const auto g = std::gcd(r, i);
        const auto num = sat_mul(r / g, n - k + i);
        if (num == kSaturated) return kSaturated;
        r = num / (i / g);
    }
    return r;
}

// ---------------------------------------------------------------------------

TallyKernel::TallyKernel(const ControlInstance& inst)
    : rule_(inst.rule),
      m_(inst.size()),
      preferred_(inst.preferred),
      constructive_(is_constructive(inst.kind)),
      pool_size_(inst.pool().size()) {
    inst.validate();
    const auto w = tally_width(rule_, m_);
    const auto pos = positional_vector(rule_, m_);
    base_.assign(w, 0);
    for (const auto& v : inst.registered) accumulate_vote(rule_, pos, v, base_, m_);
    rows_.assign(w * pool_size_, 0);
    const int sign = is_adding(inst.kind) ? 1 : -1;
    for (std::size_t i = 0; i < pool_size_; ++i)
        accumulate_vote(rule_, pos, inst.pool()[i], {rows_.data() + i * w, w}, m_, sign);

    // Any subset sum is bounded by this; checking it once lets the hot loop
    // add without overflow checks.
    Weight bound = 0;
    for (auto b : base_) bound = std::max(bound, b < 0 ? checked_sub(0, b) : b);
    for (std::size_t i = 0; i < pool_size_; ++i) {
        Weight rmax = 0;
        for (auto x : row(i)) rmax = std::max(rmax, x < 0 ? checked_sub(0, x) : x);
        bound = checked_add(bound, rmax);
    }
}

bool TallyKernel::goal(std::span<const Weight> tally) const {
    const bool wins = tally_is_winner(rule_, tally, m_, preferred_);
    return constructive_ ? wins : !wins;
}

bool TallyKernel::success(std::span<const std::size_t> subset, std::span<Weight> scratch) const {
    std::copy(base_.begin(), base_.end(), scratch.begin());
    const auto w = width();
    for (auto i : subset) {
        const auto* r = rows_.data() + i * w;
        for (std::size_t j = 0; j < w; ++j) scratch[j] += r[j];
    }
    return goal(scratch);
}

// ---------------------------------------------------------------------------

Solution brute_force_control_serial(const ControlInstance& inst, const OracleOptions& opt) {
    inst.validate();
    check_pool_cap(inst, opt);
    const auto n = inst.pool().size();
    const auto limit = search_limit(inst);
    check_subset_count(n, limit, opt);
    for (std::size_t j = 0; j <= limit; ++j) {
        std::vector<std::size_t> c(j);
        std::iota(c.begin(), c.end(), std::size_t{0});
        do {
            if (verify_solution(inst, c)) return {true, c};
        } while (next_combination(c, n));
    }
    return {false, {}};
}

Solution brute_force_control(const ControlInstance& inst, const OracleOptions& opt) {
    check_pool_cap(inst, opt);
    const TallyKernel kernel(inst);
    const auto n = kernel.pool_size();
    const auto limit = search_limit(inst);
    check_subset_count(n, limit, opt);
    const auto w = kernel.width();

    {
        std::vector<Weight> scratch(w);
        if (kernel.success({}, scratch)) return {true, {}};
    }
    for (std::size_t j = 1; j <= limit; ++j) {
        std::atomic<std::size_t> best{n};
        std::vector<std::vector<std::size_t>> found(n);
        const auto firsts = static_cast<long long>(n - j + 1);
#pragma omp parallel
        {
            std::vector<Weight> scratch(w);
            std::vector<std::size_t> subset(j);
#pragma omp for schedule(dynamic)
            for (long long f = 0; f < firsts; ++f) {
                const auto first = static_cast<std::size_t>(f);
                if (first > best.load()) continue;
                // the remaining j-1 indices range over first+1..n-1
                std::vector<std::size_t> rest(j - 1);
                std::iota(rest.begin(), rest.end(), first + 1);
                const auto tail_n = n - first - 1;
                for (auto& r : rest) r -= first + 1;
                do {
                    subset[0] = first;
                    for (std::size_t i = 0; i + 1 < j; ++i) subset[i + 1] = rest[i] + first + 1;
                    if (kernel.success(subset, scratch)) {
                        found[first] = subset;
                        atomic_min(best, first);
                        break;
                    }
                } while (next_combination(rest, tail_n));
            }
        }
        if (best.load() < n) return {true, found[best.load()]};
    }
    return {false, {}};
}

// ---------------------------------------------------------------------------

namespace {

struct VoterClass {
    std::vector<std::size_t> members;
    std::size_t row;  // representative row in the kernel
};

// Depth-first over classes g.., distributing exactly `remaining` picks.
// Returns true on the first success in (count of class g ascending) order.
bool grouped_dfs(const TallyKernel& kernel, const std::vector<VoterClass>& classes,
                 const std::vector<std::size_t>& capacity_from, std::size_t g, std::size_t remaining,
                 std::vector<Weight>& tally, std::vector<std::size_t>& counts) {
    if (g == classes.size()) return remaining == 0 && kernel.goal(tally);
    if (capacity_from[g] < remaining) return false;
    const auto row = kernel.row(classes[g].row);
    const auto max_here = std::min(remaining, classes[g].members.size());
    bool ok = false;
    std::size_t c = 0;
    for (;; ++c) {
        counts[g] = c;
        if (grouped_dfs(kernel, classes, capacity_from, g + 1, remaining - c, tally, counts)) {
            ok = true;
            break;
        }
        if (c == max_here) break;
        for (std::size_t j = 0; j < row.size(); ++j) tally[j] += row[j];
    }
    for (std::size_t j = 0; j < row.size(); ++j) tally[j] -= static_cast<Weight>(c) * row[j];
    if (!ok) counts[g] = 0;
    return ok;
}

}  // namespace

Solution brute_force_control_grouped(const ControlInstance& inst, const OracleOptions& opt) {
    const TallyKernel kernel(inst);
    const auto n = kernel.pool_size();
    const auto limit = search_limit(inst);

    // Approval-family constructive control: a vote that does not approve p
    // (adding) or approves p (deleting) can be dropped from any success.
    const bool approval_family =
        std::holds_alternative<rule::TApproval>(inst.rule) || std::holds_alternative<rule::TVeto>(inst.rule);
    const bool prune = approval_family && is_constructive(inst.kind);
    const auto width = prune ? approval_width(inst.rule, inst.size()) : 0;

    std::vector<VoterClass> classes;
    {
        std::map<std::vector<Weight>, std::size_t> by_row;
        for (std::size_t i = 0; i < n; ++i) {
            if (prune && inst.pool()[i].approval(width)[inst.preferred] != is_adding(inst.kind)) continue;
            auto r = kernel.row(i);
            std::vector<Weight> key(r.begin(), r.end());
            auto [it, fresh] = by_row.emplace(std::move(key), classes.size());
            if (fresh) classes.push_back({{}, i});
            classes[it->second].members.push_back(i);
        }
    }
    const auto G = classes.size();

    // number of count vectors with each sum, via bounded-composition DP; the
    // cap is charged level by level so a small optimum in a large pool is fine
    std::vector<std::uint64_t> ways(limit + 1, 0);
    ways[0] = 1;
    for (const auto& cl : classes) {
        std::vector<std::uint64_t> next(limit + 1, 0);
        for (std::size_t s = 0; s <= limit; ++s)
            if (ways[s])
                for (std::size_t c = 0; c <= cl.members.size() && s + c <= limit; ++c)
                    next[s + c] = sat_add(next[s + c], ways[s]);
        ways = std::move(next);
    }

    std::vector<std::size_t> capacity_from(G + 1, 0);
    for (std::size_t g = G; g-- > 0;) capacity_from[g] = capacity_from[g + 1] + classes[g].members.size();

    auto witness = [&](const std::vector<std::size_t>& counts) {
        std::vector<std::size_t> chosen;
        for (std::size_t g = 0; g < G; ++g)
            chosen.insert(chosen.end(), classes[g].members.begin(),
                          classes[g].members.begin() + static_cast<std::ptrdiff_t>(counts[g]));
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    };

    {
        std::vector<Weight> tally(kernel.base().begin(), kernel.base().end());
        if (kernel.goal(tally)) return {true, {}};
    }
    if (G == 0) return {false, {}};
    std::uint64_t spent = 1;
    for (std::size_t j = 1; j <= limit; ++j) {
        spent = sat_add(spent, ways[j]);
        if (spent > opt.eval_cap)
            throw CapExceeded("grouped search needs " + std::to_string(spent) + " evaluations up to size " +
                              std::to_string(j) + ", cap is " + std::to_string(opt.eval_cap));
        const auto first_max = std::min(j, classes[0].members.size());
        std::atomic<std::size_t> best{first_max + 1};
        std::vector<std::vector<std::size_t>> found(first_max + 1);
#pragma omp parallel for schedule(dynamic)
        for (long long f = 0; f <= static_cast<long long>(first_max); ++f) {
            const auto c0 = static_cast<std::size_t>(f);
            if (c0 > best.load()) continue;
            std::vector<Weight> tally(kernel.base().begin(), kernel.base().end());
            const auto row = kernel.row(classes[0].row);
            for (std::size_t i = 0; i < row.size(); ++i) tally[i] += static_cast<Weight>(c0) * row[i];
            std::vector<std::size_t> counts(G, 0);
            counts[0] = c0;
            if (grouped_dfs(kernel, classes, capacity_from, 1, j - c0, tally, counts)) {
                found[c0] = counts;
                atomic_min(best, c0);
            }
        }
        if (best.load() <= first_max) return {true, witness(found[best.load()])};
    }
    return {false, {}};
}

// ---------------------------------------------------------------------------

WcmSolution brute_force_wcm(const WcmInstance& inst, const OracleOptions& opt) {
    inst.validate();
    const auto m = inst.size();
    const auto n = inst.manipulator_weights.size();

    std::vector<std::vector<CandidateIndex>> perms;
    {
        std::vector<CandidateIndex> p(m);
        std::iota(p.begin(), p.end(), CandidateIndex{0});
        std::uint64_t count = 1;
        for (std::size_t i = 2; i <= m; ++i) count = sat_mul(count, i);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total = sat_mul(total, count);
        if (count > opt.eval_cap || total > opt.eval_cap)
            throw CapExceeded("WCM search needs " + std::to_string(total) + " evaluations, cap is " +
                              std::to_string(opt.eval_cap));
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    const auto P = perms.size();
    const auto w = tally_width(inst.rule, m);
    const auto pos = positional_vector(inst.rule, m);

    std::vector<Weight> base(w, 0);
    for (const auto& v : inst.registered) accumulate_vote(inst.rule, pos, v, base, m);
    // rows[i][π] = contribution of manipulator i voting π
    std::vector<std::vector<Weight>> rows(n, std::vector<Weight>(P * w, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < P; ++q)
            accumulate_vote(inst.rule, pos, WeightedVote{inst.manipulator_weights[i], perms[q]},
                            {rows[i].data() + q * w, w}, m);

    auto build = [&](const std::vector<std::size_t>& idx) {
        WcmSolution s{true, {}};
        for (std::size_t i = 0; i < n; ++i) s.manipulators.push_back({inst.manipulator_weights[i], perms[idx[i]]});
        return s;
    };

    if (n == 0) {
        if (tally_is_winner(inst.rule, base, m, inst.preferred)) return {true, {}};
        return {false, {}};
    }

    std::atomic<std::size_t> best{P};
    std::vector<std::vector<std::size_t>> found(P);
#pragma omp parallel for schedule(dynamic)
    for (long long f = 0; f < static_cast<long long>(P); ++f) {
        const auto first = static_cast<std::size_t>(f);
        if (first > best.load()) continue;
        std::vector<std::size_t> idx(n, 0);
        idx[0] = first;
        std::vector<Weight> tally(w);
        while (true) {
            std::copy(base.begin(), base.end(), tally.begin());
            for (std::size_t i = 0; i < n; ++i) {
                const auto* r = rows[i].data() + idx[i] * w;
                for (std::size_t j = 0; j < w; ++j) tally[j] = checked_add(tally[j], r[j]);
            }
            if (tally_is_winner(inst.rule, tally, m, inst.preferred)) {
                found[first] = idx;
                atomic_min(best, first);
                break;
            }
            // mixed-radix increment over manipulators 1..n-1, last fastest
            std::size_t i = n;
            while (i-- > 1) {
                if (++idx[i] < P) break;
                idx[i] = 0;
            }
            if (i == 0) break;
        }
    }
    if (best.load() < P) return build(found[best.load()]);
    return {false, {}};
}

}  // namespace wvc
