#include "wvc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wvc {

namespace {

constexpr Weight kMaxPartitionSum = 10'000'000;

std::string join(const std::vector<Weight>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

Weight sum_of(const std::vector<Weight>& ks) {
    Weight s = 0;
    for (auto k : ks) s = checked_add(s, k);
    return s;
}

std::string mode_name(HardMode mode) { return mode == HardMode::Wccav ? "wccav" : "wccdv"; }

// p, a, b, then c4..cm
std::vector<std::string> pab_candidates(std::size_t m) {
    std::vector<std::string> names{"p", "a", "b"};
    for (std::size_t i = 4; i <= m; ++i) names.push_back("c" + std::to_string(i));
    return names;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::size_t> X3cInstance::occurrences() const {
    std::vector<std::size_t> occ(elements(), 0);
    for (const auto& s : sets)
        for (auto e : s) ++occ.at(e);
    return occ;
}

void X3cInstance::validate() const {
    if (t == 0) throw ValidationError("X3C' needs t >= 1");
    std::set<std::array<std::size_t, 3>> seen;
    for (auto s : sets) {
        for (auto e : s)
            if (e >= elements()) throw ValidationError("X3C' set references element " + std::to_string(e));
        std::sort(s.begin(), s.end());
        if (s[0] == s[1] || s[1] == s[2]) throw ValidationError("X3C' sets must have three distinct elements");
        if (!seen.insert(s).second) throw ValidationError("X3C' family repeats a set");
    }
    for (auto o : occurrences())
        if (o < 1 || o > 3) throw ValidationError("X3C' elements must occur in one to three sets");
}

void validate_partition(const std::vector<Weight>& ks) {
    if (ks.empty()) throw ValidationError("Partition needs at least one number");
    for (auto k : ks)
        if (k < 1) throw ValidationError("Partition numbers must be positive");
    if (sum_of(ks) % 2 != 0) throw ValidationError("Partition numbers must have an even sum");
}

void validate_partition_prime(const std::vector<Weight>& ks) {
    validate_partition(ks);
    if (ks.size() % 2 != 0) throw ValidationError("Partition' needs an even count");
    const auto total = sum_of(ks);
    const auto n1 = static_cast<Weight>(ks.size() + 1);
    for (auto k : ks)
        if (checked_mul(k, n1) < total) throw ValidationError("Partition' needs every k_i >= sum/(t+1)");
}

std::optional<std::vector<std::size_t>> solve_partition(const std::vector<Weight>& ks) {
    validate_partition(ks);
    const auto total = sum_of(ks);
    if (total > kMaxPartitionSum) throw CapExceeded("Partition sum too large for the DP oracle");
    const auto half = static_cast<std::size_t>(total / 2);
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> from(half + 1, none);
    std::vector<bool> reach(half + 1, false);
    reach[0] = true;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const auto k = static_cast<std::size_t>(ks[i]);
        for (std::size_t s = half; s >= k && s > 0; --s)
            if (!reach[s] && reach[s - k]) {
                reach[s] = true;
                from[s] = i;
            }
    }
    if (!reach[half]) return std::nullopt;
    std::vector<std::size_t> out;
    for (auto s = half; s > 0; s -= static_cast<std::size_t>(ks[out.back()])) out.push_back(from[s]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<std::size_t>> solve_partition_prime(const std::vector<Weight>& ks) {
    validate_partition_prime(ks);
    const auto total = sum_of(ks);
    if (total > kMaxPartitionSum) throw CapExceeded("Partition' sum too large for the DP oracle");
    const auto half = static_cast<std::size_t>(total / 2);
    const auto want = ks.size() / 2;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    // from[c][s]: item that first reached (count c, sum s)
    std::vector<std::vector<std::size_t>> from(want + 1, std::vector<std::size_t>(half + 1, none));
    std::vector<std::vector<bool>> reach(want + 1, std::vector<bool>(half + 1, false));
    reach[0][0] = true;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        const auto k = static_cast<std::size_t>(ks[i]);
        for (std::size_t c = want; c >= 1; --c)
            for (std::size_t s = half; s >= k; --s) {
                if (!reach[c][s] && reach[c - 1][s - k]) {
                    reach[c][s] = true;
                    from[c][s] = i;
                }
                if (s == 0) break;
            }
    }
    if (!reach[want][half]) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t c = want, s = half; c > 0; --c) {
        const auto i = from[c][s];
        out.push_back(i);
        s -= static_cast<std::size_t>(ks[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<std::size_t>> solve_x3c(const X3cInstance& src) {
    src.validate();
    const auto n = src.elements();
    std::vector<bool> covered(n, false);
    std::vector<std::size_t> pick;
    auto go = [&](auto&& self) -> bool {
        std::size_t e = 0;
        while (e < n && covered[e]) ++e;
        if (e == n) return true;
        for (std::size_t i = 0; i < src.sets.size(); ++i) {
            const auto& s = src.sets[i];
            if (std::find(s.begin(), s.end(), e) == s.end()) continue;
            if (covered[s[0]] || covered[s[1]] || covered[s[2]]) continue;
            for (auto x : s) covered[x] = true;
            pick.push_back(i);
            if (self(self)) return true;
            pick.pop_back();
            for (auto x : s) covered[x] = false;
        }
        return false;
    };
    if (!go(go)) return std::nullopt;
    std::sort(pick.begin(), pick.end());
    return pick;
}

// ---------------------------------------------------------------------------

const std::string* Provenance::find(const std::string& key) const {
    for (const auto& [k, v] : params)
        if (k == key) return &v;
    return nullptr;
}

GeneratedInstance gen_borda_partition(const std::vector<Weight>& ks, HardMode mode, std::size_t m) {
    validate_partition(ks);
    if (m < 3) throw ConstructionError("Borda construction needs m >= 3");
    const auto K = sum_of(ks) / 2;
    enum : CandidateIndex { p = 0, a = 1, b = 2 };

    GeneratedInstance g;
    auto& inst = g.control;
    inst.kind = mode == HardMode::Wccav ? ControlKind::WCCAV : ControlKind::WCCDV;
    inst.rule = rule::Borda{};
    inst.candidates = pab_candidates(m);
    inst.preferred = p;
    inst.budget = ks.size();
    const std::vector<CandidateIndex> bpa{b, p, a}, apb{a, p, b};
    inst.registered.push_back(vote_from_top(K, bpa, m));
    auto& pool = mode == HardMode::Wccav ? inst.unregistered : inst.registered;
    for (auto k : ks) pool.push_back(vote_from_top(k, apb, m));

    g.label = solve_partition(ks).has_value();
    g.provenance = {"borda-partition", {{"ks", join(ks)}, {"mode", mode_name(mode)}, {"m", std::to_string(m)}}};
    return g;
}

Weight partition_prime_group_size(std::size_t t, Weight g1, Weight g2) {
    if (g1 <= g2) throw ConstructionError("group size needs g1 > g2");
    const auto num = checked_mul(checked_mul(static_cast<Weight>(t / 2), static_cast<Weight>(t + 1)), g1);
    const auto den = g1 - g2;
    return (num + den - 1) / den + 1;
}

GeneratedInstance gen_scoring_partitionprime(const ScoringVector& alpha, const std::vector<Weight>& ks,
                                             HardMode mode, std::optional<Weight> T) {
    const auto values = alpha.distinct_values();
    if (values.size() < 3)
        throw ConstructionError("construction needs a scoring vector with at least three distinct values");
    if (mode == HardMode::Wccav)
        validate_partition(ks);
    else
        validate_partition_prime(ks);
    const auto m = alpha.size();
    const auto x = values[2];
    const auto beta = alpha.shift(x);
    const Weight g1 = values[0] - x, g2 = values[1] - x;
    const Weight group = T ? *T : (mode == HardMode::Wccav ? 1 : partition_prime_group_size(ks.size(), g1, g2));
    if (group < 1) throw ValidationError("group size T must be positive");
    const auto K = sum_of(ks) / 2;
    enum : CandidateIndex { p = 0, a = 1, b = 2 };

    auto slot_of = [&](Weight v) {
        for (std::size_t i = 0; i < m; ++i)
            if (beta[i] == v) return i;
        throw ConstructionError("scoring vector lacks a required value");
    };
    // F[...]: fixed slots, everybody else fills the free slots by ascending index
    auto place = [&](Weight w, const std::vector<std::pair<CandidateIndex, std::size_t>>& fixed) {
        WeightedVote v{w, std::vector<CandidateIndex>(m, m)};
        std::vector<bool> used(m, false);
        for (auto [c, slot] : fixed) {
            v.prefs[slot] = c;
            used[c] = true;
        }
        CandidateIndex next = 0;
        for (auto& slot : v.prefs) {
            if (slot != m) continue;
            while (used[next]) ++next;
            slot = next;
            used[next] = true;
        }
        return v;
    };
    const auto s1 = slot_of(g1), s2 = slot_of(g2), s0 = slot_of(0);

    GeneratedInstance g;
    auto& inst = g.control;
    inst.kind = mode == HardMode::Wccav ? ControlKind::WCCAV : ControlKind::WCCDV;
    inst.rule = rule::Scoring{alpha};
    inst.candidates = pab_candidates(m);
    inst.preferred = p;
    inst.budget = mode == HardMode::Wccav ? ks.size() : ks.size() / 2;

    for (Weight i = 0; i < group; ++i) inst.registered.push_back(place(K, {{b, s1}, {a, s2}, {p, s0}}));
    for (Weight i = 0; i < group; ++i) inst.registered.push_back(place(K, {{p, s1}, {b, s2}, {a, s0}}));
    std::array<CandidateIndex, 3> perm{p, a, b};
    for (CandidateIndex c = 3; c < m; ++c) {
        std::sort(perm.begin(), perm.end());
        do {
            for (Weight i = 0; i < 2 * group; ++i)
                inst.registered.push_back(place(K, {{perm[0], 0}, {perm[1], 1}, {perm[2], 2}, {c, m - 1}}));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    auto& pool = mode == HardMode::Wccav ? inst.unregistered : inst.registered;
    for (auto k : ks) pool.push_back(place(checked_mul(group, k), {{a, s1}, {p, s2}, {b, s0}}));

    g.label = mode == HardMode::Wccav ? solve_partition(ks).has_value() : solve_partition_prime(ks).has_value();
    g.provenance = {"scoring-partition-prime",
                    {{"alpha", join(alpha.alphas())}, {"ks", join(ks)}, {"mode", mode_name(mode)},
                     {"T", std::to_string(group)}}};
    return g;
}

GeneratedInstance gen_condorcet_partition(const std::vector<Weight>& ks, HardMode mode, std::size_t m,
                                          RuleSpec rule) {
    validate_partition(ks);
    if (m < 3) throw ConstructionError("Condorcet construction needs m >= 3");
    if (!is_pairwise(rule)) throw UnsupportedRule("Condorcet construction needs a pairwise rule");
    const auto K = sum_of(ks) / 2;
    enum : CandidateIndex { p = 0, a = 1, b = 2 };

    GeneratedInstance g;
    auto& inst = g.control;
    inst.kind = mode == HardMode::Wccav ? ControlKind::WCCAV : ControlKind::WCCDV;
    inst.rule = std::move(rule);
    inst.candidates = pab_candidates(m);
    inst.preferred = p;
    inst.budget = ks.size();
    const std::vector<CandidateIndex> pab{p, a, b}, bpa{b, p, a}, apb{a, p, b};
    inst.registered.push_back(vote_from_top(1, pab, m));
    inst.registered.push_back(vote_from_top(checked_mul(2, K), bpa, m));
    auto& pool = mode == HardMode::Wccav ? inst.unregistered : inst.registered;
    for (auto k : ks) pool.push_back(vote_from_top(checked_mul(2, k), apb, m));

    g.label = solve_partition(ks).has_value();
    g.provenance = {"condorcet-partition", {{"ks", join(ks)}, {"mode", mode_name(mode)}, {"m", std::to_string(m)}}};
    return g;
}

// ---------------------------------------------------------------------------

namespace {

std::string sets_param(const X3cInstance& src) {
    std::string s;
    for (std::size_t i = 0; i < src.sets.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(src.sets[i][0] + 1) + "," + std::to_string(src.sets[i][1] + 1) + "," +
             std::to_string(src.sets[i][2] + 1);
    }
    return s;
}

std::array<std::size_t, 3> sorted(std::array<std::size_t, 3> s) {
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

Weight x3c_padding_multiplier(Weight w1, Weight w2) {
    if (!(w2 > w1 && w1 > 0)) throw ValidationError("weights must satisfy w2 > w1 > 0");
    const auto target = std::max(checked_mul(2, w1), w2);
    return target / w1 + 1;
}

GeneratedInstance gen_x3c_2approval_wccdv(const X3cInstance& src, std::optional<std::pair<Weight, Weight>> weights) {
    src.validate();
    const auto t = src.t, n = src.sets.size();
    const auto occ = src.occurrences();

    std::vector<std::string> names{"p"};
    for (std::size_t j = 0; j < 3 * t; ++j) names.push_back("b" + std::to_string(j + 1));
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("s" + std::to_string(i + 1));
        names.push_back("s'" + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j <= 3 * t; ++j) names.push_back("d" + std::to_string(j));
    const auto m = names.size();
    const CandidateIndex p = 0;
    auto b = [](std::size_t j) -> CandidateIndex { return 1 + j; };
    auto s = [&](std::size_t i) -> CandidateIndex { return 1 + 3 * t + 2 * i; };
    auto s2 = [&](std::size_t i) -> CandidateIndex { return 2 + 3 * t + 2 * i; };
    auto d = [&](std::size_t j) -> CandidateIndex { return 1 + 3 * t + 2 * n + j; };

    GeneratedInstance g;
    auto& inst = g.control;
    inst.kind = ControlKind::WCCDV;
    inst.rule = rule::TApproval{2};
    inst.candidates = names;
    inst.preferred = p;
    inst.budget = n + 2 * t;
    auto add = [&](Weight w, CandidateIndex x, CandidateIndex y) {
        const std::vector<CandidateIndex> top{x, y};
        inst.registered.push_back(vote_from_top(w, top, m));
    };

    const auto [w1, w2] = weights ? *weights : std::pair<Weight, Weight>{1, 2};
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = sorted(src.sets[i]);
        add(w2, s(i), s2(i));
        add(w1, s(i), b(e[0]));
        add(w1, s(i), b(e[1]));
        add(w1, s2(i), b(e[2]));
    }
    if (!weights) {
        add(2, p, d(0));
        for (std::size_t j = 0; j < 3 * t; ++j)
            if (occ[j] < 3) add(static_cast<Weight>(3 - occ[j]), b(j), d(j + 1));
    } else {
        if (w2 <= 2 * w1) {
            add(w1, p, d(0));
            add(w1, p, d(0));
        } else {
            add(w2, p, d(0));
        }
        const auto l = x3c_padding_multiplier(w1, w2);
        for (std::size_t j = 0; j < 3 * t; ++j)
            for (Weight r = 0; r < l - static_cast<Weight>(occ[j]); ++r) add(w1, b(j), d(j + 1));
    }

    g.label = solve_x3c(src).has_value();
    g.provenance = {"x3c-2approval", {{"t", std::to_string(t)}, {"sets", sets_param(src)}}};
    if (weights) {
        g.provenance.params.emplace_back("w1", std::to_string(w1));
        g.provenance.params.emplace_back("w2", std::to_string(w2));
        g.provenance.params.emplace_back("l", std::to_string(x3c_padding_multiplier(w1, w2)));
    }
    return g;
}

GeneratedInstance gen_x3c_3veto_wccdv(const X3cInstance& src) {
    src.validate();
    const auto t = src.t, n = src.sets.size();
    const auto occ = src.occurrences();

    std::vector<std::string> names{"p"};
    for (std::size_t j = 0; j < 3 * t; ++j) names.push_back("b" + std::to_string(j + 1));
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
    names.insert(names.end(), {"r", "d", "d'"});
    const auto m = names.size();
    const CandidateIndex p = 0;
    auto b = [](std::size_t j) -> CandidateIndex { return 1 + j; };
    auto s = [&](std::size_t i) -> CandidateIndex { return 1 + 3 * t + i; };
    const CandidateIndex r = 1 + 3 * t + n, d = r + 1, d2 = r + 2;

    GeneratedInstance g;
    auto& inst = g.control;
    inst.kind = ControlKind::WCCDV;
    inst.rule = rule::TVeto{3};
    inst.candidates = names;
    inst.preferred = p;
    inst.budget = n + 2 * t;
    auto veto = [&](Weight w, CandidateIndex x, CandidateIndex y, CandidateIndex z) {
        const std::vector<CandidateIndex> bottom{x, y, z};
        inst.registered.push_back(vote_from_bottom(w, bottom, m));
    };

    for (std::size_t i = 0; i < n; ++i) {
        const auto e = sorted(src.sets[i]);
        veto(3, p, s(i), r);
        for (auto x : e) veto(1, p, s(i), b(x));
    }
    for (std::size_t q = 0; q < 3 * n - 3 * t; ++q) veto(1, d, d2, r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q + 3 < 3 * n; ++q) veto(1, d, d2, s(i));
    for (std::size_t j = 0; j < 3 * t; ++j)
        for (std::size_t q = 0; q < 3 * n + 1 - occ[j]; ++q) veto(1, d, d2, b(j));

    g.label = solve_x3c(src).has_value();
    g.provenance = {"x3c-3veto", {{"t", std::to_string(t)}, {"sets", sets_param(src)}}};
    return g;
}

// ---------------------------------------------------------------------------

std::vector<WeightedVote> realize_gaps(std::size_t t, const std::vector<Weight>& gaps, bool weighted) {
    if (t < 2) throw ValidationError("gap realization needs t >= 2");
    const auto m = 2 * t;
    if (gaps.size() != m - 1) throw ValidationError("gap realization needs exactly 2t-1 gaps");
    for (auto gp : gaps)
        if (gp < 0 || gp % static_cast<Weight>(t) != 0)
            throw ValidationError("gap " + std::to_string(gp) + " is not a nonnegative multiple of t = " +
                                  std::to_string(t));
    std::vector<WeightedVote> votes;
    for (std::size_t c = 0; c + 1 < m; ++c) {
        const auto reps = gaps[c] / static_cast<Weight>(t);
        if (reps == 0) continue;
        std::vector<CandidateIndex> others;
        for (CandidateIndex o = 0; o < m; ++o)
            if (o != c) others.push_back(o);
        // c plus a window of t-1 others sliding cyclically: c gains t over everybody
        std::vector<WeightedVote> block;
        for (std::size_t j = 0; j < others.size(); ++j) {
            std::vector<CandidateIndex> top{c};
            for (std::size_t q = 0; q + 1 < t; ++q) top.push_back(others[(j + q) % others.size()]);
            std::sort(top.begin(), top.end());
            block.push_back(vote_from_top(weighted ? reps : 1, top, m));
        }
        const auto copies = weighted ? 1 : reps;
        for (Weight r = 0; r < copies; ++r) votes.insert(votes.end(), block.begin(), block.end());
    }
    return votes;
}

GeneratedInstance gen_gbw_worstcase(std::size_t t, WorstCaseMode mode) {
    if (t < 2) throw ValidationError("worst-case family needs t >= 2");
    const auto m = 2 * t;
    const auto T = static_cast<Weight>(t);
    std::vector<std::string> names{"p"};
    for (std::size_t i = 1; i <= t; ++i) names.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i < t; ++i) names.push_back("d" + std::to_string(i));
    const CandidateIndex p = 0;
    auto a = [](std::size_t i) -> CandidateIndex { return i; };          // 1-based
    auto d = [t](std::size_t i) -> CandidateIndex { return t + i; };     // 1-based
    std::vector<CandidateIndex> all_a, all_d;
    for (std::size_t i = 1; i <= t; ++i) all_a.push_back(a(i));
    for (std::size_t i = 1; i < t; ++i) all_d.push_back(d(i));

    GeneratedInstance g;
    auto& inst = g.control;
    inst.candidates = names;
    inst.preferred = p;
    inst.budget = t;
    g.label = true;

    if (mode == WorstCaseMode::TApprovalWccav) {
        inst.kind = ControlKind::WCCAV;
        inst.rule = rule::TApproval{t};
        inst.registered.push_back(vote_from_top(2 * T, all_a, m));
        std::vector<CandidateIndex> nice{p};
        nice.insert(nice.end(), all_d.begin(), all_d.end());
        inst.unregistered.push_back(vote_from_top(2 * T, nice, m));
        for (std::size_t j = 1; j <= t; ++j) {
            std::vector<CandidateIndex> top{p};
            for (std::size_t i = 1; i <= t; ++i)
                if (i != j) top.push_back(a(i));
            inst.unregistered.push_back(vote_from_top(3 * T, top, m));
        }
        g.provenance = {"gbw-worstcase", {{"t", std::to_string(t)}, {"mode", "tapproval-wccav"}}};
        return g;
    }

    inst.kind = ControlKind::WCCDV;
    inst.rule = rule::TVeto{t};
    // realize_gaps layout: gap slots 0..2t-2, reference slot 2t-1 (= d_1).
    std::vector<CandidateIndex> slot_to_candidate{p};
    std::vector<Weight> gaps{3 * T * T + 3 * T};
    for (std::size_t i = 1; i <= t; ++i) {
        slot_to_candidate.push_back(a(i));
        gaps.push_back(3 * T * T);
    }
    for (std::size_t i = 2; i < t; ++i) {
        slot_to_candidate.push_back(d(i));
        gaps.push_back(0);
    }
    slot_to_candidate.push_back(d(1));
    for (const auto& v : realize_gaps(t, gaps, false)) {
        std::vector<CandidateIndex> top;
        for (std::size_t q = 0; q < t; ++q) top.push_back(slot_to_candidate[v.prefs[q]]);
        std::sort(top.begin(), top.end());
        inst.registered.push_back(vote_from_top(v.weight, top, m));
    }
    inst.registered.push_back(vote_from_top(2 * T, all_a, m));
    for (std::size_t j = 1; j <= t; ++j) {
        std::vector<CandidateIndex> top{a(j)};
        top.insert(top.end(), all_d.begin(), all_d.end());
        inst.registered.push_back(vote_from_top(3 * T, top, m));
    }
    g.provenance = {"gbw-worstcase", {{"t", std::to_string(t)}, {"mode", "tveto-wccdv"}}};
    return g;
}

}  // namespace wvc
