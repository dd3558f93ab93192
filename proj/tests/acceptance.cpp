// Runs the ten acceptance checks and prints one PASS/FAIL line per check.
// Exit status is the number of failed checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "wvc/approx.hpp"
#include "wvc/exact.hpp"
#include "wvc/generators.hpp"
#include "wvc/oracle.hpp"
#include "wvc/random.hpp"
#include "wvc/reductions.hpp"

using namespace wvc;
using Idx = std::vector<std::size_t>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Weight> sorted_weights(const std::vector<WeightedVote>& vs) {
    std::vector<Weight> w;
    for (const auto& v : vs) w.push_back(v.weight);
    std::sort(w.begin(), w.end());
    return w;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// --------------------------------------------------------------------------

Outcome pruning_equivalence() {
    Rng rng(101);
    int mismatches = 0, yes = 0, bad_witness = 0;
    const int total = 600;
    for (int i = 0; i < total; ++i) {
        const auto m = draw(rng, 3, 8), nv = draw(rng, 0, 8), nw = draw(rng, 0, 10);
        auto inst =
            random_control(rng, {ControlKind::WCCAV, rule::TApproval{2}, m, nv, nw, 20, draw(rng, 0, nw)});
        const auto fast = solve_2approval_wccav(inst).solution;
        const auto ref = brute_force_control(inst);
        mismatches += fast.feasible != ref.feasible;
        yes += ref.feasible;
        if (fast.feasible && !(within_budget(inst, fast) && verify_solution(inst, fast))) ++bad_witness;
    }
    return {mismatches == 0 && bad_witness == 0,
            std::to_string(total) + " instances, " + std::to_string(yes) + " yes, " + std::to_string(mismatches) +
                " mismatches, " + std::to_string(bad_witness) + " bad witnesses"};
}

Outcome fixed_m_equivalence() {
    Rng rng(202);
    int mismatches = 0, checked = 0;
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{3, 1}, {3, 2}, {4, 2}, {5, 3}};
    for (auto [m, t] : shapes)
        for (auto kind : {ControlKind::WCCAV, ControlKind::WCCDV})
            for (int i = 0; i < 300; ++i) {
                const bool adding = is_adding(kind);
                const auto nv = draw(rng, adding ? 0 : 1, 8), nw = adding ? draw(rng, 0, 10) : 0;
                const auto budget = draw(rng, 0, adding ? nw : nv);
                auto inst = random_control(rng, {kind, rule::TApproval{t}, m, nv, nw, 20, budget});
                const auto fast = solve_fixed_m_tapproval(inst);
                const auto ref = brute_force_control(inst);
                ++checked;
                if (fast.feasible != ref.feasible || (fast.feasible && fast.chosen.size() != ref.chosen.size()) ||
                    (fast.feasible && !verify_solution(inst, fast)))
                    ++mismatches;
            }
    return {mismatches == 0, std::to_string(checked) + " instances over 4 shapes x 2 problems, " +
                                 std::to_string(mismatches) + " mismatches (verdict or optimum size)"};
}

Outcome borda_counterexample() {
    ControlInstance inst;
    inst.kind = ControlKind::WCCAV;
    inst.rule = rule::Borda{};
    inst.candidates = {"p", "a", "b"};
    // registered b > p > a; pool a > p > b with weights 1 and 2
    inst.registered = {WeightedVote{1, {2, 0, 1}}};
    inst.unregistered = {WeightedVote{1, {1, 0, 2}}, WeightedVote{2, {1, 0, 2}}};
    inst.budget = 1;
    const bool light = verify_solution(inst, Idx{0});
    const bool heavy = verify_solution(inst, Idx{1});
    return {light && !heavy, std::string("adding weight 1: ") + (light ? "p wins" : "p loses") +
                                 ", adding weight 2: " + (heavy ? "p wins" : "p loses")};
}

Outcome reduction_soundness() {
    Rng rng(404);
    int mismatches = 0, bad_map = 0, bad_weights = 0, yes = 0;
    const int total = 240;
    for (int i = 0; i < total; ++i) {
        const bool veto = i % 2 == 0;
        const std::size_t t = 1 + (i / 2) % 3;
        const auto m = t + draw(rng, 1, 3), n = draw(rng, 1, 6);
        const RuleSpec r = veto ? RuleSpec{rule::TVeto{t}} : RuleSpec{rule::TApproval{t}};
        auto src = random_control(rng, {ControlKind::WCCDV, r, m, n, 0, 12, draw(rng, 0, n)});
        const auto red = veto ? reduce_tveto_wccdv_to_tapproval_wccav(src) : reduce_tapproval_wccdv_to_tveto_wccav(src);
        const auto a = brute_force_control(src), b = brute_force_control(red.target);
        mismatches += a.feasible != b.feasible;
        yes += a.feasible;
        if (b.feasible && !verify_solution(src, red.map_back(b))) ++bad_map;
        if (sorted_weights(src.registered) != sorted_weights(red.target.unregistered)) ++bad_weights;
    }
    return {mismatches == 0 && bad_map == 0 && bad_weights == 0,
            std::to_string(total) + " instances (both directions), " + std::to_string(yes) + " yes, " +
                std::to_string(mismatches) + " verdict mismatches, " + std::to_string(bad_map) +
                " bad back-maps, " + std::to_string(bad_weights) + " weight multiset changes"};
}

Outcome gbw_upper_bound() {
    Rng rng(505);
    struct Combo {
        ControlKind kind;
        bool veto;
        const char* name;
    };
    const std::vector<Combo> combos{{ControlKind::WCCAV, false, "t-approval-WCCAV"},
                                    {ControlKind::WCCAV, true, "t-veto-WCCAV"},
                                    {ControlKind::WCCDV, false, "t-approval-WCCDV"},
                                    {ControlKind::WCCDV, true, "t-veto-WCCDV"}};
    int feasible = 0, capped = 0, violations = 0, total = 0;
    double worst = 0;
    std::map<std::string, int> by_combo;
    for (std::size_t t = 2; t <= 4; ++t)
        for (const auto& c : combos)
            for (int i = 0; i < 250; ++i) {
                ++total;
                const bool adding = is_adding(c.kind);
                const auto m = t + draw(rng, 1, 4);
                const auto nv = draw(rng, adding ? 1 : 3, adding ? 8 : 12), nw = adding ? draw(rng, 1, 12) : 0;
                const RuleSpec r = c.veto ? RuleSpec{rule::TVeto{t}} : RuleSpec{rule::TApproval{t}};
                auto inst = random_control(rng, {c.kind, r, m, nv, nw, 20, adding ? nw : nv});
                std::optional<std::size_t> opt;
                try {
                    opt = unbudgeted_optimum(inst, {});
                } catch (const CapExceeded&) {
                    ++capped;
                    continue;
                }
                const auto run = adding ? gbw_add(inst) : gbw_delete(inst);
                if (run.solution.feasible != opt.has_value()) {
                    ++violations;
                    continue;
                }
                if (!opt || *opt == 0) continue;
                ++feasible;
                const auto g = run.solution.chosen.size();
                worst = std::max(worst, static_cast<double>(g) / static_cast<double>(*opt));
                if (g > t * *opt) {
                    ++violations;
                    ++by_combo[std::string(c.name) + " t=" + std::to_string(t)];
                }
            }
    std::string detail = std::to_string(total) + " instances, " + std::to_string(feasible) +
                         " feasible with positive optimum, " + std::to_string(capped) + " capped, " +
                         std::to_string(violations) + " violations, worst ratio " + fmt("%.3f", worst);
    for (const auto& [k, v] : by_combo) detail += "; " + k + ": " + std::to_string(v);
    return {violations == 0 && feasible >= 1000, detail};
}

Outcome gbw_tightness() {
    std::string bad;
    for (std::size_t t = 2; t <= 6; ++t)
        for (auto mode : {WorstCaseMode::TApprovalWccav, WorstCaseMode::TVetoWccdv}) {
            const auto g = gen_gbw_worstcase(t, mode);
            const auto run = mode == WorstCaseMode::TApprovalWccav ? gbw_add(g.control) : gbw_delete(g.control);
            const auto opt = unbudgeted_optimum(g.control, {});
            if (!run.solution.feasible || run.solution.chosen.size() != t || opt != std::optional<std::size_t>{1})
                bad += " t=" + std::to_string(t) + (mode == WorstCaseMode::TApprovalWccav ? "/add" : "/delete");
        }
    return {bad.empty(), bad.empty() ? "t = 2..6, both modes: GBW takes t votes, optimum 1"
                                     : "wrong on" + bad};
}

Outcome wmc_equivalence() {
    Rng rng(707);
    int mismatches = 0, greedy_misses = 0, instances = 0, feasible = 0;
    double ratio_sum = 0, ratio_max = 0;
    for (int i = 0; i < 160; ++i) {
        const std::size_t t = 1 + i % 3;
        const bool veto = (i / 3) % 2;
        const auto kind = (i / 6) % 2 ? ControlKind::WCCAV : ControlKind::WCCDV;
        const bool adding = is_adding(kind);
        const auto m = t + draw(rng, 1, 4);
        const RuleSpec r = veto ? RuleSpec{rule::TVeto{t}} : RuleSpec{rule::TApproval{t}};
        auto inst = random_control(rng, {kind, r, m, adding ? draw(rng, 1, 6) : draw(rng, 2, 12),
                                         adding ? draw(rng, 1, 12) : 0, 15, 0});
        const auto tr = adding ? to_wmc(inst) : wccdv_to_wmc(inst);
        const auto& w = tr.wmc;
        ++instances;
        int best = -1;
        for (std::uint32_t mask = 0; mask < (1u << w.sets.size()); ++mask) {
            Idx cover;
            for (std::size_t s = 0; s < w.sets.size(); ++s)
                if (mask >> s & 1) cover.push_back(s);
            const bool ok = wmc_satisfied(w, cover);
            if (ok != verify_solution(inst, tr.to_solution(cover))) ++mismatches;
            if (ok && (best < 0 || static_cast<int>(cover.size()) < best)) best = static_cast<int>(cover.size());
        }
        const auto g = greedy_wmc(w);
        if (best >= 0) {
            ++feasible;
            if (!g || !wmc_satisfied(w, *g)) {
                ++greedy_misses;
                continue;
            }
            const double ratio = best == 0 ? 1.0 : static_cast<double>(g->size()) / best;
            ratio_sum += ratio;
            ratio_max = std::max(ratio_max, ratio);
        } else if (g) {
            ++greedy_misses;
        }
    }
    return {mismatches == 0 && greedy_misses == 0,
            std::to_string(instances) + " instances, pools <= 12, " + std::to_string(mismatches) +
                " subset mismatches, greedy feasible on " + std::to_string(feasible - greedy_misses) + "/" +
                std::to_string(feasible) + ", greedy/optimum mean " +
                fmt("%.3f", feasible ? ratio_sum / feasible : 0.0) + " max " + fmt("%.3f", ratio_max)};
}

// X3C' sources with t in 1..2 and a legal set count.
X3cInstance draw_x3c(Rng& rng, int i) {
    const std::size_t t = 1 + i % 2;
    const std::size_t n = t == 1 ? 1 : draw(rng, 2, 5);
    return random_x3c(rng, t, n);
}

Outcome generator_fidelity() {
    Rng rng(808);
    struct Tally {
        int yes = 0, no = 0, mismatches = 0, capped = 0;
    };
    std::map<std::string, Tally> fam;
    int veto_errors = 0;
    auto record = [&](const std::string& name, const GeneratedInstance& g) {
        auto& t = fam[name];
        (g.label ? t.yes : t.no)++;
        try {
            if (brute_force_control_grouped(g.control).feasible != g.label) ++t.mismatches;
        } catch (const CapExceeded&) {
            ++t.capped;
        }
    };
    const std::vector<ScoringVector> vecs{ScoringVector::from({2, 1, 0}), ScoringVector::from({3, 1, 0, 0}),
                                          ScoringVector::from({4, 2, 1, 0})};
    for (int i = 0; i < 60; ++i) {
        const auto mode = i % 2 ? HardMode::Wccdv : HardMode::Wccav;
        record("borda-partition", gen_borda_partition(random_partition(rng, draw(rng, 2, 5), 6), mode, 3 + i % 2));
        const auto& a = vecs[i % vecs.size()];
        if (mode == HardMode::Wccav)
            record("scoring-partition-prime", gen_scoring_partitionprime(a, random_partition(rng, draw(rng, 2, 4), 5), mode));
        else
            record("scoring-partition-prime",
                   gen_scoring_partitionprime(a, random_partition_prime(rng, 2 + 2 * (i % 2), 3, 4), mode));
        record("condorcet-partition", gen_condorcet_partition(random_partition(rng, draw(rng, 2, 5), 6), mode));
        const auto x = draw_x3c(rng, i);
        record("x3c-2approval", gen_x3c_2approval_wccdv(x));
        const auto g3 = gen_x3c_3veto_wccdv(x);
        record("x3c-3veto", g3);
        const auto n = static_cast<Weight>(x.sets.size()), t = static_cast<Weight>(x.t);
        auto vetoes = [&](const std::string& name) {
            const auto c = static_cast<CandidateIndex>(
                std::find(g3.control.candidates.begin(), g3.control.candidates.end(), name) -
                g3.control.candidates.begin());
            Weight s = 0;
            for (const auto& v : g3.control.registered)
                if (!v.approval(g3.control.size() - 3)[c]) s += v.weight;
            return s;
        };
        veto_errors += vetoes("p") != 6 * n;
        veto_errors += vetoes("r") != 6 * n - 3 * t;
        for (std::size_t j = 1; j <= x.sets.size(); ++j) veto_errors += vetoes("s" + std::to_string(j)) != 3 * n + 3;
        for (std::size_t j = 1; j <= 3 * x.t; ++j) veto_errors += vetoes("b" + std::to_string(j)) != 3 * n + 1;
    }
    bool pass = veto_errors == 0;
    std::string detail;
    for (const auto& [name, t] : fam) {
        pass = pass && t.mismatches == 0 && t.capped == 0 && t.yes > 0 && t.no > 0 && t.yes + t.no >= 50;
        detail += name + " " + std::to_string(t.yes) + " yes/" + std::to_string(t.no) + " no/" +
                  std::to_string(t.mismatches) + " mismatches" + (t.capped ? "/" + std::to_string(t.capped) + " capped" : "") +
                  "; ";
    }
    return {pass, detail + std::to_string(veto_errors) + " veto count errors"};
}

Outcome gap_realization() {
    Rng rng(909);
    int errors = 0, runs = 0;
    for (std::size_t t = 2; t <= 4; ++t)
        for (int i = 0; i < 60; ++i) {
            std::vector<Weight> gaps;
            Weight sum = 0;
            for (std::size_t c = 0; c + 1 < 2 * t; ++c) {
                gaps.push_back(static_cast<Weight>(t * draw(rng, 0, 5)));
                sum += gaps.back();
            }
            for (bool weighted : {false, true}) {
                ++runs;
                const auto votes = realize_gaps(t, gaps, weighted);
                std::vector<Weight> s(2 * t, 0);
                for (const auto& v : votes) {
                    if (v.prefs.size() != 2 * t) ++errors;
                    for (std::size_t q = 0; q < t; ++q) s[v.prefs[q]] += v.weight;
                }
                for (std::size_t c = 0; c + 1 < 2 * t; ++c) errors += s[c] - s[2 * t - 1] != gaps[c];
                if (!weighted && static_cast<Weight>(votes.size()) != static_cast<Weight>(2 * t - 1) * sum / static_cast<Weight>(t))
                    ++errors;
            }
        }
    bool rejected = false;
    try {
        realize_gaps(2, {1, 1, 1}, false);
    } catch (const ValidationError&) {
        rejected = true;
    }
    return {errors == 0 && rejected, std::to_string(runs) + " realizations for t = 2..4, " + std::to_string(errors) +
                                         " errors; (1,1,1) at t=2 " + (rejected ? "rejected" : "ACCEPTED")};
}

Outcome condorcet_trichotomy() {
    Rng rng(1010);
    const std::vector<std::pair<RuleSpec, const char*>> rules{{rule::Condorcet{}, "condorcet"},
                                                              {rule::WeakCondorcet{}, "weak-condorcet"},
                                                              {rule::Copeland{Rational::make(1, 1)}, "copeland:1"},
                                                              {rule::Maximin{}, "maximin"}};
    int checked = 0, wrong = 0;
    std::set<int> seen;
    for (int i = 0; i < 40; ++i) {
        const auto ks = random_partition(rng, draw(rng, 2, 6), 6);
        Weight K = 0;
        for (auto k : ks) K += k;
        K /= 2;
        for (const auto& [r, name] : rules) {
            const auto g = gen_condorcet_partition(ks, HardMode::Wccav, 3 + i % 3, r);
            for (std::uint32_t mask = 0; mask < (1u << ks.size()); ++mask) {
                Idx chosen;
                Weight L = 0;
                for (std::size_t j = 0; j < ks.size(); ++j)
                    if (mask >> j & 1) {
                        chosen.push_back(j);
                        L += ks[j];
                    }
                const std::vector<CandidateIndex> expect{L < K ? CandidateIndex{2} : L == K ? CandidateIndex{0}
                                                                                             : CandidateIndex{1}};
                seen.insert(L < K ? -1 : L == K ? 0 : 1);
                ++checked;
                wrong += winners(apply_solution(g.control, chosen), r) != expect;
            }
        }
    }
    return {wrong == 0 && seen.size() == 3, std::to_string(checked) +
                                                " elections under 4 rules, " + std::to_string(wrong) +
                                                " off the L<K -> b, L=K -> p, L>K -> a pattern"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> checks{
        {"2-approval WCCAV algorithm matches the oracle", pruning_equivalence},
        {"fixed-m t-approval solver matches the oracle", fixed_m_equivalence},
        {"Borda counterexample", borda_counterexample},
        {"WCCDV -> WCCAV reductions are sound", reduction_soundness},
        {"GBW within t of the optimum", gbw_upper_bound},
        {"GBW worst-case family is tight", gbw_tightness},
        {"WMC translation equivalence", wmc_equivalence},
        {"hardness generator labels", generator_fidelity},
        {"gap realization", gap_realization},
        {"Condorcet trichotomy", condorcet_trichotomy},
    };
    int failed = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = checks[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, checks[i].first, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed;
}
