#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wvc/generators.hpp"
#include "wvc/oracle.hpp"

using namespace wvc;
using Idx = std::vector<std::size_t>;

namespace {

// Subset-sum by enumeration, independent of the DP oracle.
bool half_subset(const std::vector<Weight>& ks, bool half_count) {
    Weight total = 0;
    for (auto k : ks) total += k;
    for (std::uint32_t mask = 0; mask < (1u << ks.size()); ++mask) {
        if (half_count && static_cast<std::size_t>(__builtin_popcount(mask)) * 2 != ks.size()) continue;
        Weight s = 0;
        for (std::size_t i = 0; i < ks.size(); ++i)
            if (mask >> i & 1) s += ks[i];
        if (2 * s == total) return true;
    }
    return false;
}

bool exact_cover(const X3cInstance& x) {
    for (std::uint32_t mask = 0; mask < (1u << x.sets.size()); ++mask) {
        std::vector<int> hit(x.elements(), 0);
        for (std::size_t i = 0; i < x.sets.size(); ++i)
            if (mask >> i & 1)
                for (auto e : x.sets[i]) ++hit[e];
        if (std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; })) return true;
    }
    return false;
}

std::vector<Weight> approvals(const std::vector<WeightedVote>& votes, std::size_t m, std::size_t t) {
    std::vector<Weight> s(m, 0);
    for (const auto& v : votes)
        for (std::size_t q = 0; q < t; ++q) s[v.prefs[q]] += v.weight;
    return s;
}

Weight weighted_vetoes(const ControlInstance& inst, CandidateIndex c) {
    Weight s = 0;
    for (const auto& v : inst.registered)
        if (!v.approval(inst.size() - 3)[c]) s += v.weight;
    return s;
}

X3cInstance x3c(std::size_t t, std::vector<std::array<std::size_t, 3>> one_based) {
    for (auto& s : one_based)
        for (auto& e : s) --e;
    return {t, one_based};
}

// t in 1..3 with a set count X3C' allows (t <= n <= 3t, only n = 1 for t = 1)
X3cInstance draw_x3c(Rng& rng, int i, std::size_t max_t = 3) {
    const std::size_t t = 1 + i % max_t;
    const std::size_t n = t == 1 ? 1 : t + (i / 3) % (2 * t + 1);
    return random_x3c(rng, t, n);
}

bool oracle_label(const GeneratedInstance& g) { return brute_force_control_grouped(g.control).feasible; }

}  // namespace

TEST_CASE("source oracles") {
    CHECK(solve_partition({1, 1, 2}).has_value());
    CHECK_FALSE(solve_partition({2, 4}).has_value());
    CHECK_THROWS_AS(validate_partition({1, 1, 1}), ValidationError);
    CHECK_THROWS_AS(validate_partition({0, 2}), ValidationError);
    CHECK_THROWS_AS(validate_partition_prime({1, 1, 2}), ValidationError);
    CHECK_THROWS_AS(validate_partition_prime({1, 9}), ValidationError);
    CHECK(solve_partition_prime({3, 3}).has_value());
    CHECK(solve_partition_prime({3, 3, 4, 4}).has_value());
    CHECK_FALSE(solve_partition_prime({3, 3, 3, 5}).has_value());

    Rng rng(1);
    for (int i = 0; i < 300; ++i) {
        const auto ks = random_partition(rng, 1 + i % 8, 9);
        const auto sol = solve_partition(ks);
        CHECK(sol.has_value() == half_subset(ks, false));
        if (sol) {
            Weight s = 0, total = 0;
            for (auto j : *sol) s += ks[j];
            for (auto k : ks) total += k;
            CHECK(2 * s == total);
        }
        const auto kp = random_partition_prime(rng, 2 + 2 * (i % 3), 5, 4);
        CHECK_NOTHROW(validate_partition_prime(kp));
        const auto sp = solve_partition_prime(kp);
        CHECK(sp.has_value() == half_subset(kp, true));
        if (sp) CHECK(sp->size() * 2 == kp.size());

        const auto x = draw_x3c(rng, i);
        CHECK_NOTHROW(x.validate());
        CHECK(solve_x3c(x).has_value() == exact_cover(x));
    }
    CHECK_THROWS_AS(x3c(1, {{1, 1, 2}}).validate(), ValidationError);
    CHECK_THROWS_AS(x3c(2, {{1, 2, 3}}).validate(), ValidationError);  // 4..6 uncovered
}

TEST_CASE("Borda from Partition") {
    const auto yes = gen_borda_partition({1, 1, 2}, HardMode::Wccav);
    CHECK(yes.label);
    CHECK(oracle_label(yes));
    CHECK(yes.control.budget == 3);
    CHECK(yes.control.registered.size() == 1);
    CHECK(yes.control.registered[0].weight == 2);
    CHECK(yes.provenance.family == "borda-partition");
    CHECK(*yes.provenance.find("ks") == "1,1,2");

    const auto no = gen_borda_partition({2, 4}, HardMode::Wccav);
    CHECK_FALSE(no.label);
    CHECK_FALSE(oracle_label(no));
    CHECK_THROWS_AS(gen_borda_partition({1, 1, 1}, HardMode::Wccav), ValidationError);
    CHECK_THROWS_AS(gen_borda_partition({1, 1}, HardMode::Wccav, 2), ConstructionError);

    const auto del = gen_borda_partition({1, 1, 2}, HardMode::Wccdv, 5);
    CHECK(del.control.kind == ControlKind::WCCDV);
    CHECK(del.control.registered.size() == 4);
    CHECK(del.control.size() == 5);
    CHECK(oracle_label(del) == del.label);
}

TEST_CASE("scoring vectors from Partition'") {
    const auto alpha = ScoringVector::from({2, 1, 0});
    const auto yes = gen_scoring_partitionprime(alpha, {1, 1, 2}, HardMode::Wccav);
    CHECK(yes.label);
    CHECK(oracle_label(yes));

    const auto del = gen_scoring_partitionprime(alpha, {3, 3}, HardMode::Wccdv);
    CHECK(del.label);
    CHECK(del.control.budget == 1);
    CHECK(oracle_label(del));
    // T = ceil(t/2 (t+1) g1/(g1-g2)) + 1; (2, 1, 0) is already shifted
    CHECK(partition_prime_group_size(2, 1, 0) == 4);
    CHECK(partition_prime_group_size(2, 2, 1) == 7);
    CHECK(*del.provenance.find("T") == "7");

    // placement is deterministic
    const auto again = gen_scoring_partitionprime(alpha, {3, 3}, HardMode::Wccdv);
    CHECK(again.control.registered == del.control.registered);

    CHECK_THROWS_AS(gen_scoring_partitionprime(ScoringVector::from({1, 1, 0}), {1, 1}, HardMode::Wccav),
                    ConstructionError);
    CHECK_THROWS_AS(gen_scoring_partitionprime(ScoringVector::approval(4, 2), {1, 1}, HardMode::Wccav),
                    ConstructionError);

    Rng rng(31);
    const std::vector<ScoringVector> vecs{ScoringVector::from({3, 1, 0}), ScoringVector::from({2, 1, 1, 0}),
                                          ScoringVector::from({5, 3, 1, 0})};
    for (int i = 0; i < 30; ++i) {
        const auto& a = vecs[i % vecs.size()];
        const auto ks = random_partition(rng, 2 + i % 3, 4);
        const auto g = gen_scoring_partitionprime(a, ks, HardMode::Wccav);
        CHECK(g.label == half_subset(ks, false));
        CHECK(oracle_label(g) == g.label);
    }
}

TEST_CASE("Condorcet-style rules from Partition") {
    const auto yes = gen_condorcet_partition({1, 1}, HardMode::Wccav);
    CHECK(yes.label);
    CHECK(oracle_label(yes));
    const auto no = gen_condorcet_partition({2, 4}, HardMode::Wccav);
    CHECK_FALSE(no.label);
    CHECK_FALSE(oracle_label(no));
    CHECK_THROWS_AS(gen_condorcet_partition({1, 1}, HardMode::Wccav, 3, rule::Borda{}), UnsupportedRule);

    Rng rng(77);
    const std::vector<RuleSpec> rules{rule::Condorcet{}, rule::WeakCondorcet{}, rule::Copeland{Rational::make(1, 1)},
                                      rule::Copeland{Rational::make(0, 1)}, rule::Maximin{}};
    for (int i = 0; i < 40; ++i) {
        const auto ks = random_partition(rng, 2 + i % 4, 6);
        const auto mode = i % 2 ? HardMode::Wccdv : HardMode::Wccav;
        for (const auto& r : rules) {
            const auto g = gen_condorcet_partition(ks, mode, 3 + i % 2, r);
            CHECK(g.label == half_subset(ks, false));
            CHECK(oracle_label(g) == g.label);
        }
    }
}

TEST_CASE("2-approval WCCDV from X3C'") {
    const auto one = gen_x3c_2approval_wccdv(x3c(1, {{1, 2, 3}}));
    CHECK(one.label);
    CHECK(one.control.budget == 3);
    CHECK(oracle_label(one));

    const auto no = gen_x3c_2approval_wccdv(x3c(2, {{1, 2, 3}, {1, 4, 5}, {2, 5, 6}}));
    CHECK_FALSE(no.label);
    CHECK_FALSE(oracle_label(no));

    CHECK(x3c_padding_multiplier(1, 3) == 4);
    CHECK(x3c_padding_multiplier(1, 2) == 3);
    CHECK(x3c_padding_multiplier(2, 3) == 3);
    const auto w = gen_x3c_2approval_wccdv(x3c(1, {{1, 2, 3}}), std::pair<Weight, Weight>{1, 3});
    CHECK(*w.provenance.find("l") == "4");
    CHECK(oracle_label(w));
    CHECK_THROWS_AS(gen_x3c_2approval_wccdv(x3c(1, {{1, 2, 3}}), std::pair<Weight, Weight>{3, 3}), ValidationError);
}

TEST_CASE("3-veto WCCDV from X3C': veto counts") {
    const auto one = gen_x3c_3veto_wccdv(x3c(1, {{1, 2, 3}}));
    CHECK(one.label);
    CHECK(oracle_label(one));

    Rng rng(5);
    for (int i = 0; i < 60; ++i) {
        const auto x = draw_x3c(rng, i);
        const auto g = gen_x3c_3veto_wccdv(x);
        const auto& c = g.control;
        const auto n = static_cast<Weight>(x.sets.size());
        const auto t = static_cast<Weight>(x.t);
        CHECK(weighted_vetoes(c, 0) == 6 * n);
        CHECK(weighted_vetoes(c, testing::idx(c.candidates, "r")) == 6 * n - 3 * t);
        for (std::size_t j = 1; j <= 3 * x.t; ++j)
            CHECK(weighted_vetoes(c, testing::idx(c.candidates, "b" + std::to_string(j))) == 3 * n + 1);
        for (std::size_t i2 = 1; i2 <= x.sets.size(); ++i2)
            CHECK(weighted_vetoes(c, testing::idx(c.candidates, "s" + std::to_string(i2))) == 3 * n + 3);
        CHECK(g.label == exact_cover(x));
    }
}

TEST_CASE("realize_gaps") {
    const auto v = realize_gaps(2, {2, 0, 0}, false);
    REQUIRE(v.size() == 3);
    CHECK(v[0].approval(2) == std::vector<bool>{true, true, false, false});
    CHECK(v[1].approval(2) == std::vector<bool>{true, false, true, false});
    CHECK(v[2].approval(2) == std::vector<bool>{true, false, false, true});
    CHECK(realize_gaps(2, {0, 0, 0}, false).empty());
    CHECK_THROWS_AS(realize_gaps(2, {1, 1, 1}, false), ValidationError);
    CHECK_THROWS_AS(realize_gaps(1, {1}, false), ValidationError);
    CHECK_THROWS_AS(realize_gaps(2, {2, 2}, false), ValidationError);

    const auto t3 = realize_gaps(3, {3, 6, 0, 0, 0}, false);
    CHECK(t3.size() == 5 * 9 / 3);
    const auto s3 = approvals(t3, 6, 3);
    CHECK(s3[0] - s3[5] == 3);
    CHECK(s3[1] - s3[5] == 6);
    for (int c = 2; c < 5; ++c) CHECK(s3[c] == s3[5]);

    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const std::size_t t = 2 + i % 3;
        std::vector<Weight> gaps;
        for (std::size_t c = 0; c + 1 < 2 * t; ++c)
            gaps.push_back(static_cast<Weight>(t) * std::uniform_int_distribution<Weight>(0, 4)(rng));
        Weight sum = 0;
        std::size_t nonzero = 0;
        for (auto g : gaps) {
            sum += g;
            nonzero += g != 0;
        }
        for (bool weighted : {false, true}) {
            const auto votes = realize_gaps(t, gaps, weighted);
            const auto s = approvals(votes, 2 * t, t);
            for (std::size_t c = 0; c + 1 < 2 * t; ++c) CHECK(s[c] - s[2 * t - 1] == gaps[c]);
            if (weighted)
                CHECK(votes.size() <= (2 * t - 1) * nonzero);
            else
                CHECK(static_cast<Weight>(votes.size()) == static_cast<Weight>(2 * t - 1) * sum / static_cast<Weight>(t));
        }
    }
}

TEST_CASE("GBW worst-case family") {
    // WCCDV t = 3: realized gaps 3t^2 + 3t and t times 3t^2, (2t-1) votes per t of gap
    const auto g3 = gen_gbw_worstcase(3, WorstCaseMode::TVetoWccdv);
    CHECK(g3.control.registered.size() == 195 + 1 + 3);
    std::size_t unit = 0;
    for (const auto& v : g3.control.registered) unit += v.weight == 1;
    CHECK(unit == 195);

    const auto g2 = gen_gbw_worstcase(2, WorstCaseMode::TVetoWccdv);
    const auto& c = g2.control;
    const auto s = approvals(c.registered, c.size(), c.size() - 2);
    const auto d1 = testing::idx(c.candidates, "d1");
    CHECK(s[0] - s[d1] == 6);
    CHECK(s[testing::idx(c.candidates, "a1")] - s[d1] == 10);
    CHECK(s[testing::idx(c.candidates, "a2")] - s[d1] == 10);

    CHECK_THROWS_AS(gen_gbw_worstcase(1, WorstCaseMode::TApprovalWccav), ValidationError);
    for (std::size_t t = 2; t <= 4; ++t)
        for (auto mode : {WorstCaseMode::TApprovalWccav, WorstCaseMode::TVetoWccdv}) {
            const auto g = gen_gbw_worstcase(t, mode);
            CHECK(g.label);
            CHECK(g.control.size() == 2 * t);
            CHECK(brute_force_control_grouped(g.control).chosen.size() == 1);
        }
}

TEST_CASE("labels agree with the oracle on random sources") {
    Rng rng(2025);
    for (int i = 0; i < 50; ++i) {
        const auto ks = random_partition(rng, 2 + i % 4, 5);
        const auto mode = i % 2 ? HardMode::Wccdv : HardMode::Wccav;
        const auto b = gen_borda_partition(ks, mode, 3 + i % 2);
        CHECK(oracle_label(b) == b.label);

        const auto x = draw_x3c(rng, i, 2);
        const auto x2 = gen_x3c_2approval_wccdv(x);
        const auto x3 = gen_x3c_3veto_wccdv(x);
        CHECK(x2.label == exact_cover(x));
        CHECK(oracle_label(x2) == x2.label);
        CHECK(oracle_label(x3) == x3.label);
    }
}
