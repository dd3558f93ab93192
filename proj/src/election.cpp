#include "wvc/election.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wvc {

std::vector<std::size_t> WeightedVote::positions() const {
    std::vector<std::size_t> pos(prefs.size());
    for (std::size_t i = 0; i < prefs.size(); ++i) pos[prefs[i]] = i;
    return pos;
}

std::vector<bool> WeightedVote::approval(std::size_t t) const {
    std::vector<bool> mask(prefs.size(), false);
    for (std::size_t i = 0; i < t && i < prefs.size(); ++i) mask[prefs[i]] = true;
    return mask;
}

Weight Election::total_weight() const {
    Weight total = 0;
    for (const auto& v : votes) total = checked_add(total, v.weight);
    return total;
}

void validate_vote(const WeightedVote& v, std::size_t m) {
    if (v.weight < 1) throw ValidationError("vote weight must be a positive integer");
    if (v.prefs.size() != m)
        throw ValidationError("vote ranks " + std::to_string(v.prefs.size()) + " candidates, expected " +
                              std::to_string(m));
    std::vector<bool> seen(m, false);
    for (auto c : v.prefs) {
        if (c >= m) throw ValidationError("vote references candidate index " + std::to_string(c));
        if (seen[c]) throw ValidationError("vote ranks candidate index " + std::to_string(c) + " twice");
        seen[c] = true;
    }
}

void Election::validate() const {
    if (candidates.empty()) throw ValidationError("an election needs at least one candidate");
    std::set<std::string> names(candidates.begin(), candidates.end());
    if (names.size() != candidates.size()) throw ValidationError("candidate names must be unique");
    for (const auto& v : votes) validate_vote(v, candidates.size());
}

WeightedVote vote_from_top(Weight weight, std::span<const CandidateIndex> approved, std::size_t m) {
    WeightedVote v{weight, {}};
    v.prefs.reserve(m);
    std::vector<bool> used(m, false);
    for (auto c : approved) {
        v.prefs.push_back(c);
        used.at(c) = true;
    }
    for (std::size_t c = 0; c < m; ++c)
        if (!used[c]) v.prefs.push_back(c);
    return v;
}

WeightedVote vote_from_bottom(Weight weight, std::span<const CandidateIndex> bottom, std::size_t m) {
    WeightedVote v{weight, {}};
    v.prefs.reserve(m);
    std::vector<bool> used(m, false);
    for (auto c : bottom) used.at(c) = true;
    for (std::size_t c = 0; c < m; ++c)
        if (!used[c]) v.prefs.push_back(c);
    v.prefs.insert(v.prefs.end(), bottom.begin(), bottom.end());
    return v;
}

// ---------------------------------------------------------------------------

ScoringVector ScoringVector::from(std::vector<Weight> alphas) {
    if (alphas.empty()) throw ValidationError("scoring vector must be nonempty");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] < 0) throw ValidationError("scoring vector entries must be nonnegative");
        if (i > 0 && alphas[i] > alphas[i - 1]) throw ValidationError("scoring vector must be nonincreasing");
    }
    ScoringVector s;
    s.alphas_ = std::move(alphas);
    return s;
}

ScoringVector ScoringVector::borda(std::size_t m) {
    std::vector<Weight> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = static_cast<Weight>(m - 1 - i);
    return from(std::move(a));
}

ScoringVector ScoringVector::approval(std::size_t m, std::size_t t) {
    if (t > m) throw ValidationError("t-approval needs t <= m");
    std::vector<Weight> a(m, 0);
    std::fill_n(a.begin(), t, 1);
    return from(std::move(a));
}

ScoringVector ScoringVector::veto(std::size_t m, std::size_t t) {
    if (t > m) throw ValidationError("t-veto needs t <= m");
    return approval(m, m - t);
}

ScoringVector ScoringVector::shift(Weight x) const {
    ScoringVector s;
    s.alphas_.reserve(alphas_.size());
    for (auto a : alphas_) s.alphas_.push_back(checked_sub(a, x));
    s.shifted_ = true;
    return s;
}

std::vector<Weight> ScoringVector::distinct_values() const {
    std::vector<Weight> out;
    for (auto a : alphas_)
        if (out.empty() || out.back() != a) out.push_back(a);
    return out;
}

Rational Rational::make(Weight num, Weight den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

// ---------------------------------------------------------------------------

ScoreTable score_election(const Election& e, const ScoringVector& s) {
    const auto m = e.size();
    if (s.size() != m)
        throw DimensionError("scoring vector has length " + std::to_string(s.size()) + " for " +
                             std::to_string(m) + " candidates");
    ScoreTable scores(m, 0);
    for (const auto& v : e.votes)
        for (std::size_t pos = 0; pos < m; ++pos)
            scores[v.prefs[pos]] = checked_add(scores[v.prefs[pos]], checked_mul(v.weight, s[pos]));
    return scores;
}

std::vector<CandidateIndex> argmax(std::span<const Weight> scores) {
    std::vector<CandidateIndex> out;
    if (scores.empty()) return out;
    const auto best = *std::max_element(scores.begin(), scores.end());
    for (std::size_t c = 0; c < scores.size(); ++c)
        if (scores[c] == best) out.push_back(c);
    return out;
}

std::vector<CandidateIndex> winners_scoring(const Election& e, const ScoringVector& s) {
    return argmax(score_election(e, s));
}

PairwiseTally pairwise_tally(const Election& e) {
    const auto m = e.size();
    PairwiseTally t{m, std::vector<Weight>(m * m, 0)};
    for (const auto& v : e.votes)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                auto& cell = t.n[v.prefs[i] * m + v.prefs[j]];
                cell = checked_add(cell, v.weight);
            }
    return t;
}

namespace {

std::vector<CandidateIndex> condorcet_from_tally(std::span<const Weight> n, std::size_t m, bool weak) {
    std::vector<CandidateIndex> out;
    for (std::size_t c = 0; c < m; ++c) {
        bool ok = true;
        for (std::size_t d = 0; d < m && ok; ++d) {
            if (d == c) continue;
            ok = weak ? n[c * m + d] >= n[d * m + c] : n[c * m + d] > n[d * m + c];
        }
        if (ok) out.push_back(c);
    }
    return out;
}

// Copeland^(p/q) scaled by q: q*wins + p*ties.
std::vector<Weight> copeland_scaled(std::span<const Weight> n, std::size_t m, Rational alpha) {
    std::vector<Weight> s(m, 0);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < m; ++d) {
            if (d == c) continue;
            if (n[c * m + d] > n[d * m + c])
                s[c] += alpha.den;
            else if (n[c * m + d] == n[d * m + c])
                s[c] += alpha.num;
        }
    return s;
}

std::vector<Weight> maximin_from_tally(std::span<const Weight> n, std::size_t m) {
    std::vector<Weight> s(m, 0);
    for (std::size_t c = 0; c < m; ++c) {
        bool first = true;
        for (std::size_t d = 0; d < m; ++d) {
            if (d == c) continue;
            if (first || n[c * m + d] < s[c]) s[c] = n[c * m + d];
            first = false;
        }
    }
    return s;
}

void check_alpha(Rational a) {
    if (a.num < 0 || a.num > a.den) throw ValidationError("Copeland alpha must lie in [0,1]");
}

}  // namespace

std::vector<CandidateIndex> condorcet_winners(const Election& e, bool weak) {
    auto t = pairwise_tally(e);
    return condorcet_from_tally(t.n, t.m, weak);
}

RationalScoreTable copeland_score(const Election& e, Rational alpha) {
    check_alpha(alpha);
    auto t = pairwise_tally(e);
    auto scaled = copeland_scaled(t.n, t.m, alpha);
    RationalScoreTable out;
    out.reserve(scaled.size());
    for (auto s : scaled) out.push_back(Rational::make(s, alpha.den));
    return out;
}

ScoreTable maximin_score(const Election& e) {
    auto t = pairwise_tally(e);
    return maximin_from_tally(t.n, t.m);
}

// ---------------------------------------------------------------------------

std::optional<ScoringVector> positional_vector(const RuleSpec& r, std::size_t m) {
    return std::visit(
        [m](const auto& x) -> std::optional<ScoringVector> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, rule::Scoring>)
                return x.vector;
            else if constexpr (std::is_same_v<T, rule::Borda>)
                return ScoringVector::borda(m);
            else if constexpr (std::is_same_v<T, rule::TApproval>)
                return ScoringVector::approval(m, x.t);
            else if constexpr (std::is_same_v<T, rule::TVeto>)
                return ScoringVector::veto(m, x.t);
            else
                return std::nullopt;
        },
        r);
}

bool is_pairwise(const RuleSpec& r) {
    return std::holds_alternative<rule::Condorcet>(r) || std::holds_alternative<rule::WeakCondorcet>(r) ||
           std::holds_alternative<rule::Copeland>(r) || std::holds_alternative<rule::Maximin>(r);
}

void validate_rule(const RuleSpec& r, std::size_t m) {
    if (auto* a = std::get_if<rule::TApproval>(&r); a && (a->t < 1 || a->t > m))
        throw ValidationError("t-approval needs 1 <= t <= m");
    if (auto* v = std::get_if<rule::TVeto>(&r); v && (v->t < 1 || v->t > m))
        throw ValidationError("t-veto needs 1 <= t <= m");
    if (auto* s = std::get_if<rule::Scoring>(&r); s && s->vector.size() != m)
        throw DimensionError("scoring vector has length " + std::to_string(s->vector.size()) + " for " +
                             std::to_string(m) + " candidates");
    if (auto* c = std::get_if<rule::Copeland>(&r)) check_alpha(c->alpha);
}

std::vector<CandidateIndex> winners(const Election& e, const RuleSpec& r) {
    validate_rule(r, e.size());
    if (auto pos = positional_vector(r, e.size())) return winners_scoring(e, *pos);
    auto t = pairwise_tally(e);
    if (std::holds_alternative<rule::Condorcet>(r)) return condorcet_from_tally(t.n, t.m, false);
    if (std::holds_alternative<rule::WeakCondorcet>(r)) return condorcet_from_tally(t.n, t.m, true);
    if (auto* c = std::get_if<rule::Copeland>(&r)) return argmax(copeland_scaled(t.n, t.m, c->alpha));
    return argmax(maximin_from_tally(t.n, t.m));
}

bool is_winner(const Election& e, const RuleSpec& r, CandidateIndex c) {
    auto w = winners(e, r);
    return std::find(w.begin(), w.end(), c) != w.end();
}

bool tally_is_winner(const RuleSpec& r, std::span<const Weight> tally, std::size_t m, CandidateIndex c) {
    if (!is_pairwise(r)) {
        for (std::size_t d = 0; d < m; ++d)
            if (tally[d] > tally[c]) return false;
        return true;
    }
    const bool strict = std::holds_alternative<rule::Condorcet>(r);
    if (strict || std::holds_alternative<rule::WeakCondorcet>(r)) {
        for (std::size_t d = 0; d < m; ++d) {
            if (d == c) continue;
            const auto cd = tally[c * m + d], dc = tally[d * m + c];
            if (strict ? cd <= dc : cd < dc) return false;
        }
        return true;
    }
    const auto scores = std::holds_alternative<rule::Copeland>(r)
                            ? copeland_scaled(tally, m, std::get<rule::Copeland>(r).alpha)
                            : maximin_from_tally(tally, m);
    return *std::max_element(scores.begin(), scores.end()) == scores[c];
}

void accumulate_vote(const RuleSpec& r, const std::optional<ScoringVector>& pos, const WeightedVote& v,
                     std::span<Weight> tally, std::size_t m, int sign) {
    const Weight w = sign >= 0 ? v.weight : -v.weight;
    if (!is_pairwise(r)) {
        const auto& s = *pos;
        for (std::size_t i = 0; i < m; ++i)
            tally[v.prefs[i]] = checked_add(tally[v.prefs[i]], checked_mul(w, s[i]));
        return;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto& cell = tally[v.prefs[i] * m + v.prefs[j]];
            cell = checked_add(cell, w);
        }
}

std::string rule_name(const RuleSpec& r) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, rule::Scoring>) {
                std::string s = "scoring:";
                for (std::size_t i = 0; i < x.vector.size(); ++i) {
                    if (i) s += ',';
                    s += std::to_string(x.vector[i]);
                }
                return s;
            } else if constexpr (std::is_same_v<T, rule::Borda>)
                return "borda";
            else if constexpr (std::is_same_v<T, rule::TApproval>)
                return x.t == 1 ? "plurality" : "t-approval:" + std::to_string(x.t);
            else if constexpr (std::is_same_v<T, rule::TVeto>)
                return "t-veto:" + std::to_string(x.t);
            else if constexpr (std::is_same_v<T, rule::Condorcet>)
                return "condorcet";
            else if constexpr (std::is_same_v<T, rule::WeakCondorcet>)
                return "weak-condorcet";
            else if constexpr (std::is_same_v<T, rule::Copeland>)
                return "copeland:" + std::to_string(x.alpha.num) + "/" + std::to_string(x.alpha.den);
            else
                return "maximin";
        },
        r);
}

}  // namespace wvc
