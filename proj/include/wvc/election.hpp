#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wvc/error.hpp"

namespace wvc {

using CandidateIndex = std::size_t;

/// A vote with a positive integer weight and a strict ranking, most preferred first.
struct WeightedVote {
    Weight weight = 1;
    std::vector<CandidateIndex> prefs;

    /// Position (0-based) of each candidate in this ranking.
    std::vector<std::size_t> positions() const;
    /// The top `t` candidates as an m-long 0/1 mask.
    std::vector<bool> approval(std::size_t t) const;

    friend bool operator==(const WeightedVote&, const WeightedVote&) = default;
};

/// Candidate names plus an ordered multiset of votes. Candidate i is `candidates[i]`.
struct Election {
    std::vector<std::string> candidates;
    std::vector<WeightedVote> votes;

    std::size_t size() const { return candidates.size(); }
    Weight total_weight() const;
    /// Throws ValidationError unless names are unique, m >= 1, weights >= 1 and
    /// every ranking is a permutation of 0..m-1.
    void validate() const;
};

void validate_vote(const WeightedVote& v, std::size_t m);

/// A vote that ranks `approved` first (in the given order), then the
/// remaining candidates by ascending index.
WeightedVote vote_from_top(Weight weight, std::span<const CandidateIndex> approved, std::size_t m);
/// A vote that ranks `bottom` last (in the given order) and everybody else
/// before them by ascending index.
WeightedVote vote_from_bottom(Weight weight, std::span<const CandidateIndex> bottom, std::size_t m);

/// Nonincreasing score vector. Public constructors require nonnegative
/// entries; `shift` may produce negative entries and sets `shifted`.
class ScoringVector {
public:
    static ScoringVector from(std::vector<Weight> alphas);
    static ScoringVector borda(std::size_t m);
    static ScoringVector approval(std::size_t m, std::size_t t);
    static ScoringVector veto(std::size_t m, std::size_t t);

    /// alpha - x, entry-wise.
    ScoringVector shift(Weight x) const;

    const std::vector<Weight>& alphas() const { return alphas_; }
    std::size_t size() const { return alphas_.size(); }
    Weight operator[](std::size_t i) const { return alphas_[i]; }
    bool shifted() const { return shifted_; }
    /// Distinct values, largest first.
    std::vector<Weight> distinct_values() const;

    friend bool operator==(const ScoringVector&, const ScoringVector&) = default;

private:
    std::vector<Weight> alphas_;
    bool shifted_ = false;
};

/// Exact rational in lowest terms with positive denominator.
struct Rational {
    Weight num = 0;
    Weight den = 1;

    static Rational make(Weight num, Weight den);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
};

using ScoreTable = std::vector<Weight>;
using RationalScoreTable = std::vector<Rational>;

/// N[c][d] = total weight of voters preferring c to d.
struct PairwiseTally {
    std::size_t m = 0;
    std::vector<Weight> n;

    Weight operator()(CandidateIndex c, CandidateIndex d) const { return n[c * m + d]; }
};

ScoreTable score_election(const Election& e, const ScoringVector& s);
std::vector<CandidateIndex> winners_scoring(const Election& e, const ScoringVector& s);

PairwiseTally pairwise_tally(const Election& e);
std::vector<CandidateIndex> condorcet_winners(const Election& e, bool weak);
RationalScoreTable copeland_score(const Election& e, Rational alpha);
ScoreTable maximin_score(const Election& e);

/// Indices achieving the maximum entry.
std::vector<CandidateIndex> argmax(std::span<const Weight> scores);

// ---------------------------------------------------------------------------
// Rules

namespace rule {
struct Scoring {
    ScoringVector vector;
    friend bool operator==(const Scoring&, const Scoring&) = default;
};
struct Borda {
    friend bool operator==(const Borda&, const Borda&) = default;
};
struct TApproval {
    std::size_t t = 1;
    friend bool operator==(const TApproval&, const TApproval&) = default;
};
struct TVeto {
    std::size_t t = 1;
    friend bool operator==(const TVeto&, const TVeto&) = default;
};
struct Condorcet {
    friend bool operator==(const Condorcet&, const Condorcet&) = default;
};
struct WeakCondorcet {
    friend bool operator==(const WeakCondorcet&, const WeakCondorcet&) = default;
};
struct Copeland {
    Rational alpha;
    friend bool operator==(const Copeland&, const Copeland&) = default;
};
struct Maximin {
    friend bool operator==(const Maximin&, const Maximin&) = default;
};
}  // namespace rule

using RuleSpec = std::variant<rule::Scoring, rule::Borda, rule::TApproval, rule::TVeto, rule::Condorcet,
                              rule::WeakCondorcet, rule::Copeland, rule::Maximin>;

/// The positional vector a rule uses on m candidates, if it is positional.
std::optional<ScoringVector> positional_vector(const RuleSpec& r, std::size_t m);
bool is_pairwise(const RuleSpec& r);
/// Throws ValidationError when t is out of range for m, or a scoring vector has the wrong length.
void validate_rule(const RuleSpec& r, std::size_t m);

std::vector<CandidateIndex> winners(const Election& e, const RuleSpec& r);
bool is_winner(const Election& e, const RuleSpec& r, CandidateIndex c);

/// Winner test on a precomputed tally. For positional rules `tally` holds m
/// scores; for pairwise rules it holds the m*m matrix N. This is the hot path
/// of the oracles and must agree with `winners`.
bool tally_is_winner(const RuleSpec& r, std::span<const Weight> tally, std::size_t m, CandidateIndex c);

/// Adds one vote's contribution to a tally laid out as above.
void accumulate_vote(const RuleSpec& r, const std::optional<ScoringVector>& pos, const WeightedVote& v,
                     std::span<Weight> tally, std::size_t m, int sign = 1);

std::string rule_name(const RuleSpec& r);

}  // namespace wvc
