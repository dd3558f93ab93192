#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "wvc/control.hpp"
#include "wvc/random.hpp"

namespace testing {

using namespace wvc;

inline CandidateIndex idx(const std::vector<std::string>& names, const std::string& n) {
    return static_cast<CandidateIndex>(std::find(names.begin(), names.end(), n) - names.begin());
}

/// Full ranking written with names; missing candidates follow in index order.
inline WeightedVote V(const std::vector<std::string>& names, Weight w, std::initializer_list<const char*> top) {
    std::vector<CandidateIndex> prefix;
    for (auto n : top) prefix.push_back(idx(names, n));
    return vote_from_top(w, prefix, names.size());
}

inline std::vector<std::string> names_of(std::size_t m) {
    std::vector<std::string> out;
    for (std::size_t c = 0; c < m; ++c) out.push_back(c == 0 ? "p" : "c" + std::to_string(c));
    return out;
}

/// Independent score oracle: expand weights into unit votes and count.
inline std::vector<Weight> unit_scores(const Election& e, const std::vector<Weight>& alpha) {
    std::vector<Weight> s(e.candidates.size(), 0);
    for (const auto& v : e.votes)
        for (Weight copy = 0; copy < v.weight; ++copy)
            for (std::size_t pos = 0; pos < v.prefs.size(); ++pos) s[v.prefs[pos]] += alpha[pos];
    return s;
}

inline std::vector<CandidateIndex> max_set(const std::vector<Weight>& s) {
    std::vector<CandidateIndex> out;
    const auto best = *std::max_element(s.begin(), s.end());
    for (std::size_t c = 0; c < s.size(); ++c)
        if (s[c] == best) out.push_back(c);
    return out;
}

/// Pool subsets of size <= k, smallest first, via bitmasks; independent of
/// the library oracles. Returns the minimum size or -1.
inline int min_subset_size(const ControlInstance& inst) {
    const auto n = inst.pool().size();
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int bits = __builtin_popcountll(mask);
        if (bits > static_cast<int>(inst.budget) || (best >= 0 && bits >= best)) continue;
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) chosen.push_back(i);
        if (verify_solution(inst, chosen)) best = bits;
    }
    return best;
}

}  // namespace testing
