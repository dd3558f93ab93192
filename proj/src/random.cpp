#include "wvc/random.hpp"

#include <algorithm>
#include <numeric>

namespace wvc {

WeightedVote random_vote(Rng& rng, std::size_t m, Weight max_weight) {
    WeightedVote v{std::uniform_int_distribution<Weight>(1, max_weight)(rng), std::vector<CandidateIndex>(m)};
    std::iota(v.prefs.begin(), v.prefs.end(), CandidateIndex{0});
    std::shuffle(v.prefs.begin(), v.prefs.end(), rng);
    return v;
}

ControlInstance random_control(Rng& rng, const RandomSpec& spec) {
    ControlInstance inst;
    inst.kind = spec.kind;
    inst.rule = spec.rule;
    for (std::size_t c = 0; c < spec.m; ++c) inst.candidates.push_back(c == 0 ? "p" : "c" + std::to_string(c));
    inst.preferred = 0;
    inst.budget = spec.budget;
    for (std::size_t i = 0; i < spec.registered; ++i) inst.registered.push_back(random_vote(rng, spec.m, spec.max_weight));
    if (is_adding(spec.kind))
        for (std::size_t i = 0; i < spec.pool; ++i)
            inst.unregistered.push_back(random_vote(rng, spec.m, spec.max_weight));
    inst.validate();
    return inst;
}

std::vector<Weight> random_partition(Rng& rng, std::size_t n, Weight max_value) {
    std::uniform_int_distribution<Weight> d(1, max_value);
    std::vector<Weight> ks(n);
    for (auto& k : ks) k = d(rng);
    if (std::accumulate(ks.begin(), ks.end(), Weight{0}) % 2 != 0) ks.back() += ks.back() < max_value ? 1 : -1;
    if (ks.back() == 0) ks.back() = 2;  // max_value == 1 and odd count
    return ks;
}

std::vector<Weight> random_partition_prime(Rng& rng, std::size_t n, Weight lo, Weight spread) {
    if (n % 2 != 0) throw ValidationError("Partition' needs an even count");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::uniform_int_distribution<Weight> d(lo, lo + spread);
        std::vector<Weight> ks(n);
        for (auto& k : ks) k = d(rng);
        try {
            validate_partition_prime(ks);
            return ks;
        } catch (const ValidationError&) {
        }
    }
    throw ValidationError("could not draw a Partition' instance with these parameters");
}

X3cInstance random_x3c(Rng& rng, std::size_t t, std::size_t n) {
    X3cInstance src{t, {}};
    std::vector<std::size_t> elems(3 * t);
    std::iota(elems.begin(), elems.end(), std::size_t{0});
    for (int attempt = 0; attempt < 100000; ++attempt) {
        src.sets.clear();
        for (std::size_t i = 0; i < n; ++i) {
            std::shuffle(elems.begin(), elems.end(), rng);
            std::array<std::size_t, 3> s{elems[0], elems[1], elems[2]};
            std::sort(s.begin(), s.end());
            src.sets.push_back(s);
        }
        try {
            src.validate();
            return src;
        } catch (const ValidationError&) {
        }
    }
    throw ValidationError("could not draw an X3C' instance with these parameters");
}

}  // namespace wvc
