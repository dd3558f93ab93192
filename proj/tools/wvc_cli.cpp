// wvc: command-line front end for the weighted voter control library.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "wvc/approx.hpp"
#include "wvc/bench.hpp"
#include "wvc/exact.hpp"
#include "wvc/generators.hpp"
#include "wvc/io.hpp"
#include "wvc/oracle.hpp"
#include "wvc/random.hpp"
#include "wvc/reductions.hpp"

namespace fs = std::filesystem;
using namespace wvc;

namespace {

enum Exit { kOk = 0, kInfeasible = 1, kUsage = 2, kCap = 3 };

struct Overrides {
    std::string problem, rule;
    std::optional<std::size_t> budget;
};

InstanceDocument load(const std::string& path, const Overrides& o) {
    if (path.empty()) throw ValidationError("--file is required");
    auto doc = read_instance_file(path);
    if (doc.is_wcm()) {
        auto& w = std::get<WcmInstance>(doc.instance);
        if (!o.rule.empty()) w.rule = parse_rule(o.rule);
        if (o.budget) throw ValidationError("wcm takes no budget");
        if (!o.problem.empty() && o.problem != "wcm") throw ValidationError("file holds a wcm instance");
        validate_rule(w.rule, w.size());
        w.validate();
        return doc;
    }
    auto& c = std::get<ControlInstance>(doc.instance);
    if (!o.problem.empty()) c.kind = parse_kind(o.problem);
    if (!o.rule.empty()) c.rule = parse_rule(o.rule);
    if (o.budget) c.budget = *o.budget;
    validate_rule(c.rule, c.size());
    c.validate();
    return doc;
}

std::vector<Weight> parse_csv(const std::string& s, const char* what) {
    std::vector<Weight> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw ValidationError(std::string("bad ") + what + " entry '" + part + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError(std::string(what) + " is empty");
    return out;
}

// "1,2,3;1,4,5" with 1-based elements
X3cInstance parse_sets(std::size_t t, const std::string& s) {
    X3cInstance src{t, {}};
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ';')) {
        const auto xs = parse_csv(part, "set");
        if (xs.size() != 3) throw ValidationError("every set needs three elements");
        std::array<std::size_t, 3> set{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (xs[i] < 1) throw ValidationError("set elements are 1-based");
            set[i] = static_cast<std::size_t>(xs[i] - 1);
        }
        src.sets.push_back(set);
    }
    src.validate();
    return src;
}

void print_solution(const ControlInstance& inst, const Solution& sol, const std::string& method) {
    std::cout << "method " << method << '\n';
    if (!sol.feasible) {
        std::cout << "status infeasible\n";
        return;
    }
    std::cout << "status feasible\nsize " << sol.chosen.size() << "\nchosen";
    for (auto i : sol.chosen) std::cout << ' ' << i;
    std::cout << '\n';
    const auto e = apply_solution(inst, sol.chosen);
    std::cout << "winners";
    for (auto c : winners(e, inst.rule)) std::cout << ' ' << inst.candidates[c];
    std::cout << '\n';
}

// Fail closed: never print a witness that does not check out.
int report_control(const ControlInstance& inst, Solution sol, const std::string& method) {
    if (sol.feasible) {
        if (!verify_solution(inst, sol) || !within_budget(inst, sol))
            throw std::logic_error(method + " produced a witness that does not verify");
    }
    print_solution(inst, sol, method);
    return sol.feasible ? kOk : kInfeasible;
}

int report_wcm(const WcmInstance& inst, const WcmSolution& sol, const std::string& method) {
    if (sol.feasible && !verify_wcm(inst, sol.manipulators))
        throw std::logic_error(method + " produced manipulator votes that do not verify");
    std::cout << "method " << method << '\n';
    if (!sol.feasible) {
        std::cout << "status infeasible\n";
        return kInfeasible;
    }
    std::cout << "status feasible\n";
    for (const auto& v : sol.manipulators) {
        std::cout << "manipulator " << v.weight;
        for (std::size_t i = 0; i < v.prefs.size(); ++i) std::cout << (i ? " > " : " ") << inst.candidates[v.prefs[i]];
        std::cout << '\n';
    }
    return kOk;
}

Solution run_oracle(const ControlInstance& inst, const OracleOptions& opt) {
    if (inst.pool().size() <= opt.pool_cap) return brute_force_control(inst, opt);
    return brute_force_control_grouped(inst, opt);
}

// Polynomial-time route for the instance, if one applies.
std::optional<std::pair<std::string, Solution>> route(const ControlInstance& inst) {
    const auto m = inst.size();
    const auto* ap = std::get_if<rule::TApproval>(&inst.rule);
    const auto* ve = std::get_if<rule::TVeto>(&inst.rule);
    if (!is_constructive(inst.kind)) {
        if (positional_vector(inst.rule, m)) return std::pair{std::string("destructive-greedy"), solve_destructive_scoring(inst)};
        return std::nullopt;
    }
    if (!ap && !ve) return std::nullopt;
    if (inst.kind == ControlKind::WCCAV && ap && ap->t == 2)
        return std::pair{std::string("two-approval-pruning"), solve_2approval_wccav(inst).solution};
    if (inst.kind == ControlKind::WCCDV && ve && ve->t == 2)
        return std::pair{std::string("two-veto-reduction"), solve_2veto_wccdv(inst)};
    // fixed-m enumeration: plurality and veto for any m, otherwise small m
    constexpr std::size_t kFixedM = 10;
    const bool single = (ap && ap->t == 1) || (ve && ve->t == 1);
    if (single || m <= kFixedM) return std::pair{std::string("fixed-m-enumeration"), solve_fixed_m_tapproval(inst)};
    return std::nullopt;
}

std::vector<std::string> expand_files(const std::vector<std::string>& paths) {
    std::vector<std::string> out;
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            for (const auto& e : fs::directory_iterator(p))
                if (e.is_regular_file()) out.push_back(e.path().string());
        } else {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

InstanceDocument to_document(const GeneratedInstance& g) {
    InstanceDocument doc;
    doc.instance = g.control;
    doc.provenance = g.provenance;
    doc.label = g.label;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted voter control: exact solvers, approximations, oracles and instance generators"};
    app.require_subcommand(1);

    std::string file, out, method_str = "gbw", family, mode, ks_str, sets_str, gaps_str, weights_str, alpha_str;
    Overrides ov;
    std::size_t budget = 0;
    bool use_oracle = false, timing = false, weighted = false;
    std::uint64_t seed = 1;
    std::size_t oracle_cap = OracleOptions{}.eval_cap;
    std::size_t pool_cap = OracleOptions{}.pool_cap;
    std::size_t t = 2, m = 3, n = 4, pool = 4, count = 1;
    Weight max_weight = 10, T = 0;
    std::vector<std::string> files, methods;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--file", file, "Instance file")->required();
        sub->add_option("--problem", ov.problem, "Override problem: wccav, wccdv, wdcav, wdcdv, wcm");
        sub->add_option("--rule", ov.rule, "Override rule, e.g. t-approval:2, copeland:1/2");
        sub->add_option("--budget", budget, "Override budget");
        sub->add_option("--oracle-cap", oracle_cap, "Oracle evaluation cap");
        sub->add_option("--pool-cap", pool_cap, "Largest pool for plain subset enumeration");
    };

    auto* solve = app.add_subcommand("solve", "Solve exactly with a polynomial-time algorithm where one applies");
    common(solve);
    solve->add_flag("--oracle", use_oracle, "Allow exhaustive search when no polynomial algorithm applies");

    auto* approx = app.add_subcommand("approx", "Run an approximation (t-approval / t-veto WCCAV, WCCDV)");
    common(approx);
    approx->add_option("--method", method_str, "gbw or multicover")->check(CLI::IsMember({"gbw", "multicover"}));
    approx->add_flag("--oracle", use_oracle, "Also compute the exact optimum and the ratio");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum-cardinality search");
    common(oracle);

    auto* reduce = app.add_subcommand("reduce", "Turn t-veto/t-approval WCCDV into t-approval/t-veto WCCAV");
    common(reduce);
    reduce->add_option("--out", out, "Output file (stdout if absent)");

    auto* generate = app.add_subcommand("generate", "Write a generated instance");
    generate->add_option("--family", family, "Instance family")
        ->required()
        ->check(CLI::IsMember({"borda-partition", "scoring-partition-prime", "condorcet-partition", "x3c-2approval",
                               "x3c-3veto", "gbw-worstcase", "gap-realize", "random"}));
    generate->add_option("--out", out, "Output file, or directory when --count > 1");
    generate->add_option("--seed", seed, "Seed for random source instances");
    generate->add_option("--mode", mode, "wccav/wccdv, or tapproval-wccav/tveto-wccdv for gbw-worstcase");
    generate->add_option("--ks", ks_str, "Partition numbers, comma separated");
    generate->add_option("--alpha", alpha_str, "Scoring vector for scoring-partition-prime");
    generate->add_option("--T", T, "Group size override for scoring-partition-prime");
    generate->add_option("--sets", sets_str, "X3C' sets, e.g. 1,2,3;4,5,6 (1-based)");
    generate->add_option("--weights", weights_str, "w1,w2 for x3c-2approval");
    generate->add_option("--gaps", gaps_str, "Gaps for gap-realize, comma separated");
    generate->add_flag("--weighted", weighted, "gap-realize: one weighted vote per block vote");
    generate->add_option("--t", t, "t");
    generate->add_option("--m", m, "Number of candidates");
    generate->add_option("--n", n, "Registered voters (random) / source size");
    generate->add_option("--pool", pool, "Unregistered voters (random)");
    generate->add_option("--max-weight", max_weight, "Largest voter weight (random)");
    generate->add_option("--problem", ov.problem, "Problem (random, condorcet-partition)");
    generate->add_option("--rule", ov.rule, "Rule (random, condorcet-partition)");
    generate->add_option("--budget", budget, "Budget (random)");
    generate->add_option("--count", count, "Number of random instances");

    auto* bench = app.add_subcommand("bench", "Approximation methods against the exact optimum, as CSV");
    bench->add_option("--file", files, "Instance files or directories")->required();
    bench->add_option("--method", methods, "gbw and/or multicover (default both)")
        ->check(CLI::IsMember({"gbw", "multicover"}));
    bench->add_option("--oracle-cap", oracle_cap, "Oracle evaluation cap");
    bench->add_flag("--timing", timing, "Record wall time (output is no longer reproducible)");
    bench->add_option("--out", out, "Output file (stdout if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (solve->count("--budget") || approx->count("--budget") || oracle->count("--budget") || reduce->count("--budget"))
        ov.budget = budget;
    const OracleOptions opt{pool_cap, static_cast<std::uint64_t>(oracle_cap)};

    try {
        if (*solve) {
            const auto doc = load(file, ov);
            if (doc.is_wcm()) {
                const auto& w = doc.wcm();
                if (std::holds_alternative<rule::Condorcet>(w.rule) || std::holds_alternative<rule::WeakCondorcet>(w.rule))
                    return report_wcm(w, solve_wcm_rank_p_first(w), "rank-p-first");
                if (!use_oracle) {
                    std::cerr << "no polynomial-time algorithm for wcm under " << rule_name(w.rule)
                              << "; pass --oracle for exhaustive search\n";
                    return kUsage;
                }
                return report_wcm(w, brute_force_wcm(w, opt), "oracle");
            }
            const auto& c = doc.control();
            if (auto r = route(c)) return report_control(c, r->second, r->first);
            if (!use_oracle) {
                std::cerr << kind_name(c.kind) << " under " << rule_name(c.rule)
                          << " has no polynomial-time route here; pass --oracle or use approx\n";
                return kUsage;
            }
            return report_control(c, run_oracle(c, opt), "oracle");
        }
        if (*oracle) {
            const auto doc = load(file, ov);
            if (doc.is_wcm()) return report_wcm(doc.wcm(), brute_force_wcm(doc.wcm(), opt), "oracle");
            return report_control(doc.control(), run_oracle(doc.control(), opt), "oracle");
        }
        if (*approx) {
            const auto doc = load(file, ov);
            if (doc.is_wcm()) throw UnsupportedRule("approx does not handle wcm");
            const auto& c = doc.control();
            const auto method = method_str == "gbw" ? ApproxMethod::Gbw : ApproxMethod::Multicover;
            const auto res = approx_control(c, method, use_oracle ? &opt : nullptr);
            print_solution(c, res.solution, method_str);
            if (const auto lb = res.gaps.lower_bound()) std::cout << "gap_lower_bound " << *lb << '\n';
            if (use_oracle) std::cout << "optimum " << (res.optimum ? std::to_string(*res.optimum) : "uncapped") << '\n';
            if (res.ratio) std::cout << "ratio " << *res.ratio << '\n';
            return res.solution.feasible ? kOk : kInfeasible;
        }
        if (*reduce) {
            const auto doc = load(file, ov);
            if (doc.is_wcm()) throw UnsupportedRule("reduce expects WCCDV");
            const auto& c = doc.control();
            const auto red = std::holds_alternative<rule::TVeto>(c.rule) ? reduce_tveto_wccdv_to_tapproval_wccav(c)
                                                                       : reduce_tapproval_wccdv_to_tveto_wccav(c);
            InstanceDocument target;
            target.instance = red.target;
            target.provenance = Provenance{"reduction", {{"source_rule", rule_name(c.rule)}}};
            std::string back;
            for (std::size_t i = 0; i < red.back_map.size(); ++i) back += (i ? "," : "") + std::to_string(red.back_map[i]);
            target.provenance->params.emplace_back("back_map", back.empty() ? "-" : back);
            emit(out, serialize_instance(target));
            return kOk;
        }
        if (*generate) {
            Rng rng(seed);
            const HardMode hard = mode == "wccdv" ? HardMode::Wccdv : HardMode::Wccav;
            if (!mode.empty() && family != "gbw-worstcase" && mode != "wccav" && mode != "wccdv")
                throw ValidationError("--mode must be wccav or wccdv");
            auto ks = [&]() -> std::vector<Weight> {
                if (!ks_str.empty()) return parse_csv(ks_str, "ks");
                if (family == "scoring-partition-prime" && hard == HardMode::Wccdv)
                    return random_partition_prime(rng, n % 2 ? n + 1 : n, max_weight, max_weight / 2);
                return random_partition(rng, n, max_weight);
            };
            auto x3c = [&]() { return sets_str.empty() ? random_x3c(rng, t, n) : parse_sets(t, sets_str); };

            if (family == "random") {
                RandomSpec spec{ov.problem.empty() ? ControlKind::WCCAV : parse_kind(ov.problem),
                                ov.rule.empty() ? RuleSpec{rule::TApproval{2}} : parse_rule(ov.rule), m, n, pool,
                                max_weight, generate->count("--budget") ? budget : pool};
                validate_rule(spec.rule, m);
                if (count <= 1) {
                    InstanceDocument doc;
                    doc.instance = random_control(rng, spec);
                    emit(out, serialize_instance(doc));
                    return kOk;
                }
                if (out.empty()) throw ValidationError("--count > 1 needs --out <directory>");
                fs::create_directories(out);
                for (std::size_t i = 0; i < count; ++i) {
                    InstanceDocument doc;
                    doc.instance = random_control(rng, spec);
                    char name[32];
                    std::snprintf(name, sizeof name, "random_%05zu.txt", i);
                    write_text_file((fs::path(out) / name).string(), serialize_instance(doc));
                }
                return kOk;
            }
            if (family == "gap-realize") {
                const auto gaps = parse_csv(gaps_str, "gaps");
                ControlInstance c;
                c.kind = ControlKind::WCCAV;
                c.rule = rule::TApproval{t};
                for (std::size_t i = 0; i < 2 * t; ++i) c.candidates.push_back("c" + std::to_string(i + 1));
                c.registered = realize_gaps(t, gaps, weighted);
                c.preferred = 2 * t - 1;
                c.budget = 0;
                InstanceDocument doc;
                doc.instance = c;
                doc.provenance = Provenance{"gap-realize", {{"t", std::to_string(t)}, {"gaps", gaps_str}}};
                emit(out, serialize_instance(doc));
                return kOk;
            }
            GeneratedInstance g;
            if (family == "borda-partition") {
                g = gen_borda_partition(ks(), hard, m);
            } else if (family == "scoring-partition-prime") {
                const auto alpha = ScoringVector::from(alpha_str.empty() ? std::vector<Weight>{2, 1, 0}
                                                                         : parse_csv(alpha_str, "alpha"));
                g = gen_scoring_partitionprime(alpha, ks(), hard, T > 0 ? std::optional<Weight>(T) : std::nullopt);
            } else if (family == "condorcet-partition") {
                g = gen_condorcet_partition(ks(), hard, m, ov.rule.empty() ? RuleSpec{rule::Condorcet{}} : parse_rule(ov.rule));
            } else if (family == "x3c-2approval") {
                std::optional<std::pair<Weight, Weight>> w;
                if (!weights_str.empty()) {
                    const auto xs = parse_csv(weights_str, "weights");
                    if (xs.size() != 2) throw ValidationError("--weights takes w1,w2");
                    w = std::pair{xs[0], xs[1]};
                }
                g = gen_x3c_2approval_wccdv(x3c(), w);
            } else if (family == "x3c-3veto") {
                g = gen_x3c_3veto_wccdv(x3c());
            } else {
                WorstCaseMode wm = WorstCaseMode::TApprovalWccav;
                if (mode == "tveto-wccdv" || mode == "wccdv")
                    wm = WorstCaseMode::TVetoWccdv;
                else if (!mode.empty() && mode != "tapproval-wccav" && mode != "wccav")
                    throw ValidationError("--mode must be tapproval-wccav or tveto-wccdv");
                g = gen_gbw_worstcase(t, wm);
            }
            emit(out, serialize_instance(to_document(g)));
            return kOk;
        }
        if (*bench) {
            std::vector<ApproxMethod> ms;
            if (methods.empty()) methods = {"gbw", "multicover"};
            for (const auto& s : methods) ms.push_back(s == "gbw" ? ApproxMethod::Gbw : ApproxMethod::Multicover);
            std::vector<BenchInput> corpus;
            for (const auto& path : expand_files(files)) {
                auto doc = read_instance_file(path);
                if (doc.is_wcm()) throw UnsupportedRule(path + ": bench does not handle wcm");
                corpus.push_back({fs::path(path).stem().string(), doc.control()});
            }
            emit(out, format_csv(run_bench(std::move(corpus), ms, opt, timing)));
            return kOk;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return kUsage;
}
