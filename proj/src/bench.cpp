#include "wvc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace wvc {

std::string method_name(ApproxMethod m) { return m == ApproxMethod::Gbw ? "gbw" : "multicover"; }

namespace {

std::size_t rule_t(const RuleSpec& r) {
    if (auto a = std::get_if<rule::TApproval>(&r)) return a->t;
    if (auto v = std::get_if<rule::TVeto>(&r)) return v->t;
    return 0;
}

std::string fmt_ratio(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r);
    return buf;
}

}  // namespace

std::vector<ExperimentRow> run_bench(std::vector<BenchInput> corpus, const std::vector<ApproxMethod>& methods,
                                     const OracleOptions& opt, bool timing) {
    std::sort(corpus.begin(), corpus.end(), [](const BenchInput& a, const BenchInput& b) { return a.id < b.id; });
    std::vector<ExperimentRow> rows;
    for (const auto& in : corpus) {
        const auto& inst = in.instance;
        std::optional<std::size_t> optimum;
        bool infeasible = false;
        try {
            optimum = unbudgeted_optimum(inst, opt);
            infeasible = !optimum;
        } catch (const CapExceeded&) {
        }
        for (auto method : methods) {
            ExperimentRow row{in.id, kind_name(inst.kind), rule_name(inst.rule), rule_t(inst.rule), inst.size(),
                              inst.pool().size(), method_name(method), {}, {}, false, {}, 0};
            const auto start = std::chrono::steady_clock::now();
            const auto result = approx_control(inst, method, nullptr);
            const auto stop = std::chrono::steady_clock::now();
            if (timing) row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            if (result.solution.feasible) row.size = result.solution.chosen.size();
            row.optimum = optimum;
            row.infeasible = infeasible;
            if (row.size && optimum) row.ratio = *optimum == 0 ? 1.0 : double(*row.size) / double(*optimum);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << kBenchHeader << '\n';
    for (const auto& r : rows) {
        out << 1 << ',' << r.instance_id << ',' << r.problem << ',' << r.rule << ',' << r.t << ',' << r.m << ','
            << r.pool << ',' << r.method << ',';
        out << (r.size ? std::to_string(*r.size) : "none") << ',';
        out << (r.optimum ? std::to_string(*r.optimum) : r.infeasible ? "infeasible" : "uncapped") << ',';
        out << (r.ratio ? fmt_ratio(*r.ratio) : "NA") << ',';
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
        out << ms << '\n';
    }
    return out.str();
}

}  // namespace wvc
