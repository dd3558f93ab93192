#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wvc/approx.hpp"

namespace wvc {

inline constexpr const char* kBenchHeader =
    "schema_version,instance_id,problem,rule,t,m,pool,method,size,optimum,ratio,wall_ms";

/// One method on one instance. `size` is empty when the method found no
/// solution; `optimum` is empty when the oracle hit its cap.
struct ExperimentRow {
    std::string instance_id;
    std::string problem;
    std::string rule;
    std::size_t t = 0;
    std::size_t m = 0;
    std::size_t pool = 0;
    std::string method;
    std::optional<std::size_t> size;
    std::optional<std::size_t> optimum;
    bool infeasible = false;  // the oracle proved there is no solution
    std::optional<double> ratio;
    double wall_ms = 0;
};

struct BenchInput {
    std::string id;
    ControlInstance instance;
};

std::string method_name(ApproxMethod m);

/// Runs every method on every instance, rows sorted by instance id then
/// method. `wall_ms` stays 0 unless `timing` is set, so that output is
/// reproducible byte for byte.
std::vector<ExperimentRow> run_bench(std::vector<BenchInput> corpus, const std::vector<ApproxMethod>& methods,
                                     const OracleOptions& opt, bool timing = false);

std::string format_csv(const std::vector<ExperimentRow>& rows);

}  // namespace wvc
