#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "wvc/control.hpp"
#include "wvc/generators.hpp"

namespace wvc {

inline constexpr int kSchemaVersion = 1;

/// A control or manipulation instance as stored on disk.
///
///     schema_version 1
///     problem wccav
///     rule borda
///     candidates p a b
///     preferred p
///     budget 1
///     voter registered 3 b > p > a
///     voter unregistered 1 a > p > b
///     provenance family borda-partition
///     provenance label yes
///     provenance param ks 1,1,2
///
/// WCM documents use `problem wcm`, no budget, no unregistered voters and
/// one `manipulator <weight>` line per manipulator. Blank lines and lines
/// starting with `#` are ignored.
struct InstanceDocument {
    std::variant<ControlInstance, WcmInstance> instance;
    std::optional<Provenance> provenance;
    std::optional<bool> label;

    bool is_wcm() const { return std::holds_alternative<WcmInstance>(instance); }
    const ControlInstance& control() const { return std::get<ControlInstance>(instance); }
    const WcmInstance& wcm() const { return std::get<WcmInstance>(instance); }
};

/// Parse error carrying the 1-based line it refers to (0 for whole-document
/// problems).
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// `plurality`, `veto`, `t-approval:<t>`, `t-veto:<t>`, `borda`,
/// `scoring:<a1,...,am>`, `condorcet`, `weak-condorcet`, `copeland:<p/q>`,
/// `maximin`.
RuleSpec parse_rule(std::string_view text);

/// `wccav`, `wccdv`, `wdcav`, `wdcdv`.
ControlKind parse_kind(std::string_view text);

InstanceDocument parse_instance(std::string_view text);
/// Canonical form: fixed key order, voters in input order.
std::string serialize_instance(const InstanceDocument& doc);

InstanceDocument read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wvc
