#include "wvc/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wvc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : ValidationError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const auto start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

// Plain decimal, optional leading '-', nothing else.
std::optional<Weight> to_int(std::string_view s) {
    Weight v = 0;
    if (s.empty() || s.front() == '+') return std::nullopt;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

Weight to_int_or(std::string_view s, const std::string& what) {
    auto v = to_int(s);
    if (!v) throw ValidationError("bad " + what + " '" + std::string(s) + "'");
    return *v;
}

std::size_t to_count(std::string_view s, const std::string& what) {
    const auto v = to_int_or(s, what);
    if (v < 0) throw ValidationError(what + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

const std::set<std::string> kPartitionFamilies{"borda-partition", "scoring-partition-prime", "condorcet-partition"};

}  // namespace

RuleSpec parse_rule(std::string_view text) {
    const auto colon = text.find(':');
    const auto head = text.substr(0, colon);
    const auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    const bool has_arg = colon != std::string_view::npos;
    auto no_arg = [&](RuleSpec r) -> RuleSpec {
        if (has_arg) throw ValidationError("rule '" + std::string(head) + "' takes no argument");
        return r;
    };
    if (head == "plurality") return no_arg(rule::TApproval{1});
    if (head == "veto") return no_arg(rule::TVeto{1});
    if (head == "borda") return no_arg(rule::Borda{});
    if (head == "condorcet") return no_arg(rule::Condorcet{});
    if (head == "weak-condorcet") return no_arg(rule::WeakCondorcet{});
    if (head == "maximin") return no_arg(rule::Maximin{});
    if (!has_arg) throw ValidationError("unknown rule '" + std::string(text) + "'");
    if (head == "t-approval" || head == "t-veto") {
        const auto t = to_count(arg, "t");
        if (t == 0) throw ValidationError("t must be positive");
        if (head == "t-approval") return rule::TApproval{t};
        return rule::TVeto{t};
    }
    if (head == "scoring") {
        std::vector<Weight> alphas;
        for (auto part : split_on(arg, ',')) alphas.push_back(to_int_or(part, "scoring value"));
        return rule::Scoring{ScoringVector::from(std::move(alphas))};
    }
    if (head == "copeland") {
        const auto parts = split_on(arg, '/');
        if (parts.size() > 2) throw ValidationError("copeland alpha must be p/q");
        const auto num = to_int_or(parts[0], "copeland numerator");
        const auto den = parts.size() == 2 ? to_int_or(parts[1], "copeland denominator") : 1;
        if (den <= 0) throw ValidationError("copeland denominator must be positive");
        const auto alpha = Rational::make(num, den);
        if (alpha < Rational{0, 1} || Rational{1, 1} < alpha) throw ValidationError("copeland alpha must lie in [0, 1]");
        return rule::Copeland{alpha};
    }
    throw ValidationError("unknown rule '" + std::string(text) + "'");
}

ControlKind parse_kind(std::string_view text) {
    if (text == "wccav") return ControlKind::WCCAV;
    if (text == "wccdv") return ControlKind::WCCDV;
    if (text == "wdcav") return ControlKind::WDCAV;
    if (text == "wdcdv") return ControlKind::WDCDV;
    throw ValidationError("unknown problem '" + std::string(text) + "'");
}

InstanceDocument parse_instance(std::string_view text) {
    struct VoterLine {
        std::size_t line;
        bool registered;
        std::vector<std::string_view> tokens;  // weight, then names and '>'
    };
    std::map<std::string, std::pair<std::size_t, std::vector<std::string_view>>> singles;
    std::vector<VoterLine> voters;
    std::vector<std::pair<std::size_t, std::string_view>> manipulators;
    Provenance prov;
    std::map<std::string, std::size_t> param_line;
    bool has_prov = false;
    std::optional<bool> label;
    bool seen_version = false;

    std::size_t lineno = 0;
    for (auto raw : split_on(text, '\n')) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        auto tok = split_ws(raw);
        if (tok.empty() || tok[0].front() == '#') continue;
        const std::string key(tok[0]);
        auto fail = [&](const std::string& what) -> void { throw ParseError(lineno, what); };

        if (!seen_version) {
            if (key != "schema_version") fail("document must start with schema_version");
            if (tok.size() != 2) fail("schema_version takes one value");
            auto v = to_int(tok[1]);
            if (!v || *v != kSchemaVersion) fail("unsupported schema_version '" + std::string(tok[1]) + "'");
            seen_version = true;
            continue;
        }
        if (key == "voter") {
            if (tok.size() < 3) fail("voter needs a pool, a weight and a ranking");
            if (tok[1] != "registered" && tok[1] != "unregistered") fail("voter pool must be registered or unregistered");
            voters.push_back({lineno, tok[1] == "registered", {tok.begin() + 2, tok.end()}});
        } else if (key == "manipulator") {
            if (tok.size() != 2) fail("manipulator takes one weight");
            manipulators.emplace_back(lineno, tok[1]);
        } else if (key == "provenance") {
            if (tok.size() < 3) fail("provenance line is incomplete");
            if (tok[1] != "label") has_prov = true;
            if (tok[1] == "family") {
                if (tok.size() != 3) fail("provenance family takes one value");
                prov.family = std::string(tok[2]);
            } else if (tok[1] == "label") {
                if (tok.size() != 3 || (tok[2] != "yes" && tok[2] != "no")) fail("provenance label must be yes or no");
                label = tok[2] == "yes";
            } else if (tok[1] == "param") {
                if (tok.size() != 4) fail("provenance param takes a key and a value");
                if (prov.find(std::string(tok[2]))) fail("duplicate provenance param '" + std::string(tok[2]) + "'");
                prov.params.emplace_back(std::string(tok[2]), std::string(tok[3]));
                param_line[std::string(tok[2])] = lineno;
            } else {
                fail("unknown provenance field '" + std::string(tok[1]) + "'");
            }
        } else if (key == "schema_version") {
            fail("duplicate schema_version");
        } else if (key == "problem" || key == "rule" || key == "candidates" || key == "preferred" || key == "budget") {
            if (singles.count(key)) fail("duplicate '" + key + "'");
            if (tok.size() < 2) fail("'" + key + "' needs a value");
            if (key != "candidates" && tok.size() != 2) fail("'" + key + "' takes one value");
            singles[key] = {lineno, {tok.begin() + 1, tok.end()}};
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!seen_version) throw ParseError(0, "missing schema_version");
    for (const char* k : {"problem", "rule", "candidates", "preferred"})
        if (!singles.count(k)) throw ParseError(0, std::string("missing '") + k + "'");

    auto at = [&](const std::string& key, auto&& f) {
        const auto& [line, vals] = singles.at(key);
        try {
            return f(vals);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
    };

    const bool wcm = singles.at("problem").second[0] == "wcm";
    std::vector<std::string> names = at("candidates", [](const auto& vals) {
        std::vector<std::string> out;
        std::set<std::string_view> seen;
        for (auto v : vals) {
            if (v == ">") throw ValidationError("'>' is not a candidate name");
            if (!seen.insert(v).second) throw ValidationError("duplicate candidate '" + std::string(v) + "'");
            out.emplace_back(v);
        }
        return out;
    });
    const auto m = names.size();
    std::map<std::string_view, CandidateIndex> index;
    for (CandidateIndex c = 0; c < m; ++c) index[names[c]] = c;
    auto lookup = [&](std::string_view name) {
        auto it = index.find(name);
        if (it == index.end()) throw ValidationError("unknown candidate '" + std::string(name) + "'");
        return it->second;
    };

    const auto rule = at("rule", [&](const auto& vals) {
        auto r = parse_rule(vals[0]);
        validate_rule(r, m);
        return r;
    });
    const auto preferred = at("preferred", [&](const auto& vals) { return lookup(vals[0]); });

    auto parse_weight = [](std::string_view s) {
        const auto w = to_int_or(s, "weight");
        if (w < 1) throw ValidationError("weight must be positive, got " + std::string(s));
        return w;
    };

    std::vector<WeightedVote> registered, unregistered;
    for (const auto& v : voters) {
        try {
            WeightedVote vote{parse_weight(v.tokens[0]), {}};
            for (std::size_t i = 1; i < v.tokens.size(); ++i) {
                const bool sep = (i % 2) == 0;
                if (sep != (v.tokens[i] == ">")) throw ValidationError("ranking must be names separated by '>'");
                if (!sep) vote.prefs.push_back(lookup(v.tokens[i]));
            }
            if (v.tokens.size() % 2 != 0) throw ValidationError("ranking must not end with '>'");
            validate_vote(vote, m);
            (v.registered ? registered : unregistered).push_back(std::move(vote));
        } catch (const Error& e) {
            throw ParseError(v.line, e.what());
        }
    }

    InstanceDocument doc;
    if (wcm) {
        if (singles.count("budget")) throw ParseError(singles.at("budget").first, "wcm takes no budget");
        for (const auto& v : voters)
            if (!v.registered) throw ParseError(v.line, "wcm takes no unregistered voters");
        WcmInstance w{rule, names, std::move(registered), preferred, {}};
        for (auto [line, s] : manipulators) {
            try {
                w.manipulator_weights.push_back(parse_weight(s));
            } catch (const Error& e) {
                throw ParseError(line, e.what());
            }
        }
        try {
            w.validate();
        } catch (const Error& e) {
            throw ParseError(0, e.what());
        }
        doc.instance = std::move(w);
    } else {
        if (!manipulators.empty()) throw ParseError(manipulators.front().first, "manipulators need problem wcm");
        if (!singles.count("budget")) throw ParseError(0, "missing 'budget'");
        ControlInstance c;
        c.kind = at("problem", [](const auto& vals) { return parse_kind(vals[0]); });
        c.rule = rule;
        c.candidates = names;
        c.registered = std::move(registered);
        c.unregistered = std::move(unregistered);
        c.preferred = preferred;
        c.budget = at("budget", [](const auto& vals) { return to_count(vals[0], "budget"); });
        try {
            c.validate();
        } catch (const Error& e) {
            throw ParseError(0, e.what());
        }
        doc.instance = std::move(c);
    }

    if (has_prov) {
        if (prov.family.empty()) throw ParseError(0, "provenance needs a family");
        if (kPartitionFamilies.count(prov.family)) {
            if (const auto* ks = prov.find("ks")) {
                std::vector<Weight> values;
                try {
                    for (auto part : split_on(*ks, ',')) values.push_back(to_int_or(part, "ks entry"));
                    validate_partition(values);
                } catch (const Error& e) {
                    throw ParseError(param_line.at("ks"), std::string("provenance ks: ") + e.what());
                }
            }
        }
        doc.provenance = std::move(prov);
    }
    doc.label = label;
    return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
    std::ostringstream out;
    auto voter_line = [&](const char* pool, const WeightedVote& v, const std::vector<std::string>& names) {
        out << "voter " << pool << ' ' << v.weight;
        for (std::size_t i = 0; i < v.prefs.size(); ++i) out << (i ? " > " : " ") << names[v.prefs[i]];
        out << '\n';
    };
    auto header = [&](const std::string& problem, const RuleSpec& r, const std::vector<std::string>& names,
                      CandidateIndex p) {
        out << "schema_version " << kSchemaVersion << '\n';
        out << "problem " << problem << '\n';
        out << "rule " << rule_name(r) << '\n';
        out << "candidates";
        for (const auto& n : names) out << ' ' << n;
        out << '\n';
        out << "preferred " << names[p] << '\n';
    };
    if (doc.is_wcm()) {
        const auto& w = doc.wcm();
        header("wcm", w.rule, w.candidates, w.preferred);
        for (const auto& v : w.registered) voter_line("registered", v, w.candidates);
        for (auto x : w.manipulator_weights) out << "manipulator " << x << '\n';
    } else {
        const auto& c = doc.control();
        header(kind_name(c.kind), c.rule, c.candidates, c.preferred);
        out << "budget " << c.budget << '\n';
        for (const auto& v : c.registered) voter_line("registered", v, c.candidates);
        for (const auto& v : c.unregistered) voter_line("unregistered", v, c.candidates);
    }
    if (doc.provenance) {
        out << "provenance family " << doc.provenance->family << '\n';
        if (doc.label) out << "provenance label " << (*doc.label ? "yes" : "no") << '\n';
        for (const auto& [k, v] : doc.provenance->params) out << "provenance param " << k << ' ' << v << '\n';
    } else if (doc.label) {
        out << "provenance label " << (*doc.label ? "yes" : "no") << '\n';
    }
    return out.str();
}

InstanceDocument read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("failed writing " + path);
}

}  // namespace wvc
