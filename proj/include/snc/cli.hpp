#pragma once

#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "snc/blowup.hpp"
#include "snc/decompose.hpp"
#include "snc/dot.hpp"
#include "snc/errors.hpp"
#include "snc/hj.hpp"
#include "snc/json_io.hpp"
#include "snc/parabola.hpp"
#include "snc/ratfunc.hpp"
#include "snc/resolution_sim.hpp"
#include "snc/tower.hpp"

// Subcommand front end. Outputs are pure functions of the inputs: identical
// invocations produce byte-identical stdout. Exit codes: 0 success, 1 domain
// error (also: non-contractible input, failed certificates), 2 structural or
// parse error (also: usage problems), 3 internal defect.

namespace snc::cli {

struct CommandResult {
    int code = 0;
    std::string out;
    std::string err;
};

inline const char* usage_text() {
    return "usage: snccalc <command> [options]\n"
           "\n"
           "commands:\n"
           "  resolve --k K --m M [--json|--dot]    minimal-resolution chain of y^M/x^K\n"
           "  simulate --k K --m M [--json|--dot]   divisor-coefficient resolution oracle\n"
           "  contract <graph.json>                 contraction sequence or stuck residual\n"
           "  decompose <graph.json> [--hint ID]    stage factorization of a blow-up graph\n"
           "  synthesize <stages.json>              replay a stage list into a graph\n"
           "  dot <graph.json>                      Graphviz export\n"
           "  verify-tower <tower.json> --alpha A,B unit-form conjugation certificates\n"
           "  chi-check --k K --m M [--c C] --point S,T   chart identity at a point\n"
           "  parabola --target S,T [--avoid <points.json>]  avoiding parabola through target\n";
}

namespace detail {

struct ParsedArgs {
    std::vector<std::string> positional;
    std::map<std::string, std::string> values;
    std::set<std::string> switches;
};

// Flags a command accepts: value flags consume the next token.
struct FlagSpec {
    std::set<std::string> value_flags;
    std::set<std::string> switch_flags;
    std::size_t positional_count = 0;
};

inline ParsedArgs parse_flags(const std::vector<std::string>& args, std::size_t start,
                              const FlagSpec& spec) {
    ParsedArgs out;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) == 0) {
            const std::string name = a.substr(2);
            if (spec.value_flags.count(name)) {
                require_structure(i + 1 < args.size(), "flag --" + name + " needs a value");
                require_structure(!out.values.count(name), "flag --" + name + " given twice");
                out.values[name] = args[++i];
            } else if (spec.switch_flags.count(name)) {
                out.switches.insert(name);
            } else {
                throw structural_error("unknown flag: " + a);
            }
        } else {
            out.positional.push_back(a);
        }
    }
    if (out.positional.size() < spec.positional_count)
        throw structural_error("missing a file argument");
    if (out.positional.size() > spec.positional_count)
        throw structural_error("unexpected argument: " + out.positional[spec.positional_count]);
    return out;
}

inline const std::string& required(const ParsedArgs& a, const std::string& flag) {
    const auto it = a.values.find(flag);
    require_structure(it != a.values.end(), "missing required flag --" + flag);
    return it->second;
}

inline long long parse_integer(const std::string& s) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require_structure(ec == std::errc() && ptr == s.data() + s.size(),
                      "malformed integer: " + s);
    return v;
}

inline RationalPoint parse_point(const std::string& s) {
    const auto comma = s.find(',');
    require_structure(comma != std::string::npos && s.find(',', comma + 1) == std::string::npos,
                      "a point must be two rationals separated by a comma: " + s);
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

inline bool want_dot(const ParsedArgs& a) {
    require_structure(!(a.switches.count("json") && a.switches.count("dot")),
                      "--json and --dot are mutually exclusive");
    return a.switches.count("dot") != 0;
}

inline CommandResult cmd_resolve(const ParsedArgs& a) {
    const auto chain =
        resolution_chain(parse_integer(required(a, "k")), parse_integer(required(a, "m")));
    if (want_dot(a))
        return {0, graph_to_dot(chain_to_graph(chain)), ""};
    return {0, chain_to_json_text(mark_chain(chain)), ""};
}

inline CommandResult cmd_simulate(const ParsedArgs& a) {
    const auto d = simulate(parse_integer(required(a, "k")), parse_integer(required(a, "m")));
    if (want_dot(a))
        return {0, decorated_to_dot(d), ""};
    return {0, decorated_to_json_text(d), ""};
}

inline CommandResult cmd_contract(const ParsedArgs& a) {
    const auto g = graph_from_json_text(read_text_file(a.positional[0]));
    const auto outcome = contract_fully(g);
    if (const auto* seq = std::get_if<ContractionSequence>(&outcome)) {
        json out;
        out["contractible"] = true;
        out["order"] = json::array();
        for (const auto& step : seq->steps) {
            json s;
            s["vertex"] = step.vertex;
            s["neighbors"] = step.neighbors;
            out["order"].push_back(std::move(s));
        }
        return {0, to_text(out), ""};
    }
    json out;
    out["contractible"] = false;
    out["residual"] = graph_to_json(std::get<NotContractible>(outcome).residual);
    return {1, to_text(out), "error: the graph is not contractible\n"};
}

inline CommandResult cmd_decompose(const ParsedArgs& a) {
    const auto g = graph_from_json_text(read_text_file(a.positional[0]));
    std::optional<VertexId> hint;
    if (const auto it = a.values.find("hint"); it != a.values.end())
        hint = it->second;
    return {0, stages_to_json_text(factorize(g, hint)), ""};
}

inline CommandResult cmd_synthesize(const ParsedArgs& a) {
    const auto stages = stages_from_json_text(read_text_file(a.positional[0]));
    return {0, graph_to_json_text(synthesize(stages)), ""};
}

inline CommandResult cmd_dot(const ParsedArgs& a) {
    return {0, graph_to_dot(graph_from_json_text(read_text_file(a.positional[0]))), ""};
}

inline CommandResult cmd_verify_tower(const ParsedArgs& a) {
    const auto tower = tower_from_json_text(read_text_file(a.positional[0]));
    const auto ab = parse_point(required(a, "alpha"));
    const auto outcome = conjugate_automorphism(tower, moebius_alpha(ab.x, ab.y));
    json out;
    out["ok"] = outcome.ok;
    out["certificates"] = json::array();
    for (const auto& c : outcome.certificates) {
        json e;
        e["stage"] = c.stage;
        e["p_vanishes_on_axis"] = c.p_vanishes_on_axis;
        e["q_vanishes_on_axis"] = c.q_vanishes_on_axis;
        e["center_fixed"] = c.center_fixed;
        out["certificates"].push_back(std::move(e));
    }
    out["maps"] = json::array();
    for (const auto& m : outcome.maps) {
        json e;
        e["p"] = to_string(m.p);
        e["q"] = to_string(m.q);
        out["maps"].push_back(std::move(e));
    }
    if (!outcome.ok)
        out["failure"] = outcome.failure;
    return {outcome.ok ? 0 : 1, to_text(out),
            outcome.ok ? "" : "error: " + outcome.failure + "\n"};
}

inline CommandResult cmd_chi_check(const ParsedArgs& a) {
    const auto k = parse_integer(required(a, "k"));
    const auto m = parse_integer(required(a, "m"));
    Rational c = 0;
    if (const auto it = a.values.find("c"); it != a.values.end())
        c = parse_rational(it->second);
    const auto pt = parse_point(required(a, "point"));
    const bool holds = verify_chi_identity(k, m, c, pt);
    json out;
    out["k"] = k;
    out["m"] = m;
    out["c"] = to_string(c);
    out["point"] = json::array({to_string(pt.x), to_string(pt.y)});
    out["holds"] = holds;
    return {holds ? 0 : 1, to_text(out), ""};
}

inline CommandResult cmd_parabola(const ParsedArgs& a) {
    const auto target = parse_point(required(a, "target"));
    std::vector<RationalPoint> avoid;
    if (const auto it = a.values.find("avoid"); it != a.values.end())
        avoid = points_from_json_text(read_text_file(it->second));
    const auto coeffs = find_avoiding_parabola(target, avoid);
    json out;
    out["a"] = to_string(coeffs.a);
    out["b"] = to_string(coeffs.b);
    out["c"] = to_string(coeffs.c);
    return {0, to_text(out), ""};
}

inline CommandResult dispatch(const std::vector<std::string>& args) {
    require_structure(!args.empty(), "no command given");
    const std::string& cmd = args[0];
    if (cmd == "resolve")
        return cmd_resolve(parse_flags(args, 1, {{"k", "m"}, {"json", "dot"}, 0}));
    if (cmd == "simulate")
        return cmd_simulate(parse_flags(args, 1, {{"k", "m"}, {"json", "dot"}, 0}));
    if (cmd == "contract")
        return cmd_contract(parse_flags(args, 1, {{}, {}, 1}));
    if (cmd == "decompose")
        return cmd_decompose(parse_flags(args, 1, {{"hint"}, {}, 1}));
    if (cmd == "synthesize")
        return cmd_synthesize(parse_flags(args, 1, {{}, {}, 1}));
    if (cmd == "dot")
        return cmd_dot(parse_flags(args, 1, {{}, {}, 1}));
    if (cmd == "verify-tower")
        return cmd_verify_tower(parse_flags(args, 1, {{"alpha"}, {}, 1}));
    if (cmd == "chi-check")
        return cmd_chi_check(parse_flags(args, 1, {{"k", "m", "c", "point"}, {}, 0}));
    if (cmd == "parabola")
        return cmd_parabola(parse_flags(args, 1, {{"target", "avoid"}, {}, 0}));
    throw structural_error("unknown command: " + cmd);
}

} // namespace detail

inline CommandResult run(const std::vector<std::string>& args) {
    try {
        return detail::dispatch(args);
    } catch (const domain_error& e) {
        return {1, "", std::string("error: ") + e.what() + "\n"};
    } catch (const structural_error& e) {
        return {2, "", std::string("error: ") + e.what() + "\n" + usage_text()};
    } catch (const internal_error& e) {
        return {3, "", std::string("internal error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {3, "", std::string("internal error: ") + e.what() + "\n"};
    }
}

inline int main_entry(int argc, char** argv) {
    const auto result = run({argv + 1, argv + argc});
    std::fputs(result.out.c_str(), stdout);
    std::fputs(result.err.c_str(), stderr);
    return result.code;
}

} // namespace snc::cli
