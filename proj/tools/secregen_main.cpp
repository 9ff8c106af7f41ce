// secregen: build, verify, simulate, and sweep wiretap-secure exact-repair
// storage codes. Subcommands: construct, verify, simulate, bound, region.
//
// Exit codes: 0 pass, 1 property failure, 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "secregen/builders.hpp"
#include "secregen/descriptor.hpp"
#include "secregen/simulator.hpp"
#include "secregen/tradeoff.hpp"
#include "secregen/verify.hpp"

namespace {

using namespace secregen;

constexpr std::uint64_t kDefaultEnumBudget = 1ull << 24;

std::uint64_t enum_budget() {
    if (const char* env = std::getenv("SECREGEN_ENUM_BUDGET")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::runtime_error("SECREGEN_ENUM_BUDGET must be a positive integer");
    }
    return kDefaultEnumBudget;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open descriptor: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::uint32_t> parse_node_list(const std::string& csv) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::uint32_t(std::stoul(item)));
    }
    return out;
}

int cmd_construct(const std::string& name, const BuilderRequest& req, const std::string& out) {
    try {
        LinearDssCode code = build_by_name(name, req);
        write_output(out, code_to_json(code));
        return 0;
    } catch (const std::invalid_argument& e) {
        nlohmann::ordered_json diag = {{"error", "usage"}, {"detail", e.what()}};
        std::cerr << diag.dump(2) << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        nlohmann::ordered_json diag = {{"error", "verification"}, {"detail", e.what()}};
        std::cerr << diag.dump(2) << "\n";
        return 1;
    }
}

LinearDssCode parse_descriptor(const std::string& path, bool gated) {
    std::string text = read_file(path);
    try {
        return gated ? code_from_json(text) : code_from_json_unverified(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed descriptor " + path + ": " + e.what());
    }
}

int cmd_verify(const std::string& path, std::optional<std::string> attack,
               std::optional<std::uint32_t> l, bool exhaustive, const std::string& out) {
    // the gate runs at parse time: a descriptor failing its own declared
    // properties is rejected outright, before any override is applied
    LinearDssCode code = [&] {
        try {
            return parse_descriptor(path, true);
        } catch (const std::runtime_error& e) {
            nlohmann::ordered_json diag = {{"error", "verification"}, {"detail", e.what()}};
            std::cerr << diag.dump(2) << "\n";
            throw;
        }
    }();
    Attack a = attack ? attack_from_name(*attack) : code.params().attack;
    std::uint32_t ll = l ? *l : code.params().l;
    std::string report = verification_report_json(code, a, ll, exhaustive, enum_budget());
    write_output(out, report);
    bool pass = nlohmann::json::parse(report).at("pass").get<bool>();
    return pass ? 0 : 1;
}

int cmd_simulate(const std::string& path, std::uint64_t seed, const std::string& failures,
                 const std::string& wiretap_spec, const std::string& out) {
    LinearDssCode code = parse_descriptor(path, true);
    SimState state(code, seed);
    for (std::uint32_t node : parse_node_list(failures)) state.fail_and_repair(node);

    nlohmann::ordered_json result;
    if (!wiretap_spec.empty()) {
        auto colon = wiretap_spec.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--wiretap", "expected kind:n1,n2,...");
        Attack attack = attack_from_name(wiretap_spec.substr(0, colon));
        std::vector<std::uint32_t> nodes = parse_node_list(wiretap_spec.substr(colon + 1));
        AdversaryTranscript t = state.wiretap(attack, nodes);
        LeakageReport leak = leakage_rank(code, t.view);
        result["wiretap"] = {{"attack", attack_name(t.attack)},
                             {"nodes", t.nodes},
                             {"values", t.values},
                             {"matches_declared_l", t.matches_declared_l},
                             {"leakage", leak.leakage},
                             {"secure", leak.secure}};
    }
    result["disk_reads"] = {{"total", state.disk_reads_total()}};
    nlohmann::ordered_json per;
    for (std::uint32_t i = 1; i <= code.params().n; ++i)
        per[std::to_string(i)] = state.disk_reads_per_node()[i];
    result["disk_reads"]["per_node"] = per;

    std::ostringstream body;
    body << state.export_events() << result.dump(2) << "\n";
    write_output(out, body.str());
    return 0;
}

int cmd_bound(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t l,
              const std::string& attack, const std::string& alpha, const std::string& beta,
              bool upper_bound_only, const std::string& out) {
    TradeoffQuery q;
    q.n = n; q.k = k; q.d = d; q.l = l;
    q.attack = attack_from_name(attack);
    q.alpha = parse_rational(alpha);
    q.beta = parse_rational(beta);
    BoundResult result;
    if (q.attack == Attack::none) {
        result.value = functional_capacity(n, k, d, q.alpha, q.beta);
        result.source = BoundSource::eq1;
        result.tight = false;
    } else if (theorem_form(n, k, d, l, q.attack)) {
        result = theorem_bound(q);
    } else {
        if (!upper_bound_only)
            throw CLI::ValidationError(
                "bound", "tuple not covered by a proven bound; pass --upper-bound-only "
                         "for the cut-set bound");
        result.value = secure_capacity_bound(n, k, d, l, q.alpha, q.beta);
        result.source = BoundSource::eq13;
        result.tight = false;
    }
    write_output(out, bound_result_json(q, result));
    return 0;
}

int cmd_region(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t l,
               const std::string& attack, bool upper_bound_only, std::uint32_t grid_points,
               const std::string& out) {
    Attack a = attack_from_name(attack);
    std::optional<BoundForm> form;
    if (a != Attack::none) form = theorem_form(n, k, d, l, a);
    if (!form) {
        if (!upper_bound_only)
            throw CLI::ValidationError(
                "region", "tuple not covered by a proven bound; pass --upper-bound-only "
                          "to sweep the cut-set bound");
        form = secure_capacity_form(k, d, l);
    }
    RegionSweep sweep = region_sweep(*form, d, grid_points);
    write_output(out, region_csv(sweep));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wiretap-secure exact-repair storage codes: construct, verify, simulate, sweep"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a code and write its descriptor");
    std::string builder_id;
    construct->add_option("name", builder_id, "builder id")
        ->required()
        ->check(CLI::IsMember(builder_names()));
    BuilderRequest req;
    std::uint64_t field_order = 0;
    construct->add_option("--n", req.n, "number of nodes");
    construct->add_option("--k", req.k, "reconstruction threshold");
    construct->add_option("--d", req.d, "repair degree (defaults to n-1)");
    construct->add_option("--l", req.l, "wiretapped nodes");
    construct->add_option("--field", field_order, "field order (prime power)");
    std::string construct_out;
    construct->add_option("--out", construct_out, "descriptor path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a descriptor's claimed properties");
    std::string verify_path, verify_out;
    std::string attack_override;
    std::int64_t l_override = -1;
    bool exhaustive = false;
    verify->add_option("descriptor", verify_path, "descriptor JSON path")->required();
    verify->add_option("--attack", attack_override, "override attack kind")
        ->check(CLI::IsMember({"type1", "type2"}));
    verify->add_option("--l", l_override, "override wiretapped-set size");
    verify->add_flag("--exhaustive", exhaustive,
                     "cross-check leakage by exhaustive enumeration");
    verify->add_option("--out", verify_out, "report path (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run failures, repairs, and wiretaps");
    std::string sim_path, sim_failures, sim_wiretap, sim_out;
    std::uint64_t seed = 0;
    simulate->add_option("descriptor", sim_path, "descriptor JSON path")->required();
    simulate->add_option("--seed", seed, "generator seed")->required();
    simulate->add_option("--failures", sim_failures, "nodes to fail in order, e.g. 1,3,1");
    simulate->add_option("--wiretap", sim_wiretap, "adversary spec, e.g. type2:1,2");
    simulate->add_option("--out", sim_out, "output path (default stdout)");

    // bound
    auto* bound = app.add_subcommand("bound", "capacity bound for one (alpha, beta) query");
    std::uint32_t bn = 0, bk = 0, bd = 0, bl = 0;
    std::string battack = "type1", balpha, bbeta, bound_out;
    bool bound_upper_only = false;
    bound->add_option("--n", bn, "number of nodes")->required();
    bound->add_option("--k", bk, "reconstruction threshold")->required();
    bound->add_option("--d", bd, "repair degree")->required();
    bound->add_option("--l", bl, "wiretapped nodes")->required();
    bound->add_option("--attack", battack, "attack kind")
        ->check(CLI::IsMember({"none", "type1", "type2"}));
    bound->add_option("--alpha", balpha, "storage per node, rational like 3/2")->required();
    bound->add_option("--beta", bbeta, "per-helper bandwidth, rational")->required();
    bound->add_flag("--upper-bound-only", bound_upper_only,
                    "fall back to the cut-set bound for uncovered tuples");
    bound->add_option("--out", bound_out, "output path (default stdout)");

    // region
    auto* region = app.add_subcommand("region", "normalized storage/bandwidth boundary CSV");
    std::uint32_t rn = 0, rk = 0, rd = 0, rl = 0, grid = 512;
    std::string rattack = "type1", region_out;
    bool upper_only = false;
    region->add_option("--n", rn, "number of nodes")->required();
    region->add_option("--k", rk, "reconstruction threshold")->required();
    region->add_option("--d", rd, "repair degree")->required();
    region->add_option("--l", rl, "wiretapped nodes")->required();
    region->add_option("--attack", rattack, "attack kind")
        ->check(CLI::IsMember({"none", "type1", "type2"}));
    region->add_flag("--upper-bound-only", upper_only,
                     "sweep the cut-set bound for tuples no theorem covers");
    region->add_option("--grid", grid, "sample points per axis (default 512)");
    region->add_option("--out", region_out, "CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            req.field_order = field_order;
            return cmd_construct(builder_id, req, construct_out);
        }
        if (*verify) {
            std::optional<std::string> att;
            if (!attack_override.empty()) att = attack_override;
            std::optional<std::uint32_t> l;
            if (l_override >= 0) l = std::uint32_t(l_override);
            return cmd_verify(verify_path, att, l, exhaustive, verify_out);
        }
        if (*simulate) return cmd_simulate(sim_path, seed, sim_failures, sim_wiretap, sim_out);
        if (*bound)
            return cmd_bound(bn, bk, bd, bl, battack, balpha, bbeta, bound_upper_only, bound_out);
        if (*region) return cmd_region(rn, rk, rd, rl, rattack, upper_only, grid, region_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
