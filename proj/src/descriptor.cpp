#include "secregen/descriptor.hpp"

#include <stdexcept>

#include <json.hpp>

namespace secregen {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json matrix_to_json(const FieldMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = m.data();
    return j;
}

FieldMatrix matrix_from_json(const FiniteField& f, const json& j) {
    return FieldMatrix(f, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                       j.at("data").get<std::vector<Elem>>());
}

} // namespace

std::string code_to_json(const LinearDssCode& code) {
    const DssParams& p = code.params();
    ordered_json j;
    j["schema_version"] = kDescriptorSchemaVersion;
    j["provenance"] = {{"builder", code.builder()}, {"version", kArtifactVersion}};
    j["params"] = {{"n", p.n},         {"k", p.k},
                   {"d", p.d},         {"alpha", p.alpha},
                   {"beta", p.beta},   {"B", p.file_size},
                   {"R", p.key_size},  {"l", p.l},
                   {"attack", attack_name(p.attack)}};
    j["field"] = {{"p", code.field().characteristic()},
                  {"m", code.field().degree()},
                  {"poly", code.field().modulus()}};
    j["generator"] = matrix_to_json(code.generator());
    ordered_json layout = ordered_json::array();
    for (std::uint32_t i = 1; i <= p.n; ++i) layout.push_back(code.node_columns(i));
    j["layout"] = layout;
    ordered_json repair = ordered_json::array();
    for (const NodeRepair& r : code.repair_plan()) {
        ordered_json jr;
        jr["node"] = r.node;
        ordered_json helpers = ordered_json::array();
        for (const HelperTransfer& h : r.helpers)
            helpers.push_back({{"node", h.node}, {"transfer", matrix_to_json(h.transfer)}});
        jr["helpers"] = helpers;
        jr["decoder"] = matrix_to_json(r.decoder);
        repair.push_back(jr);
    }
    j["repair"] = repair;
    return j.dump(2) + "\n";
}

LinearDssCode code_from_json_unverified(const std::string& text) {
    json j = json::parse(text);
    if (j.at("schema_version").get<int>() != kDescriptorSchemaVersion)
        throw std::runtime_error("descriptor: unsupported schema version");

    const json& jf = j.at("field");
    std::uint32_t p = jf.at("p").get<std::uint32_t>();
    std::uint32_t m = jf.at("m").get<std::uint32_t>();
    FiniteField field = m == 1
        ? FiniteField::prime(p)
        : FiniteField::with_polynomial(p, m, jf.at("poly").get<std::vector<std::uint32_t>>());

    const json& jp = j.at("params");
    DssParams params;
    params.n = jp.at("n").get<std::uint32_t>();
    params.k = jp.at("k").get<std::uint32_t>();
    params.d = jp.at("d").get<std::uint32_t>();
    params.alpha = jp.at("alpha").get<std::uint32_t>();
    params.beta = jp.at("beta").get<std::uint32_t>();
    params.file_size = jp.at("B").get<std::uint32_t>();
    params.key_size = jp.at("R").get<std::uint32_t>();
    params.l = jp.at("l").get<std::uint32_t>();
    params.attack = attack_from_name(jp.at("attack").get<std::string>());

    FieldMatrix generator = matrix_from_json(field, j.at("generator"));

    // the layout block is informative; the column convention is fixed, so
    // reject descriptors whose layout disagrees with it
    const json& layout = j.at("layout");
    if (layout.size() != params.n) throw std::runtime_error("descriptor: bad layout arity");
    for (std::uint32_t i = 0; i < params.n; ++i) {
        auto cols = layout.at(i).get<std::vector<std::size_t>>();
        if (cols.size() != params.alpha) throw std::runtime_error("descriptor: bad layout width");
        for (std::uint32_t t = 0; t < params.alpha; ++t)
            if (cols[t] != std::size_t(i) * params.alpha + t)
                throw std::runtime_error("descriptor: layout does not match column convention");
    }

    std::vector<NodeRepair> repair;
    for (const json& jr : j.at("repair")) {
        std::vector<HelperTransfer> helpers;
        for (const json& jh : jr.at("helpers"))
            helpers.push_back({jh.at("node").get<std::uint32_t>(),
                               matrix_from_json(field, jh.at("transfer"))});
        repair.push_back({jr.at("node").get<std::uint32_t>(), std::move(helpers),
                          matrix_from_json(field, jr.at("decoder"))});
    }

    std::string builder = j.at("provenance").at("builder").get<std::string>();
    return LinearDssCode(params, field, std::move(generator), std::move(repair), builder);
}

LinearDssCode code_from_json(const std::string& text) {
    LinearDssCode code = code_from_json_unverified(text);
    verify_or_throw(code); // external descriptors cannot smuggle unverified claims
    return code;
}

namespace {

ordered_json leakage_to_json(const LeakageReport& rep) {
    ordered_json j;
    j["nodes"] = rep.nodes;
    j["leakage"] = rep.leakage;
    j["view_rank"] = rep.view_rank;
    j["key_rank"] = rep.key_rank;
    j["secure"] = rep.secure;
    return j;
}

} // namespace

std::string verification_report_json(const LinearDssCode& code, Attack attack, std::uint32_t l,
                                     bool exhaustive_cross_check, std::uint64_t state_budget) {
    ordered_json j;
    j["schema_version"] = kDescriptorSchemaVersion;

    MdsCheck mds = verify_mds(code);
    j["mds"] = {{"pass", mds.pass}};
    if (!mds.pass) {
        j["mds"]["witness"] = mds.witness;
        j["mds"]["detail"] = mds.detail;
    }

    RepairCheck rep = verify_exact_repair(code);
    j["exact_repair"] = {{"pass", rep.pass}};
    if (!rep.pass) {
        j["exact_repair"]["witness_node"] = rep.witness_node;
        j["exact_repair"]["detail"] = rep.detail;
    }

    bool all_pass = mds.pass && rep.pass;
    if (attack != Attack::none) {
        SecrecyCheck sec = verify_secrecy(code, attack, l);
        ordered_json js;
        js["attack"] = attack_name(attack);
        js["l"] = l;
        js["pass"] = sec.pass;
        js["worst"] = leakage_to_json(sec.worst);
        ordered_json table = ordered_json::array();
        for (const LeakageReport& r : sec.subsets) table.push_back(leakage_to_json(r));
        js["subsets"] = table;
        if (exhaustive_cross_check) {
            ordered_json cross = ordered_json::array();
            for (const LeakageReport& r : sec.subsets) {
                WiretapView view = wiretap_view(code, attack, r.nodes);
                Rational exact = leakage_exhaustive(code, view, state_budget);
                ordered_json cj;
                cj["nodes"] = r.nodes;
                cj["exhaustive_leakage"] = exact.to_string();
                bool agrees = exact == Rational(std::int64_t(r.leakage));
                cj["agrees_with_rank"] = agrees;
                if (!agrees) all_pass = false;
                cross.push_back(cj);
            }
            js["exhaustive"] = cross;
        }
        if (!sec.pass) all_pass = false;
        j["secrecy"] = js;
    }
    j["pass"] = all_pass;
    return j.dump(2) + "\n";
}

} // namespace secregen
