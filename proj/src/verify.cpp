#include "secregen/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace secregen {

namespace {

std::vector<std::uint32_t> sorted_nodes(const LinearDssCode& code,
                                        std::vector<std::uint32_t> nodes) {
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < 1 || nodes[i] > code.params().n)
            throw std::out_of_range("wiretap view: node out of range");
        if (i > 0 && nodes[i] == nodes[i - 1])
            throw std::invalid_argument("wiretap view: duplicate node");
    }
    return nodes;
}

std::string subset_string(const std::vector<std::uint32_t>& nodes) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << nodes[i];
    os << "}";
    return os.str();
}

} // namespace

WiretapView type1_view(const LinearDssCode& code, std::vector<std::uint32_t> nodes) {
    nodes = sorted_nodes(code, std::move(nodes));
    FieldMatrix rows(code.field(), 0, code.params().coords());
    for (std::uint32_t i : nodes) rows = rows.vstack(code.node_functionals(i));
    return WiretapView{Attack::type1, std::move(nodes), std::move(rows), {}};
}

WiretapView type2_view(const LinearDssCode& code, std::vector<std::uint32_t> nodes) {
    nodes = sorted_nodes(code, std::move(nodes));
    FieldMatrix rows(code.field(), 0, code.params().coords());
    std::vector<WiretapView::RowSource> sources;
    std::vector<std::vector<Elem>> seen;
    for (std::uint32_t j : nodes) {
        for (const HelperTransfer& h : code.repair_of(j).helpers) {
            FieldMatrix sent = code.transfer_functionals(h.node, j);
            for (std::size_t r = 0; r < sent.rows(); ++r) {
                std::vector<Elem> row = sent.row(r);
                if (std::find(seen.begin(), seen.end(), row) != seen.end()) continue;
                seen.push_back(row);
                FieldMatrix one(code.field(), 1, sent.cols(), row);
                rows = rows.vstack(one);
                sources.push_back({j, h.node, std::uint32_t(r)});
            }
        }
    }
    return WiretapView{Attack::type2, std::move(nodes), std::move(rows), std::move(sources)};
}

WiretapView wiretap_view(const LinearDssCode& code, Attack attack,
                         std::vector<std::uint32_t> nodes) {
    switch (attack) {
        case Attack::type1: return type1_view(code, std::move(nodes));
        case Attack::type2: return type2_view(code, std::move(nodes));
        case Attack::none: break;
    }
    throw std::invalid_argument("wiretap_view: attack must be type1 or type2");
}

LeakageReport leakage_rank(const LinearDssCode& code, const WiretapView& view) {
    if (view.functionals.cols() != code.params().coords())
        throw std::invalid_argument("leakage_rank: coordinate count mismatch");
    LeakageReport rep;
    rep.nodes = view.nodes;
    rep.view_rank = view.functionals.rank();
    rep.key_rank = code.key_part(view.functionals).rank();
    rep.leakage = rep.view_rank - rep.key_rank;
    rep.secure = rep.leakage == 0;
    if (rep.leakage > std::min<std::uint64_t>(code.params().file_size, rep.view_rank))
        throw std::logic_error("leakage_rank: leakage outside [0, min(B, rank)]");
    return rep;
}

std::optional<std::uint64_t> exhaustive_state_count(const LinearDssCode& code) {
    std::uint64_t states = 1;
    for (std::uint32_t i = 0; i < code.params().coords(); ++i) {
        if (states > (1ull << 62) / code.field().order()) return std::nullopt;
        states *= code.field().order();
    }
    return states;
}

Rational leakage_exhaustive(const LinearDssCode& code, const WiretapView& view,
                            std::uint64_t state_budget) {
    if (view.functionals.cols() != code.params().coords())
        throw std::invalid_argument("leakage_exhaustive: coordinate count mismatch");
    auto states = exhaustive_state_count(code);
    if (!states || *states > state_budget)
        throw std::runtime_error("leakage_exhaustive: state space exceeds budget");

    const std::uint32_t q = code.field().order();
    const std::uint32_t coords = code.params().coords();
    const std::uint32_t b = code.params().file_size;

    // joint counts over (file tuple, observation tuple) plus both marginals
    std::map<std::vector<Elem>, std::uint64_t> file_count, obs_count;
    std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::uint64_t> joint_count;

    std::vector<Elem> assignment(coords, 0);
    for (std::uint64_t s = 0; s < *states; ++s) {
        std::uint64_t rest = s;
        for (std::uint32_t i = 0; i < coords; ++i) {
            assignment[i] = Elem(rest % q);
            rest /= q;
        }
        std::vector<Elem> file(assignment.begin(), assignment.begin() + b);
        std::vector<Elem> obs = view.functionals.apply(assignment);
        ++file_count[file];
        ++obs_count[obs];
        ++joint_count[{std::move(file), std::move(obs)}];
    }

    auto entropy_of = [&](const auto& counts) {
        LogValue h = LogValue::log_of_integer(*states);
        Rational inv_n(-1, std::int64_t(*states));
        for (const auto& [key, w] : counts) {
            (void)key;
            if (w > 1) h = h + LogValue::scaled_log(inv_n * Rational(std::int64_t(w)), w);
        }
        return h;
    };

    LogValue mi = entropy_of(file_count) + entropy_of(obs_count) - entropy_of(joint_count);
    auto r = mi.as_multiple_of_log(q);
    if (!r) throw std::logic_error("leakage_exhaustive: leakage is not a multiple of log q");
    return *r;
}

MdsCheck verify_mds(const LinearDssCode& code) {
    const DssParams& p = code.params();
    for (const auto& subset : subsets_of_size(p.n, p.k)) {
        std::vector<std::size_t> cols;
        std::vector<std::uint32_t> nodes;
        for (std::size_t s : subset) {
            nodes.push_back(std::uint32_t(s + 1));
            for (std::size_t c : code.node_columns(std::uint32_t(s + 1))) cols.push_back(c);
        }
        FieldMatrix g_s = code.generator().select_cols(cols);
        std::size_t r = g_s.rank();
        std::size_t rk = code.key_part(g_s.transpose()).rank();
        if (r - rk != p.file_size) {
            MdsCheck fail;
            fail.pass = false;
            fail.witness = nodes;
            std::ostringstream os;
            os << "subset " << subset_string(nodes) << ": rank " << r << " - key rank " << rk
               << " = " << (r - rk) << ", expected " << p.file_size;
            fail.detail = os.str();
            return fail;
        }
    }
    return {};
}

RepairCheck verify_exact_repair(const LinearDssCode& code) {
    for (std::uint32_t j = 1; j <= code.params().n; ++j) {
        const NodeRepair& plan = code.repair_of(j);
        FieldMatrix stacked(code.field(), 0, code.params().coords());
        for (const HelperTransfer& h : plan.helpers)
            stacked = stacked.vstack(h.transfer.mul(code.node_functionals(h.node)));
        FieldMatrix repaired = plan.decoder.mul(stacked);
        if (!(repaired == code.node_functionals(j))) {
            RepairCheck fail;
            fail.pass = false;
            fail.witness_node = j;
            fail.detail = "repaired functionals of node " + std::to_string(j) +
                          " differ from stored functionals";
            return fail;
        }
    }
    return {};
}

SecrecyCheck verify_secrecy(const LinearDssCode& code, Attack attack, std::uint32_t l) {
    if (attack == Attack::none)
        throw std::invalid_argument("verify_secrecy: attack must be type1 or type2");
    if (l >= code.params().k)
        throw std::invalid_argument("verify_secrecy: require l < k");
    SecrecyCheck check;
    check.attack = attack;
    check.l = l;
    for (const auto& subset : subsets_of_size(code.params().n, l)) {
        std::vector<std::uint32_t> nodes;
        for (std::size_t s : subset) nodes.push_back(std::uint32_t(s + 1));
        LeakageReport rep = leakage_rank(code, wiretap_view(code, attack, nodes));
        if (check.subsets.empty() || rep.leakage > check.worst.leakage) check.worst = rep;
        if (!rep.secure) check.pass = false;
        check.subsets.push_back(std::move(rep));
    }
    return check;
}

SecrecyCheck verify_type1(const LinearDssCode& code, std::uint32_t l) {
    return verify_secrecy(code, Attack::type1, l);
}

SecrecyCheck verify_type2(const LinearDssCode& code, std::uint32_t l) {
    return verify_secrecy(code, Attack::type2, l);
}

void verify_or_throw(const LinearDssCode& code) {
    MdsCheck mds = verify_mds(code);
    if (!mds.pass)
        throw std::runtime_error("verification failed (reconstruction): " + mds.detail);
    RepairCheck rep = verify_exact_repair(code);
    if (!rep.pass)
        throw std::runtime_error("verification failed (exact repair): " + rep.detail);
    if (code.params().attack != Attack::none) {
        SecrecyCheck sec = verify_secrecy(code, code.params().attack, code.params().l);
        if (!sec.pass) {
            std::ostringstream os;
            os << "verification failed (" << attack_name(code.params().attack)
               << " secrecy): leakage " << sec.worst.leakage << " at subset "
               << subset_string(sec.worst.nodes);
            throw std::runtime_error(os.str());
        }
    }
}

} // namespace secregen
