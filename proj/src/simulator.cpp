#include "secregen/simulator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace secregen {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64: zero bound");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

SimState::SimState(const LinearDssCode& code, std::uint64_t seed)
    : code_(code), seed_(seed), disk_reads_(code.params().n + 1, 0),
      repaired_(code.params().n + 1, false) {
    SplitMix64 rng(seed);
    const FiniteField& f = code.field();
    file_.resize(code.params().file_size);
    keys_.resize(code.params().key_size);
    for (Elem& v : file_) v = Elem(rng.next_below(f.order()));
    for (Elem& v : keys_) v = Elem(rng.next_below(f.order()));

    std::vector<Elem> a = assignment();
    contents_.resize(code.params().n + 1);
    for (std::uint32_t i = 1; i <= code.params().n; ++i)
        contents_[i] = code.node_functionals(i).apply(a);

    SimEvent ev;
    ev.kind = SimEvent::Kind::init;
    ev.seed = seed;
    log_.push_back(std::move(ev));
}

std::vector<Elem> SimState::assignment() const {
    std::vector<Elem> a = file_;
    a.insert(a.end(), keys_.begin(), keys_.end());
    return a;
}

const std::vector<Elem>& SimState::node_contents(std::uint32_t node) const {
    if (node < 1 || node > code_.params().n)
        throw std::out_of_range("SimState: node out of range");
    return contents_[node];
}

std::vector<Elem> SimState::fail_and_repair(std::uint32_t node) {
    const NodeRepair& plan = code_.repair_of(node);
    const FiniteField& f = code_.field();

    SimEvent fail;
    fail.kind = SimEvent::Kind::fail;
    fail.node = node;
    log_.push_back(std::move(fail));

    std::vector<Elem> erased = contents_[node];
    contents_[node].assign(code_.params().alpha, 0);

    std::vector<Elem> received;
    std::uint64_t reads = 0;
    for (const HelperTransfer& h : plan.helpers) {
        FieldMatrix sent_map = h.transfer;
        std::vector<Elem> sent(sent_map.rows(), 0);
        for (std::size_t r = 0; r < sent_map.rows(); ++r) {
            Elem acc = 0;
            for (std::size_t c = 0; c < sent_map.cols(); ++c) {
                Elem coef = sent_map.at(r, c);
                if (coef != 0) acc = f.add(acc, f.mul(coef, contents_[h.node][c]));
            }
            sent[r] = acc;
        }
        // a helper reads each stored symbol touched by any of its rows
        std::uint64_t helper_reads = 0;
        for (std::size_t c = 0; c < sent_map.cols(); ++c) {
            bool touched = false;
            for (std::size_t r = 0; r < sent_map.rows(); ++r)
                if (sent_map.at(r, c) != 0) touched = true;
            if (touched) ++helper_reads;
        }
        disk_reads_[h.node] += helper_reads;
        reads += helper_reads;

        SimEvent tr;
        tr.kind = SimEvent::Kind::transfer;
        tr.from = h.node;
        tr.to = node;
        tr.values = sent;
        log_.push_back(std::move(tr));
        received.insert(received.end(), sent.begin(), sent.end());
    }

    std::vector<Elem> restored = plan.decoder.apply(received);
    if (restored != erased)
        throw std::logic_error("SimState: repair did not restore node " + std::to_string(node));
    contents_[node] = restored;
    repaired_[node] = true;

    SimEvent rep;
    rep.kind = SimEvent::Kind::repair;
    rep.node = node;
    rep.values = restored;
    rep.disk_reads = reads;
    log_.push_back(std::move(rep));
    return received;
}

std::vector<Elem> SimState::reconstruct(const std::vector<std::uint32_t>& nodes) const {
    if (nodes.size() != code_.params().k)
        throw std::invalid_argument("SimState: reconstruction needs exactly k nodes");
    std::vector<std::uint32_t> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    FieldMatrix stacked(code_.field(), 0, code_.params().coords());
    std::vector<Elem> observed;
    for (std::uint32_t i : sorted) {
        stacked = stacked.vstack(code_.node_functionals(i));
        const std::vector<Elem>& w = node_contents(i);
        observed.insert(observed.end(), w.begin(), w.end());
    }
    FieldMatrix want(code_.field(), code_.params().file_size, code_.params().coords());
    for (std::uint32_t r = 0; r < code_.params().file_size; ++r) want.set(r, r, 1);
    auto dec = solve_left(stacked, want);
    if (!dec)
        throw std::logic_error("SimState: no file decoder for a verified code (internal fault)");
    return dec->apply(observed);
}

AdversaryTranscript SimState::wiretap(Attack attack, const std::vector<std::uint32_t>& nodes) {
    std::vector<std::uint32_t> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    AdversaryTranscript t{attack, sorted, wiretap_view(code_, attack, sorted), {},
                          sorted.size() == code_.params().l};

    if (attack == Attack::type1) {
        // stored contents, straight from the live state
        for (std::uint32_t i : t.nodes) {
            const std::vector<Elem>& w = node_contents(i);
            t.values.insert(t.values.end(), w.begin(), w.end());
        }
    } else {
        for (std::uint32_t j : t.nodes)
            if (!repaired_[j]) fail_and_repair(j);
        // gather each kept row's value from the logged repair transcripts
        for (const WiretapView::RowSource& src : t.view.sources) {
            const SimEvent* found = nullptr;
            for (const SimEvent& ev : log_)
                if (ev.kind == SimEvent::Kind::transfer && ev.from == src.helper &&
                    ev.to == src.repaired_node)
                    found = &ev; // repeated repairs carry identical values
            if (!found) throw std::logic_error("SimState: wiretapped transfer not in log");
            t.values.push_back(found->values.at(src.transfer_row));
        }
    }

    SimEvent ev;
    ev.kind = SimEvent::Kind::wiretap;
    ev.attack = attack_name(attack);
    ev.nodes = t.nodes;
    ev.values = t.values;
    log_.push_back(std::move(ev));
    return t;
}

std::uint64_t SimState::disk_reads_total() const {
    std::uint64_t total = 0;
    for (std::uint64_t r : disk_reads_) total += r;
    return total;
}

std::string SimState::export_events() const {
    std::ostringstream os;
    for (const SimEvent& ev : log_) {
        nlohmann::ordered_json j;
        switch (ev.kind) {
            case SimEvent::Kind::init:
                j["event"] = "init";
                j["seed"] = ev.seed;
                break;
            case SimEvent::Kind::fail:
                j["event"] = "fail";
                j["node"] = ev.node;
                break;
            case SimEvent::Kind::transfer:
                j["event"] = "transfer";
                j["from"] = ev.from;
                j["to"] = ev.to;
                j["values"] = ev.values;
                break;
            case SimEvent::Kind::repair:
                j["event"] = "repair";
                j["node"] = ev.node;
                j["values"] = ev.values;
                j["disk_reads"] = ev.disk_reads;
                break;
            case SimEvent::Kind::wiretap:
                j["event"] = "wiretap";
                j["attack"] = ev.attack;
                j["nodes"] = ev.nodes;
                j["values"] = ev.values;
                break;
        }
        os << j.dump() << "\n";
    }
    return os.str();
}

SimState replay_events(const LinearDssCode& code, const std::string& jsonl) {
    std::istringstream in(jsonl);
    std::string line;
    std::optional<SimState> state;
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw std::runtime_error("replay: " + what);
    };
    std::size_t pending_transfers = 0;
    std::vector<Elem> pending_values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        std::string event = j.at("event").get<std::string>();
        if (event == "init") {
            require(!state.has_value(), "duplicate init event");
            state.emplace(code, j.at("seed").get<std::uint64_t>());
            continue;
        }
        require(state.has_value(), "event before init");
        if (event == "fail") {
            // transfers and repair verification happen at the repair event
            std::vector<Elem> rec = state->fail_and_repair(j.at("node").get<std::uint32_t>());
            pending_transfers = code.params().d;
            pending_values = std::move(rec);
        } else if (event == "transfer") {
            require(pending_transfers > 0, "unexpected transfer event");
            auto values = j.at("values").get<std::vector<Elem>>();
            std::size_t beta = code.params().beta;
            std::size_t offset = (code.params().d - pending_transfers) * beta;
            for (std::size_t i = 0; i < values.size(); ++i)
                require(values[i] == pending_values.at(offset + i), "transfer value mismatch");
            --pending_transfers;
        } else if (event == "repair") {
            require(pending_transfers == 0, "repair before all transfers");
            auto values = j.at("values").get<std::vector<Elem>>();
            std::uint32_t node = j.at("node").get<std::uint32_t>();
            require(values == state->node_contents(node), "repair value mismatch");
        } else if (event == "wiretap") {
            AdversaryTranscript t = state->wiretap(
                attack_from_name(j.at("attack").get<std::string>()),
                j.at("nodes").get<std::vector<std::uint32_t>>());
            require(t.values == j.at("values").get<std::vector<Elem>>(),
                    "wiretap value mismatch");
        } else {
            throw std::runtime_error("replay: unknown event kind: " + event);
        }
    }
    require(state.has_value(), "log has no init event");
    return std::move(*state);
}

} // namespace secregen
