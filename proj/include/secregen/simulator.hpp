#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secregen/code.hpp"
#include "secregen/verify.hpp"

namespace secregen {

/// The adversary's concrete observations: the functional rows shared with
/// the verifier plus the observed symbol values, in the same row order.
struct AdversaryTranscript {
    Attack attack = Attack::type1;
    std::vector<std::uint32_t> nodes;
    WiretapView view;
    std::vector<Elem> values;
    bool matches_declared_l = true; // other sizes allowed, flagged exploratory
};

struct SimEvent {
    enum class Kind { init, fail, transfer, repair, wiretap };
    Kind kind = Kind::init;
    std::uint64_t seed = 0;                 // init
    std::uint32_t node = 0;                 // fail / repair
    std::uint32_t from = 0, to = 0;         // transfer
    std::string attack;                     // wiretap
    std::vector<std::uint32_t> nodes;       // wiretap
    std::vector<Elem> values;               // transfer / repair / wiretap
    std::uint64_t disk_reads = 0;           // repair: reads charged to helpers
};

/// A running instance of a code with sampled file and keys. Single-owner
/// mutable; the referenced code is immutable and shareable.
class SimState {
public:
    /// Samples file and keys uniformly from a deterministic seeded generator
    /// and materializes every node's contents.
    SimState(const LinearDssCode& code, std::uint64_t seed);

    const LinearDssCode& code() const { return code_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<Elem>& file() const { return file_; }
    const std::vector<Elem>& keys() const { return keys_; }
    const std::vector<Elem>& node_contents(std::uint32_t node) const;

    /// Erase node j, pull transfers from all d helpers, decode, restore.
    /// Returns the transfer values in helper order. Charges each helper one
    /// disk read per stored symbol with a nonzero coefficient in its
    /// transfer rows.
    std::vector<Elem> fail_and_repair(std::uint32_t node);

    /// File recovered from the stored contents of a k-subset.
    std::vector<Elem> reconstruct(const std::vector<std::uint32_t>& nodes) const;

    /// Observations for a wiretapped set. Type-II triggers one repair per
    /// set node that has not been repaired yet in this run's log.
    AdversaryTranscript wiretap(Attack attack, const std::vector<std::uint32_t>& nodes);

    std::uint64_t disk_reads_total() const;
    const std::vector<std::uint64_t>& disk_reads_per_node() const { return disk_reads_; }

    const std::vector<SimEvent>& event_log() const { return log_; }

    /// One JSON object per line, in log order.
    std::string export_events() const;

private:
    const LinearDssCode& code_;
    std::uint64_t seed_;
    std::vector<Elem> file_;
    std::vector<Elem> keys_;
    std::vector<std::vector<Elem>> contents_; // per node, length alpha
    std::vector<std::uint64_t> disk_reads_;   // per node (reads served by that node)
    std::vector<SimEvent> log_;
    std::vector<bool> repaired_;

    std::vector<Elem> assignment() const; // file ++ keys
};

/// Re-executes an exported event log against the same code, checking every
/// recorded value; throws on the first divergence. Returns the final state.
SimState replay_events(const LinearDssCode& code, const std::string& jsonl);

/// Deterministic, platform-stable generator used for sampling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform draw in 0..bound-1 by rejection (no modulo bias).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

} // namespace secregen
