#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secregen/code.hpp"
#include "secregen/entropy.hpp"
#include "secregen/rational.hpp"

namespace secregen {

/// The adversary's observations as linear functionals over the (file ++ key)
/// coordinates, one functional per matrix row.
struct WiretapView {
    /// Where a kept type-II row came from: which repair, which helper, and
    /// which of that helper's beta transfer rows.
    struct RowSource {
        std::uint32_t repaired_node = 0;
        std::uint32_t helper = 0;
        std::uint32_t transfer_row = 0;
    };

    Attack attack = Attack::type1;
    std::vector<std::uint32_t> nodes; // wiretapped set, ascending
    FieldMatrix functionals;          // rows x (B+R)
    std::vector<RowSource> sources;   // per row; type-II views only
};

/// Type-I view: stored functionals of every node in the set.
WiretapView type1_view(const LinearDssCode& code, std::vector<std::uint32_t> nodes);

/// Type-II view: every repair transfer observed while each node in the set
/// is repaired once by all d helpers; exact duplicate rows are dropped,
/// keeping first occurrences.
WiretapView type2_view(const LinearDssCode& code, std::vector<std::uint32_t> nodes);

WiretapView wiretap_view(const LinearDssCode& code, Attack attack,
                         std::vector<std::uint32_t> nodes);

/// Exact leakage of a view in symbols (log_q units): I(file; view) =
/// rank(M) - rank(M_K) for uniform independent file and keys.
struct LeakageReport {
    std::uint64_t leakage = 0;   // symbols
    std::uint64_t view_rank = 0; // H(E)
    std::uint64_t key_rank = 0;  // H(E | file)
    bool secure = true;          // leakage == 0
    std::vector<std::uint32_t> nodes;
};

LeakageReport leakage_rank(const LinearDssCode& code, const WiretapView& view);

/// Brute-force cross-check: enumerate all (file, key) assignments, build the
/// exact joint distribution of (file, observations), and return I in log_q
/// units. Wholly independent of the rank path. Throws when q^(B+R) exceeds
/// the budget, or if the result is not a rational multiple of log q.
Rational leakage_exhaustive(const LinearDssCode& code, const WiretapView& view,
                            std::uint64_t state_budget = 1ull << 24);

/// Number of (file,key) states an exhaustive check would enumerate;
/// nullopt when it overflows 2^62.
std::optional<std::uint64_t> exhaustive_state_count(const LinearDssCode& code);

struct MdsCheck {
    bool pass = true;
    std::vector<std::uint32_t> witness; // offending k-subset when failing
    std::string detail;
};

/// Reconstruction property: rank(G_S) - rank(key part of G_S) = B for every
/// k-subset S of nodes.
MdsCheck verify_mds(const LinearDssCode& code);

struct RepairCheck {
    bool pass = true;
    std::uint32_t witness_node = 0;
    std::string detail;
};

/// Exact-repair identity at the matrix level: for every node j,
/// decoder_j * stack_i(P_ij * G_i) equals node j's stored functionals.
RepairCheck verify_exact_repair(const LinearDssCode& code);

struct SecrecyCheck {
    bool pass = true;
    Attack attack = Attack::type1;
    std::uint32_t l = 0;
    LeakageReport worst;                  // maximal leakage and its subset
    std::vector<LeakageReport> subsets;   // one per l-subset, ascending order
};

/// Iterates all C(n,l) node subsets; passes iff every subset leaks nothing.
SecrecyCheck verify_type1(const LinearDssCode& code, std::uint32_t l);
SecrecyCheck verify_type2(const LinearDssCode& code, std::uint32_t l);
SecrecyCheck verify_secrecy(const LinearDssCode& code, Attack attack, std::uint32_t l);

/// Runs mds + exact repair + the declared secrecy property and throws
/// std::runtime_error with a diagnostic on the first failure. Builders gate
/// on this before returning a code.
void verify_or_throw(const LinearDssCode& code);

} // namespace secregen
