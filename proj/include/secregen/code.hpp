#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secregen/matrix.hpp"

namespace secregen {

enum class Attack { none, type1, type2 };

std::string attack_name(Attack a);
Attack attack_from_name(const std::string& name);

/// Parameters of a storage code instance. Nodes are numbered 1..n in every
/// public interface; d = n-1 for all codes built here (all alive nodes help).
struct DssParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t d = 0;
    std::uint32_t alpha = 0;
    std::uint32_t beta = 0;
    std::uint32_t file_size = 0; // B: file symbols
    std::uint32_t key_size = 0;  // R: key symbols
    std::uint32_t l = 0;         // wiretapped nodes the code claims to resist
    Attack attack = Attack::none;

    std::uint32_t coords() const { return file_size + key_size; }
    std::uint32_t total_cols() const { return n * alpha; }

    /// Throws on violation of l < k <= d <= n-1, beta <= alpha, B >= 1.
    void validate() const;
};

/// One helper's contribution to a repair: node index and the beta x alpha
/// matrix that maps the helper's stored symbols to the symbols it sends.
struct HelperTransfer {
    std::uint32_t node = 0;
    FieldMatrix transfer;
};

/// Repair recipe for one node: d helper transfers (helpers in ascending node
/// order) plus the alpha x (d*beta) decoder applied to the stacked transfers.
struct NodeRepair {
    std::uint32_t node = 0;
    std::vector<HelperTransfer> helpers;
    FieldMatrix decoder;
};

/// A complete linear storage code: generator over the (file ++ key)
/// coordinates, per-node column layout, and a full repair plan. Immutable
/// after construction; builders verify every claimed property before
/// returning one.
class LinearDssCode {
public:
    LinearDssCode(DssParams params, FiniteField field, FieldMatrix generator,
                  std::vector<NodeRepair> repair, std::string builder);

    const DssParams& params() const { return params_; }
    const FiniteField& field() const { return field_; }
    /// (B+R) x (n*alpha); column col(i,t) holds node i's slot-t functional.
    const FieldMatrix& generator() const { return generator_; }
    const std::vector<NodeRepair>& repair_plan() const { return repair_; }
    const std::string& builder() const { return builder_; }

    /// Column index of node i (1-based), slot t (1-based).
    std::size_t column_of(std::uint32_t node, std::uint32_t slot) const;
    /// Column indices of one node, slot order.
    std::vector<std::size_t> node_columns(std::uint32_t node) const;
    /// Node i's stored functionals as rows: alpha x (B+R).
    FieldMatrix node_functionals(std::uint32_t node) const;
    /// Functionals of the symbols node `helper` sends to repair `target`:
    /// beta x (B+R).
    FieldMatrix transfer_functionals(std::uint32_t helper, std::uint32_t target) const;

    const NodeRepair& repair_of(std::uint32_t node) const;

    /// Key-coordinate restriction (last R columns) of a functional matrix.
    FieldMatrix key_part(const FieldMatrix& functionals) const;

    bool operator==(const LinearDssCode& o) const;

private:
    DssParams params_;
    FiniteField field_;
    FieldMatrix generator_;
    std::vector<NodeRepair> repair_;
    std::string builder_;
};

} // namespace secregen
