#include "secregen/code.hpp"

#include <stdexcept>

namespace secregen {

std::string attack_name(Attack a) {
    switch (a) {
        case Attack::none: return "none";
        case Attack::type1: return "type1";
        case Attack::type2: return "type2";
    }
    throw std::logic_error("attack_name: bad enum");
}

Attack attack_from_name(const std::string& name) {
    if (name == "none") return Attack::none;
    if (name == "type1") return Attack::type1;
    if (name == "type2") return Attack::type2;
    throw std::invalid_argument("unknown attack kind: " + name);
}

void DssParams::validate() const {
    if (n < 2) throw std::invalid_argument("DssParams: need at least 2 nodes");
    if (!(l < k)) throw std::invalid_argument("DssParams: require l < k");
    if (!(k <= d)) throw std::invalid_argument("DssParams: require k <= d");
    if (!(d <= n - 1)) throw std::invalid_argument("DssParams: require d <= n-1");
    if (alpha == 0 || beta == 0) throw std::invalid_argument("DssParams: alpha, beta >= 1");
    if (!(beta <= alpha)) throw std::invalid_argument("DssParams: require beta <= alpha");
    if (file_size == 0) throw std::invalid_argument("DssParams: file size must be >= 1");
}

LinearDssCode::LinearDssCode(DssParams params, FiniteField field, FieldMatrix generator,
                             std::vector<NodeRepair> repair, std::string builder)
    : params_(params), field_(std::move(field)), generator_(std::move(generator)),
      repair_(std::move(repair)), builder_(std::move(builder)) {
    params_.validate();
    if (generator_.rows() != params_.coords() || generator_.cols() != params_.total_cols())
        throw std::invalid_argument("LinearDssCode: generator shape must be (B+R) x (n*alpha)");
    if (generator_.field() != field_)
        throw std::invalid_argument("LinearDssCode: generator field mismatch");
    if (repair_.size() != params_.n)
        throw std::invalid_argument("LinearDssCode: need a repair entry per node");
    for (std::uint32_t j = 1; j <= params_.n; ++j) {
        const NodeRepair& r = repair_[j - 1];
        if (r.node != j) throw std::invalid_argument("LinearDssCode: repair plan out of order");
        if (r.helpers.size() != params_.d)
            throw std::invalid_argument("LinearDssCode: repair needs d helpers");
        std::uint32_t prev = 0;
        for (const HelperTransfer& h : r.helpers) {
            if (h.node == j || h.node < 1 || h.node > params_.n)
                throw std::invalid_argument("LinearDssCode: bad helper node");
            if (h.node <= prev)
                throw std::invalid_argument("LinearDssCode: helpers must be ascending");
            prev = h.node;
            if (h.transfer.rows() != params_.beta || h.transfer.cols() != params_.alpha)
                throw std::invalid_argument("LinearDssCode: transfer must be beta x alpha");
        }
        if (r.decoder.rows() != params_.alpha ||
            r.decoder.cols() != std::size_t(params_.d) * params_.beta)
            throw std::invalid_argument("LinearDssCode: decoder must be alpha x (d*beta)");
    }
}

std::size_t LinearDssCode::column_of(std::uint32_t node, std::uint32_t slot) const {
    if (node < 1 || node > params_.n) throw std::out_of_range("LinearDssCode: node out of range");
    if (slot < 1 || slot > params_.alpha) throw std::out_of_range("LinearDssCode: slot out of range");
    return std::size_t(node - 1) * params_.alpha + (slot - 1);
}

std::vector<std::size_t> LinearDssCode::node_columns(std::uint32_t node) const {
    std::vector<std::size_t> out(params_.alpha);
    for (std::uint32_t t = 1; t <= params_.alpha; ++t) out[t - 1] = column_of(node, t);
    return out;
}

FieldMatrix LinearDssCode::node_functionals(std::uint32_t node) const {
    return generator_.select_cols(node_columns(node)).transpose();
}

FieldMatrix LinearDssCode::transfer_functionals(std::uint32_t helper, std::uint32_t target) const {
    const NodeRepair& plan = repair_of(target);
    for (const HelperTransfer& h : plan.helpers)
        if (h.node == helper) return h.transfer.mul(node_functionals(helper));
    throw std::invalid_argument("LinearDssCode: node is not a helper for that repair");
}

const NodeRepair& LinearDssCode::repair_of(std::uint32_t node) const {
    if (node < 1 || node > params_.n) throw std::out_of_range("LinearDssCode: node out of range");
    return repair_[node - 1];
}

FieldMatrix LinearDssCode::key_part(const FieldMatrix& functionals) const {
    std::vector<std::size_t> idx;
    for (std::uint32_t c = params_.file_size; c < params_.coords(); ++c) idx.push_back(c);
    return functionals.select_cols(idx);
}

bool LinearDssCode::operator==(const LinearDssCode& o) const {
    if (!(field_ == o.field_) || !(generator_ == o.generator_) || builder_ != o.builder_)
        return false;
    if (params_.n != o.params_.n || params_.k != o.params_.k || params_.d != o.params_.d ||
        params_.alpha != o.params_.alpha || params_.beta != o.params_.beta ||
        params_.file_size != o.params_.file_size || params_.key_size != o.params_.key_size ||
        params_.l != o.params_.l || params_.attack != o.params_.attack)
        return false;
    if (repair_.size() != o.repair_.size()) return false;
    for (std::size_t i = 0; i < repair_.size(); ++i) {
        if (repair_[i].node != o.repair_[i].node) return false;
        if (!(repair_[i].decoder == o.repair_[i].decoder)) return false;
        if (repair_[i].helpers.size() != o.repair_[i].helpers.size()) return false;
        for (std::size_t h = 0; h < repair_[i].helpers.size(); ++h) {
            if (repair_[i].helpers[h].node != o.repair_[i].helpers[h].node) return false;
            if (!(repair_[i].helpers[h].transfer == o.repair_[i].helpers[h].transfer)) return false;
        }
    }
    return true;
}

} // namespace secregen
