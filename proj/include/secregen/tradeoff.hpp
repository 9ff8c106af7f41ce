#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secregen/code.hpp"
#include "secregen/rational.hpp"

namespace secregen {

struct TradeoffQuery {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t d = 0;
    std::uint32_t l = 0;
    Attack attack = Attack::type1;
    Rational alpha;
    Rational beta;
};

enum class BoundSource { eq1, eq13, theorem1, theorem2, theorem3, theorem4, theorem5, eq34 };
std::string bound_source_name(BoundSource s);

struct BoundResult {
    Rational value;
    BoundSource source = BoundSource::eq13;
    bool tight = false; // theorem-backed optimal vs upper-bound-only
};

/// A capacity bound as the minimum of linear forms u*alpha + v*beta.
struct LinearForm {
    Rational alpha_coeff;
    Rational beta_coeff;
};
using BoundForm = std::vector<LinearForm>;

Rational evaluate_form(const BoundForm& form, const Rational& alpha, const Rational& beta);

/// Capacity without an adversary: sum_{i=0}^{k-1} min(alpha, (d-i) beta).
Rational functional_capacity(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                             const Rational& alpha, const Rational& beta);

/// Cut-set secrecy bound: sum_{i=l}^{k-1} min(alpha, (d-i) beta).
Rational secure_capacity_bound(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                               std::uint32_t l, const Rational& alpha, const Rational& beta);

/// Secure capacity at the minimum-bandwidth point alpha = d beta:
/// (kd - C(k,2)) beta - (ld - C(l,2)) beta.
Rational mbr_secure_capacity(std::uint32_t k, std::uint32_t d, std::uint32_t l,
                             const Rational& beta);

/// Closed form for a covered (n,k,d,l,attack) tuple, or nullopt. Covered
/// tuples: (3,2,2,1), (4,2,3,1), (4,3,3,1), (4,3,3,2) and the family
/// (n, n-1, n-1, n-2).
std::optional<BoundForm> theorem_form(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                                      std::uint32_t l, Attack attack);

/// Optimal bound for a covered tuple; throws for uncovered tuples rather
/// than silently falling back to the cut-set bound.
BoundResult theorem_bound(const TradeoffQuery& q);

/// Cut-set bound expanded into min-of-linear-forms shape (for regions of
/// uncovered tuples, explicitly flagged as upper-bound-only).
BoundForm secure_capacity_form(std::uint32_t k, std::uint32_t d, std::uint32_t l);

/// Normalized region geometry for {(alpha_bar, beta_bar) : bound >= 1}.
struct RegionPoint {
    Rational alpha_bar;
    Rational beta_bar;
    std::string label; // "MBR", "corner", or empty for swept rows
};

/// Corner points (polytope vertices) of the normalized region boundary,
/// labeled and sorted by increasing alpha_bar. Computed symbolically.
std::vector<RegionPoint> region_corners(const BoundForm& form, std::uint32_t d);

struct RegionSweep {
    std::vector<RegionPoint> rows; // corners merged into the sampled staircase
};

/// Boundary staircase: `points` samples per axis over (0, axis_max], with
/// symbolic corner rows merged in; beta_bar descends, alpha_bar ascends.
RegionSweep region_sweep(const BoundForm& form, std::uint32_t d,
                         std::uint32_t points = 512, const Rational& axis_max = Rational(3));

/// CSV with header alpha_bar,beta_bar,label.
std::string region_csv(const RegionSweep& sweep);

/// Bound query outcome as a JSON object string (schema-versioned).
std::string bound_result_json(const TradeoffQuery& query, const BoundResult& result);

/// Parse "3", "-2", or "3/5" into an exact rational.
Rational parse_rational(const std::string& text);

} // namespace secregen
