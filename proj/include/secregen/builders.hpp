#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "secregen/code.hpp"

namespace secregen {

/// Three-node code storing X + c_i*K at node i (c_i = label i): resists a
/// single-node storage wiretap but leaks the file to a repair wiretap.
/// Requires q > 3 so the three coefficients stay distinct and nonzero.
LinearDssCode build_322_type1(const FiniteField& field);

/// Repair-by-transfer code at the minimum-bandwidth point alpha = d*beta,
/// beta = 1, d = n-1: one coded symbol per unordered node pair, stored at
/// both endpoints; repair forwards pair symbols verbatim. The pair symbols
/// carry a nested-MDS encoding of (file ++ keys) with
///   B + R = k*d - C(k,2),   R = l*d - C(l,2),
/// making the code secure against a Type-II wiretap of any l nodes.
LinearDssCode build_mbr_rbt(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                            std::uint32_t l, const FiniteField& field);

/// Smallest prime field large enough for build_mbr_rbt's pair encoding.
FiniteField mbr_default_field(std::uint32_t n);

/// (4,2,3) code with alpha=2, beta=1, B=2, R=2, l=1 (storage wiretap):
/// x1..x4 are independent Vandermonde mixes of (a1,a2,k1,k2); nodes store
/// (x1,x2), (x3,x4), (x1+x3, x2+x4), (x1+2*x4, x2+2*x3).
LinearDssCode build_423_l1(const FiniteField& field);

/// (4,3,3) code over F_2 with alpha=beta=1, B=2, R=1, l=1: node contents
/// (a1+k, a2+k, a1+a2+k, k).
LinearDssCode build_433_l1_minimal();

/// (4,3,3) interior-point code with alpha=3, beta=2, B=5, R=3, l=1:
/// twelve symbols x1..x12 where x9..x12 are fixed parity sums and x1..x8
/// carry a Vandermonde encoding of (a1..a5, k1..k3); cyclic repair plan.
LinearDssCode build_433_l1_interior(const FiniteField& field);

/// Same, defaulting the field to the smallest prime >= 11 whose instance
/// passes every verification gate.
LinearDssCode build_433_l1_interior_default();

/// Keyless variant of the interior-point layout: x1..x8 are eight file
/// symbols, no keys, no secrecy claim; B=8 at alpha=3, beta=2 and six disk
/// reads per repair.
LinearDssCode build_433_keyless(const FiniteField& field);

/// (n, n-1, n-1) code with alpha=beta=1, B=1, R=n-2, l=n-2 (storage
/// wiretap): node i stores the i-th coordinate of a Vandermonde mix of the
/// file symbol and n-2 keys. Needs q >= n+1.
LinearDssCode build_n_minus_2(std::uint32_t n, const FiniteField& field);

/// CLI-facing registry: builder id -> callable taking (n,k,d,l, optional
/// field order). Ids: fig1-322, table1-423, table2-433, table3-433,
/// keyless-433, mbr, nminus2.
struct BuilderRequest {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t d = 0;
    std::uint32_t l = 0;
    std::uint64_t field_order = 0; // 0 = builder default
};

LinearDssCode build_by_name(const std::string& id, const BuilderRequest& req);
std::vector<std::string> builder_names();

} // namespace secregen
