#include "secregen/builders.hpp"

#include <algorithm>
#include <stdexcept>

#include "secregen/verify.hpp"

namespace secregen {

namespace {

FieldMatrix unit_row(const FiniteField& f, std::size_t len, std::size_t idx) {
    FieldMatrix m(f, 1, len);
    m.set(0, idx, 1);
    return m;
}

/// Decoder synthesized from the transfers: solve for the matrix taking the
/// stacked received symbols back to the node's stored functionals.
FieldMatrix synthesize_decoder(const FiniteField& f, const FieldMatrix& generator,
                               const DssParams& p, std::uint32_t node,
                               const std::vector<HelperTransfer>& helpers) {
    auto node_cols = [&](std::uint32_t i) {
        std::vector<std::size_t> cols(p.alpha);
        for (std::uint32_t t = 0; t < p.alpha; ++t) cols[t] = std::size_t(i - 1) * p.alpha + t;
        return generator.select_cols(cols).transpose();
    };
    FieldMatrix stacked(f, 0, p.coords());
    for (const HelperTransfer& h : helpers)
        stacked = stacked.vstack(h.transfer.mul(node_cols(h.node)));
    auto dec = solve_left(stacked, node_cols(node));
    if (!dec)
        throw std::runtime_error("repair plan for node " + std::to_string(node) +
                                 " cannot restore the stored symbols");
    return *dec;
}

LinearDssCode gated(LinearDssCode code) {
    verify_or_throw(code);
    return code;
}

} // namespace

LinearDssCode build_322_type1(const FiniteField& field) {
    if (field.order() <= 3)
        throw std::invalid_argument("build_322_type1: need field order > 3");
    DssParams p;
    p.n = 3; p.k = 2; p.d = 2; p.alpha = 1; p.beta = 1;
    p.file_size = 1; p.key_size = 1; p.l = 1; p.attack = Attack::type1;

    FieldMatrix g(field, 2, 3);
    for (std::uint32_t i = 1; i <= 3; ++i) {
        g.set(0, i - 1, 1);
        g.set(1, i - 1, field.element(i)); // node i stores X + c_i K, c_i = label i
    }

    std::vector<NodeRepair> plans;
    for (std::uint32_t j = 1; j <= 3; ++j) {
        std::vector<HelperTransfer> helpers;
        for (std::uint32_t i = 1; i <= 3; ++i)
            if (i != j) helpers.push_back({i, unit_row(field, 1, 0)});
        FieldMatrix dec = synthesize_decoder(field, g, p, j, helpers);
        plans.push_back({j, std::move(helpers), std::move(dec)});
    }
    return gated(LinearDssCode(p, field, g, std::move(plans), "fig1-322"));
}

FiniteField mbr_default_field(std::uint32_t n) {
    std::uint32_t pairs = n * (n - 1) / 2;
    return FiniteField::prime(next_prime_at_least(pairs + 1));
}

LinearDssCode build_mbr_rbt(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                            std::uint32_t l, const FiniteField& field) {
    if (n < 2 || d != n - 1)
        throw std::invalid_argument("build_mbr_rbt: requires d = n-1");
    if (!(l < k && k <= d))
        throw std::invalid_argument("build_mbr_rbt: requires l < k <= n-1");
    const std::uint32_t pairs = n * (n - 1) / 2;
    if (field.order() <= pairs)
        throw std::invalid_argument("build_mbr_rbt: field too small for " +
                                    std::to_string(pairs) + " distinct nonzero points");

    DssParams p;
    p.n = n; p.k = k; p.d = d; p.alpha = d; p.beta = 1;
    const std::uint32_t m = k * d - k * (k - 1) / 2;
    p.key_size = l * d - l * (l - 1) / 2;
    p.file_size = m - p.key_size;
    p.l = l; p.attack = Attack::type2;

    // one coded symbol per unordered pair {i,j}, i<j, lexicographic
    std::vector<std::vector<std::uint32_t>> pair_of(n + 1, std::vector<std::uint32_t>(n + 1, 0));
    {
        std::uint32_t idx = 0;
        for (std::uint32_t i = 1; i <= n; ++i)
            for (std::uint32_t j = i + 1; j <= n; ++j) {
                pair_of[i][j] = idx;
                pair_of[j][i] = idx;
                ++idx;
            }
    }

    std::vector<Elem> points(pairs);
    for (std::uint32_t t = 0; t < pairs; ++t) points[t] = field.element(t + 1);
    FieldMatrix enc = vandermonde(field, points, m); // key rows are the top-degree rows

    FieldMatrix g(field, m, std::size_t(n) * p.alpha);
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::uint32_t slot = 0;
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (j == i) continue;
            std::size_t col = std::size_t(i - 1) * p.alpha + slot;
            for (std::uint32_t r = 0; r < m; ++r) g.set(r, col, enc.at(r, pair_of[i][j]));
            ++slot;
        }
    }

    std::vector<NodeRepair> plans;
    for (std::uint32_t j = 1; j <= n; ++j) {
        std::vector<HelperTransfer> helpers;
        for (std::uint32_t i = 1; i <= n; ++i) {
            if (i == j) continue;
            // node i's slot holding the pair {i,j}: others of i in ascending order
            std::uint32_t slot = 0;
            for (std::uint32_t o = 1; o <= n; ++o) {
                if (o == i) continue;
                if (o == j) break;
                ++slot;
            }
            helpers.push_back({i, unit_row(field, p.alpha, slot)});
        }
        // helper t (ascending) forwards exactly node j's slot-t pair symbol
        plans.push_back({j, std::move(helpers), FieldMatrix::identity(field, p.alpha)});
    }
    LinearDssCode code(p, field, g, std::move(plans), "mbr");
    verify_or_throw(code);
    // pair-symbol structure makes the two attack views coincide
    SecrecyCheck t1 = verify_type1(code, l);
    if (!t1.pass)
        throw std::runtime_error("build_mbr_rbt: storage-wiretap check failed unexpectedly");
    return code;
}

LinearDssCode build_423_l1(const FiniteField& field) {
    if (field.order() < 5)
        throw std::invalid_argument("build_423_l1: need field order >= 5");
    DssParams p;
    p.n = 4; p.k = 2; p.d = 3; p.alpha = 2; p.beta = 1;
    p.file_size = 2; p.key_size = 2; p.l = 1; p.attack = Attack::type1;

    // x_m = (a1,a2,k1,k2) . (p_m^2, p_m^3, 1, p_m), points 1..4. The key
    // coordinates ride on the low powers: with keys on the top powers the
    // key parts of node 3's two sums become collinear over order 5
    // (1^2+3^2 = 2^2+4^2 = 0 mod 5) and a single node leaks.
    std::vector<Elem> pts = {field.element(1), field.element(2), field.element(3), field.element(4)};
    FieldMatrix x = vandermonde(field, pts, 4).select_rows({2, 3, 0, 1});

    auto xcol = [&](std::size_t j) {
        std::vector<Elem> c(4);
        for (std::size_t r = 0; r < 4; ++r) c[r] = x.at(r, j);
        return c;
    };
    auto combine = [&](std::size_t ja, Elem ca, std::size_t jb, Elem cb) {
        std::vector<Elem> a = xcol(ja), b = xcol(jb), out(4);
        for (std::size_t r = 0; r < 4; ++r)
            out[r] = field.add(field.mul(ca, a[r]), field.mul(cb, b[r]));
        return out;
    };

    // node 4 mixes with the smallest c where c^2 != 1; c = 1 would recreate
    // node 3's sum pattern and lose a dimension on the {3,4} pair
    Elem mix = 2;
    while (field.mul(mix, mix) == 1) ++mix;
    std::vector<std::vector<Elem>> cols = {
        xcol(0), xcol(1),                     // node 1: x1, x2
        xcol(2), xcol(3),                     // node 2: x3, x4
        combine(0, 1, 2, 1), combine(1, 1, 3, 1),     // node 3: x1+x3, x2+x4
        combine(0, 1, 3, mix), combine(1, 1, 2, mix), // node 4: x1+c*x4, x2+c*x3
    };
    FieldMatrix g(field, 4, 8);
    for (std::size_t c = 0; c < 8; ++c)
        for (std::size_t r = 0; r < 4; ++r) g.set(r, c, cols[c][r]);

    const Elem inv_mix = field.inv(mix);
    auto row = [&](Elem a, Elem b) {
        FieldMatrix m(field, 1, 2);
        m.set(0, 0, a);
        m.set(0, 1, b);
        return m;
    };
    // transfers: each helper sends one combination of its two stored symbols
    std::vector<std::vector<HelperTransfer>> transfers = {
        {{2, row(1, 0)}, {3, row(1, 0)}, {4, row(0, 1)}},
        {{1, row(1, 0)}, {3, row(1, 0)}, {4, row(1, 0)}},
        {{1, row(0, 1)}, {2, row(0, 1)}, {4, row(1, inv_mix)}},
        {{1, row(0, 1)}, {2, row(1, 0)}, {3, row(1, mix)}},
    };
    std::vector<NodeRepair> plans;
    for (std::uint32_t j = 1; j <= 4; ++j) {
        FieldMatrix dec = synthesize_decoder(field, g, p, j, transfers[j - 1]);
        plans.push_back({j, std::move(transfers[j - 1]), std::move(dec)});
    }
    return gated(LinearDssCode(p, field, g, std::move(plans), "table1-423"));
}

LinearDssCode build_433_l1_minimal() {
    FiniteField f2 = FiniteField::prime(2);
    DssParams p;
    p.n = 4; p.k = 3; p.d = 3; p.alpha = 1; p.beta = 1;
    p.file_size = 2; p.key_size = 1; p.l = 1; p.attack = Attack::type1;

    // coordinates (a1, a2, k); contents a1+k, a2+k, a1+a2+k, k
    FieldMatrix g(f2, 3, 4, {1, 0, 1, 0,
                             0, 1, 1, 0,
                             1, 1, 1, 1});

    std::vector<NodeRepair> plans;
    for (std::uint32_t j = 1; j <= 4; ++j) {
        std::vector<HelperTransfer> helpers;
        for (std::uint32_t i = 1; i <= 4; ++i)
            if (i != j) helpers.push_back({i, unit_row(f2, 1, 0)});
        FieldMatrix dec = synthesize_decoder(f2, g, p, j, helpers);
        plans.push_back({j, std::move(helpers), std::move(dec)});
    }
    return gated(LinearDssCode(p, f2, g, std::move(plans), "table2-433"));
}

namespace {

/// Shared layout for the interior-point code and its keyless variant:
/// base columns are given; parities are x9=x6+x7, x10=x1+x8, x11=x2+x3,
/// x12=x4+x5; node i stores (x_{2i-1}, x_{2i}, x_{8+i}); repair is cyclic.
LinearDssCode build_433_family(const FiniteField& field, FieldMatrix base,
                               std::uint32_t file_size, std::uint32_t key_size,
                               std::uint32_t l, Attack attack, const std::string& name) {
    DssParams p;
    p.n = 4; p.k = 3; p.d = 3; p.alpha = 3; p.beta = 2;
    p.file_size = file_size; p.key_size = key_size; p.l = l; p.attack = attack;
    const std::uint32_t coords = p.coords();

    auto xcol = [&](std::size_t j) { // 0-based among x1..x8
        std::vector<Elem> c(coords);
        for (std::size_t r = 0; r < coords; ++r) c[r] = base.at(r, j);
        return c;
    };
    auto xsum = [&](std::size_t ja, std::size_t jb) {
        std::vector<Elem> a = xcol(ja), b = xcol(jb), out(coords);
        for (std::size_t r = 0; r < coords; ++r) out[r] = field.add(a[r], b[r]);
        return out;
    };

    std::vector<std::vector<Elem>> x(12);
    for (std::size_t j = 0; j < 8; ++j) x[j] = xcol(j);
    x[8] = xsum(5, 6);   // x9  = x6 + x7
    x[9] = xsum(0, 7);   // x10 = x1 + x8
    x[10] = xsum(1, 2);  // x11 = x2 + x3
    x[11] = xsum(3, 4);  // x12 = x4 + x5

    FieldMatrix g(field, coords, 12);
    for (std::uint32_t i = 1; i <= 4; ++i) {
        std::size_t slots[3] = {2 * std::size_t(i) - 2, 2 * std::size_t(i) - 1, 8 + std::size_t(i) - 1};
        for (std::uint32_t t = 0; t < 3; ++t) {
            std::size_t col = std::size_t(i - 1) * 3 + t;
            for (std::size_t r = 0; r < coords; ++r) g.set(r, col, x[slots[t]][r]);
        }
    }

    // base plan for node 1: helper at offset o (clockwise) sends these slots
    const std::size_t base_slots[3][2] = {{0, 2}, {1, 2}, {0, 1}};
    std::vector<NodeRepair> plans;
    for (std::uint32_t j = 1; j <= 4; ++j) {
        std::vector<HelperTransfer> helpers;
        for (std::uint32_t o = 1; o <= 3; ++o) {
            std::uint32_t helper = (j - 1 + o) % 4 + 1;
            FieldMatrix t(field, 2, 3);
            t.set(0, base_slots[o - 1][0], 1);
            t.set(1, base_slots[o - 1][1], 1);
            helpers.push_back({helper, std::move(t)});
        }
        std::sort(helpers.begin(), helpers.end(),
                  [](const HelperTransfer& a, const HelperTransfer& b) { return a.node < b.node; });
        FieldMatrix dec = synthesize_decoder(field, g, p, j, helpers);
        plans.push_back({j, std::move(helpers), std::move(dec)});
    }
    return gated(LinearDssCode(p, field, g, std::move(plans), name));
}

} // namespace

LinearDssCode build_433_l1_interior(const FiniteField& field) {
    if (field.order() < 9)
        throw std::invalid_argument("build_433_l1_interior: need at least 8 distinct nonzero points");
    std::vector<Elem> pts(8);
    for (std::uint32_t i = 0; i < 8; ++i) pts[i] = field.element(i + 1);
    // coordinate i's coefficients across x1..x8 are the powers of point i+1
    FieldMatrix base = vandermonde(field, pts, 8).transpose();
    return build_433_family(field, std::move(base), 5, 3, 1, Attack::type1, "table3-433");
}

LinearDssCode build_433_l1_interior_default() {
    std::uint32_t q = 11;
    for (int attempts = 0; attempts < 32; ++attempts) {
        try {
            return build_433_l1_interior(FiniteField::prime(q));
        } catch (const std::runtime_error&) {
            q = next_prime_at_least(q + 1);
        }
    }
    throw std::runtime_error("build_433_l1_interior: no passing prime field found");
}

LinearDssCode build_433_keyless(const FiniteField& field) {
    return build_433_family(field, FieldMatrix::identity(field, 8), 8, 0, 0,
                            Attack::none, "keyless-433");
}

LinearDssCode build_n_minus_2(std::uint32_t n, const FiniteField& field) {
    if (n < 3) throw std::invalid_argument("build_n_minus_2: need n >= 3");
    if (field.order() < n + 1)
        throw std::invalid_argument("build_n_minus_2: field too small for " +
                                    std::to_string(n) + " distinct nonzero points");
    DssParams p;
    p.n = n; p.k = n - 1; p.d = n - 1; p.alpha = 1; p.beta = 1;
    p.file_size = 1; p.key_size = n - 2; p.l = n - 2; p.attack = Attack::type1;

    std::vector<Elem> pts(n);
    for (std::uint32_t i = 0; i < n; ++i) pts[i] = field.element(i + 1);
    FieldMatrix g = vandermonde(field, pts, n - 1); // file row = power 0, key rows above

    std::vector<NodeRepair> plans;
    for (std::uint32_t j = 1; j <= n; ++j) {
        std::vector<HelperTransfer> helpers;
        for (std::uint32_t i = 1; i <= n; ++i)
            if (i != j) helpers.push_back({i, unit_row(field, 1, 0)});
        FieldMatrix dec = synthesize_decoder(field, g, p, j, helpers);
        plans.push_back({j, std::move(helpers), std::move(dec)});
    }
    return gated(LinearDssCode(p, field, g, std::move(plans), "nminus2"));
}

LinearDssCode build_by_name(const std::string& id, const BuilderRequest& req) {
    auto field_or = [&](std::uint64_t def) {
        return FiniteField::of_order(req.field_order ? req.field_order : def);
    };
    if (id == "fig1-322") return build_322_type1(field_or(5));
    if (id == "table1-423") return build_423_l1(field_or(5));
    if (id == "table2-433") {
        if (req.field_order && req.field_order != 2)
            throw std::invalid_argument("table2-433 is defined over the binary field");
        return build_433_l1_minimal();
    }
    if (id == "table3-433") {
        if (req.field_order) return build_433_l1_interior(FiniteField::of_order(req.field_order));
        return build_433_l1_interior_default();
    }
    if (id == "keyless-433") return build_433_keyless(field_or(2));
    if (id == "mbr") {
        if (!req.n || !req.k) throw std::invalid_argument("mbr requires --n and --k");
        std::uint32_t d = req.d ? req.d : req.n - 1;
        FiniteField f = req.field_order ? FiniteField::of_order(req.field_order)
                                        : mbr_default_field(req.n);
        return build_mbr_rbt(req.n, req.k, d, req.l, f);
    }
    if (id == "nminus2") {
        if (!req.n) throw std::invalid_argument("nminus2 requires --n");
        FiniteField f = req.field_order
                            ? FiniteField::of_order(req.field_order)
                            : FiniteField::prime(next_prime_at_least(req.n + 1));
        return build_n_minus_2(req.n, f);
    }
    throw std::invalid_argument("unknown builder: " + id);
}

std::vector<std::string> builder_names() {
    return {"fig1-322", "table1-423", "table2-433", "table3-433",
            "keyless-433", "mbr", "nminus2"};
}

} // namespace secregen
