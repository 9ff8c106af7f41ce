// Acceptance suite: one hard pass/fail line per criterion, exact arithmetic
// throughout, no tolerances anywhere. Exits nonzero on the first failure so
// a red criterion is impossible to miss in CI output.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "secregen/builders.hpp"
#include "secregen/entropy.hpp"
#include "secregen/simulator.hpp"
#include "secregen/tradeoff.hpp"
#include "secregen/verify.hpp"

using namespace secregen;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& summary) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << summary
              << std::endl;
    if (!pass) ++failures;
}

#define REQUIRE_OR_FAIL(cond, crit, msg)                                   \
    do {                                                                   \
        if (!(cond)) {                                                     \
            report(crit, false, std::string(msg) + " (" #cond " failed)"); \
            return;                                                        \
        }                                                                  \
    } while (0)

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct CoveredTuple {
    std::uint32_t n, k, d, l;
};

std::vector<CoveredTuple> covered_tuples() {
    return {{3, 2, 2, 1}, {4, 2, 3, 1}, {4, 3, 3, 1}, {4, 3, 3, 2},
            {5, 4, 4, 3}, {6, 5, 5, 4}, {7, 6, 6, 5}, {8, 7, 7, 6}};
}

std::vector<LinearDssCode> all_builder_codes() {
    std::vector<LinearDssCode> codes;
    codes.push_back(build_322_type1(FiniteField::prime(5)));
    codes.push_back(build_423_l1(FiniteField::prime(5)));
    codes.push_back(build_433_l1_minimal());
    codes.push_back(build_433_l1_interior_default());
    codes.push_back(build_433_keyless(FiniteField::prime(2)));
    codes.push_back(build_mbr_rbt(3, 2, 2, 1, mbr_default_field(3)));
    codes.push_back(build_mbr_rbt(4, 2, 3, 1, mbr_default_field(4)));
    codes.push_back(build_mbr_rbt(4, 3, 3, 1, mbr_default_field(4)));
    codes.push_back(build_mbr_rbt(4, 3, 3, 2, mbr_default_field(4)));
    codes.push_back(build_mbr_rbt(5, 4, 4, 3, mbr_default_field(5)));
    codes.push_back(build_mbr_rbt(6, 5, 5, 4, mbr_default_field(6)));
    codes.push_back(build_n_minus_2(4, FiniteField::prime(5)));
    codes.push_back(build_n_minus_2(5, FiniteField::prime(7)));
    codes.push_back(build_n_minus_2(6, FiniteField::prime(7)));
    return codes;
}

void criterion_1() {
    LinearDssCode code = build_423_l1(FiniteField::prime(5));
    REQUIRE_OR_FAIL(verify_mds(code).pass, 1, "(4,2,3) code");
    REQUIRE_OR_FAIL(verify_exact_repair(code).pass, 1, "(4,2,3) code");
    SecrecyCheck sec = verify_type1(code, 1);
    REQUIRE_OR_FAIL(sec.pass && sec.subsets.size() == 4, 1, "(4,2,3) code");
    for (const LeakageReport& r : sec.subsets)
        REQUIRE_OR_FAIL(r.leakage == 0, 1, "(4,2,3) code");
    TradeoffQuery q;
    q.n = 4; q.k = 2; q.d = 3; q.l = 1; q.attack = Attack::type1;
    q.alpha = Rational(2); q.beta = Rational(1);
    REQUIRE_OR_FAIL(theorem_bound(q).value == Rational(code.params().file_size), 1,
                    "(4,2,3) code");
    REQUIRE_OR_FAIL(code.params().file_size == 2, 1, "(4,2,3) code");
    report(1, true,
           "(4,2,3) code: reconstruction on 6/6 pairs, exact repair 4/4 nodes, "
           "storage-wiretap leakage 0, B=2 meets min(alpha,2beta) at (2,1)");
}

void criterion_2() {
    LinearDssCode code = build_433_l1_minimal();
    REQUIRE_OR_FAIL(code.field().order() == 2, 2, "binary (4,3,3) code");
    REQUIRE_OR_FAIL(code.params().file_size == 2, 2, "binary (4,3,3) code");
    REQUIRE_OR_FAIL(code.params().alpha == 1 && code.params().beta == 1, 2,
                    "binary (4,3,3) code");
    for (std::uint32_t node = 1; node <= 4; ++node) {
        WiretapView view = type1_view(code, {node});
        LeakageReport by_rank = leakage_rank(code, view);
        REQUIRE_OR_FAIL(by_rank.leakage == 0, 2, "binary (4,3,3) code");
        REQUIRE_OR_FAIL(leakage_exhaustive(code, view) == Rational(0), 2,
                        "binary (4,3,3) code");
    }
    report(2, true,
           "binary (4,3,3) code: B=2 at (alpha,beta)=(1,1), storage-wiretap leakage 0 on all "
           "4 nodes, rank leakage = exhaustive leakage over all 8 states");
}

void criterion_3() {
    LinearDssCode code = build_433_l1_interior_default();
    REQUIRE_OR_FAIL(code.params().file_size == 5, 3, "interior (4,3,3) code");
    REQUIRE_OR_FAIL(code.params().alpha == 3 && code.params().beta == 2, 3,
                    "interior (4,3,3) code");
    REQUIRE_OR_FAIL(verify_exact_repair(code).pass, 3, "interior (4,3,3) code");
    for (std::uint32_t node = 1; node <= 4; ++node) {
        SimState s(code, 100 + node);
        std::vector<Elem> before = s.node_contents(node);
        s.fail_and_repair(node);
        REQUIRE_OR_FAIL(s.node_contents(node) == before, 3, "interior (4,3,3) code");
        REQUIRE_OR_FAIL(leakage_rank(code, type1_view(code, {node})).leakage == 0, 3,
                        "interior (4,3,3) code");
    }
    // B meets (alpha + 6 beta)/3 with equality
    Rational bound = (Rational(3) + Rational(6) * Rational(2)) / Rational(3);
    REQUIRE_OR_FAIL(bound == Rational(5), 3, "interior (4,3,3) code");
    TradeoffQuery q;
    q.n = 4; q.k = 3; q.d = 3; q.l = 1; q.attack = Attack::type1;
    q.alpha = Rational(3); q.beta = Rational(2);
    REQUIRE_OR_FAIL(theorem_bound(q).value == Rational(5), 3, "interior (4,3,3) code");
    report(3, true,
           "interior (4,3,3) code: B=5 at (3,2), cyclic exact repair on every node, "
           "per-node storage-wiretap leakage 0, B = (alpha+6beta)/3 with equality");
}

void criterion_4() {
    LinearDssCode code = build_433_keyless(FiniteField::prime(2));
    REQUIRE_OR_FAIL(code.params().file_size == 8, 4, "keyless variant");
    Rational alpha_bar = Rational(code.params().alpha) / Rational(code.params().file_size);
    Rational beta_bar = Rational(code.params().beta) / Rational(code.params().file_size);
    REQUIRE_OR_FAIL(alpha_bar == Rational(3, 8), 4, "keyless variant");
    REQUIRE_OR_FAIL(beta_bar == Rational(1, 4), 4, "keyless variant");
    for (std::uint32_t node = 1; node <= 4; ++node) {
        SimState s(code, node);
        s.fail_and_repair(node);
        REQUIRE_OR_FAIL(s.disk_reads_total() == 6, 4, "keyless variant");
    }
    report(4, true,
           "keyless variant: B=8, normalized point (3/8, 1/4), 6 disk reads per repair");
}

void criterion_5() {
    struct Point {
        std::uint32_t n, k, l, alpha, beta, file;
    };
    std::vector<Point> points = {
        {3, 2, 1, 2, 1, 1}, {4, 2, 1, 3, 1, 2}, {4, 3, 1, 3, 1, 3},
        {4, 3, 2, 3, 1, 1}, {5, 4, 3, 4, 1, 1}, {6, 5, 4, 5, 1, 1},
    };
    for (const Point& pt : points) {
        LinearDssCode code = build_mbr_rbt(pt.n, pt.k, pt.n - 1, pt.l, mbr_default_field(pt.n));
        REQUIRE_OR_FAIL(code.params().alpha == pt.alpha, 5, "pair-symbol constructor");
        REQUIRE_OR_FAIL(code.params().beta == pt.beta, 5, "pair-symbol constructor");
        REQUIRE_OR_FAIL(code.params().file_size == pt.file, 5, "pair-symbol constructor");
        SecrecyCheck sec = verify_type2(code, pt.l);
        REQUIRE_OR_FAIL(sec.pass, 5, "pair-symbol constructor");
        for (const LeakageReport& r : sec.subsets)
            REQUIRE_OR_FAIL(r.leakage == 0, 5, "pair-symbol constructor");
        Rational expect = mbr_secure_capacity(pt.k, pt.n - 1, pt.l, Rational(1));
        REQUIRE_OR_FAIL(Rational(code.params().file_size) == expect, 5,
                        "pair-symbol constructor");
    }
    report(5, true,
           "pair-symbol constructor reproduces all six minimum-bandwidth operating points "
           "with zero repair-wiretap leakage and B equal to the closed form");
}

void criterion_6() {
    LinearDssCode code = build_322_type1(FiniteField::prime(5));
    REQUIRE_OR_FAIL(verify_type1(code, 1).pass, 6, "three-node code");
    SecrecyCheck t2 = verify_type2(code, 1);
    REQUIRE_OR_FAIL(!t2.pass, 6, "three-node code");
    REQUIRE_OR_FAIL(t2.subsets.size() == 3, 6, "three-node code");
    for (const LeakageReport& r : t2.subsets)
        REQUIRE_OR_FAIL(r.leakage == 1, 6, "three-node code");
    report(6, true,
           "three-node code: storage wiretap safe, repair wiretap leaks exactly 1 symbol "
           "at every node");
}

void criterion_7() {
    std::uint64_t checks = 0;
    for (const CoveredTuple& t : covered_tuples()) {
        auto t1 = theorem_form(t.n, t.k, t.d, t.l, Attack::type1);
        auto t2 = theorem_form(t.n, t.k, t.d, t.l, Attack::type2);
        REQUIRE_OR_FAIL(t1 && t2, 7, "bound hierarchy");
        for (int i = 1; i <= 64; ++i) {
            for (int j = 1; j <= 64; ++j) {
                Rational alpha(i, 16), beta(j, 16); // (0,4] in steps of 1/16
                Rational v1 = evaluate_form(*t1, alpha, beta);
                Rational v2 = evaluate_form(*t2, alpha, beta);
                Rational cut = secure_capacity_bound(t.n, t.k, t.d, t.l, alpha, beta);
                Rational cap = functional_capacity(t.n, t.k, t.d, alpha, beta);
                REQUIRE_OR_FAIL(v1 <= cut && v2 <= cut, 7, "bound hierarchy");
                REQUIRE_OR_FAIL(cut <= cap, 7, "bound hierarchy");
                REQUIRE_OR_FAIL(v2 <= v1, 7, "bound hierarchy");
                ++checks;
            }
        }
    }
    std::ostringstream os;
    os << "bound hierarchy: closed form <= cut-set <= functional and repair <= storage "
          "wiretap on "
       << checks << " exact grid points, zero violations";
    report(7, true, os.str());
}

void criterion_8() {
    for (const CoveredTuple& t : covered_tuples()) {
        auto form = theorem_form(t.n, t.k, t.d, t.l, Attack::type2);
        REQUIRE_OR_FAIL(form.has_value(), 8, "normalized region geometry");
        std::vector<RegionPoint> corners = region_corners(*form, t.d);
        REQUIRE_OR_FAIL(corners.size() == 1, 8, "normalized region geometry");
        REQUIRE_OR_FAIL(corners[0].alpha_bar ==
                            Rational(std::int64_t(t.d)) * corners[0].beta_bar,
                        8, "normalized region geometry");
        REQUIRE_OR_FAIL(corners[0].label == "MBR", 8, "normalized region geometry");
    }
    report(8, true,
           "repair-wiretap regions: exactly one corner per covered tuple, always on the "
           "alpha = d*beta ray");
}

void criterion_9() {
    // (a) no verified code beats its covered closed-form bound
    for (const LinearDssCode& code : all_builder_codes()) {
        const DssParams& p = code.params();
        if (p.attack == Attack::none) {
            Rational cap = functional_capacity(p.n, p.k, p.d, Rational(p.alpha), Rational(p.beta));
            REQUIRE_OR_FAIL(Rational(p.file_size) <= cap, 9, "converse consistency");
            continue;
        }
        auto form = theorem_form(p.n, p.k, p.d, p.l, p.attack);
        REQUIRE_OR_FAIL(form.has_value(), 9, "converse consistency");
        Rational bound = evaluate_form(*form, Rational(p.alpha), Rational(p.beta));
        REQUIRE_OR_FAIL(Rational(p.file_size) <= bound, 9, "converse consistency");
    }

    // (b) randomized search for a (3,2,2) alpha=beta=1 repair-wiretap-secure
    // code with B >= 1: the closed form says B <= 1/2, so none may exist
    Rng rng{20240817};
    FiniteField f5 = FiniteField::prime(5);
    int survivors = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint32_t key_rows = trial % 3; // R in {0,1,2}
        DssParams p;
        p.n = 3; p.k = 2; p.d = 2; p.alpha = 1; p.beta = 1;
        p.file_size = 1; p.key_size = key_rows; p.l = 1; p.attack = Attack::type2;
        FieldMatrix g(f5, 1 + key_rows, 3);
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c) g.set(r, c, Elem(rng.below(5)));
        std::vector<NodeRepair> plans;
        bool plan_ok = true;
        for (std::uint32_t j = 1; j <= 3 && plan_ok; ++j) {
            std::vector<HelperTransfer> helpers;
            FieldMatrix stacked(f5, 0, 1 + key_rows);
            for (std::uint32_t i = 1; i <= 3; ++i) {
                if (i == j) continue;
                FieldMatrix t(f5, 1, 1);
                t.set(0, 0, Elem(1 + rng.below(4))); // nonzero scaling
                stacked = stacked.vstack(t.mul(g.select_cols({i - 1}).transpose()));
                helpers.push_back({i, std::move(t)});
            }
            auto dec = solve_left(stacked, g.select_cols({j - 1}).transpose());
            if (!dec) {
                plan_ok = false;
                break;
            }
            plans.push_back({j, std::move(helpers), std::move(*dec)});
        }
        if (!plan_ok) continue;
        LinearDssCode candidate(p, f5, g, std::move(plans), "random-candidate");
        if (!verify_mds(candidate).pass) continue;
        if (!verify_exact_repair(candidate).pass) continue;
        if (verify_type2(candidate, 1).pass) ++survivors;
    }
    REQUIRE_OR_FAIL(survivors == 0, 9, "converse consistency");
    report(9, true,
           "converse consistency: every built code obeys its closed-form bound; 1000 random "
           "(3,2,2) candidates at alpha=beta=1 produced no repair-wiretap-secure code with "
           "B >= 1");
}

void criterion_10() {
    // (a) exhaustive leakage equals rank leakage on every view of every
    // small-state code
    std::uint64_t views = 0;
    for (const LinearDssCode& code : all_builder_codes()) {
        auto states = exhaustive_state_count(code);
        if (!states || *states > (1ull << 20)) continue;
        for (std::uint32_t l = 1; l < code.params().k; ++l) {
            for (const auto& subset : subsets_of_size(code.params().n, l)) {
                std::vector<std::uint32_t> nodes;
                for (std::size_t s : subset) nodes.push_back(std::uint32_t(s + 1));
                for (Attack a : {Attack::type1, Attack::type2}) {
                    WiretapView view = wiretap_view(code, a, nodes);
                    LeakageReport by_rank = leakage_rank(code, view);
                    Rational by_enum = leakage_exhaustive(code, view, 1ull << 20);
                    REQUIRE_OR_FAIL(by_enum == Rational(std::int64_t(by_rank.leakage)), 10,
                                    "oracle agreement");
                    ++views;
                }
            }
        }
    }
    REQUIRE_OR_FAIL(views >= 40, 10, "oracle agreement"); // the check must not be vacuous

    // (b) the entropy oracle satisfies the triple conditional-entropy
    // inequality on 10^4 randomized joint distributions
    Rng rng{7777};
    int trials = 10000;
    for (int trial = 0; trial < trials; ++trial) {
        std::uint32_t cx = 1 + std::uint32_t(rng.below(3));
        std::uint32_t cy = 1 + std::uint32_t(rng.below(3));
        std::uint32_t cz = 1 + std::uint32_t(rng.below(3));
        std::uint32_t cu = 1 + std::uint32_t(rng.below(2));
        JointDistribution d({cx, cy, cz, cu});
        bool nonempty = false;
        for (std::uint32_t x = 0; x < cx; ++x)
            for (std::uint32_t y = 0; y < cy; ++y)
                for (std::uint32_t z = 0; z < cz; ++z)
                    for (std::uint32_t u = 0; u < cu; ++u) {
                        std::uint64_t w = rng.below(8);
                        if (w) {
                            d.add_weight({x, y, z, u}, w);
                            nonempty = true;
                        }
                    }
        if (!nonempty) d.add_weight({0, 0, 0, 0}, 1);
        REQUIRE_OR_FAIL(triple_conditional_entropy_inequality(d, 0, 1, 2, 3), 10,
                        "oracle agreement");
    }
    std::ostringstream os;
    os << "oracle agreement: enumeration = rank on " << views
       << " views; triple conditional-entropy inequality holds on " << trials
       << " random joint distributions";
    report(10, true, os.str());
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
