#include "secregen/tradeoff.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace secregen {

std::string bound_source_name(BoundSource s) {
    switch (s) {
        case BoundSource::eq1: return "functional-capacity";
        case BoundSource::eq13: return "cut-set-upper-bound";
        case BoundSource::theorem1: return "theorem1";
        case BoundSource::theorem2: return "theorem2";
        case BoundSource::theorem3: return "theorem3";
        case BoundSource::theorem4: return "theorem4";
        case BoundSource::theorem5: return "theorem5";
        case BoundSource::eq34: return "mbr-point";
    }
    throw std::logic_error("bound_source_name: bad enum");
}

Rational evaluate_form(const BoundForm& form, const Rational& alpha, const Rational& beta) {
    if (form.empty()) throw std::invalid_argument("evaluate_form: empty form");
    std::optional<Rational> best;
    for (const LinearForm& f : form) {
        Rational v = f.alpha_coeff * alpha + f.beta_coeff * beta;
        if (!best || v < *best) best = v;
    }
    return *best;
}

namespace {

void check_query(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t l) {
    if (n < 2 || !(l < k && k <= d && d <= n - 1))
        throw std::invalid_argument("tradeoff: require l < k <= d <= n-1");
}

Rational sum_min_terms(std::uint32_t k, std::uint32_t d, std::uint32_t from,
                       const Rational& alpha, const Rational& beta) {
    Rational total(0);
    for (std::uint32_t i = from; i < k; ++i)
        total = total + Rational::min(alpha, Rational(std::int64_t(d - i)) * beta);
    return total;
}

} // namespace

Rational functional_capacity(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                             const Rational& alpha, const Rational& beta) {
    check_query(n, k, d, 0);
    if (alpha < Rational(0) || beta < Rational(0))
        throw std::invalid_argument("tradeoff: alpha, beta must be nonnegative");
    return sum_min_terms(k, d, 0, alpha, beta);
}

Rational secure_capacity_bound(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                               std::uint32_t l, const Rational& alpha, const Rational& beta) {
    check_query(n, k, d, l);
    if (alpha < Rational(0) || beta < Rational(0))
        throw std::invalid_argument("tradeoff: alpha, beta must be nonnegative");
    return sum_min_terms(k, d, l, alpha, beta);
}

Rational mbr_secure_capacity(std::uint32_t k, std::uint32_t d, std::uint32_t l,
                             const Rational& beta) {
    if (!(l < k && k <= d)) throw std::invalid_argument("mbr_secure_capacity: require l < k <= d");
    std::int64_t file_terms = std::int64_t(k) * d - std::int64_t(k) * (k - 1) / 2;
    std::int64_t key_terms = std::int64_t(l) * d - std::int64_t(l) * (l - 1) / 2;
    return Rational(file_terms - key_terms) * beta;
}

std::optional<BoundForm> theorem_form(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                                      std::uint32_t l, Attack attack) {
    check_query(n, k, d, l);
    auto lf = [](Rational a, Rational b) { return LinearForm{std::move(a), std::move(b)}; };
    if (n == 4 && k == 2 && d == 3 && l == 1) {
        if (attack == Attack::type1) return BoundForm{lf(1, 0), lf(0, 2)};
        if (attack == Attack::type2) return BoundForm{lf({2, 3}, 0), lf(0, 2)};
        return std::nullopt;
    }
    if (n == 4 && k == 3 && d == 3 && l == 1) {
        if (attack == Attack::type1)
            // min(alpha,2beta)+min(alpha,beta) expanded, plus (alpha+6beta)/3
            return BoundForm{lf(2, 0), lf(1, 1), lf(1, 2), lf(0, 3), lf({1, 3}, 2)};
        if (attack == Attack::type2) return BoundForm{lf(1, 0), lf(0, 3)};
        return std::nullopt;
    }
    if (k == n - 1 && d == n - 1 && l == n - 2) {
        // covers (3,2,2,1) and (4,3,3,2)
        if (attack == Attack::type1) return BoundForm{lf(1, 0), lf(0, 1)};
        if (attack == Attack::type2)
            return BoundForm{lf(Rational(1, std::int64_t(n - 1)), 0), lf(0, 1)};
        return std::nullopt;
    }
    return std::nullopt;
}

BoundResult theorem_bound(const TradeoffQuery& q) {
    auto form = theorem_form(q.n, q.k, q.d, q.l, q.attack);
    if (!form)
        throw std::invalid_argument("no theorem covers (" + std::to_string(q.n) + "," +
                                    std::to_string(q.k) + "," + std::to_string(q.d) + "), l=" +
                                    std::to_string(q.l) + ", " + attack_name(q.attack));
    if (q.alpha < Rational(0) || q.beta < Rational(0))
        throw std::invalid_argument("tradeoff: alpha, beta must be nonnegative");
    BoundResult out;
    out.value = evaluate_form(*form, q.alpha, q.beta);
    out.tight = true;
    if (q.n == 3) out.source = BoundSource::theorem1;
    else if (q.k == 2) out.source = BoundSource::theorem2;
    else if (q.n == 4 && q.l == 1) out.source = BoundSource::theorem3;
    else if (q.n == 4 && q.l == 2) out.source = BoundSource::theorem4;
    else out.source = BoundSource::theorem5;
    return out;
}

BoundForm secure_capacity_form(std::uint32_t k, std::uint32_t d, std::uint32_t l) {
    if (!(l < k && k <= d)) throw std::invalid_argument("secure_capacity_form: require l < k <= d");
    // expand sum of mins into min over all per-term choices
    BoundForm acc = {LinearForm{Rational(0), Rational(0)}};
    for (std::uint32_t i = l; i < k; ++i) {
        BoundForm next;
        for (const LinearForm& f : acc) {
            next.push_back({f.alpha_coeff + Rational(1), f.beta_coeff});
            next.push_back({f.alpha_coeff, f.beta_coeff + Rational(std::int64_t(d - i))});
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<RegionPoint> region_corners(const BoundForm& form, std::uint32_t d) {
    // constraints u*x + v*y >= 1; region vertices are feasible pairwise
    // intersections of constraint lines
    std::vector<LinearForm> cons;
    for (const LinearForm& f : form) {
        bool dup = false;
        for (const LinearForm& g : cons)
            if (g.alpha_coeff == f.alpha_coeff && g.beta_coeff == f.beta_coeff) dup = true;
        if (!dup) cons.push_back(f);
    }
    auto feasible = [&](const Rational& x, const Rational& y) {
        for (const LinearForm& f : cons)
            if (f.alpha_coeff * x + f.beta_coeff * y < Rational(1)) return false;
        return true;
    };
    std::vector<RegionPoint> corners;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
            const LinearForm& a = cons[i];
            const LinearForm& b = cons[j];
            Rational det = a.alpha_coeff * b.beta_coeff - b.alpha_coeff * a.beta_coeff;
            if (det == Rational(0)) continue;
            Rational x = (b.beta_coeff - a.beta_coeff) / det;
            Rational y = (a.alpha_coeff - b.alpha_coeff) / det;
            if (!(x > Rational(0)) || !(y > Rational(0))) continue;
            if (!feasible(x, y)) continue;
            bool dup = false;
            for (const RegionPoint& p : corners)
                if (p.alpha_bar == x && p.beta_bar == y) dup = true;
            if (dup) continue;
            RegionPoint p;
            p.alpha_bar = x;
            p.beta_bar = y;
            p.label = (x == Rational(std::int64_t(d)) * y) ? "MBR" : "corner";
            corners.push_back(std::move(p));
        }
    }
    std::sort(corners.begin(), corners.end(), [](const RegionPoint& a, const RegionPoint& b) {
        return a.alpha_bar < b.alpha_bar;
    });
    return corners;
}

RegionSweep region_sweep(const BoundForm& form, std::uint32_t d,
                         std::uint32_t points, const Rational& axis_max) {
    if (points < 2) throw std::invalid_argument("region_sweep: need at least 2 grid points");
    // minimal alpha_bar for a given beta_bar: max over constraints of (1 - v*y)/u
    auto alpha_min = [&](const Rational& y) -> std::optional<Rational> {
        Rational best(0);
        for (const LinearForm& f : form) {
            Rational need = Rational(1) - f.beta_coeff * y;
            if (f.alpha_coeff == Rational(0)) {
                if (need > Rational(0)) return std::nullopt; // beta-only constraint unmet
                continue;
            }
            Rational x = need / f.alpha_coeff;
            if (x > best) best = x;
        }
        return best;
    };

    std::vector<RegionPoint> rows;
    for (const RegionPoint& c : region_corners(form, d)) rows.push_back(c);
    for (std::uint32_t i = points; i >= 1; --i) {
        Rational y = axis_max * Rational(std::int64_t(i), std::int64_t(points));
        auto x = alpha_min(y);
        if (!x) continue;
        if (*x > axis_max) continue;
        RegionPoint p;
        p.alpha_bar = *x;
        p.beta_bar = y;
        rows.push_back(std::move(p));
    }
    std::sort(rows.begin(), rows.end(), [](const RegionPoint& a, const RegionPoint& b) {
        if (a.alpha_bar != b.alpha_bar) return a.alpha_bar < b.alpha_bar;
        return b.beta_bar < a.beta_bar;
    });
    // drop exact duplicates of labeled corners produced by the grid
    std::vector<RegionPoint> dedup;
    for (RegionPoint& p : rows) {
        if (!dedup.empty() && dedup.back().alpha_bar == p.alpha_bar &&
            dedup.back().beta_bar == p.beta_bar) {
            if (dedup.back().label.empty()) dedup.back().label = p.label;
            continue;
        }
        dedup.push_back(std::move(p));
    }
    return RegionSweep{std::move(dedup)};
}

std::string region_csv(const RegionSweep& sweep) {
    std::ostringstream os;
    os << "alpha_bar,beta_bar,label\n";
    for (const RegionPoint& p : sweep.rows)
        os << p.alpha_bar.to_string() << "," << p.beta_bar.to_string() << "," << p.label << "\n";
    return os.str();
}

std::string bound_result_json(const TradeoffQuery& query, const BoundResult& result) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["query"] = {{"n", query.n},
                  {"k", query.k},
                  {"d", query.d},
                  {"l", query.l},
                  {"attack", attack_name(query.attack)},
                  {"alpha", query.alpha.to_string()},
                  {"beta", query.beta.to_string()}};
    j["value"] = result.value.to_string();
    j["source"] = bound_source_name(result.source);
    j["tight"] = result.tight;
    return j.dump(2) + "\n";
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational: " + text);
    }
}

} // namespace secregen
