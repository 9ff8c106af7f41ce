#include "secregen/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace secregen {

namespace {

// Minimal unsigned bignum: just enough for exact comparison of products of
// prime powers. Limbs are base 2^32 stored in uint64 for easy carries.
class BigNat {
public:
    BigNat() : limbs_{0} {}
    explicit BigNat(std::uint64_t v) {
        limbs_.push_back(v & 0xffffffffu);
        if (v >> 32) limbs_.push_back(v >> 32);
    }

    void mul_by(const BigNat& o) {
        std::vector<std::uint64_t> out(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            if (limbs_[i] == 0) continue;
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                std::uint64_t cur = out[i + j] + limbs_[i] * o.limbs_[j] + carry;
                out[i + j] = cur & 0xffffffffu;
                carry = cur >> 32;
            }
            std::size_t k = i + o.limbs_.size();
            while (carry) {
                std::uint64_t cur = out[k] + carry;
                out[k] = cur & 0xffffffffu;
                carry = cur >> 32;
                ++k;
            }
        }
        while (out.size() > 1 && out.back() == 0) out.pop_back();
        limbs_ = std::move(out);
    }

    static BigNat power(std::uint64_t base, std::uint64_t exp) {
        BigNat acc(1);
        BigNat b(base);
        while (exp) {
            if (exp & 1) acc.mul_by(b);
            BigNat sq = b;
            sq.mul_by(b);
            b = std::move(sq);
            exp >>= 1;
        }
        return acc;
    }

    // -1, 0, +1 relative to o
    int compare(const BigNat& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

private:
    std::vector<std::uint64_t> limbs_;
};

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return a / std::gcd(a, b) * b;
}

} // namespace

void LogValue::put(std::uint64_t prime, const Rational& c) {
    if (c == Rational(0)) coeff_.erase(prime);
    else coeff_[prime] = c;
}

LogValue LogValue::log_of_integer(std::uint64_t n) {
    return scaled_log(Rational(1), n);
}

LogValue LogValue::scaled_log(const Rational& c, std::uint64_t n) {
    if (n == 0) throw std::domain_error("LogValue: log of zero");
    LogValue v;
    if (c == Rational(0)) return v;
    std::uint64_t r = n;
    for (std::uint64_t p = 2; p * p <= r; ++p) {
        if (r % p) continue;
        std::int64_t e = 0;
        while (r % p == 0) { r /= p; ++e; }
        v.put(p, c * Rational(e));
    }
    if (r > 1) v.put(r, c);
    return v;
}

LogValue LogValue::operator+(const LogValue& o) const {
    LogValue out = *this;
    for (const auto& [p, c] : o.coeff_) {
        auto it = out.coeff_.find(p);
        out.put(p, (it == out.coeff_.end() ? Rational(0) : it->second) + c);
    }
    return out;
}

LogValue LogValue::operator-(const LogValue& o) const {
    LogValue out = *this;
    for (const auto& [p, c] : o.coeff_) {
        auto it = out.coeff_.find(p);
        out.put(p, (it == out.coeff_.end() ? Rational(0) : it->second) - c);
    }
    return out;
}

LogValue LogValue::scale(const Rational& c) const {
    LogValue out;
    for (const auto& [p, r] : coeff_) out.put(p, r * c);
    return out;
}

double LogValue::to_double() const {
    double acc = 0.0;
    for (const auto& [p, c] : coeff_) acc += c.to_double() * std::log(double(p));
    return acc;
}

int LogValue::sign() const {
    if (coeff_.empty()) return 0;
    bool any_pos = false, any_neg = false;
    for (const auto& [p, c] : coeff_) {
        (void)p;
        (c > Rational(0) ? any_pos : any_neg) = true;
    }
    if (!any_neg) return 1;
    if (!any_pos) return -1;

    // Mixed signs: float estimate first. The margin scales with the total
    // magnitude so rounding error can never flip the reported sign.
    double est = 0.0, magnitude = 0.0;
    for (const auto& [p, c] : coeff_) {
        double term = c.to_double() * std::log(double(p));
        est += term;
        magnitude += std::abs(term);
    }
    double margin = std::max(1e-9, magnitude * 1e-12);
    if (est > margin) return 1;
    if (est < -margin) return -1;

    // Exact fallback: compare products of prime powers after clearing
    // denominators. sum c_p log p > 0  <=>  prod_{c>0} p^(L c_p) > prod_{c<0} p^(-L c_p).
    std::int64_t l = 1;
    for (const auto& [p, c] : coeff_) { (void)p; l = lcm64(l, c.den()); }
    BigNat pos(1), neg(1);
    for (const auto& [p, c] : coeff_) {
        std::int64_t e = c.num() * (l / c.den());
        if (e > 0) pos.mul_by(BigNat::power(p, std::uint64_t(e)));
        else neg.mul_by(BigNat::power(p, std::uint64_t(-e)));
    }
    return pos.compare(neg);
}

std::optional<Rational> LogValue::as_multiple_of_log(std::uint64_t q) const {
    LogValue base = log_of_integer(q);
    if (base.coeff_.empty()) throw std::domain_error("LogValue: base must exceed 1");
    if (coeff_.empty()) return Rational(0);
    // q = p^m has a single prime
    if (base.coeff_.size() != 1) {
        // composite base: multiple = coeff ratio must agree across primes
        std::optional<Rational> ratio;
        for (const auto& [p, c] : base.coeff_) {
            auto it = coeff_.find(p);
            if (it == coeff_.end()) return std::nullopt;
            Rational r = it->second / c;
            if (ratio && *ratio != r) return std::nullopt;
            ratio = r;
        }
        if (coeff_.size() != base.coeff_.size()) return std::nullopt;
        return ratio;
    }
    auto [p, m] = *base.coeff_.begin();
    if (coeff_.size() != 1 || coeff_.begin()->first != p) return std::nullopt;
    return coeff_.begin()->second / m;
}

JointDistribution::JointDistribution(std::vector<std::uint32_t> cardinalities)
    : card_(std::move(cardinalities)) {
    if (card_.empty() || card_.size() > 8)
        throw std::invalid_argument("JointDistribution: unsupported variable count");
    for (auto c : card_)
        if (c == 0) throw std::invalid_argument("JointDistribution: zero cardinality");
}

void JointDistribution::add_weight(const std::vector<std::uint32_t>& outcome, std::uint64_t w) {
    if (outcome.size() != card_.size())
        throw std::invalid_argument("JointDistribution: outcome arity mismatch");
    for (std::size_t i = 0; i < outcome.size(); ++i)
        if (outcome[i] >= card_[i])
            throw std::out_of_range("JointDistribution: outcome value out of range");
    if (w == 0) return;
    weight_[outcome] += w;
    total_ += w;
}

std::map<std::vector<std::uint32_t>, std::uint64_t>
JointDistribution::marginal(const std::vector<std::size_t>& vars) const {
    std::map<std::vector<std::uint32_t>, std::uint64_t> out;
    for (const auto& [outcome, w] : weight_) {
        std::vector<std::uint32_t> key(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] >= card_.size())
                throw std::out_of_range("JointDistribution: variable index out of range");
            key[i] = outcome[vars[i]];
        }
        out[key] += w;
    }
    return out;
}

LogValue JointDistribution::entropy(const std::vector<std::size_t>& vars) const {
    if (total_ == 0) throw std::domain_error("JointDistribution: empty distribution");
    // H = log N - (1/N) sum_x w_x log w_x  for weights w_x summing to N
    auto marg = marginal(vars);
    LogValue h = LogValue::log_of_integer(total_);
    Rational inv_n(-1, std::int64_t(total_));
    for (const auto& [key, w] : marg) {
        (void)key;
        if (w > 1) h = h + LogValue::scaled_log(inv_n * Rational(std::int64_t(w)), w);
    }
    return h;
}

LogValue JointDistribution::conditional_entropy(const std::vector<std::size_t>& x,
                                                const std::vector<std::size_t>& given) const {
    std::vector<std::size_t> both = x;
    for (auto v : given)
        if (std::find(both.begin(), both.end(), v) == both.end()) both.push_back(v);
    return entropy(both) - entropy(given);
}

LogValue JointDistribution::mutual_information(const std::vector<std::size_t>& x,
                                               const std::vector<std::size_t>& y) const {
    std::vector<std::size_t> both = x;
    for (auto v : y)
        if (std::find(both.begin(), both.end(), v) == both.end()) both.push_back(v);
    return entropy(x) + entropy(y) - entropy(both);
}

bool triple_conditional_entropy_inequality(const JointDistribution& d,
                                           std::size_t x, std::size_t y,
                                           std::size_t z, std::size_t u) {
    LogValue lhs = d.conditional_entropy({x, y}, {u}) +
                   d.conditional_entropy({x, z}, {u}) +
                   d.conditional_entropy({y, z}, {u});
    LogValue rhs = d.conditional_entropy({x, y, z}, {u}).scale(Rational(2));
    return (lhs - rhs).sign() >= 0;
}

} // namespace secregen
