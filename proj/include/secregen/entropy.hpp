#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "secregen/rational.hpp"

namespace secregen {

/// An exact real of the form sum_p r_p * log(p) over prime p with rational
/// coefficients. Entropies of integer-count distributions always have this
/// shape, and unique factorization makes the representation canonical: the
/// value is zero iff the coefficient map is empty.
class LogValue {
public:
    LogValue() = default;

    static LogValue log_of_integer(std::uint64_t n);          // log n, n >= 1
    static LogValue scaled_log(const Rational& c, std::uint64_t n); // c * log n

    LogValue operator+(const LogValue& o) const;
    LogValue operator-(const LogValue& o) const;
    LogValue scale(const Rational& c) const;

    bool is_zero() const { return coeff_.empty(); }
    bool operator==(const LogValue& o) const { return coeff_ == o.coeff_; }

    /// Exact sign: -1, 0, +1. Zero is decided symbolically; nonzero values
    /// are decided by float evaluation with a safety margin, falling back to
    /// exact big-integer product comparison when the margin is too thin.
    int sign() const;

    bool operator<(const LogValue& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const LogValue& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const LogValue& o) const { return (*this - o).sign() >= 0; }

    double to_double() const;

    /// If the value equals r * log(q), returns r; nullopt otherwise.
    std::optional<Rational> as_multiple_of_log(std::uint64_t q) const;

    const std::map<std::uint64_t, Rational>& coefficients() const { return coeff_; }

private:
    std::map<std::uint64_t, Rational> coeff_; // prime -> coefficient, no zero entries
    void put(std::uint64_t prime, const Rational& c);
};

/// Joint distribution of up to a few finite variables, held as exact integer
/// weights per outcome tuple. All entropies are in natural-log units and
/// exact (LogValue); divide by log q externally for log_q units.
class JointDistribution {
public:
    explicit JointDistribution(std::vector<std::uint32_t> cardinalities);

    std::size_t variables() const { return card_.size(); }
    std::uint64_t total_weight() const { return total_; }

    void add_weight(const std::vector<std::uint32_t>& outcome, std::uint64_t w);

    /// H(vars) for a subset of variable indices.
    LogValue entropy(const std::vector<std::size_t>& vars) const;
    /// H(x | given).
    LogValue conditional_entropy(const std::vector<std::size_t>& x,
                                 const std::vector<std::size_t>& given) const;
    /// I(x ; y).
    LogValue mutual_information(const std::vector<std::size_t>& x,
                                const std::vector<std::size_t>& y) const;

private:
    std::vector<std::uint32_t> card_;
    std::map<std::vector<std::uint32_t>, std::uint64_t> weight_;
    std::uint64_t total_ = 0;

    std::map<std::vector<std::uint32_t>, std::uint64_t>
    marginal(const std::vector<std::size_t>& vars) const;
};

/// H(X,Y|U) + H(X,Z|U) + H(Y,Z|U) >= 2 H(X,Y,Z|U), checked exactly.
/// Variable indices address the distribution's variables.
bool triple_conditional_entropy_inequality(const JointDistribution& d,
                                           std::size_t x, std::size_t y,
                                           std::size_t z, std::size_t u);

} // namespace secregen
