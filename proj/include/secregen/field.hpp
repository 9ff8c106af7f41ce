#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace secregen {

/// Field element label in 0..q-1. For extension fields the label is the
/// base-p evaluation of the element's coefficient vector (constant term
/// is the least-significant digit).
using Elem = std::uint32_t;

/// Exact arithmetic over F_p (p prime) and F_{p^m}.
///
/// Extension fields are represented modulo a monic irreducible polynomial;
/// irreducibility is checked at construction by exhaustive trial division.
/// Multiplication/inverse tables are built for small fields, everything
/// else falls back to on-the-fly polynomial arithmetic. All operations are
/// pure; a FiniteField is immutable after construction and cheap to copy.
class FiniteField {
public:
    /// Prime field F_p.
    static FiniteField prime(std::uint32_t p);

    /// Extension field F_{p^m} with the canonical modulus: the monic
    /// irreducible polynomial of degree m whose low-coefficient label is
    /// smallest. For (p,m)=(3,2) this is x^2+1.
    static FiniteField extension(std::uint32_t p, std::uint32_t m);

    /// Extension field with an explicit monic modulus, coefficients
    /// constant-first and of length m+1.
    static FiniteField with_polynomial(std::uint32_t p, std::uint32_t m,
                                       std::vector<std::uint32_t> poly);

    /// F_q for q = p^m, factoring q automatically. Rejects non-prime-powers.
    static FiniteField of_order(std::uint64_t q);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    /// Modulus coefficients, constant-first; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return poly_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// Integer embedding into the prime subfield: i mod p.
    Elem from_int(std::int64_t i) const;

    /// Validates a label and returns it. The canonical labeling makes this
    /// the identity on 0..q-1.
    Elem element(std::uint64_t label) const;

    bool operator==(const FiniteField& o) const {
        return p_ == o.p_ && m_ == o.m_ && poly_ == o.poly_;
    }
    bool operator!=(const FiniteField& o) const { return !(*this == o); }

private:
    FiniteField(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly);

    void check_label(Elem a) const;
    Elem mul_poly(Elem a, Elem b) const;
    Elem inv_nozero(Elem a) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> poly_; // monic modulus, constant-first, size m+1; empty if m==1

    struct Tables {
        std::vector<Elem> mul; // q*q entries
        std::vector<Elem> inv; // q entries, inv[0] unused
    };
    std::shared_ptr<const Tables> tables_;
};

/// Primality by trial division; inputs here never exceed 2^16.
bool is_prime(std::uint64_t n);

/// Smallest prime >= n.
std::uint32_t next_prime_at_least(std::uint32_t n);

} // namespace secregen
