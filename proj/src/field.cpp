#include "secregen/field.hpp"

#include <stdexcept>
#include <string>

namespace secregen {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableLimit = 512; // build mul/inv tables up to this order

using Poly = std::vector<std::uint32_t>; // constant-first coefficients

Poly label_to_poly(std::uint64_t label, std::uint32_t p, std::uint32_t len) {
    Poly c(len, 0);
    for (std::uint32_t i = 0; i < len && label; ++i) {
        c[i] = std::uint32_t(label % p);
        label /= p;
    }
    return c;
}

std::uint64_t poly_to_label(const Poly& c, std::uint32_t p) {
    std::uint64_t label = 0;
    for (std::size_t i = c.size(); i-- > 0;) label = label * p + c[i];
    return label;
}

int poly_degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return int(i);
    return -1;
}

std::uint32_t mod_inv_prime(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (t < 0) t += p;
    return std::uint32_t(t);
}

// a mod b over F_p, b nonzero
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    int db = poly_degree(b);
    std::uint32_t lead_inv = mod_inv_prime(b[std::size_t(db)], p);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        std::uint64_t f = std::uint64_t(a[std::size_t(da)]) * lead_inv % p;
        int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            std::uint64_t sub = f * b[std::size_t(i)] % p;
            std::uint32_t& c = a[std::size_t(i + shift)];
            c = std::uint32_t((c + p - sub) % p);
        }
    }
    return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

// Exhaustive trial division by all monic polynomials of degree 1..deg/2.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    int deg = poly_degree(f);
    if (deg < 1) return false;
    for (int dg = 1; dg <= deg / 2; ++dg) {
        std::uint64_t count = 1;
        for (int i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g = label_to_poly(t, p, std::uint32_t(dg + 1));
            g[std::size_t(dg)] = 1; // monic
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t next_prime_at_least(std::uint32_t n) {
    std::uint32_t c = n < 2 ? 2 : n;
    while (!is_prime(c)) ++c;
    return c;
}

FiniteField FiniteField::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: " + std::to_string(p) + " is not prime");
    return FiniteField(p, 1, {});
}

FiniteField FiniteField::extension(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
    if (m < 1) throw std::invalid_argument("FiniteField: degree must be >= 1");
    if (m == 1) return prime(p);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
        Poly f = label_to_poly(t, p, m + 1);
        f[m] = 1;
        if (poly_irreducible(f, p)) return FiniteField(p, m, f);
    }
    throw std::logic_error("FiniteField: no irreducible polynomial found"); // unreachable
}

FiniteField FiniteField::with_polynomial(std::uint32_t p, std::uint32_t m, Poly poly) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
    if (m < 2) throw std::invalid_argument("FiniteField: explicit modulus needs degree >= 2");
    if (poly.size() != m + 1 || poly[m] != 1)
        throw std::invalid_argument("FiniteField: modulus must be monic of length m+1");
    for (auto c : poly)
        if (c >= p) throw std::invalid_argument("FiniteField: modulus coefficient out of range");
    if (!poly_irreducible(poly, p))
        throw std::invalid_argument("FiniteField: modulus is reducible");
    return FiniteField(p, m, std::move(poly));
}

FiniteField FiniteField::of_order(std::uint64_t q) {
    if (q < 2 || q > kMaxOrder) throw std::invalid_argument("FiniteField: order out of supported range");
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) { p = q; break; }
    }
    std::uint32_t m = 0;
    std::uint64_t r = q;
    while (r > 1) {
        if (r % p != 0) throw std::invalid_argument("FiniteField: " + std::to_string(q) + " is not a prime power");
        r /= p;
        ++m;
    }
    return extension(std::uint32_t(p), m);
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m, Poly poly)
    : p_(p), m_(m), poly_(std::move(poly)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("FiniteField: order exceeds 2^16");
    }
    q_ = std::uint32_t(q);
    if (m_ > 1 && q_ <= kTableLimit) {
        auto t = std::make_shared<Tables>();
        t->mul.assign(std::size_t(q_) * q_, 0);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = a; b < q_; ++b) {
                Elem r = mul_poly(a, b);
                t->mul[std::size_t(a) * q_ + b] = r;
                t->mul[std::size_t(b) * q_ + a] = r;
            }
        t->inv.assign(q_, 0);
        for (Elem a = 1; a < q_; ++a) {
            // Fermat: a^(q-2), via the freshly built table
            Elem acc = 1, base = a;
            std::uint64_t e = q_ - 2;
            while (e) {
                if (e & 1) acc = t->mul[std::size_t(acc) * q_ + base];
                base = t->mul[std::size_t(base) * q_ + base];
                e >>= 1;
            }
            t->inv[a] = acc;
        }
        tables_ = std::move(t);
    }
}

void FiniteField::check_label(Elem a) const {
    if (a >= q_) throw std::out_of_range("FiniteField: label " + std::to_string(a) +
                                         " out of range for field of order " + std::to_string(q_));
}

Elem FiniteField::element(std::uint64_t label) const {
    if (label >= q_) throw std::out_of_range("FiniteField: label out of range");
    return Elem(label);
}

Elem FiniteField::from_int(std::int64_t i) const {
    std::int64_t r = i % std::int64_t(p_);
    if (r < 0) r += p_;
    return Elem(r);
}

Elem FiniteField::add(Elem a, Elem b) const {
    check_label(a); check_label(b);
    if (m_ == 1) return Elem((std::uint64_t(a) + b) % p_);
    Elem out = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_; b /= p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

Elem FiniteField::neg(Elem a) const {
    check_label(a);
    if (m_ == 1) return a == 0 ? 0 : Elem(p_ - a);
    Elem out = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t da = a % p_;
        a /= p_;
        out += (da == 0 ? 0 : p_ - da) * mult;
        mult *= p_;
    }
    return out;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul_poly(Elem a, Elem b) const {
    Poly pa = label_to_poly(a, p_, m_);
    Poly pb = label_to_poly(b, p_, m_);
    Poly prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (pa[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(pa[i]) * pb[j]) % p_);
    }
    return Elem(poly_to_label(poly_mod(std::move(prod), poly_, p_), p_));
}

Elem FiniteField::mul(Elem a, Elem b) const {
    check_label(a); check_label(b);
    if (m_ == 1) return Elem(std::uint64_t(a) * b % p_);
    if (tables_) return tables_->mul[std::size_t(a) * q_ + b];
    return mul_poly(a, b);
}

Elem FiniteField::inv_nozero(Elem a) const {
    if (m_ == 1) return mod_inv_prime(a, p_);
    if (tables_) return tables_->inv[a];
    Elem acc = 1, base = a;
    std::uint64_t e = q_ - 2;
    while (e) {
        if (e & 1) acc = mul_poly(acc, base);
        base = mul_poly(base, base);
        e >>= 1;
    }
    return acc;
}

Elem FiniteField::inv(Elem a) const {
    check_label(a);
    if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
    return inv_nozero(a);
}

Elem FiniteField::div(Elem a, Elem b) const {
    check_label(a); check_label(b);
    if (b == 0) throw std::domain_error("FiniteField: division by zero");
    return mul(a, inv_nozero(b));
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    check_label(a);
    Elem acc = 1, base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

} // namespace secregen
