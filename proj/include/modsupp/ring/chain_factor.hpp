#pragma once

/// @file chain_factor.hpp
/// @brief Arithmetic in one finite chain ring: Z/p^e or GF(p^m).
///
/// Residues are encoded as integers in [0, size). For Z/p^e the code is the
/// residue itself. For GF(p^m) the code of c_0 + c_1 x + ... + c_{m-1} x^{m-1}
/// is sum c_j p^j, i.e. coefficient vectors read constant term first.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace modsupp {

enum class FactorKind { Zpe, GF };

inline bool is_prime(std::uint64_t value) {
    if (value < 2) return false;
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d == 0) return false;
    }
    return true;
}

/// Returns (p, k) with value == p^k, or (0, 0) when value is not a prime power.
inline std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t value) {
    if (value < 2) return {0, 0};
    std::uint64_t p = value;
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    while (value % p == 0) {
        value /= p;
        ++k;
    }
    if (value != 1) return {0, 0};
    return {p, k};
}

namespace detail {

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, constant term first

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    std::uint32_t exp = p - 2;
    while (exp > 0) {
        if (exp & 1u) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

/// Remainder of f modulo a nonzero g over F_p.
inline Poly poly_mod(Poly f, Poly g, std::uint32_t p) {
    trim(f);
    trim(g);
    const std::uint32_t lead_inv = inverse_mod_prime(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint64_t factor = std::uint64_t{f.back()} * lead_inv % p;
        const std::size_t shift = f.size() - g.size();
        for (std::size_t j = 0; j < g.size(); ++j) {
            const std::uint64_t sub = factor * g[j] % p;
            f[shift + j] = static_cast<std::uint32_t>((f[shift + j] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

/// Checks irreducibility by trial division with every monic polynomial of degree <= deg/2.
inline bool is_irreducible(const Poly& modulus, std::uint32_t p) {
    Poly f = modulus;
    trim(f);
    const std::size_t degree = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= degree; ++d) {
        std::uint64_t count = 1;
        for (std::size_t j = 0; j < d; ++j) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t rest = idx;
            for (std::size_t j = 0; j < d; ++j) {
                g[j] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

struct ChainFactorSpec {
    FactorKind kind = FactorKind::Zpe;
    std::uint32_t p = 2;
    std::uint32_t e = 1;                  ///< chain length for Z/p^e
    std::uint32_t m = 1;                  ///< extension degree for GF(p^m)
    std::vector<std::uint32_t> modulus;   ///< GF only: degree-m monic polynomial, constant term first

    friend bool operator==(const ChainFactorSpec&, const ChainFactorSpec&) = default;
};

class ChainFactor {
  public:
    static ChainFactor zpe(std::uint32_t p, std::uint32_t e) {
        if (!is_prime(p)) throw ValidationError("Z/p^e factor needs a prime p, got " + std::to_string(p));
        if (e < 1) throw ValidationError("Z/p^e factor needs e >= 1");
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            size *= p;
            if (size > kRingSizeCap) throw CapExceeded("Z/" + std::to_string(p) + "^" + std::to_string(e) + " is larger than the ring size cap");
        }
        ChainFactor f;
        f.spec_ = {FactorKind::Zpe, p, e, 1, {}};
        f.size_ = static_cast<std::uint32_t>(size);
        return f;
    }

    static ChainFactor gf(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
        if (!is_prime(p)) throw ValidationError("GF(p^m) factor needs a prime p, got " + std::to_string(p));
        if (m < 1) throw ValidationError("GF(p^m) factor needs m >= 1");
        if (m == 1 && modulus.empty()) modulus = {0, 1};
        for (auto& c : modulus) c %= p;
        detail::trim(modulus);
        if (modulus.size() != m + 1) {
            throw ValidationError("GF modulus must have degree " + std::to_string(m) + " (coefficients listed constant term first)");
        }
        const std::uint32_t lead_inv = detail::inverse_mod_prime(modulus.back(), p);
        for (auto& c : modulus) c = static_cast<std::uint32_t>(std::uint64_t{c} * lead_inv % p);
        if (!detail::is_irreducible(modulus, p)) throw ValidationError("GF modulus is reducible over F_" + std::to_string(p));
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            size *= p;
            if (size > kRingSizeCap) throw CapExceeded("GF(" + std::to_string(p) + "^" + std::to_string(m) + ") is larger than the ring size cap");
        }
        ChainFactor f;
        f.spec_ = {FactorKind::GF, p, 1, m, std::move(modulus)};
        f.size_ = static_cast<std::uint32_t>(size);
        f.build_log_tables();
        return f;
    }

    /// GF(p^m) with the built-in modulus for F_4, F_8, F_9, or the first monic
    /// irreducible polynomial in lexicographic order otherwise.
    static ChainFactor gf_default(std::uint32_t p, std::uint32_t m) {
        if (p == 2 && m == 2) return gf(2, 2, {1, 1, 1});
        if (p == 2 && m == 3) return gf(2, 3, {1, 1, 0, 1});
        if (p == 3 && m == 2) return gf(3, 2, {1, 0, 1});
        if (m == 1) return gf(p, 1, {0, 1});
        if (!is_prime(p)) throw ValidationError("GF(p^m) factor needs a prime p, got " + std::to_string(p));
        std::uint64_t count = 1;
        for (std::uint32_t j = 0; j < m; ++j) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            detail::Poly f(m + 1, 0);
            std::uint64_t rest = idx;
            for (std::uint32_t j = 0; j < m; ++j) {
                f[j] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            f[m] = 1;
            if (f[0] != 0 && detail::is_irreducible(f, p)) return gf(p, m, f);
        }
        throw InternalError("no irreducible polynomial found");
    }

    static ChainFactor from_spec(const ChainFactorSpec& spec) {
        return spec.kind == FactorKind::Zpe ? zpe(spec.p, spec.e) : gf(spec.p, spec.m, spec.modulus);
    }

    const ChainFactorSpec& spec() const { return spec_; }
    FactorKind kind() const { return spec_.kind; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t size() const { return size_; }
    bool is_field() const { return spec_.kind == FactorKind::GF || spec_.e == 1; }

    /// Nilpotency index epsilon of the maximal ideal.
    std::uint32_t chain_length() const { return spec_.kind == FactorKind::Zpe ? spec_.e : 1; }

    std::uint32_t residue_field_size() const { return spec_.kind == FactorKind::Zpe ? spec_.p : size_; }

    /// Generator alpha of the maximal ideal (p for Z/p^e, 0 for fields).
    std::uint32_t alpha() const { return spec_.kind == FactorKind::Zpe ? spec_.p % size_ : 0; }

    std::string name() const {
        if (spec_.kind == FactorKind::Zpe) {
            return spec_.e == 1 ? "Z" + std::to_string(spec_.p) : "Z" + std::to_string(size_);
        }
        return "GF(" + std::to_string(size_) + ")";
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (spec_.kind == FactorKind::Zpe) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % size_);
        if (spec_.m == 1) return (a + b) % spec_.p;
        std::uint32_t result = 0, scale = 1;
        for (std::uint32_t j = 0; j < spec_.m; ++j) {
            result += ((a % spec_.p + b % spec_.p) % spec_.p) * scale;
            a /= spec_.p;
            b /= spec_.p;
            scale *= spec_.p;
        }
        return result;
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (spec_.kind == FactorKind::Zpe) return a == 0 ? 0 : size_ - a;
        std::uint32_t result = 0, scale = 1;
        for (std::uint32_t j = 0; j < spec_.m; ++j) {
            const std::uint32_t digit = a % spec_.p;
            result += (digit == 0 ? 0 : spec_.p - digit) * scale;
            a /= spec_.p;
            scale *= spec_.p;
        }
        return result;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (spec_.kind == FactorKind::Zpe) return static_cast<std::uint32_t>(std::uint64_t{a} * b % size_);
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (size_ - 1)];
    }

    bool is_unit(std::uint32_t a) const {
        return spec_.kind == FactorKind::Zpe ? a % spec_.p != 0 : a != 0;
    }

    std::uint32_t inverse(std::uint32_t a) const {
        if (!is_unit(a)) throw ValidationError("element " + std::to_string(a) + " of " + name() + " is not a unit");
        if (spec_.kind == FactorKind::GF) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
        // extended Euclid on (a, p^e)
        std::int64_t old_r = a, r = size_, old_s = 1, s = 0;
        while (r != 0) {
            const std::int64_t q = old_r / r;
            std::int64_t tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
        }
        const std::int64_t n = size_;
        return static_cast<std::uint32_t>(((old_s % n) + n) % n);
    }

    /// Largest j with a in (alpha^j); equals chain_length() for a == 0.
    std::uint32_t valuation(std::uint32_t a) const {
        if (a == 0) return chain_length();
        if (spec_.kind == FactorKind::GF) return 0;
        std::uint32_t v = 0;
        while (a % spec_.p == 0) {
            a /= spec_.p;
            ++v;
        }
        return v;
    }

    friend bool operator==(const ChainFactor& a, const ChainFactor& b) { return a.spec_ == b.spec_; }

  private:
    ChainFactor() = default;

    std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const {
        const std::uint32_t p = spec_.p, m = spec_.m;
        detail::Poly fa(m), fb(m);
        for (std::uint32_t j = 0; j < m; ++j) {
            fa[j] = a % p;
            a /= p;
            fb[j] = b % p;
            b /= p;
        }
        detail::Poly prod(2 * m, 0);
        for (std::uint32_t i = 0; i < m; ++i) {
            for (std::uint32_t j = 0; j < m; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p);
            }
        }
        const detail::Poly rem = detail::poly_mod(prod, spec_.modulus, p);
        std::uint32_t code = 0, scale = 1;
        for (std::uint32_t j = 0; j < rem.size(); ++j) {
            code += rem[j] * scale;
            scale *= p;
        }
        return code;
    }

    void build_log_tables() {
        const std::uint32_t order = size_ - 1;
        exp_.assign(size_, 0);
        log_.assign(size_, 0);
        for (std::uint32_t g = 1; g < size_; ++g) {
            std::uint32_t x = 1, k = 0;
            std::vector<std::uint32_t> powers;
            powers.reserve(order);
            do {
                powers.push_back(x);
                x = poly_mul(x, g);
                ++k;
            } while (x != 1 && k <= order);
            if (k == order) {
                for (std::uint32_t i = 0; i < order; ++i) {
                    exp_[i] = powers[i];
                    log_[powers[i]] = i;
                }
                return;
            }
        }
        throw InternalError("multiplicative group of " + name() + " has no generator");
    }

    ChainFactorSpec spec_;
    std::uint32_t size_ = 1;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace modsupp
