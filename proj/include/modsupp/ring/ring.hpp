#pragma once

/// @file ring.hpp
/// @brief Finite principal ideal rings presented as products of chain rings.
///
/// Elements are opaque codes in [0, |R|). Rings built with Ring::zm use the
/// integer itself as the code, so Z/m elements read and print as integers; the
/// CRT bijection to residue tuples is kept internally. Rings built with
/// Ring::product use a mixed-radix code with factor 0 most significant.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/ring/chain_factor.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace modsupp {

struct RingElem {
    std::uint32_t code = 0;

    friend constexpr auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// Per-factor description of the Jacobson radical J = (alpha).
struct RadicalFactor {
    std::uint32_t alpha;               ///< generator of the maximal ideal, as a factor residue
    std::uint32_t epsilon;             ///< least j with alpha^j == 0
    std::uint32_t residue_field_size;  ///< |R_i / M_i|
};

enum class ArithOp { add, sub, mul, neg };

class Ring {
  public:
    /// Z/m factored into its prime-power CRT components.
    static Ring zm(std::uint64_t m) {
        if (m < 2) throw ValidationError("Z/m needs m >= 2, got " + std::to_string(m));
        if (m > kRingSizeCap) throw CapExceeded("Z/" + std::to_string(m) + " is larger than the ring size cap");
        std::vector<ChainFactor> factors;
        std::uint64_t rest = m;
        for (std::uint64_t p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            std::uint32_t e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            factors.push_back(ChainFactor::zpe(static_cast<std::uint32_t>(p), e));
        }
        if (rest > 1) factors.push_back(ChainFactor::zpe(static_cast<std::uint32_t>(rest), 1));
        return Ring(std::move(factors), true);
    }

    static Ring product(std::vector<ChainFactor> factors) {
        if (factors.empty()) throw ValidationError("a ring needs at least one factor");
        // A lone Z/p^e factor has identical mixed-radix and integer codes.
        const bool integer = factors.size() == 1 && factors.front().kind() == FactorKind::Zpe;
        return Ring(std::move(factors), integer);
    }

    static Ring field(std::uint32_t q) {
        const auto [p, m] = prime_power(q);
        if (p == 0) throw ValidationError(std::to_string(q) + " is not a prime power");
        if (m == 1) return zm(q);
        return product({ChainFactor::gf_default(static_cast<std::uint32_t>(p), m)});
    }

    std::uint32_t size() const { return impl_->size; }
    std::size_t factor_count() const { return impl_->factors.size(); }
    const ChainFactor& factor(std::size_t i) const { return impl_->factors.at(i); }
    const std::vector<ChainFactor>& factors() const { return impl_->factors; }

    /// True when codes coincide with integers mod size() (Z/m presentation).
    bool integer_form() const { return impl_->integer_form; }
    bool is_local() const { return factor_count() == 1; }
    bool is_field() const { return is_local() && factor(0).is_field(); }

    std::string name() const {
        if (impl_->integer_form) return "Z" + std::to_string(impl_->size);
        std::string out;
        for (std::size_t i = 0; i < factor_count(); ++i) {
            if (i) out += " x ";
            out += factor(i).name();
        }
        return out;
    }

    RingElem zero() const { return {0}; }
    RingElem one() const { return impl_->one; }

    bool contains(RingElem a) const { return a.code < impl_->size; }

    std::uint32_t residue(RingElem a, std::size_t i) const { return impl_->residues[std::size_t{a.code} * factor_count() + i]; }

    RingElem from_residues(std::span<const std::uint32_t> residues) const {
        const std::size_t l = factor_count();
        if (residues.size() != l) throw ValidationError("residue tuple has wrong arity for " + name());
        std::uint64_t code = 0;
        if (impl_->integer_form) {
            for (std::size_t i = 0; i < l; ++i) code = (code + std::uint64_t{residues[i]} * impl_->crt[i]) % impl_->size;
        } else {
            for (std::size_t i = 0; i < l; ++i) code = code * factor(i).size() + residues[i];
        }
        return {static_cast<std::uint32_t>(code)};
    }

    RingElem from_int(std::int64_t value) const {
        if (!impl_->integer_form) throw ValidationError("integer element form is only available for Z/m rings, not " + name());
        const std::int64_t m = impl_->size;
        return {static_cast<std::uint32_t>(((value % m) + m) % m)};
    }

    RingElem add(RingElem a, RingElem b) const {
        if (!impl_->add_table.empty()) return {impl_->add_table[std::size_t{a.code} * impl_->size + b.code]};
        return per_factor(a, b, [](const ChainFactor& f, std::uint32_t x, std::uint32_t y) { return f.add(x, y); });
    }

    RingElem mul(RingElem a, RingElem b) const {
        if (!impl_->mul_table.empty()) return {impl_->mul_table[std::size_t{a.code} * impl_->size + b.code]};
        return per_factor(a, b, [](const ChainFactor& f, std::uint32_t x, std::uint32_t y) { return f.mul(x, y); });
    }

    RingElem neg(RingElem a) const { return {impl_->neg_table[a.code]}; }
    RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

    /// Range-checked arithmetic entry point.
    RingElem arith(RingElem a, RingElem b, ArithOp op) const {
        if (!contains(a) || !contains(b)) throw ValidationError("element does not belong to " + name());
        switch (op) {
            case ArithOp::add: return add(a, b);
            case ArithOp::sub: return sub(a, b);
            case ArithOp::mul: return mul(a, b);
            case ArithOp::neg: return neg(a);
        }
        return a;
    }

    bool is_unit(RingElem a) const {
        for (std::size_t i = 0; i < factor_count(); ++i) {
            if (!factor(i).is_unit(residue(a, i))) return false;
        }
        return true;
    }

    RingElem inverse(RingElem a) const {
        if (!contains(a)) throw ValidationError("element does not belong to " + name());
        if (!is_unit(a)) throw ValidationError("element " + std::to_string(a.code) + " of " + name() + " is not a unit");
        std::vector<std::uint32_t> r(factor_count());
        for (std::size_t i = 0; i < factor_count(); ++i) r[i] = factor(i).inverse(residue(a, i));
        return from_residues(r);
    }

    /// e_i: residue 1 in factor i and 0 elsewhere.
    RingElem idempotent(std::size_t i) const { return impl_->idempotents.at(i); }
    const std::vector<RingElem>& idempotents() const { return impl_->idempotents; }

    /// alpha = (alpha_1, ..., alpha_l), a generator of the Jacobson radical.
    RingElem radical_generator() const { return impl_->alpha; }

    /// alpha_i * e_i, the generator of M_i embedded in R.
    RingElem radical_generator(std::size_t i) const { return mul(impl_->alpha, idempotent(i)); }

    std::vector<RadicalFactor> radical_data() const {
        std::vector<RadicalFactor> out;
        for (const auto& f : factors()) out.push_back({f.alpha(), f.chain_length(), f.residue_field_size()});
        return out;
    }

    bool in_radical(RingElem a) const {
        for (std::size_t i = 0; i < factor_count(); ++i) {
            if (factor(i).is_unit(residue(a, i))) return false;
        }
        return true;
    }

    /// The ring of factor i alone; its codes are the factor residues.
    Ring factor_ring(std::size_t i) const {
        const ChainFactor& f = factor(i);
        if (f.kind() == FactorKind::Zpe) return zm(f.size());
        return product({f});
    }

    /// Embeds a residue of factor i as the element with zeros elsewhere.
    RingElem embed(std::size_t i, std::uint32_t residue_value) const {
        std::vector<std::uint32_t> r(factor_count(), 0);
        r[i] = residue_value;
        return from_residues(r);
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.impl_ == b.impl_ || (a.impl_->integer_form == b.impl_->integer_form && a.impl_->factors == b.impl_->factors);
    }

  private:
    struct Impl {
        std::vector<ChainFactor> factors;
        bool integer_form = false;
        std::uint32_t size = 1;
        std::vector<std::uint64_t> crt;
        std::vector<std::uint32_t> residues;
        std::vector<std::uint32_t> neg_table;
        std::vector<std::uint32_t> add_table;
        std::vector<std::uint32_t> mul_table;
        std::vector<RingElem> idempotents;
        RingElem one;
        RingElem alpha;
    };

    static constexpr std::uint32_t kTableThreshold = 512;

    Ring(std::vector<ChainFactor> factors, bool integer_form) {
        auto impl = std::make_shared<Impl>();
        impl->factors = std::move(factors);
        impl->integer_form = integer_form;
        std::uint64_t size = 1;
        for (const auto& f : impl->factors) {
            size *= f.size();
            if (size > kRingSizeCap) throw CapExceeded("ring is larger than the ring size cap");
        }
        impl->size = static_cast<std::uint32_t>(size);
        const std::size_t l = impl->factors.size();
        if (integer_form) {
            for (std::size_t i = 0; i < l; ++i) {
                const std::uint64_t qi = impl->factors[i].size();
                const std::uint64_t rest = size / qi;
                std::uint64_t c = 0;
                for (std::uint64_t k = 0; k < qi; ++k) {
                    if ((rest * k) % qi == 1 % qi) {
                        c = rest * k % size;
                        break;
                    }
                }
                impl->crt.push_back(c);
            }
        }
        impl->residues.resize(std::size_t{impl->size} * l);
        for (std::uint32_t code = 0; code < impl->size; ++code) {
            if (integer_form) {
                for (std::size_t i = 0; i < l; ++i) impl->residues[std::size_t{code} * l + i] = code % impl->factors[i].size();
            } else {
                std::uint32_t rest = code;
                for (std::size_t i = l; i-- > 0;) {
                    impl->residues[std::size_t{code} * l + i] = rest % impl->factors[i].size();
                    rest /= impl->factors[i].size();
                }
            }
        }
        impl_ = std::move(impl);

        std::vector<std::uint32_t> r(l);
        for (std::size_t i = 0; i < l; ++i) r[i] = 1 % factor(i).size();
        mutable_impl().one = from_residues(r);
        for (std::size_t i = 0; i < l; ++i) r[i] = factor(i).alpha();
        mutable_impl().alpha = from_residues(r);
        for (std::size_t i = 0; i < l; ++i) {
            std::fill(r.begin(), r.end(), 0u);
            r[i] = 1 % factor(i).size();
            mutable_impl().idempotents.push_back(from_residues(r));
        }
        auto& neg_table = mutable_impl().neg_table;
        neg_table.resize(impl_->size);
        for (std::uint32_t a = 0; a < impl_->size; ++a) {
            for (std::size_t i = 0; i < l; ++i) r[i] = factor(i).neg(residue({a}, i));
            neg_table[a] = from_residues(r).code;
        }
        if (impl_->size <= kTableThreshold) {
            const std::uint32_t n = impl_->size;
            std::vector<std::uint32_t> add_table(std::size_t{n} * n), mul_table(std::size_t{n} * n);
            for (std::uint32_t a = 0; a < n; ++a) {
                for (std::uint32_t b = 0; b < n; ++b) {
                    add_table[std::size_t{a} * n + b] = per_factor({a}, {b}, [](const ChainFactor& f, std::uint32_t x, std::uint32_t y) { return f.add(x, y); }).code;
                    mul_table[std::size_t{a} * n + b] = per_factor({a}, {b}, [](const ChainFactor& f, std::uint32_t x, std::uint32_t y) { return f.mul(x, y); }).code;
                }
            }
            mutable_impl().add_table = std::move(add_table);
            mutable_impl().mul_table = std::move(mul_table);
        }
    }

    Impl& mutable_impl() { return const_cast<Impl&>(*impl_); }

    template <class Op>
    RingElem per_factor(RingElem a, RingElem b, Op op) const {
        const std::size_t l = factor_count();
        std::uint32_t buffer[16];
        std::vector<std::uint32_t> heap;
        std::uint32_t* r = buffer;
        if (l > 16) {
            heap.resize(l);
            r = heap.data();
        }
        for (std::size_t i = 0; i < l; ++i) r[i] = op(factor(i), residue(a, i), residue(b, i));
        return from_residues(std::span<const std::uint32_t>(r, l));
    }

    std::shared_ptr<const Impl> impl_;
};

}  // namespace modsupp
