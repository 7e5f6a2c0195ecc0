#pragma once

/// @file ambient.hpp
/// @brief R^n as a set of vectors with a dense integer encoding.

#include "modsupp/core/error.hpp"
#include "modsupp/ring/ring.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace modsupp {

using Vector = std::vector<RingElem>;

/// Dense encoding of R^n: the first coordinate is the most significant digit
/// in base |R|, so numeric order on codes is lexicographic order on vectors.
class Ambient {
  public:
    Ambient(Ring ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
        if (n_ == 0) throw ValidationError("code length must be at least 1");
        const std::uint64_t q = ring_.size();
        total_ = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (total_ > (std::uint64_t{1} << 62) / q) throw CapExceeded(ring_.name() + "^" + std::to_string(n_) + " is too large to encode");
            total_ *= q;
        }
    }

    const Ring& ring() const { return ring_; }
    std::size_t n() const { return n_; }
    /// |R|^n.
    std::uint64_t size() const { return total_; }

    std::uint64_t encode(std::span<const RingElem> v) const {
        check_length(v.size());
        std::uint64_t code = 0;
        for (const RingElem x : v) {
            if (!ring_.contains(x)) throw ValidationError("vector entry " + std::to_string(x.code) + " is not an element of " + ring_.name());
            code = code * ring_.size() + x.code;
        }
        return code;
    }

    void decode_into(std::uint64_t code, std::span<RingElem> out) const {
        const std::uint64_t q = ring_.size();
        for (std::size_t i = n_; i-- > 0;) {
            out[i] = RingElem{static_cast<std::uint32_t>(code % q)};
            code /= q;
        }
    }

    Vector decode(std::uint64_t code) const {
        Vector v(n_);
        decode_into(code, v);
        return v;
    }

    Vector zero() const { return Vector(n_, ring_.zero()); }

    Vector add(std::span<const RingElem> a, std::span<const RingElem> b) const {
        check_length(a.size());
        check_length(b.size());
        Vector out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = ring_.add(a[i], b[i]);
        return out;
    }

    Vector sub(std::span<const RingElem> a, std::span<const RingElem> b) const {
        check_length(a.size());
        check_length(b.size());
        Vector out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = ring_.sub(a[i], b[i]);
        return out;
    }

    Vector scale(RingElem r, std::span<const RingElem> v) const {
        check_length(v.size());
        Vector out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = ring_.mul(r, v[i]);
        return out;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t q = ring_.size();
        std::uint64_t out = 0, place = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            const RingElem x{static_cast<std::uint32_t>(a % q)}, y{static_cast<std::uint32_t>(b % q)};
            out += std::uint64_t{ring_.add(x, y).code} * place;
            a /= q;
            b /= q;
            place *= q;
        }
        return out;
    }

    std::uint64_t scale(RingElem r, std::uint64_t a) const {
        const std::uint64_t q = ring_.size();
        std::uint64_t out = 0, place = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            out += std::uint64_t{ring_.mul(r, RingElem{static_cast<std::uint32_t>(a % q)}).code} * place;
            a /= q;
            place *= q;
        }
        return out;
    }

    static bool is_zero(std::span<const RingElem> v) {
        for (const RingElem x : v) {
            if (x.code != 0) return false;
        }
        return true;
    }

    /// Ring factor index of a nonzero vector supported on a single factor, or -1.
    int single_factor(std::span<const RingElem> v) const {
        int found = -1;
        for (std::size_t i = 0; i < ring_.factor_count(); ++i) {
            for (const RingElem x : v) {
                if (ring_.residue(x, i) != 0) {
                    if (found != -1) return -1;
                    found = static_cast<int>(i);
                    break;
                }
            }
        }
        return found;
    }

    /// True when alpha * v == 0, i.e. v lies in 0 :_{R^n} J.
    bool in_socle(std::span<const RingElem> v) const {
        const RingElem alpha = ring_.radical_generator();
        for (const RingElem x : v) {
            if (ring_.mul(alpha, x).code != 0) return false;
        }
        return true;
    }

  private:
    void check_length(std::size_t len) const {
        if (len != n_) throw ValidationError("vector has length " + std::to_string(len) + ", expected " + std::to_string(n_));
    }

    Ring ring_;
    std::size_t n_;
    std::uint64_t total_ = 1;
};

}  // namespace modsupp
