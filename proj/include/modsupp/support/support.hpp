#pragma once

/// @file support.hpp
/// @brief Support functions sigma: R^n -> N^u as immutable expression trees.
///
/// A Support is bound to a ring and a length n at construction, so u and the
/// static certificates are known up front. Coordinates and indices are 0-based.

#include "modsupp/core/error.hpp"
#include "modsupp/core/limits.hpp"
#include "modsupp/module/ambient.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace modsupp {

using SupportValue = std::vector<std::uint32_t>;

enum class SupportKind {
    hamming,
    chain_ring,
    chain,
    pir,
    table,
    lee,
    permute,
    product,
    scale,
    duplicate,
    drop,
    insert_zero,
    compose_linear,
    concat,
};

inline std::string_view to_string(SupportKind kind) {
    switch (kind) {
        case SupportKind::hamming: return "hamming";
        case SupportKind::chain_ring: return "chain_ring";
        case SupportKind::chain: return "chain";
        case SupportKind::pir: return "pir";
        case SupportKind::table: return "table";
        case SupportKind::lee: return "lee";
        case SupportKind::permute: return "permute";
        case SupportKind::product: return "product";
        case SupportKind::scale: return "scale";
        case SupportKind::duplicate: return "duplicate";
        case SupportKind::drop: return "drop";
        case SupportKind::insert_zero: return "insert_zero";
        case SupportKind::compose_linear: return "compose_linear";
        case SupportKind::concat: return "concat";
    }
    return "unknown";
}

/// Join (coordinatewise max) of support values.
inline void join_into(SupportValue& acc, std::span<const std::uint32_t> value) {
    if (acc.empty()) acc.assign(value.size(), 0);
    for (std::size_t i = 0; i < value.size(); ++i) acc[i] = std::max(acc[i], value[i]);
}

/// |s| = s_1 + ... + s_u.
inline std::uint64_t weight(std::span<const std::uint32_t> value) {
    return std::accumulate(value.begin(), value.end(), std::uint64_t{0});
}

/// s <= t in the product order.
inline bool leq(std::span<const std::uint32_t> s, std::span<const std::uint32_t> t) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] > t[i]) return false;
    }
    return true;
}

namespace detail {

struct SupportNode {
    SupportKind kind = SupportKind::hamming;
    std::size_t n = 0;
    std::size_t u = 0;
    bool support_cert = false;
    bool modular_cert = false;
    bool pseudo = false;

    std::vector<std::uint32_t> level;                            // chain: ideal index per element
    std::vector<std::vector<RingElem>> ideal_generators;         // chain: as given
    std::vector<std::vector<std::vector<std::uint32_t>>> values; // pir: [factor][j][k]
    std::vector<std::size_t> factor_offset;                      // pir: block offset per factor
    std::vector<std::uint32_t> table;                            // table: |R|^n rows of width u
    std::vector<std::size_t> perm;                               // permute
    std::size_t index = 0;                                       // scale, duplicate, drop, insert_zero
    std::uint32_t factor = 1;                                    // scale
    std::vector<Vector> matrix;                                  // compose_linear: rows = inner n
    std::vector<std::shared_ptr<const SupportNode>> children;
};

}  // namespace detail

class Support {
  public:
    // ---- leaves ----

    /// sigma(v)_k = 1 iff v_k != 0.
    static Support hamming(const Ring& ring, std::size_t n) {
        auto node = leaf(SupportKind::hamming, n, n);
        node->support_cert = true;
        node->modular_cert = ring.is_field();
        return Support(ring, std::move(node));
    }

    /// Per coordinate and ring factor i: eps_i minus the valuation of the residue.
    /// On a chain ring this is the chain support of the full ideal chain.
    static Support chain_ring(const Ring& ring, std::size_t n) {
        auto node = leaf(SupportKind::chain_ring, n, n * ring.factor_count());
        node->support_cert = true;
        node->modular_cert = true;
        return Support(ring, std::move(node));
    }

    /// Chain support of 0 = I_0 < I_1 < ... < I_eps = R, each listed ideal given by
    /// generators. Zero ideals in the list are skipped and R is appended if absent.
    static Support chain(const Ring& ring, std::size_t n, const std::vector<std::vector<RingElem>>& ideal_generators) {
        std::vector<std::vector<bool>> ideals;
        ideals.push_back(member_set(ring, {}));
        for (const auto& gens : ideal_generators) {
            for (const RingElem g : gens) {
                if (!ring.contains(g)) throw ValidationError("chain ideal generator is not an element of " + ring.name());
            }
            auto members = member_set(ring, gens);
            if (std::count(members.begin(), members.end(), true) == 1) continue;
            ideals.push_back(std::move(members));
        }
        if (std::count(ideals.back().begin(), ideals.back().end(), true) != static_cast<long>(ring.size())) {
            ideals.push_back(std::vector<bool>(ring.size(), true));
        }
        for (std::size_t k = 1; k < ideals.size(); ++k) {
            bool strict = false;
            for (std::uint32_t x = 0; x < ring.size(); ++x) {
                if (ideals[k - 1][x] && !ideals[k][x]) throw ValidationError("chain ideals must be nested");
                strict = strict || (ideals[k][x] && !ideals[k - 1][x]);
            }
            if (!strict) throw ValidationError("chain ideals must be strictly increasing");
        }
        auto node = leaf(SupportKind::chain, n, n);
        node->level.assign(ring.size(), 0);
        for (std::uint32_t x = 0; x < ring.size(); ++x) {
            std::uint32_t k = 0;
            while (!ideals[k][x]) ++k;
            node->level[x] = k;
        }
        node->ideal_generators = ideal_generators;
        node->support_cert = true;
        return Support(ring, std::move(node));
    }

    /// Support of a principal ideal ring from value vectors: on a coordinate with
    /// residue r_i = unit * alpha_i^j in factor i, block i of the output is
    /// values[i][j]; a zero residue gives zeros. Output per coordinate is the
    /// concatenation of the factor blocks.
    static Support pir(const Ring& ring, std::size_t n, std::vector<std::vector<std::vector<std::uint32_t>>> values) {
        if (values.size() != ring.factor_count()) {
            throw ValidationError("pir support needs one value list per ring factor (" + std::to_string(ring.factor_count()) + ")");
        }
        std::vector<std::size_t> offset;
        std::size_t width = 0;
        bool nonzero = true, strict = true;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const std::uint32_t eps = ring.factor(i).chain_length();
            if (values[i].size() != eps) {
                throw ValidationError("pir support: factor " + std::to_string(i) + " needs " + std::to_string(eps) + " value vectors");
            }
            const std::size_t ui = values[i].front().size();
            for (std::size_t j = 0; j < eps; ++j) {
                if (values[i][j].size() != ui) throw ValidationError("pir support: value vectors of one factor must share a length");
                if (j > 0 && !leq(values[i][j], values[i][j - 1])) {
                    throw ValidationError("pir support: value vectors must be nonincreasing along the chain");
                }
                for (std::size_t k = 0; j > 0 && k < ui; ++k) {
                    if (values[i][j][k] != 0 && values[i][j][k] == values[i][j - 1][k]) strict = false;
                }
            }
            if (weight(values[i].back()) == 0) nonzero = false;
            offset.push_back(width);
            width += ui;
        }
        auto node = leaf(SupportKind::pir, n, n * width);
        node->values = std::move(values);
        node->factor_offset = std::move(offset);
        node->support_cert = nonzero;
        node->modular_cert = nonzero && strict;
        return Support(ring, std::move(node));
    }

    /// Explicit map; rows[code] is sigma of the vector with that Ambient code.
    static Support table(const Ring& ring, std::size_t n, const std::vector<SupportValue>& rows) {
        const Ambient amb(ring, n);
        if (rows.size() != amb.size()) {
            throw ValidationError("table support must list all " + std::to_string(amb.size()) + " vectors of " + ring.name() + "^" + std::to_string(n));
        }
        const std::size_t u = rows.empty() ? 0 : rows.front().size();
        auto node = leaf(SupportKind::table, n, u);
        node->table.reserve(rows.size() * u);
        for (const auto& row : rows) {
            if (row.size() != u) throw ValidationError("table support rows must share one length");
            node->table.insert(node->table.end(), row.begin(), row.end());
        }
        return Support(ring, std::move(node));
    }

    /// Lee weight min(x, m - x) per coordinate on Z/m. Not a support in general.
    static Support lee(const Ring& ring, std::size_t n) {
        if (!ring.integer_form()) throw ValidationError("lee weight is only defined on Z/m rings, not " + ring.name());
        auto node = leaf(SupportKind::lee, n, n);
        node->pseudo = true;
        return Support(ring, std::move(node));
    }

    // ---- combinators ----

    /// out[k] = inner[perm[k]].
    static Support permute(const Support& inner, std::vector<std::size_t> perm) {
        std::vector<bool> hit(inner.u(), false);
        if (perm.size() != inner.u()) throw ValidationError("permutation length must equal u = " + std::to_string(inner.u()));
        for (const std::size_t k : perm) {
            if (k >= inner.u() || hit[k]) throw ValidationError("permutation is not a bijection of the coordinates");
            hit[k] = true;
        }
        auto node = wrap(SupportKind::permute, inner, inner.n(), inner.u());
        node->perm = std::move(perm);
        return Support(inner.ring(), std::move(node));
    }

    /// sigma_1 x ... x sigma_k on R^(n_1 + ... + n_k).
    static Support product(const std::vector<Support>& parts) {
        if (parts.empty()) throw ValidationError("product support needs at least one part");
        std::size_t n = 0, u = 0;
        for (const auto& p : parts) {
            same_ring(parts.front(), p);
            n += p.n();
            u += p.u();
        }
        auto node = combine(SupportKind::product, parts, n, u);
        return Support(parts.front().ring(), std::move(node));
    }

    /// Coordinate i multiplied by a >= 1.
    static Support scale(const Support& inner, std::size_t i, std::uint32_t a) {
        check_index(inner, i);
        if (a < 1) throw ValidationError("scale factor must be at least 1");
        auto node = wrap(SupportKind::scale, inner, inner.n(), inner.u());
        node->index = i;
        node->factor = a;
        return Support(inner.ring(), std::move(node));
    }

    /// Coordinate i repeated right after itself.
    static Support duplicate(const Support& inner, std::size_t i) {
        check_index(inner, i);
        auto node = wrap(SupportKind::duplicate, inner, inner.n(), inner.u() + 1);
        node->index = i;
        return Support(inner.ring(), std::move(node));
    }

    /// Coordinate i removed. A support only when no vector is supported on i alone.
    static Support drop(const Support& inner, std::size_t i) {
        check_index(inner, i);
        if (inner.u() == 1) throw ValidationError("cannot drop the only coordinate");
        auto node = wrap(SupportKind::drop, inner, inner.n(), inner.u() - 1);
        node->index = i;
        node->support_cert = false;
        node->modular_cert = false;
        return Support(inner.ring(), std::move(node));
    }

    /// A constant zero coordinate inserted right after coordinate i.
    static Support insert_zero(const Support& inner, std::size_t i) {
        check_index(inner, i);
        auto node = wrap(SupportKind::insert_zero, inner, inner.n(), inner.u() + 1);
        node->index = i;
        return Support(inner.ring(), std::move(node));
    }

    /// sigma(A v) for an injective linear map A: R^k -> R^(inner n). matrix has
    /// inner.n() rows and k columns. Injectivity is checked by a unit determinant
    /// for square matrices and by kernel enumeration otherwise.
    static Support compose_linear(const Support& inner, const std::vector<Vector>& matrix, const Limits& limits = Limits::from_environment()) {
        const Ring& R = inner.ring();
        if (matrix.size() != inner.n()) {
            throw ValidationError("compose_linear matrix needs " + std::to_string(inner.n()) + " rows (the inner length)");
        }
        const std::size_t k = matrix.front().size();
        if (k == 0) throw ValidationError("compose_linear matrix needs at least one column");
        for (const auto& row : matrix) {
            if (row.size() != k) throw ValidationError("compose_linear matrix rows must share one length");
            for (const RingElem x : row) {
                if (!R.contains(x)) throw ValidationError("compose_linear matrix entry is not an element of " + R.name());
            }
        }
        if (!is_injective(R, matrix, limits)) throw ValidationError("compose_linear matrix is not injective over " + R.name());
        auto node = wrap(SupportKind::compose_linear, inner, k, inner.u());
        node->matrix = matrix;
        return Support(R, std::move(node));
    }

    /// (sigma_1, ..., sigma_k) on one R^n.
    static Support concat(const std::vector<Support>& parts) {
        if (parts.empty()) throw ValidationError("concat support needs at least one part");
        std::size_t u = 0;
        for (const auto& p : parts) {
            same_ring(parts.front(), p);
            if (p.n() != parts.front().n()) throw ValidationError("concat parts must share the length n");
            u += p.u();
        }
        auto node = combine(SupportKind::concat, parts, parts.front().n(), u);
        return Support(parts.front().ring(), std::move(node));
    }

    // ---- queries ----

    const Ring& ring() const { return ring_; }
    std::size_t n() const { return node_->n; }
    std::size_t u() const { return node_->u; }
    SupportKind kind() const { return node_->kind; }

    /// Structural guarantee that the support axioms hold (no exhaustive check needed).
    bool certified_support() const { return node_->support_cert; }
    /// Structural guarantee of modularity.
    bool certified_modular() const { return node_->modular_cert; }
    /// True if the tree contains a pseudo-support leaf such as lee.
    bool pseudo() const { return node_->pseudo; }

    const detail::SupportNode& node() const { return *node_; }

    std::vector<Support> children() const {
        std::vector<Support> out;
        for (const auto& c : node_->children) out.push_back(Support(ring_, c));
        return out;
    }

    /// Compact tree shape, e.g. "compose_linear(product(table,table,table))".
    std::string describe() const { return describe(*node_); }

    SupportValue operator()(std::span<const RingElem> v) const { return evaluate(v); }

    SupportValue evaluate(std::span<const RingElem> v) const {
        if (v.size() != n()) throw ValidationError("vector has length " + std::to_string(v.size()) + ", support expects " + std::to_string(n()));
        for (const RingElem x : v) {
            if (!ring_.contains(x)) throw ValidationError("vector entry is not an element of " + ring_.name());
        }
        SupportValue out(u());
        eval(*node_, v, out);
        return out;
    }

    /// Unchecked evaluation into a caller buffer of size u().
    void evaluate_into(std::span<const RingElem> v, std::span<std::uint32_t> out) const { eval(*node_, v, out); }

  private:
    using NodePtr = std::shared_ptr<detail::SupportNode>;

    Support(Ring ring, std::shared_ptr<const detail::SupportNode> node) : ring_(std::move(ring)), node_(std::move(node)) {}

    static NodePtr leaf(SupportKind kind, std::size_t n, std::size_t u) {
        if (n == 0) throw ValidationError("support length n must be at least 1");
        auto node = std::make_shared<detail::SupportNode>();
        node->kind = kind;
        node->n = n;
        node->u = u;
        return node;
    }

    static NodePtr wrap(SupportKind kind, const Support& inner, std::size_t n, std::size_t u) {
        auto node = std::make_shared<detail::SupportNode>();
        node->kind = kind;
        node->n = n;
        node->u = u;
        node->support_cert = inner.certified_support();
        node->modular_cert = inner.certified_modular();
        node->pseudo = inner.pseudo();
        node->children.push_back(inner.node_);
        return node;
    }

    static NodePtr combine(SupportKind kind, const std::vector<Support>& parts, std::size_t n, std::size_t u) {
        auto node = std::make_shared<detail::SupportNode>();
        node->kind = kind;
        node->n = n;
        node->u = u;
        node->support_cert = true;
        node->modular_cert = true;
        for (const auto& p : parts) {
            node->support_cert = node->support_cert && p.certified_support();
            node->modular_cert = node->modular_cert && p.certified_modular();
            node->pseudo = node->pseudo || p.pseudo();
            node->children.push_back(p.node_);
        }
        return node;
    }

    static void same_ring(const Support& a, const Support& b) {
        if (!(a.ring() == b.ring())) throw ValidationError("support parts are defined over different rings");
    }

    static void check_index(const Support& inner, std::size_t i) {
        if (i >= inner.u()) throw ValidationError("coordinate index " + std::to_string(i) + " out of range for u = " + std::to_string(inner.u()));
    }

    /// Membership vector of the ideal generated by gens.
    static std::vector<bool> member_set(const Ring& R, const std::vector<RingElem>& gens) {
        std::vector<bool> in(R.size(), false);
        in[0] = true;
        std::vector<std::uint32_t> current{0};
        for (const RingElem g : gens) {
            std::vector<std::uint32_t> next;
            for (const std::uint32_t s : current) {
                for (std::uint32_t r = 0; r < R.size(); ++r) {
                    const std::uint32_t x = R.add(RingElem{s}, R.mul(RingElem{r}, g)).code;
                    if (!in[x]) {
                        in[x] = true;
                        next.push_back(x);
                    }
                }
            }
            current.insert(current.end(), next.begin(), next.end());
        }
        return in;
    }

    static RingElem determinant(const Ring& R, const std::vector<Vector>& A) {
        const std::size_t k = A.size();
        // Laplace expansion along rows, memoized on the set of unused columns.
        std::vector<RingElem> memo(std::size_t{1} << k, RingElem{0});
        std::vector<bool> known(std::size_t{1} << k, false);
        auto det = [&](auto&& self, std::size_t cols, std::size_t row) -> RingElem {
            if (row == k) return R.one();
            if (known[cols]) return memo[cols];
            RingElem acc = R.zero();
            std::size_t seen = 0;
            for (std::size_t c = 0; c < k; ++c) {
                if (!(cols & (std::size_t{1} << c))) continue;
                RingElem term = R.mul(A[row][c], self(self, cols & ~(std::size_t{1} << c), row + 1));
                acc = (seen % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
                ++seen;
            }
            known[cols] = true;
            memo[cols] = acc;
            return acc;
        };
        return det(det, (std::size_t{1} << k) - 1, 0);
    }

    static bool is_injective(const Ring& R, const std::vector<Vector>& A, const Limits& limits) {
        const std::size_t rows = A.size(), cols = A.front().size();
        if (rows == cols && rows <= 16) return R.is_unit(determinant(R, A));
        const Ambient domain(R, cols);
        if (domain.size() > limits.exhaustive_vectors) {
            throw CapExceeded("kernel enumeration over " + R.name() + "^" + std::to_string(cols) + " exceeds the 'exhaustive' cap");
        }
        Vector v(cols);
        for (std::uint64_t code = 1; code < domain.size(); ++code) {
            domain.decode_into(code, v);
            bool zero = true;
            for (std::size_t r = 0; r < rows && zero; ++r) {
                RingElem acc = R.zero();
                for (std::size_t c = 0; c < cols; ++c) acc = R.add(acc, R.mul(A[r][c], v[c]));
                zero = acc.code == 0;
            }
            if (zero) return false;
        }
        return true;
    }

    static std::string describe(const detail::SupportNode& node) {
        std::string out(to_string(node.kind));
        if (node.children.empty()) return out;
        out += "(";
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i) out += ",";
            out += describe(*node.children[i]);
        }
        return out + ")";
    }

    void eval(const detail::SupportNode& node, std::span<const RingElem> v, std::span<std::uint32_t> out) const {
        const Ring& R = ring_;
        switch (node.kind) {
            case SupportKind::hamming:
                for (std::size_t k = 0; k < node.n; ++k) out[k] = v[k].code != 0;
                return;
            case SupportKind::chain_ring: {
                const std::size_t l = R.factor_count();
                for (std::size_t k = 0; k < node.n; ++k) {
                    for (std::size_t i = 0; i < l; ++i) {
                        const ChainFactor& f = R.factor(i);
                        out[k * l + i] = f.chain_length() - f.valuation(R.residue(v[k], i));
                    }
                }
                return;
            }
            case SupportKind::chain:
                for (std::size_t k = 0; k < node.n; ++k) out[k] = node.level[v[k].code];
                return;
            case SupportKind::pir: {
                const std::size_t width = node.u / node.n;
                for (std::size_t k = 0; k < node.n; ++k) {
                    for (std::size_t i = 0; i < node.values.size(); ++i) {
                        const std::uint32_t r = R.residue(v[k], i);
                        const auto& vals = node.values[i];
                        const std::size_t base = k * width + node.factor_offset[i];
                        if (r == 0) {
                            std::fill_n(out.begin() + static_cast<std::ptrdiff_t>(base), vals.front().size(), 0u);
                        } else {
                            const auto& a = vals[R.factor(i).valuation(r)];
                            std::copy(a.begin(), a.end(), out.begin() + static_cast<std::ptrdiff_t>(base));
                        }
                    }
                }
                return;
            }
            case SupportKind::table: {
                std::uint64_t code = 0;
                for (std::size_t k = 0; k < node.n; ++k) code = code * R.size() + v[k].code;
                std::copy_n(node.table.begin() + static_cast<std::ptrdiff_t>(code * node.u), node.u, out.begin());
                return;
            }
            case SupportKind::lee:
                for (std::size_t k = 0; k < node.n; ++k) out[k] = std::min(v[k].code, R.size() - v[k].code);
                return;
            case SupportKind::permute: {
                SupportValue tmp(node.u);
                eval(*node.children[0], v, tmp);
                for (std::size_t k = 0; k < node.u; ++k) out[k] = tmp[node.perm[k]];
                return;
            }
            case SupportKind::product: {
                std::size_t vpos = 0, upos = 0;
                for (const auto& child : node.children) {
                    eval(*child, v.subspan(vpos, child->n), out.subspan(upos, child->u));
                    vpos += child->n;
                    upos += child->u;
                }
                return;
            }
            case SupportKind::concat: {
                std::size_t upos = 0;
                for (const auto& child : node.children) {
                    eval(*child, v, out.subspan(upos, child->u));
                    upos += child->u;
                }
                return;
            }
            case SupportKind::scale:
                eval(*node.children[0], v, out);
                out[node.index] *= node.factor;
                return;
            case SupportKind::duplicate:
            case SupportKind::drop:
            case SupportKind::insert_zero: {
                const auto& child = *node.children[0];
                SupportValue tmp(child.u);
                eval(child, v, tmp);
                std::size_t pos = 0;
                for (std::size_t k = 0; k < child.u; ++k) {
                    if (node.kind == SupportKind::drop && k == node.index) continue;
                    out[pos++] = tmp[k];
                    if (k == node.index && node.kind == SupportKind::duplicate) out[pos++] = tmp[k];
                    if (k == node.index && node.kind == SupportKind::insert_zero) out[pos++] = 0;
                }
                return;
            }
            case SupportKind::compose_linear: {
                Vector w(node.matrix.size());
                for (std::size_t r = 0; r < node.matrix.size(); ++r) {
                    RingElem acc = R.zero();
                    for (std::size_t c = 0; c < node.n; ++c) acc = R.add(acc, R.mul(node.matrix[r][c], v[c]));
                    w[r] = acc;
                }
                eval(*node.children[0], w, out);
                return;
            }
        }
    }

    Ring ring_;
    std::shared_ptr<const detail::SupportNode> node_;
};

}  // namespace modsupp
