#pragma once

// Brute-force reference implementations used as test oracles. They work from the
// definitions, touch the library only through ring arithmetic and support
// evaluation, and are meant for tiny inputs.

#include "modsupp/modsupp.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using modsupp::Ring;
using modsupp::RingElem;
using modsupp::Support;
using modsupp::Vector;

using Key = std::vector<std::uint32_t>;
using WordSet = std::set<Key>;

inline Key key(const Vector& v) {
    Key k;
    for (const RingElem x : v) k.push_back(x.code);
    return k;
}

inline Vector vec(const Key& k) {
    Vector v;
    for (const std::uint32_t c : k) v.push_back(RingElem{c});
    return v;
}

inline Key add(const Ring& R, const Key& a, const Key& b) {
    Key out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.add(RingElem{a[i]}, RingElem{b[i]}).code;
    return out;
}

inline Key scale(const Ring& R, std::uint32_t r, const Key& a) {
    Key out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = R.mul(RingElem{r}, RingElem{a[i]}).code;
    return out;
}

/// Closure of {0} under x -> x + r g for every generator g and scalar r.
inline WordSet span(const Ring& R, std::size_t n, const std::vector<Key>& gens) {
    WordSet out{Key(n, 0)};
    std::vector<Key> frontier{Key(n, 0)};
    while (!frontier.empty()) {
        std::vector<Key> next;
        for (const Key& x : frontier) {
            for (const Key& g : gens) {
                for (std::uint32_t r = 0; r < R.size(); ++r) {
                    Key y = add(R, x, scale(R, r, g));
                    if (out.insert(y).second) next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

inline WordSet span(const Ring& R, std::size_t n, const std::vector<Vector>& gens) {
    std::vector<Key> keys;
    for (const Vector& g : gens) keys.push_back(key(g));
    return span(R, n, keys);
}

inline std::vector<std::uint32_t> sigma(const Support& s, const Key& v) {
    return s.evaluate(vec(v));
}

inline std::uint64_t weight(const std::vector<std::uint32_t>& s) {
    std::uint64_t w = 0;
    for (const auto x : s) w += x;
    return w;
}

inline bool leq(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

/// Join of sigma over a set of words.
inline std::vector<std::uint32_t> join(const Support& s, const WordSet& D) {
    std::vector<std::uint32_t> out(s.u(), 0);
    for (const Key& v : D) {
        const auto sv = sigma(s, v);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], sv[i]);
    }
    return out;
}

/// Every vector of R^n.
inline std::vector<Key> all_vectors(const Ring& R, std::size_t n) {
    std::vector<Key> out{Key(n, 0)};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Key> next;
        for (const Key& v : out) {
            for (std::uint32_t x = 0; x < R.size(); ++x) {
                Key w = v;
                w[k] = x;
                next.push_back(std::move(w));
            }
        }
        out = std::move(next);
    }
    return out;
}

inline bool is_zero(const Key& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

/// P1: sigma(v) = 0 iff v = 0. P2: sigma(r v) <= sigma(v). P3: sigma(v + w) <= sigma(v) join sigma(w).
inline bool is_support(const Support& s) {
    const Ring& R = s.ring();
    const auto vs = all_vectors(R, s.n());
    std::map<Key, std::vector<std::uint32_t>> value;
    for (const Key& v : vs) value[v] = sigma(s, v);
    for (const Key& v : vs) {
        if (is_zero(v) != (weight(value[v]) == 0)) return false;
        for (std::uint32_t r = 0; r < R.size(); ++r) {
            if (!leq(value[scale(R, r, v)], value[v])) return false;
        }
        for (const Key& w : vs) {
            auto j = value[v];
            for (std::size_t i = 0; i < j.size(); ++i) j[i] = std::max(j[i], value[w][i]);
            if (!leq(value[add(R, v, w)], j)) return false;
        }
    }
    return true;
}

/// For all v, w and i with 0 != sigma(v)_i <= sigma(w)_i there is r with
/// sigma(v - r w)_i < sigma(v)_i.
inline bool is_modular(const Support& s) {
    const Ring& R = s.ring();
    const auto vs = all_vectors(R, s.n());
    std::map<Key, std::vector<std::uint32_t>> value;
    for (const Key& v : vs) value[v] = sigma(s, v);
    for (const Key& v : vs) {
        for (const Key& w : vs) {
            for (std::size_t i = 0; i < s.u(); ++i) {
                if (value[v][i] == 0 || value[v][i] > value[w][i]) continue;
                bool reduced = false;
                for (std::uint32_t r = 0; r < R.size() && !reduced; ++r) {
                    const Key d = add(R, v, scale(R, R.neg(RingElem{r}).code, w));
                    reduced = value[d][i] < value[v][i];
                }
                if (!reduced) return false;
            }
        }
    }
    return true;
}

/// Nonzero words whose support is minimal among nonzero words of C.
inline WordSet minimal_words(const Support& s, const WordSet& C) {
    WordSet out;
    for (const Key& v : C) {
        if (std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; })) continue;
        const auto sv = sigma(s, v);
        bool minimal = true;
        for (const Key& w : C) {
            if (std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; })) continue;
            const auto sw = sigma(s, w);
            if (sw != sv && leq(sw, sv)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.insert(v);
    }
    return out;
}

/// Every submodule of C, by repeatedly adjoining one word.
inline std::set<WordSet> subcodes(const Ring& R, std::size_t n, const WordSet& C) {
    std::set<WordSet> seen;
    std::vector<std::pair<WordSet, std::vector<Key>>> frontier{{WordSet{Key(n, 0)}, {}}};
    seen.insert(frontier.front().first);
    while (!frontier.empty()) {
        std::vector<std::pair<WordSet, std::vector<Key>>> next;
        for (const auto& [D, gens] : frontier) {
            for (const Key& c : C) {
                if (D.count(c)) continue;
                std::vector<Key> g = gens;
                g.push_back(c);
                WordSet E = span(R, n, g);
                if (seen.insert(E).second) next.emplace_back(std::move(E), std::move(g));
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

/// Largest inclusion-minimal generating set of D (|D| <= 64), by trying every
/// subset of nonzero words up to max_size elements.
inline std::size_t max_minimal_genset(const Ring& R, std::size_t n, const WordSet& D, std::size_t max_size = 6) {
    const std::vector<Key> all(D.begin(), D.end());
    const std::size_t size = all.size();
    if (size > 64) throw std::logic_error("oracle limited to 64 words");
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < size; ++i) index[all[i]] = i;
    // sum[i][j] and mult[r][i] as word indices; D is closed so both stay in range.
    std::vector<std::vector<std::size_t>> sum(size, std::vector<std::size_t>(size)), mult(R.size(), std::vector<std::size_t>(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) sum[i][j] = index.at(add(R, all[i], all[j]));
        for (std::uint32_t r = 0; r < R.size(); ++r) mult[r][i] = index.at(scale(R, r, all[i]));
    }
    const std::size_t zero = index.at(Key(n, 0));
    const std::uint64_t full = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    auto closure = [&](const std::vector<std::size_t>& gens) {
        std::uint64_t in = std::uint64_t{1} << zero;
        std::vector<std::size_t> frontier{zero};
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (const std::size_t x : frontier) {
                for (const std::size_t g : gens) {
                    for (std::uint32_t r = 0; r < R.size(); ++r) {
                        const std::size_t y = sum[x][mult[r][g]];
                        if (!(in >> y & 1)) {
                            in |= std::uint64_t{1} << y;
                            next.push_back(y);
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        return in;
    };
    std::vector<std::size_t> words;
    for (std::size_t i = 0; i < size; ++i) {
        if (i != zero) words.push_back(i);
    }
    std::size_t best = 0;
    std::vector<std::size_t> pick;
    auto walk = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty() && closure(pick) == full) {
            bool minimal = true;
            for (std::size_t k = 0; k < pick.size() && minimal; ++k) {
                std::vector<std::size_t> less = pick;
                less.erase(less.begin() + static_cast<std::ptrdiff_t>(k));
                if (!less.empty() && closure(less) == full) minimal = false;
            }
            if (minimal) best = std::max(best, pick.size());
            return;  // supersets of a generating set are not minimal
        }
        if (pick.size() == max_size) return;
        for (std::size_t i = start; i < words.size(); ++i) {
            pick.push_back(words[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    walk(walk, 0);
    return best;
}

/// d_r(C) = min |sigma(D)| over subcodes D with a minimal generating set of size >= r.
inline std::vector<std::uint64_t> generalized_weights(const Ring& R, std::size_t n, const Support& s, const WordSet& C) {
    std::vector<std::uint64_t> d;
    for (const WordSet& D : subcodes(R, n, C)) {
        if (D.size() == 1) continue;
        const std::size_t m = max_minimal_genset(R, n, D);
        const std::uint64_t w = weight(join(s, D));
        if (d.size() < m) d.resize(m, UINT64_MAX);
        for (std::size_t r = 0; r < m; ++r) d[r] = std::min(d[r], w);
    }
    return d;
}

// ---- monomial ideals ----

using Mono = std::vector<std::uint32_t>;

/// Exact rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const mpq_class f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Rank over F_p.
inline std::size_t rank_p(std::vector<std::vector<mpq_class>> q, long p) {
    std::vector<std::vector<long>> m;
    for (auto& row : q) {
        std::vector<long> r;
        for (auto& x : row) r.push_back(((x.get_num().get_si() % p) + p) % p);
        m.push_back(r);
    }
    auto inv = [&](long a) {
        long r = 1, e = p - 2, b = a;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const long f0 = inv(m[rank][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const long f = m[i][c] * f0 % p;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Replaces x_i^a by y_{i,1} ... y_{i,a}; graded Betti numbers are unchanged.
inline std::vector<Mono> polarize(const std::vector<Mono>& gens) {
    const std::size_t u = gens.front().size();
    std::vector<std::uint32_t> top(u, 0), offset(u, 0);
    for (const Mono& g : gens) {
        for (std::size_t i = 0; i < u; ++i) top[i] = std::max(top[i], g[i]);
    }
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < u; ++i) {
        offset[i] = total;
        total += top[i];
    }
    std::vector<Mono> out;
    for (const Mono& g : gens) {
        Mono m(total, 0);
        for (std::size_t i = 0; i < u; ++i) {
            for (std::uint32_t a = 0; a < g[i]; ++a) m[offset[i] + a] = 1;
        }
        out.push_back(m);
    }
    return out;
}

/// Coarse graded Betti numbers of S/I via Hochster's formula on the polarization:
/// beta_{r, W}(S/I) = dim H~_{|W|-r-1}(Delta_W), Delta the Stanley-Reisner complex.
/// Returns betti[r][d]; characteristic 0 or a prime.
inline std::map<std::size_t, std::map<std::uint64_t, std::uint64_t>> hochster_betti(const std::vector<Mono>& gens, long characteristic = 0) {
    const std::vector<Mono> sq = polarize(gens);
    const std::size_t v = sq.front().size();
    std::vector<std::uint64_t> gmask;
    for (const Mono& g : sq) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < v; ++i) {
            if (g[i]) m |= std::uint64_t{1} << i;
        }
        gmask.push_back(m);
    }
    auto is_face = [&](std::uint64_t f) {
        for (const auto g : gmask) {
            if ((g & f) == g) return false;
        }
        return true;
    };
    std::map<std::size_t, std::map<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t W = 1; W < (std::uint64_t{1} << v); ++W) {
        // Only degrees that are lcms of generators can carry homology, but
        // checking every W keeps the oracle assumption-free.
        std::map<int, std::vector<std::uint64_t>> faces;  // by dimension, -1 = empty face
        for (std::uint64_t f = W;; f = (f - 1) & W) {
            if (is_face(f)) faces[std::popcount(f) - 1].push_back(f);
            if (f == 0) break;
        }
        auto boundary_rank = [&](int dim) -> std::size_t {  // rank of d: C_dim -> C_{dim-1}
            if (!faces.count(dim) || !faces.count(dim - 1)) return 0;
            const auto& cols = faces[dim];
            const auto& rows = faces[dim - 1];
            std::map<std::uint64_t, std::size_t> row_of;
            for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
            std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols.size(), 0));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                int sign = 1;
                for (std::size_t i = 0; i < v; ++i) {
                    const std::uint64_t bit = std::uint64_t{1} << i;
                    if (!(cols[c] & bit)) continue;
                    m[row_of.at(cols[c] ^ bit)][c] = sign;
                    sign = -sign;
                }
            }
            return characteristic == 0 ? rank_q(m) : rank_p(m, characteristic);
        };
        const int size = std::popcount(W);
        for (std::size_t r = 1; static_cast<int>(r) <= size; ++r) {
            const int dim = size - static_cast<int>(r) - 1;
            if (!faces.count(dim)) continue;
            const std::size_t chains = faces[dim].size();
            const std::size_t h = chains - boundary_rank(dim) - boundary_rank(dim + 1);
            if (h) out[r][static_cast<std::uint64_t>(size)] += h;
        }
    }
    return out;
}

}  // namespace oracle
