// Structural analysis of a verified semifield: subspace enumeration,
// subsemifield detection, commutativity/associativity witnesses, field
// identification and nucleus dimensions.

#ifndef SEMIFIELD_ANALYSIS_HPP
#define SEMIFIELD_ANALYSIS_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "semifield/cube.hpp"

namespace semifield {

/// An m-dimensional subspace of F_2^n in canonical (reduced row echelon)
/// form: basis[i] has pivot at coordinate pivots[i], pivots strictly
/// increasing, pivot coordinates zero in every other basis vector.
struct Subspace {
    int n = 1;
    std::vector<Gf2Vector> basis; // RREF rows, canonical per subspace
    std::vector<int> pivots;      // 1-based pivot coordinates

    int dim() const { return static_cast<int>(basis.size()); }

    /// Reduce v against the RREF basis; zero result means membership.
    Gf2Vector reduce(const Gf2Vector& v) const {
        detail::check_same_dim(n, v.dim());
        std::uint32_t bits = v.bits();
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((bits >> (pivots[i] - 1)) & 1u) bits ^= basis[i].bits();
        return Gf2Vector(n, bits);
    }

    bool contains(const Gf2Vector& v) const { return reduce(v).is_zero(); }

    /// Element of the span addressed by an m-bit coordinate word.
    Gf2Vector element(std::uint32_t coeffs) const {
        std::uint32_t bits = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((coeffs >> i) & 1u) bits ^= basis[i].bits();
        return Gf2Vector(n, bits);
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// Canonical form of the span of arbitrary vectors. Pivot of a row is its
/// lowest set bit (coordinate 1 is "leftmost").
inline Subspace subspace_from_vectors(int n, const std::vector<Gf2Vector>& vecs) {
    std::vector<std::uint32_t> rref;
    for (const auto& v : vecs) {
        detail::check_same_dim(n, v.dim());
        std::uint32_t w = v.bits();
        for (std::uint32_t r : rref) {
            std::uint32_t piv = r & (~r + 1);
            if (w & piv) w ^= r;
        }
        if (!w) continue;
        std::uint32_t piv = w & (~w + 1);
        for (std::uint32_t& r : rref)
            if (r & piv) r ^= w;
        rref.push_back(w);
    }
    std::sort(rref.begin(), rref.end(),
              [](std::uint32_t a, std::uint32_t b) { return (a & (~a + 1)) < (b & (~b + 1)); });
    Subspace s;
    s.n = n;
    for (std::uint32_t w : rref) {
        s.basis.emplace_back(n, w);
        s.pivots.push_back(std::countr_zero(w) + 1);
    }
    return s;
}

/// Gaussian binomial [n choose m]_2: the number of m-dimensional subspaces
/// of F_2^n. Exact in 64 bits for n <= 16.
inline std::uint64_t gaussian_binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        num *= (std::uint64_t{1} << (n - i)) - 1;
        den *= (std::uint64_t{1} << (m - i)) - 1;
    }
    return num / den;
}

/// Visits every m-dimensional subspace of F_2^n containing e_1, exactly once,
/// in deterministic order: pivot sets lexicographically, then free entries in
/// ascending counter order. Membership of e_1 forces pivot 1 with first row
/// exactly e_1, so subspaces are generated duplicate-free by construction.
inline void for_each_subspace_containing_one(int n, int m,
                                             const std::function<void(const Subspace&)>& visit) {
    detail::check_dim(n);
    if (m < 1 || m > n)
        throw std::invalid_argument("subspace dimension " + std::to_string(m) +
                                    " out of range [1, " + std::to_string(n) + "]");

    std::vector<int> pivots(static_cast<std::size_t>(m));
    pivots[0] = 1;

    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (idx == m) {
            std::uint32_t pivot_mask = 0;
            for (int p : pivots) pivot_mask |= std::uint32_t{1} << (p - 1);
            // Free positions per row i: non-pivot coordinates right of the
            // row's pivot. Row 0 has none (its row must be exactly e_1).
            std::vector<std::vector<int>> free_pos(static_cast<std::size_t>(m));
            int total_free = 0;
            for (int i = 1; i < m; ++i) {
                for (int c = pivots[static_cast<std::size_t>(i)] + 1; c <= n; ++c)
                    if (!((pivot_mask >> (c - 1)) & 1u))
                        free_pos[static_cast<std::size_t>(i)].push_back(c);
                total_free += static_cast<int>(free_pos[static_cast<std::size_t>(i)].size());
            }
            for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << total_free); ++counter) {
                Subspace s;
                s.n = n;
                s.pivots = pivots;
                int bit = 0;
                for (int i = 0; i < m; ++i) {
                    std::uint32_t w = std::uint32_t{1} << (pivots[static_cast<std::size_t>(i)] - 1);
                    for (int c : free_pos[static_cast<std::size_t>(i)])
                        if ((counter >> bit++) & 1u) w |= std::uint32_t{1} << (c - 1);
                    s.basis.emplace_back(n, w);
                }
                visit(s);
            }
            return;
        }
        for (int p = from; p <= n - (m - 1 - idx); ++p) {
            pivots[static_cast<std::size_t>(idx)] = p;
            choose(idx + 1, p + 1);
        }
    };
    if (m == 1) {
        Subspace s;
        s.n = n;
        s.pivots = {1};
        s.basis = {Gf2Vector::unit(n, 1)};
        visit(s);
    } else {
        choose(1, 2);
    }
}

inline std::vector<Subspace> enumerate_subspaces_containing_one(int n, int m) {
    std::vector<Subspace> out;
    for_each_subspace_containing_one(n, m, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

/// True iff products of basis vectors stay in the span (bilinearity extends
/// this to the whole subspace).
inline bool check_closure(const Cube& c, const Subspace& s) {
    detail::check_same_dim(c.dim(), s.n);
    for (const auto& x : s.basis)
        for (const auto& y : s.basis)
            if (!s.contains(multiply(c, x, y))) return false;
    return true;
}

/// Lexicographically first basis pair (i1 < i2) whose products differ, or
/// empty when the cube is symmetric in its first two indices. With a
/// subspace, indices address s.basis instead of unit vectors.
inline std::optional<std::pair<int, int>> noncommutativity_witness(const Cube& c,
                                                                   const Subspace* s = nullptr) {
    int n = c.dim();
    int m = s ? s->dim() : n;
    auto vec = [&](int i) {
        return s ? s->basis[static_cast<std::size_t>(i - 1)] : Gf2Vector::unit(n, i);
    };
    for (int i1 = 1; i1 <= m; ++i1)
        for (int i2 = i1 + 1; i2 <= m; ++i2) {
            Gf2Vector x = vec(i1), y = vec(i2);
            if (multiply(c, x, y) != multiply(c, y, x)) return std::make_pair(i1, i2);
        }
    return std::nullopt;
}

inline bool is_commutative(const Cube& c, const Subspace* s = nullptr) {
    return !noncommutativity_witness(c, s);
}

/// First basis triple with (xy)z != x(yz), in lexicographic order; empty
/// when associative. Bilinearity makes basis triples sufficient.
inline std::optional<std::array<int, 3>> nonassociativity_witness(const Cube& c,
                                                                  const Subspace* s = nullptr) {
    int n = c.dim();
    int m = s ? s->dim() : n;
    auto vec = [&](int i) {
        return s ? s->basis[static_cast<std::size_t>(i - 1)] : Gf2Vector::unit(n, i);
    };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k) {
                Gf2Vector x = vec(i), y = vec(j), z = vec(k);
                if (multiply(c, multiply(c, x, y), z) != multiply(c, x, multiply(c, y, z)))
                    return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

inline bool is_associative(const Cube& c, const Subspace* s = nullptr) {
    return !nonassociativity_witness(c, s);
}

struct FieldId {
    int m = 0;                  // extension degree over F_2
    std::uint32_t min_poly = 0; // bit i = coefficient of x^i, monic of degree m

    friend bool operator==(const FieldId&, const FieldId&) = default;
};

/// Multiplicative order of a nonzero element under the cube product
/// (meaningful on associative closed subalgebras).
inline std::uint32_t multiplicative_order(const Cube& c, const Gf2Vector& g,
                                          std::uint32_t limit) {
    Gf2Vector one = Gf2Vector::unit(c.dim(), 1);
    Gf2Vector p = g;
    for (std::uint32_t k = 1; k <= limit; ++k) {
        if (p == one) return k;
        p = multiply(c, p, g);
    }
    return 0;
}

/// When the restriction of the product to s is closed, associative and
/// commutative (the ambient cube being a semifield), the restriction is a
/// field; returns its degree m and the minimal polynomial of a chosen
/// multiplicative generator. Generator choice: first basis vector of s in
/// canonical order with multiplicative order 2^m - 1, falling back to a
/// lexicographic scan of the span.
inline std::optional<FieldId> identify_field(const Cube& c, const Subspace& s) {
    detail::check_same_dim(c.dim(), s.n);
    if (!check_closure(c, s)) return std::nullopt;
    if (!s.contains(Gf2Vector::unit(s.n, 1))) return std::nullopt;
    if (noncommutativity_witness(c, &s) || nonassociativity_witness(c, &s)) return std::nullopt;

    int m = s.dim();
    std::uint32_t group_order = (std::uint32_t{1} << m) - 1;

    Gf2Vector gen = Gf2Vector::zero(s.n);
    bool found = false;
    for (const auto& v : s.basis)
        if (multiplicative_order(c, v, group_order) == group_order) {
            gen = v;
            found = true;
            break;
        }
    if (!found) {
        for (std::uint32_t coeffs = 1; coeffs <= group_order && !found; ++coeffs) {
            Gf2Vector v = s.element(coeffs);
            if (multiplicative_order(c, v, group_order) == group_order) {
                gen = v;
                found = true;
            }
        }
    }
    if (!found) return std::nullopt; // not actually a field

    // Express gen^m in the basis {1, gen, ..., gen^{m-1}} to read off the
    // minimal polynomial (degree m since gen generates the whole field).
    std::vector<Gf2Vector> powers;
    Gf2Vector p = Gf2Vector::unit(s.n, 1);
    for (int i = 0; i < m; ++i) {
        powers.push_back(p);
        p = multiply(c, p, gen);
    }
    // Solve [powers] * coeffs = gen^m by elimination on (vector | tag) pairs.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rows; // (ambient bits, coeff bits)
    for (int i = 0; i < m; ++i)
        rows.emplace_back(powers[static_cast<std::size_t>(i)].bits(), std::uint32_t{1} << i);
    std::uint32_t target = p.bits(), target_coeffs = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ech;
    for (auto [w, t] : rows) {
        for (auto [ew, et] : ech) {
            std::uint32_t piv = ew & (~ew + 1);
            if (w & piv) {
                w ^= ew;
                t ^= et;
            }
        }
        if (w) ech.emplace_back(w, t);
    }
    for (auto [ew, et] : ech) {
        std::uint32_t piv = ew & (~ew + 1);
        if (target & piv) {
            target ^= ew;
            target_coeffs ^= et;
        }
    }
    if (target != 0) return std::nullopt; // powers failed to span gen^m
    FieldId id;
    id.m = m;
    id.min_poly = target_coeffs | (std::uint32_t{1} << m);
    return id;
}

struct SubalgebraReport {
    Subspace subspace;
    bool closed = false;
    bool associative = false;
    bool commutative = false;
    std::optional<FieldId> field_id;
};

/// All m-dimensional subsemifields of c (subspaces containing e_1 and closed
/// under the product), in the deterministic enumeration order, each with its
/// structural findings.
inline std::vector<SubalgebraReport> find_subsemifields(const Cube& c, int m) {
    std::vector<SubalgebraReport> out;
    for_each_subspace_containing_one(c.dim(), m, [&](const Subspace& s) {
        if (!check_closure(c, s)) return;
        SubalgebraReport r;
        r.subspace = s;
        r.closed = true;
        r.associative = is_associative(c, &s);
        r.commutative = is_commutative(c, &s);
        if (r.associative && r.commutative) r.field_id = identify_field(c, s);
        out.push_back(std::move(r));
    });
    return out;
}

struct NucleusDims {
    int left = 0;
    int middle = 0;
    int right = 0;
    int center = 0;

    friend bool operator==(const NucleusDims&, const NucleusDims&) = default;
};

namespace detail {

/// Appends the rows of q (as conditions on an unknown vector) to the
/// echelon state used for nullspace dimension counting.
inline void add_condition_rows(EchelonStack& e, const Gf2Matrix& q) {
    for (int k = 1; k <= q.dim(); ++k) e.try_insert(q.row(k).bits());
}

} // namespace detail

/// Dimensions of the left/middle/right nuclei and the center, via the
/// linear conditions over basis pairs. Each nucleus is the nullspace of a
/// stack of matrices; dim = n - rank.
inline NucleusDims nuclei(const Cube& c) {
    int n = c.dim();
    std::vector<Gf2Matrix> left(static_cast<std::size_t>(n), Gf2Matrix(n));
    std::vector<Gf2Matrix> right(static_cast<std::size_t>(n), Gf2Matrix(n));
    for (int i = 1; i <= n; ++i) {
        left[static_cast<std::size_t>(i - 1)] = left_mul_matrix(c, Gf2Vector::unit(n, i));
        right[static_cast<std::size_t>(i - 1)] = right_mul_matrix(c, Gf2Vector::unit(n, i));
    }

    EchelonStack nl, nm, nr, ctr;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            const Gf2Matrix& la = left[static_cast<std::size_t>(a - 1)];
            const Gf2Matrix& lb = left[static_cast<std::size_t>(b - 1)];
            const Gf2Matrix& ra = right[static_cast<std::size_t>(a - 1)];
            const Gf2Matrix& rb = right[static_cast<std::size_t>(b - 1)];
            Gf2Vector ab = c.row(a, b);

            // x in Nl:  (x a) b = x (a b)   =>  (R_b R_a + R_{ab}) x = 0
            Gf2Matrix ql = mat_mul(rb, ra) ^ right_mul_matrix(c, ab);
            // y in Nm:  (a y) b = a (y b)   =>  (R_b L_a + L_a R_b) y = 0
            Gf2Matrix qm = mat_mul(rb, la) ^ mat_mul(la, rb);
            // z in Nr:  (a b) z = a (b z)   =>  (L_{ab} + L_a L_b) z = 0
            Gf2Matrix qr = left_mul_matrix(c, ab) ^ mat_mul(la, lb);

            detail::add_condition_rows(nl, ql);
            detail::add_condition_rows(nm, qm);
            detail::add_condition_rows(nr, qr);
            detail::add_condition_rows(ctr, ql);
            detail::add_condition_rows(ctr, qm);
            detail::add_condition_rows(ctr, qr);
        }
    // Center: in all three nuclei and commuting with everything.
    for (int a = 1; a <= n; ++a) {
        Gf2Matrix qc = left[static_cast<std::size_t>(a - 1)] ^ right[static_cast<std::size_t>(a - 1)];
        detail::add_condition_rows(ctr, qc);
    }

    return NucleusDims{n - nl.size(), n - nm.size(), n - nr.size(), n - ctr.size()};
}

} // namespace semifield

#endif
