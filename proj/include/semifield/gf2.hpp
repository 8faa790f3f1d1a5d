// Bit-packed linear algebra over GF(2) for small dimensions (n <= 16).
//
// Convention used everywhere in this project, including file formats:
// bit 0 of a packed word holds coordinate 1 (the coefficient of the basis
// element a_1), bit j-1 holds coordinate j.

#ifndef SEMIFIELD_GF2_HPP
#define SEMIFIELD_GF2_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semifield {

inline constexpr int max_dim = 16;

namespace detail {

inline void check_dim(int n) {
    if (n < 1 || n > max_dim)
        throw std::invalid_argument("dimension " + std::to_string(n) +
                                    " out of range [1, " + std::to_string(max_dim) + "]");
}

inline void check_same_dim(int a, int b) {
    if (a != b)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}

} // namespace detail

/// Element of F_2^n, packed into one word.
class Gf2Vector {
public:
    Gf2Vector() = default;

    Gf2Vector(int n, std::uint32_t bits) : n_(n), bits_(bits) {
        detail::check_dim(n);
        if (bits >> n)
            throw std::invalid_argument("vector bits exceed dimension " + std::to_string(n));
    }

    static Gf2Vector zero(int n) { return Gf2Vector(n, 0); }

    /// e_i, 1-based.
    static Gf2Vector unit(int n, int i) {
        detail::check_dim(n);
        if (i < 1 || i > n) throw std::out_of_range("unit vector index " + std::to_string(i));
        return Gf2Vector(n, std::uint32_t{1} << (i - 1));
    }

    int dim() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    /// Coordinate i, 1-based.
    bool get(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("coordinate " + std::to_string(i));
        return (bits_ >> (i - 1)) & 1u;
    }

    Gf2Vector& operator^=(const Gf2Vector& o) {
        detail::check_same_dim(n_, o.n_);
        bits_ ^= o.bits_;
        return *this;
    }
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }

    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

    /// n characters, leftmost = coordinate 1.
    std::string to_string() const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int i = 0; i < n_; ++i)
            if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    static Gf2Vector from_string(std::string_view s) {
        int n = static_cast<int>(s.size());
        detail::check_dim(n);
        std::uint32_t bits = 0;
        for (int i = 0; i < n; ++i) {
            char c = s[static_cast<std::size_t>(i)];
            if (c == '1')
                bits |= std::uint32_t{1} << i;
            else if (c != '0')
                throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
        }
        return Gf2Vector(n, bits);
    }

private:
    int n_ = 1;
    std::uint32_t bits_ = 0;
};

/// n x n matrix over GF(2), stored column-major as packed words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;

    explicit Gf2Matrix(int n) : n_(n) { detail::check_dim(n); }

    static Gf2Matrix zero(int n) { return Gf2Matrix(n); }

    static Gf2Matrix identity(int n) {
        Gf2Matrix m(n);
        for (int j = 0; j < n; ++j) m.col_[static_cast<std::size_t>(j)] = std::uint32_t{1} << j;
        return m;
    }

    int dim() const { return n_; }

    /// Column j, 1-based.
    Gf2Vector column(int j) const {
        check_col(j);
        return Gf2Vector(n_, col_[static_cast<std::size_t>(j - 1)]);
    }

    void set_column(int j, const Gf2Vector& v) {
        check_col(j);
        detail::check_same_dim(n_, v.dim());
        col_[static_cast<std::size_t>(j - 1)] = v.bits();
    }

    /// Raw column word, 0-based index.
    std::uint32_t col_bits(int j0) const { return col_[static_cast<std::size_t>(j0)]; }
    void set_col_bits(int j0, std::uint32_t w) { col_[static_cast<std::size_t>(j0)] = w; }

    /// Entry in row k, column j (both 1-based).
    bool get(int k, int j) const {
        check_col(j);
        if (k < 1 || k > n_) throw std::out_of_range("row " + std::to_string(k));
        return (col_[static_cast<std::size_t>(j - 1)] >> (k - 1)) & 1u;
    }

    void set(int k, int j, bool value) {
        check_col(j);
        if (k < 1 || k > n_) throw std::out_of_range("row " + std::to_string(k));
        std::uint32_t mask = std::uint32_t{1} << (k - 1);
        if (value)
            col_[static_cast<std::size_t>(j - 1)] |= mask;
        else
            col_[static_cast<std::size_t>(j - 1)] &= ~mask;
    }

    /// Row k as a vector (derived view; storage is column-major).
    Gf2Vector row(int k) const {
        if (k < 1 || k > n_) throw std::out_of_range("row " + std::to_string(k));
        std::uint32_t bits = 0;
        for (int j = 0; j < n_; ++j)
            bits |= ((col_[static_cast<std::size_t>(j)] >> (k - 1)) & 1u) << j;
        return Gf2Vector(n_, bits);
    }

    Gf2Matrix& operator^=(const Gf2Matrix& o) {
        detail::check_same_dim(n_, o.n_);
        for (int j = 0; j < n_; ++j) col_[static_cast<std::size_t>(j)] ^= o.col_[static_cast<std::size_t>(j)];
        return *this;
    }
    friend Gf2Matrix operator^(Gf2Matrix a, const Gf2Matrix& b) { return a ^= b; }

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
        if (a.n_ != b.n_) return false;
        for (int j = 0; j < a.n_; ++j)
            if (a.col_[static_cast<std::size_t>(j)] != b.col_[static_cast<std::size_t>(j)]) return false;
        return true;
    }

private:
    void check_col(int j) const {
        if (j < 1 || j > n_) throw std::out_of_range("column " + std::to_string(j));
    }

    int n_ = 1;
    std::array<std::uint32_t, max_dim> col_{};
};

inline Gf2Vector mat_vec(const Gf2Matrix& m, const Gf2Vector& v) {
    detail::check_same_dim(m.dim(), v.dim());
    std::uint32_t acc = 0;
    std::uint32_t bits = v.bits();
    while (bits) {
        int j0 = std::countr_zero(bits);
        acc ^= m.col_bits(j0);
        bits &= bits - 1;
    }
    return Gf2Vector(m.dim(), acc);
}

inline Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    detail::check_same_dim(a.dim(), b.dim());
    int n = a.dim();
    Gf2Matrix r(n);
    for (int j = 0; j < n; ++j) {
        std::uint32_t acc = 0;
        std::uint32_t bits = b.col_bits(j);
        while (bits) {
            acc ^= a.col_bits(std::countr_zero(bits));
            bits &= bits - 1;
        }
        r.set_col_bits(j, acc);
    }
    return r;
}

/// Incremental GF(2) row-echelon state: insert packed words one at a time,
/// rejecting words dependent on those already inserted. Supports pop for
/// backtracking (insertions are append-only).
class EchelonStack {
public:
    int size() const { return size_; }

    /// Reduces v against the stored basis. Returns the reduced word
    /// (0 means v is dependent) without modifying the state.
    std::uint32_t reduce(std::uint32_t v) const {
        for (int i = 0; i < size_; ++i) {
            std::uint32_t w = word_[static_cast<std::size_t>(i)];
            if (v & pivot_bit(w)) v ^= w;
        }
        return v;
    }

    /// Inserts v if independent; returns false (state unchanged) otherwise.
    bool try_insert(std::uint32_t v) {
        v = reduce(v);
        if (!v) return false;
        word_[static_cast<std::size_t>(size_++)] = v;
        return true;
    }

    void pop() { --size_; }
    void clear() { size_ = 0; }

private:
    static std::uint32_t pivot_bit(std::uint32_t w) {
        return std::uint32_t{1} << (31 - std::countl_zero(w));
    }

    std::array<std::uint32_t, max_dim> word_{};
    int size_ = 0;
};

/// Rank of a set of packed words.
inline int word_rank(const std::uint32_t* words, int count) {
    EchelonStack e;
    for (int i = 0; i < count; ++i) e.try_insert(words[i]);
    return e.size();
}

/// Row rank by Gaussian elimination on an in-place copy.
inline int rank(const Gf2Matrix& m) {
    std::array<std::uint32_t, max_dim> cols;
    for (int j = 0; j < m.dim(); ++j) cols[static_cast<std::size_t>(j)] = m.col_bits(j);
    return word_rank(cols.data(), m.dim());
}

/// Gauss-Jordan on [M | I]; empty when rank < n.
inline std::optional<Gf2Matrix> inverse(const Gf2Matrix& m) {
    int n = m.dim();
    // Row k packed as: bits 0..n-1 = row of M, bits n..2n-1 = row of I.
    std::array<std::uint32_t, max_dim> rows;
    for (int k = 0; k < n; ++k)
        rows[static_cast<std::size_t>(k)] =
            m.row(k + 1).bits() | (std::uint32_t{1} << (n + k));
    int pivot_row = 0;
    for (int c = 0; c < n; ++c) {
        int r = pivot_row;
        while (r < n && !((rows[static_cast<std::size_t>(r)] >> c) & 1u)) ++r;
        if (r == n) return std::nullopt;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot_row)]);
        for (int k = 0; k < n; ++k)
            if (k != pivot_row && ((rows[static_cast<std::size_t>(k)] >> c) & 1u))
                rows[static_cast<std::size_t>(k)] ^= rows[static_cast<std::size_t>(pivot_row)];
        ++pivot_row;
    }
    Gf2Matrix inv(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            if ((rows[static_cast<std::size_t>(k)] >> (n + j)) & 1u) inv.set(k + 1, j + 1, true);
    return inv;
}

// ---------------------------------------------------------------------------
// Polynomials over GF(2), packed with bit i = coefficient of x^i.

inline int poly_degree(std::uint32_t p) {
    if (p == 0) return -1;
    return 31 - std::countl_zero(p);
}

inline std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    if (b == 0) throw std::invalid_argument("polynomial division by zero");
    int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a))
        a ^= b << (da - db);
    return a;
}

/// Trial division by every polynomial of degree 1 .. deg/2.
inline bool poly_irreducible(std::uint32_t p) {
    int d = poly_degree(p);
    if (d < 1) return false;
    if (d == 1) return true;
    if (!(p & 1u)) return false; // divisible by x
    for (std::uint32_t q = 2; poly_degree(q) <= d / 2; ++q)
        if (poly_mod(p, q) == 0) return false;
    return true;
}

/// Matrix of multiplication by x in F_2[x]/(p), for monic p of degree m.
inline Gf2Matrix companion_matrix(std::uint32_t p, int m) {
    if (poly_degree(p) != m)
        throw std::invalid_argument("polynomial degree does not match dimension " + std::to_string(m));
    Gf2Matrix c(m);
    for (int j = 1; j < m; ++j) c.set(j + 1, j, true);
    for (int i = 0; i < m; ++i)
        if ((p >> i) & 1u) c.set(i + 1, m, true);
    return c;
}

/// "x^3 + x + 1" style rendering.
inline std::string poly_to_string(std::uint32_t p) {
    if (p == 0) return "0";
    std::string s;
    for (int i = poly_degree(p); i >= 0; --i) {
        if (!((p >> i) & 1u)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

} // namespace semifield

#endif
