// Structure constants of a semifield candidate: the 3-cube {A_{i1 i2 i3}}
// and its standard-basis view {A_1..A_n}, with multiplication, verification
// and the opposite construction.
//
// The two representations are linked by (A_i)_{kj} = A_{ijk}: the cube row
// (i1, i2) is column i2 of A_{i1}, and multiply(e_{i1}, e_{i2}) reads off
// that row.

#ifndef SEMIFIELD_CUBE_HPP
#define SEMIFIELD_CUBE_HPP

#include <optional>
#include <vector>

#include "semifield/gf2.hpp"

namespace semifield {

class Cube {
public:
    explicit Cube(int n) : n_(n), row_(static_cast<std::size_t>(n) * n, 0) {
        detail::check_dim(n);
    }

    int dim() const { return n_; }

    bool get(int i1, int i2, int i3) const {
        check(i3);
        return (row_[idx(i1, i2)] >> (i3 - 1)) & 1u;
    }

    void set(int i1, int i2, int i3, bool value) {
        check(i3);
        std::uint32_t mask = std::uint32_t{1} << (i3 - 1);
        if (value)
            row_[idx(i1, i2)] |= mask;
        else
            row_[idx(i1, i2)] &= ~mask;
    }

    /// The vector A_{i1 i2 .}, i.e. the product a_{i1} a_{i2}.
    Gf2Vector row(int i1, int i2) const { return Gf2Vector(n_, row_[idx(i1, i2)]); }

    void set_row(int i1, int i2, const Gf2Vector& v) {
        detail::check_same_dim(n_, v.dim());
        row_[idx(i1, i2)] = v.bits();
    }

    std::uint32_t row_bits(int i1_0, int i2_0) const {
        return row_[static_cast<std::size_t>(i1_0) * n_ + i2_0];
    }

    friend bool operator==(const Cube&, const Cube&) = default;

private:
    std::size_t idx(int i1, int i2) const {
        check(i1);
        check(i2);
        return static_cast<std::size_t>(i1 - 1) * n_ + (i2 - 1);
    }
    void check(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("cube index " + std::to_string(i));
    }

    int n_;
    std::vector<std::uint32_t> row_;
};

/// Ordered list A_1..A_n of left-multiplication matrices. A plain holder;
/// verify_standard_basis checks the actual basis conditions.
struct StandardBasis {
    int n = 1;
    std::vector<Gf2Matrix> mats;

    friend bool operator==(const StandardBasis&, const StandardBasis&) = default;
};

inline Cube cube_from_basis(const StandardBasis& b) {
    if (static_cast<int>(b.mats.size()) != b.n)
        throw std::invalid_argument("basis has " + std::to_string(b.mats.size()) +
                                    " matrices, expected " + std::to_string(b.n));
    Cube c(b.n);
    for (int i = 1; i <= b.n; ++i) {
        detail::check_same_dim(b.mats[static_cast<std::size_t>(i - 1)].dim(), b.n);
        for (int j = 1; j <= b.n; ++j)
            c.set_row(i, j, b.mats[static_cast<std::size_t>(i - 1)].column(j));
    }
    return c;
}

inline StandardBasis basis_from_cube(const Cube& c) {
    StandardBasis b;
    b.n = c.dim();
    b.mats.reserve(static_cast<std::size_t>(b.n));
    for (int i = 1; i <= b.n; ++i) {
        Gf2Matrix m(b.n);
        for (int j = 1; j <= b.n; ++j) m.set_column(j, c.row(i, j));
        b.mats.push_back(m);
    }
    return b;
}

/// Bilinear product: XOR of cube rows over the set bits of x and y.
inline Gf2Vector multiply(const Cube& c, const Gf2Vector& x, const Gf2Vector& y) {
    detail::check_same_dim(c.dim(), x.dim());
    detail::check_same_dim(c.dim(), y.dim());
    std::uint32_t acc = 0;
    for (std::uint32_t xb = x.bits(); xb; xb &= xb - 1) {
        int i1 = std::countr_zero(xb);
        for (std::uint32_t yb = y.bits(); yb; yb &= yb - 1)
            acc ^= c.row_bits(i1, std::countr_zero(yb));
    }
    return Gf2Vector(c.dim(), acc);
}

/// L_x = sum of A_i over the set bits of x.
inline Gf2Matrix left_mul_matrix(const Cube& c, const Gf2Vector& x) {
    detail::check_same_dim(c.dim(), x.dim());
    int n = c.dim();
    Gf2Matrix m(n);
    for (std::uint32_t xb = x.bits(); xb; xb &= xb - 1) {
        int i1 = std::countr_zero(xb);
        for (int j = 0; j < n; ++j)
            m.set_col_bits(j, m.col_bits(j) ^ c.row_bits(i1, j));
    }
    return m;
}

/// R_y: column i is the product a_i y.
inline Gf2Matrix right_mul_matrix(const Cube& c, const Gf2Vector& y) {
    detail::check_same_dim(c.dim(), y.dim());
    int n = c.dim();
    Gf2Matrix m(n);
    for (int i = 0; i < n; ++i) {
        std::uint32_t acc = 0;
        for (std::uint32_t yb = y.bits(); yb; yb &= yb - 1)
            acc ^= c.row_bits(i, std::countr_zero(yb));
        m.set_col_bits(i, acc);
    }
    return m;
}

enum class BasisCondition {
    IdentityMatrix,      // A_1 != I
    SingularCombination, // some nonzero lambda gives a singular combination
    UnitColumn           // first column of A_i != e_i
};

struct VerificationReport {
    bool passed = false;
    std::optional<BasisCondition> failed_condition;
    std::optional<Gf2Vector> lambda_witness; // SingularCombination
    std::optional<int> matrix_witness;       // IdentityMatrix / UnitColumn

    static VerificationReport pass() { return {true, {}, {}, {}}; }
};

/// Checks the three standard-basis conditions: A_1 = I, first column of A_i
/// equal to e_i, and every nonzero combination sum lambda_i A_i invertible.
/// The combination sweep walks lambda in Gray-code order (one matrix XOR per
/// step) but reports the lexicographically smallest failing lambda.
inline VerificationReport verify_standard_basis(const StandardBasis& b) {
    int n = b.n;
    if (static_cast<int>(b.mats.size()) != n)
        throw std::invalid_argument("basis has " + std::to_string(b.mats.size()) +
                                    " matrices, expected " + std::to_string(n));
    for (const auto& m : b.mats) detail::check_same_dim(m.dim(), n);

    if (!(b.mats[0] == Gf2Matrix::identity(n)))
        return {false, BasisCondition::IdentityMatrix, {}, 1};
    for (int i = 1; i <= n; ++i)
        if (b.mats[static_cast<std::size_t>(i - 1)].column(1) != Gf2Vector::unit(n, i))
            return {false, BasisCondition::UnitColumn, {}, i};

    std::array<std::uint32_t, max_dim> acc{}; // columns of sum lambda_i A_i
    std::uint32_t prev_gray = 0;
    std::uint32_t min_fail = 0;
    std::uint32_t count = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t g = 1; g <= count; ++g) {
        std::uint32_t gray = g ^ (g >> 1);
        int flipped = std::countr_zero(gray ^ prev_gray);
        prev_gray = gray;
        const Gf2Matrix& m = b.mats[static_cast<std::size_t>(flipped)];
        for (int j = 0; j < n; ++j) acc[static_cast<std::size_t>(j)] ^= m.col_bits(j);
        if (word_rank(acc.data(), n) < n)
            if (min_fail == 0 || gray < min_fail) min_fail = gray;
    }
    if (min_fail)
        return {false, BasisCondition::SingularCombination, Gf2Vector(n, min_fail), {}};
    return VerificationReport::pass();
}

/// Direct (2^n - 1)^2 product sweep; independent of the rank-based check.
inline bool verify_no_zero_divisors(const Cube& c) {
    int n = c.dim();
    std::uint32_t count = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t x = 1; x <= count; ++x) {
        Gf2Vector vx(n, x);
        for (std::uint32_t y = 1; y <= count; ++y)
            if (multiply(c, vx, Gf2Vector(n, y)).is_zero()) return false;
    }
    return true;
}

/// Swap of the first two cube indices (the opposite ring); an involution.
inline Cube opposite(const Cube& c) {
    int n = c.dim();
    Cube r(n);
    for (int i1 = 1; i1 <= n; ++i1)
        for (int i2 = 1; i2 <= n; ++i2) r.set_row(i1, i2, c.row(i2, i1));
    return r;
}

} // namespace semifield

#endif
