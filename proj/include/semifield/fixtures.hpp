// Built-in bases: the order-128 example with an F_8 subfield, and the
// Galois fields F_8 and F_128 as companion-matrix power bases.

#ifndef SEMIFIELD_FIXTURES_HPP
#define SEMIFIELD_FIXTURES_HPP

#include <initializer_list>
#include <optional>
#include <string_view>

#include "semifield/cube.hpp"

namespace semifield {

namespace detail {

// Rows are written top to bottom, leftmost character = column 1.
inline Gf2Matrix matrix_from_rows(std::initializer_list<std::string_view> rows) {
    int n = static_cast<int>(rows.size());
    Gf2Matrix m(n);
    int k = 1;
    for (std::string_view r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("row length mismatch in matrix literal");
        for (int j = 1; j <= n; ++j)
            if (r[static_cast<std::size_t>(j - 1)] == '1') m.set(k, j, true);
        ++k;
    }
    return m;
}

} // namespace detail

/// The order-128 semifield containing F_8, as published: seven 7x7 matrices.
/// A_1..A_3 are block diagonal with powers of the companion matrix of
/// x^3 + x + 1 in the upper-left block.
inline const StandardBasis& order128_example_basis() {
    static const StandardBasis b = [] {
        StandardBasis sb;
        sb.n = 7;
        sb.mats = {
            detail::matrix_from_rows({"1000000",
                                      "0100000",
                                      "0010000",
                                      "0001000",
                                      "0000100",
                                      "0000010",
                                      "0000001"}),
            detail::matrix_from_rows({"0010000",
                                      "1010000",
                                      "0100000",
                                      "0001111",
                                      "0001010",
                                      "0000011",
                                      "0000010"}),
            detail::matrix_from_rows({"0100000",
                                      "0110000",
                                      "1010000",
                                      "0000100",
                                      "0001100",
                                      "0001111",
                                      "0001010"}),
            detail::matrix_from_rows({"0001100",
                                      "0001110",
                                      "0000101",
                                      "1000001",
                                      "0010010",
                                      "0111011",
                                      "0001101"}),
            detail::matrix_from_rows({"0000100",
                                      "0000111",
                                      "0001010",
                                      "0010011",
                                      "1010001",
                                      "0000110",
                                      "0111011"}),
            detail::matrix_from_rows({"0001011",
                                      "0001100",
                                      "0000100",
                                      "0001010",
                                      "0111111",
                                      "1010110",
                                      "0011011"}),
            detail::matrix_from_rows({"0001101",
                                      "0000100",
                                      "0001000",
                                      "0110101",
                                      "0111010",
                                      "0011101",
                                      "1000110"}),
        };
        return sb;
    }();
    return b;
}

/// {C^0, ..., C^{m-1}} for C the companion matrix of an irreducible p:
/// the standard basis of the field F_2[x]/(p) in the power basis of x.
inline StandardBasis field_basis(std::uint32_t poly, int m) {
    if (!poly_irreducible(poly))
        throw std::invalid_argument("polynomial " + poly_to_string(poly) +
                                    " is not irreducible over GF(2)");
    Gf2Matrix c = companion_matrix(poly, m);
    StandardBasis b;
    b.n = m;
    Gf2Matrix power = Gf2Matrix::identity(m);
    for (int i = 0; i < m; ++i) {
        b.mats.push_back(power);
        power = mat_mul(power, c);
    }
    return b;
}

inline constexpr std::uint32_t f8_poly = 0b1011;    // x^3 + x + 1
inline constexpr std::uint32_t f128_poly = 0b10000011; // x^7 + x + 1

inline const StandardBasis& f8_basis() {
    static const StandardBasis b = field_basis(f8_poly, 3);
    return b;
}

inline const StandardBasis& f128_basis() {
    static const StandardBasis b = field_basis(f128_poly, 7);
    return b;
}

/// Lookup by CLI fixture name.
inline std::optional<StandardBasis> fixture_basis(std::string_view name) {
    if (name == "paper-example") return order128_example_basis();
    if (name == "f8") return f8_basis();
    if (name == "f128") return f128_basis();
    return std::nullopt;
}

} // namespace semifield

#endif
