// File formats and machine-readable documents.
//
// Basis file: a header line with the dimension n, then n blocks of n lines
// of n characters from {0,1}, row-major, leftmost character = column 1.
// Blank lines separate blocks; lines starting with '#' are comments.

#ifndef SEMIFIELD_IO_HPP
#define SEMIFIELD_IO_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semifield/analysis.hpp"
#include "semifield/cube.hpp"
#include "semifield/search.hpp"

namespace semifield {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_ = 0)
        : std::runtime_error("line " + std::to_string(line_) +
                             (column_ ? ", column " + std::to_string(column_) : "") + ": " + msg),
          line(line_), column(column_) {}
};

inline StandardBasis parse_basis(std::istream& in) {
    std::string raw;
    int line_no = 0;
    std::vector<std::pair<int, std::string>> data; // (line number, content)
    while (std::getline(in, raw)) {
        ++line_no;
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
            raw.pop_back();
        if (raw.empty() || raw[0] == '#') continue;
        data.emplace_back(line_no, raw);
    }
    if (data.empty()) throw ParseError("empty basis file", line_no ? line_no : 1);

    int n;
    try {
        std::size_t pos = 0;
        n = std::stoi(data[0].second, &pos);
        if (pos != data[0].second.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("header must be the dimension n, got '" + data[0].second + "'",
                         data[0].first);
    }
    if (n < 1 || n > max_dim)
        throw ParseError("dimension " + std::to_string(n) + " out of range [1, " +
                         std::to_string(max_dim) + "]", data[0].first);

    std::size_t expected = static_cast<std::size_t>(n) * n;
    if (data.size() - 1 != expected)
        throw ParseError("expected " + std::to_string(expected) + " matrix rows, found " +
                         std::to_string(data.size() - 1),
                         data.back().first);

    StandardBasis b;
    b.n = n;
    for (int i = 0; i < n; ++i) {
        Gf2Matrix m(n);
        for (int k = 0; k < n; ++k) {
            const auto& [ln, row] = data[1 + static_cast<std::size_t>(i) * n + k];
            if (static_cast<int>(row.size()) != n)
                throw ParseError("row has " + std::to_string(row.size()) +
                                 " characters, expected " + std::to_string(n), ln);
            for (int j = 0; j < n; ++j) {
                char ch = row[static_cast<std::size_t>(j)];
                if (ch == '1')
                    m.set(k + 1, j + 1, true);
                else if (ch != '0')
                    throw ParseError(std::string("invalid character '") + ch + "'", ln, j + 1);
            }
        }
        b.mats.push_back(m);
    }
    return b;
}

inline StandardBasis parse_basis(const std::string& text) {
    std::istringstream in(text);
    return parse_basis(in);
}

inline std::string serialize_basis(const StandardBasis& b) {
    std::string out = std::to_string(b.n) + "\n";
    for (const auto& m : b.mats) {
        out += "\n";
        for (int k = 1; k <= b.n; ++k) out += m.row(k).to_string() + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial bit strings: leftmost character = coefficient of x^0.

inline std::uint32_t poly_from_string(std::string_view s) {
    std::uint32_t p = 0;
    if (s.empty() || s.size() > 32) throw std::invalid_argument("bad polynomial bit string");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            p |= std::uint32_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bad polynomial bit string");
    }
    return p;
}

inline std::string poly_bits_to_string(std::uint32_t p) {
    int d = poly_degree(p);
    std::string s(static_cast<std::size_t>(d + 1), '0');
    for (int i = 0; i <= d; ++i)
        if ((p >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

// ---------------------------------------------------------------------------
// Search configuration (JSON).

struct SearchConfig {
    SearchConstraints constraints{1};
    SearchBudget budget;
    int split_depth = 0; // shard count control for parallel runs
};

inline SearchConfig parse_search_config(const nlohmann::json& j) {
    if (!j.contains("n")) throw std::runtime_error("search config: missing \"n\"");
    SearchConfig cfg;
    cfg.constraints = SearchConstraints(j.at("n").get<int>());
    int n = cfg.constraints.dim();

    auto matrix_from_json = [n](const nlohmann::json& rows) {
        if (!rows.is_array() || static_cast<int>(rows.size()) != n)
            throw std::runtime_error("search config: matrix needs " + std::to_string(n) + " rows");
        Gf2Matrix m(n);
        for (int k = 0; k < n; ++k) {
            std::string row = rows[static_cast<std::size_t>(k)].get<std::string>();
            if (static_cast<int>(row.size()) != n)
                throw std::runtime_error("search config: matrix row length mismatch");
            for (int c = 0; c < n; ++c)
                if (row[static_cast<std::size_t>(c)] == '1') m.set(k + 1, c + 1, true);
        }
        return m;
    };

    if (j.contains("subfield_block")) {
        const auto& sb = j.at("subfield_block");
        cfg.constraints.set_subfield_block(sb.at("m").get<int>(),
                                           poly_from_string(sb.at("poly").get<std::string>()));
    }
    if (j.contains("fixed_matrices"))
        for (const auto& [key, rows] : j.at("fixed_matrices").items())
            cfg.constraints.fix_matrix(std::stoi(key), matrix_from_json(rows));
    if (j.contains("fixed_columns"))
        for (const auto& fc : j.at("fixed_columns"))
            cfg.constraints.fix_column(
                fc.at("matrix").get<int>(), fc.at("column").get<int>(),
                Gf2Vector::from_string(fc.at("value").get<std::string>()));

    if (j.contains("budget")) {
        const auto& bj = j.at("budget");
        if (bj.contains("max_solutions") && !bj.at("max_solutions").is_null())
            cfg.budget.max_solutions = bj.at("max_solutions").get<std::uint64_t>();
        if (bj.contains("max_nodes") && !bj.at("max_nodes").is_null())
            cfg.budget.max_nodes = bj.at("max_nodes").get<std::uint64_t>();
        if (bj.contains("wall_clock_ms") && !bj.at("wall_clock_ms").is_null())
            cfg.budget.wall_clock = std::chrono::milliseconds(bj.at("wall_clock_ms").get<std::int64_t>());
    }
    if (j.contains("split_depth")) cfg.split_depth = j.at("split_depth").get<int>();
    return cfg;
}

// ---------------------------------------------------------------------------
// Analysis document: one stable machine-readable tree per analyzed basis.

inline const char* condition_name(BasisCondition c) {
    switch (c) {
    case BasisCondition::IdentityMatrix: return "IdentityMatrix";
    case BasisCondition::SingularCombination: return "SingularCombination";
    case BasisCondition::UnitColumn: return "UnitColumn";
    }
    return "?";
}

inline nlohmann::ordered_json verification_to_json(const VerificationReport& r) {
    nlohmann::ordered_json v;
    v["passed"] = r.passed;
    if (r.failed_condition) v["failed_condition"] = condition_name(*r.failed_condition);
    if (r.lambda_witness) v["lambda_witness"] = r.lambda_witness->to_string();
    if (r.matrix_witness) v["matrix_witness"] = *r.matrix_witness;
    return v;
}

inline nlohmann::ordered_json subalgebra_to_json(const SubalgebraReport& r) {
    nlohmann::ordered_json out;
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& v : r.subspace.basis) basis.push_back(v.to_string());
    out["basis"] = basis;
    out["closed"] = r.closed;
    out["associative"] = r.associative;
    out["commutative"] = r.commutative;
    if (r.field_id) {
        out["field"] = {{"degree", r.field_id->m},
                        {"min_poly", poly_bits_to_string(r.field_id->min_poly)},
                        {"min_poly_pretty", poly_to_string(r.field_id->min_poly)}};
    } else {
        out["field"] = nullptr;
    }
    return out;
}

/// Full analysis of a verified basis: structural flags with witnesses,
/// nucleus dimensions, subsemifields for each requested dimension, and the
/// dimension n/m over the largest proper subsemifield found (a non-integer
/// ratio marks a fractional semifield).
inline nlohmann::ordered_json analysis_document(const StandardBasis& b,
                                                const std::vector<int>& sub_dims) {
    Cube c = cube_from_basis(b);
    int n = b.n;
    nlohmann::ordered_json doc;
    doc["dimension"] = n;
    doc["verification"] = verification_to_json(verify_standard_basis(b));

    auto cw = noncommutativity_witness(c);
    doc["commutative"] = !cw;
    if (cw) {
        Gf2Vector x = Gf2Vector::unit(n, cw->first), y = Gf2Vector::unit(n, cw->second);
        doc["noncommutativity_witness"] = {{"i1", cw->first},
                                           {"i2", cw->second},
                                           {"xy", multiply(c, x, y).to_string()},
                                           {"yx", multiply(c, y, x).to_string()}};
    } else {
        doc["noncommutativity_witness"] = nullptr;
    }

    auto aw = nonassociativity_witness(c);
    doc["associative"] = !aw;
    doc["nonassociativity_witness"] =
        aw ? nlohmann::ordered_json((*aw)) : nlohmann::ordered_json(nullptr);

    NucleusDims nd = nuclei(c);
    doc["nuclei"] = {{"left", nd.left}, {"middle", nd.middle}, {"right", nd.right},
                     {"center", nd.center}};

    nlohmann::ordered_json subs = nlohmann::ordered_json::object();
    int best_proper_m = 0;
    for (int m : sub_dims) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& r : find_subsemifields(c, m)) list.push_back(subalgebra_to_json(r));
        if (!list.empty() && m < n && m > best_proper_m) best_proper_m = m;
        subs[std::to_string(m)] = list;
    }
    doc["subsemifields"] = subs;
    if (best_proper_m > 0) {
        doc["fractional_dimension"] = std::to_string(n) + "/" + std::to_string(best_proper_m);
        doc["fractional"] = (n % best_proper_m) != 0;
    } else {
        doc["fractional_dimension"] = nullptr;
        doc["fractional"] = false;
    }
    return doc;
}

} // namespace semifield

#endif
