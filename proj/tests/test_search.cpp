#include <catch_amalgamated.hpp>

#include <set>

#include "semifield/analysis.hpp"
#include "semifield/fixtures.hpp"
#include "semifield/search.hpp"
#include "test_helpers.hpp"

using namespace semifield;

namespace {

std::set<std::string> basis_keys(const std::vector<StandardBasis>& bases) {
    std::set<std::string> keys;
    for (const auto& b : bases) {
        std::string key;
        for (const auto& m : b.mats)
            for (int j = 0; j < b.n; ++j) key += std::to_string(m.col_bits(j)) + ",";
        keys.insert(key);
    }
    return keys;
}

SearchConstraints pinned_example_prefix(int upto) {
    SearchConstraints cons(7);
    const auto& example = order128_example_basis();
    for (int i = 2; i <= upto; ++i) cons.fix_matrix(i, example.mats[static_cast<std::size_t>(i - 1)]);
    return cons;
}

} // namespace

TEST_CASE("constraint construction") {
    SECTION("baseline pins") {
        SearchConstraints cons(7);
        CHECK(cons.column_fixed(1, 5));
        CHECK(cons.known_value(1, 5) == (1u << 4));
        CHECK(cons.column_fixed(3, 1));
        CHECK(cons.known_value(3, 1) == (1u << 2));
        CHECK_FALSE(cons.column_fixed(3, 2));
    }
    SECTION("conflicts are rejected") {
        SearchConstraints cons(7);
        CHECK_THROWS_AS(cons.fix_column(2, 1, Gf2Vector::unit(7, 3)), InconsistentConstraints);
        CHECK_THROWS_AS(cons.fix_matrix(1, Gf2Matrix::zero(7)), InconsistentConstraints);
        Gf2Matrix bad_first_col = Gf2Matrix::identity(7);
        CHECK_THROWS_AS(cons.fix_matrix(4, bad_first_col), InconsistentConstraints);
    }
    SECTION("subfield block") {
        SearchConstraints cons(7);
        cons.set_subfield_block(3, 0b1011);
        const auto& example = order128_example_basis();
        // Upper-left blocks of A_1..A_3 now match the published matrices.
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                CHECK(cons.known_value(i, j) ==
                      (example.mats[static_cast<std::size_t>(i - 1)].col_bits(j - 1)));
        // Off-block columns have their upper three coordinates pinned to zero.
        CHECK((cons.known_mask(2, 5) & 0b111) == 0b111);
        CHECK((cons.known_value(2, 5) & 0b111) == 0);
        CHECK_FALSE(cons.column_fixed(2, 5));
        // Reducible polynomial rejected.
        SearchConstraints other(7);
        CHECK_THROWS_AS(other.set_subfield_block(3, 0b1111), InconsistentConstraints);
    }
}

TEST_CASE("fully constrained search returns the pinned basis") {
    SearchConstraints cons = pinned_example_prefix(7);
    auto outcome = search_standard_bases(cons);
    CHECK(outcome.exhausted);
    REQUIRE(outcome.bases.size() == 1);
    CHECK(outcome.bases[0] == order128_example_basis());
}

TEST_CASE("order-8 search matches the no-pruning brute force") {
    auto outcome = search_standard_bases(SearchConstraints(3));
    CHECK(outcome.exhausted);
    auto brute = oracle::brute_force_bases_n3();
    CHECK(outcome.bases.size() == brute.size());
    CHECK(basis_keys(outcome.bases) == basis_keys(brute));
    for (const auto& b : outcome.bases) {
        CHECK(verify_standard_basis(b).passed);
        Cube c = cube_from_basis(b);
        CHECK(is_associative(c));
        CHECK(is_commutative(c)); // only F_8 exists at order 8
    }
}

TEST_CASE("order-16 slice matches a complete-enumeration brute force") {
    // A_2 pinned to the companion matrix of x^4+x+1; A_3 and A_4 free.
    // The brute force enumerates all 2^24 complete (A_3, A_4) assignments
    // with the 15-combination rank check and no column-level pruning.
    Gf2Matrix c4 = companion_matrix(0b10011, 4);
    SearchConstraints cons(4);
    cons.fix_matrix(2, c4);
    auto outcome = search_standard_bases(cons);
    CHECK(outcome.exhausted);

    std::vector<StandardBasis> brute;
    Gf2Matrix ident = Gf2Matrix::identity(4);
    std::array<std::uint32_t, 16> combo_cols;
    auto combos_ok = [&](const Gf2Matrix* mats[4], std::uint32_t lam_begin,
                         std::uint32_t lam_end) {
        for (std::uint32_t lam = lam_begin; lam < lam_end; ++lam) {
            for (int j = 0; j < 4; ++j) {
                std::uint32_t acc = 0;
                for (int i = 0; i < 4; ++i)
                    if ((lam >> i) & 1u) acc ^= mats[i]->col_bits(j);
                combo_cols[static_cast<std::size_t>(j)] = acc;
            }
            if (word_rank(combo_cols.data(), 4) != 4) return false;
        }
        return true;
    };
    for (std::uint32_t b3 = 0; b3 < (1u << 12); ++b3) {
        Gf2Matrix a3(4), a4(4);
        a3.set_column(1, Gf2Vector::unit(4, 3));
        for (int j = 0; j < 3; ++j) a3.set_col_bits(j + 1, (b3 >> (4 * j)) & 0xF);
        const Gf2Matrix* mats[4] = {&ident, &c4, &a3, &a4};
        if (!combos_ok(mats, 1, 8)) continue; // combinations not involving A_4
        for (std::uint32_t b4 = 0; b4 < (1u << 12); ++b4) {
            a4 = Gf2Matrix(4);
            a4.set_column(1, Gf2Vector::unit(4, 4));
            for (int j = 0; j < 3; ++j) a4.set_col_bits(j + 1, (b4 >> (4 * j)) & 0xF);
            if (combos_ok(mats, 8, 16)) brute.push_back(StandardBasis{4, {ident, c4, a3, a4}});
        }
    }
    CHECK(outcome.bases.size() == brute.size());
    CHECK(basis_keys(outcome.bases) == basis_keys(brute));
}

TEST_CASE("constrained completion finds the published seventh matrix") {
    SearchConstraints cons = pinned_example_prefix(6);
    auto outcome = search_standard_bases(cons);
    CHECK(outcome.exhausted);
    REQUIRE(outcome.bases.size() == 1);
    CHECK(outcome.bases[0] == order128_example_basis());
    CHECK(outcome.prunes > 0);
}

TEST_CASE("subfield-block constrained search") {
    // F_8 block plus the published A_4..A_6; the published completion is
    // reachable.
    SearchConstraints cons(7);
    cons.set_subfield_block(3, 0b1011);
    const auto& example = order128_example_basis();
    cons.fix_matrix(2, example.mats[1]);
    cons.fix_matrix(3, example.mats[2]);
    for (int i = 4; i <= 6; ++i) cons.fix_matrix(i, example.mats[static_cast<std::size_t>(i - 1)]);
    auto outcome = search_standard_bases(cons);
    CHECK(outcome.exhausted);
    REQUIRE(outcome.bases.size() >= 1);
    CHECK(basis_keys(outcome.bases).count(*basis_keys({example}).begin()) == 1);
}

TEST_CASE("search budgets") {
    SECTION("node budget stops early") {
        SearchBudget budget;
        budget.max_nodes = 10;
        auto outcome = search_standard_bases(SearchConstraints(3), budget);
        CHECK_FALSE(outcome.exhausted);
        CHECK(outcome.nodes_visited <= 11);
    }
    SECTION("solution cap") {
        SearchBudget budget;
        budget.max_solutions = 2;
        auto outcome = search_standard_bases(SearchConstraints(3), budget);
        CHECK(outcome.bases.size() == 2);
        CHECK_FALSE(outcome.exhausted);
        // The capped prefix equals the start of the exhaustive sequence.
        auto full = search_standard_bases(SearchConstraints(3));
        CHECK(outcome.bases[0] == full.bases[0]);
        CHECK(outcome.bases[1] == full.bases[1]);
    }
}

TEST_CASE("determinism") {
    auto a = search_standard_bases(SearchConstraints(3));
    auto b = search_standard_bases(SearchConstraints(3));
    CHECK(a.bases == b.bases);
    CHECK(a.nodes_visited == b.nodes_visited);
    CHECK(a.prunes == b.prunes);
}

TEST_CASE("split_search_space") {
    SECTION("depth zero is the identity") {
        auto shards = split_search_space(SearchConstraints(3), 0);
        CHECK(shards.size() == 1);
    }
    SECTION("depth one enumerates the first free column") {
        auto shards = split_search_space(SearchConstraints(3), 1);
        CHECK(shards.size() == 8); // 2^3 values of A_2 column 2
        for (const auto& s : shards) CHECK(s.column_fixed(2, 2));
    }
    SECTION("depth out of range") {
        SearchConstraints cons = pinned_example_prefix(7); // nothing free
        CHECK_THROWS_AS(split_search_space(cons, 1), std::invalid_argument);
    }
    SECTION("shard union reproduces the sequential solution sequence") {
        for (int depth : {1, 2}) {
            auto sequential = search_standard_bases(SearchConstraints(3));
            std::vector<StandardBasis> merged;
            for (const auto& shard : split_search_space(SearchConstraints(3), depth)) {
                auto out = search_standard_bases(shard);
                CHECK(out.exhausted);
                merged.insert(merged.end(), out.bases.begin(), out.bases.end());
            }
            CHECK(merged == sequential.bases);
        }
    }
}

TEST_CASE("emitted bases are sound under random constraints") {
    std::mt19937 rng(53);
    for (int iter = 0; iter < 20; ++iter) {
        // Random pin of A_2's columns at n=3; search completes A_3.
        SearchConstraints cons(3);
        bool consistent = true;
        try {
            cons.fix_column(2, 2, oracle::random_vector(rng, 3));
            cons.fix_column(2, 3, oracle::random_vector(rng, 3));
        } catch (const InconsistentConstraints&) {
            consistent = false;
        }
        if (!consistent) continue;
        auto outcome = search_standard_bases(cons);
        CHECK(outcome.exhausted);
        for (const auto& b : outcome.bases) CHECK(verify_standard_basis(b).passed);
    }
}
