// Acceptance suite: one pass/fail line per criterion. Exercises the library
// directly and the CLI binary (argv[1]) where a criterion is about the
// command-line surface. argv[2] is the repository root (golden file).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "semifield/analysis.hpp"
#include "semifield/fixtures.hpp"
#include "semifield/io.hpp"
#include "semifield/search.hpp"
#include "test_helpers.hpp"

using namespace semifield;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::string cli;
fs::path repo_root;
fs::path work_dir;

void report(int criterion, const std::string& what, bool ok, double ms = -1.0) {
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (ms >= 0.0) line << " (" << ms << " ms)";
    std::cout << line.str() << "\n";
    if (!ok) ++failures;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int run_cli(const std::string& args, std::string* stdout_text = nullptr) {
    fs::path out = work_dir / "cli_stdout.txt";
    std::string cmd = cli + " " + args + " > " + out.string() + " 2> " +
                      (work_dir / "cli_stderr.txt").string();
    int status = std::system(cmd.c_str());
    if (stdout_text) {
        std::ifstream in(out);
        std::stringstream buf;
        buf << in.rdbuf();
        *stdout_text = buf.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 1. The published matrices pass all three conditions; the invertibility
//    sweep covers all 127 nonzero combinations. < 10 ms.
void criterion1() {
    const auto& b = order128_example_basis();
    auto t0 = Clock::now();
    auto r = verify_standard_basis(b);
    double ms = ms_since(t0);
    bool ok = r.passed;
    int invertible = 0;
    for (std::uint32_t lam = 1; lam < 128; ++lam) {
        Gf2Matrix s(7);
        for (int i = 0; i < 7; ++i)
            if ((lam >> i) & 1u) s ^= b.mats[static_cast<std::size_t>(i)];
        invertible += rank(s) == 7;
    }
    ok = ok && invertible == 127;
    ok = ok && ms < 10.0;
    report(1, "standard-basis verification of the published example, 127-combination sweep", ok, ms);
}

// 2. Direct 127x127 product sweep finds no zero divisors. < 100 ms.
void criterion2() {
    Cube c = cube_from_basis(order128_example_basis());
    auto t0 = Clock::now();
    bool none = verify_no_zero_divisors(c);
    double ms = ms_since(t0);
    bool agrees = none == verify_standard_basis(order128_example_basis()).passed;
    report(2, "no-zero-divisor sweep agrees with the rank-based verification", none && agrees && ms < 100.0, ms);
}

// 3. analyze --sub 3: 651 candidate subspaces; span{a1,a2,a3} is F_8 with
//    minimal polynomial x^3+x+1; dimension reported as 7/3. < 1 s.
void criterion3() {
    auto t0 = Clock::now();
    std::size_t candidates = enumerate_subspaces_containing_one(7, 3).size();
    auto doc_ms_start = Clock::now();
    auto doc_local = analysis_document(order128_example_basis(), {3});
    double ms = ms_since(doc_ms_start);
    (void)t0;
    std::uint64_t expected = ((1ull << 6) - 1) * ((1ull << 5) - 1) / (((1ull << 2) - 1) * 1ull);
    bool ok = candidates == 651 && candidates == expected;

    std::string out;
    int code = run_cli("analyze paper-example --sub 3", &out);
    ok = ok && code == 0;
    if (ok) {
        auto doc = nlohmann::json::parse(out);
        bool f8 = false;
        for (const auto& r : doc["subsemifields"]["3"])
            if (r["basis"] == nlohmann::json({"1000000", "0100000", "0010000"}))
                f8 = r["closed"] == true && r["associative"] == true && r["commutative"] == true &&
                     r["field"]["degree"] == 3 && r["field"]["min_poly"] == "1101";
        ok = f8 && doc["fractional_dimension"] == "7/3";
    }
    report(3, "F_8 detection: 651 candidates, span{a1,a2,a3} = F_8(x^3+x+1), dimension 7/3", ok && ms < 1000.0, ms);
}

// 4. Noncommutativity witness read directly from A_2 / A_4.
void criterion4() {
    const auto& b = order128_example_basis();
    Cube c = cube_from_basis(b);
    auto w = noncommutativity_witness(c);
    bool ok = w && *w == std::make_pair(2, 4);
    Gf2Vector a2a4 = b.mats[1].column(4); // a_2 a_4 from matrix A_2, column 4
    Gf2Vector a4a2 = b.mats[3].column(2); // a_4 a_2 from matrix A_4, column 2
    ok = ok && a2a4 == Gf2Vector::from_string("0001100"); // a_4 + a_5
    ok = ok && a4a2 == Gf2Vector::unit(7, 6);             // a_6
    ok = ok && a2a4 != a4a2;
    report(4, "noncommutativity witness a_2 a_4 = a_4+a_5 != a_6 = a_4 a_2", ok);
}

// 5. The opposite passes verification, is noncommutative, keeps the order-8
//    subsemifield; applying the command twice is the file identity.
void criterion5() {
    fs::path o1 = work_dir / "opp1.basis", o2 = work_dir / "opp2.basis";
    bool ok = run_cli("opposite " + (repo_root / "data/paper-example.basis").string() + " " +
                      o1.string()) == 0;
    ok = ok && run_cli("verify " + o1.string()) == 0;
    ok = ok && run_cli("opposite " + o1.string() + " " + o2.string()) == 0;
    ok = ok && read_file(o2) == serialize_basis(order128_example_basis());

    Cube opp = opposite(cube_from_basis(order128_example_basis()));
    ok = ok && !is_commutative(opp);
    bool f8 = false;
    for (const auto& r : find_subsemifields(opp, 3))
        if (r.subspace.basis == std::vector<Gf2Vector>{Gf2Vector::unit(7, 1), Gf2Vector::unit(7, 2),
                                                       Gf2Vector::unit(7, 3)})
            f8 = r.field_id == FieldId{3, 0b1011};
    report(5, "opposite semifield verifies, is noncommutative, keeps F_8; double opposite is file identity", ok && f8);
}

// 6. Field fixtures f8 / f128 verify; analysis identifies the fields.
void criterion6() {
    bool ok = run_cli("verify f8") == 0 && run_cli("verify f128") == 0;
    auto d8 = analysis_document(f8_basis(), {3});
    auto d128 = analysis_document(f128_basis(), {7});
    ok = ok && d8["associative"] == true && d8["commutative"] == true;
    ok = ok && d128["associative"] == true && d128["commutative"] == true;
    ok = ok && d8["subsemifields"]["3"][0]["field"]["min_poly"] == "1101";
    ok = ok && d128["subsemifields"]["7"][0]["field"]["min_poly"] == "11000001";
    report(6, "field fixtures f8 and f128 verify with minimal polynomials x^3+x+1 and x^7+x+1", ok);
}

// 7. Unconstrained n=3 search is exhaustive and equals the 4096-candidate
//    brute force; every solution is associative and commutative. < 10 s.
void criterion7() {
    auto t0 = Clock::now();
    auto outcome = search_standard_bases(SearchConstraints(3));
    auto brute = oracle::brute_force_bases_n3();
    double ms = ms_since(t0);
    bool ok = outcome.exhausted && outcome.bases.size() == brute.size();
    for (std::size_t i = 0; ok && i < brute.size(); ++i) {
        bool present = false;
        for (const auto& b : outcome.bases) present = present || b == brute[i];
        ok = present;
    }
    for (const auto& b : outcome.bases) {
        Cube c = cube_from_basis(b);
        ok = ok && is_associative(c) && is_commutative(c);
    }
    report(7, "order-8 exhaustive search equals brute force; all solutions are F_8", ok && ms < 10000.0, ms);
}

// 8. A_1..A_6 pinned, A_7 free: a completion is found within 60 s; sharded
//    parallel runs return the identical solution set.
void criterion8() {
    SearchConstraints cons(7);
    const auto& example = order128_example_basis();
    for (int i = 2; i <= 6; ++i) cons.fix_matrix(i, example.mats[static_cast<std::size_t>(i - 1)]);

    SearchBudget budget;
    budget.wall_clock = std::chrono::milliseconds(60000);
    auto t0 = Clock::now();
    auto sequential = search_standard_bases(cons, budget);
    double ms = ms_since(t0);
    bool ok = !sequential.bases.empty() && ms < 60000.0;
    for (const auto& b : sequential.bases) ok = ok && verify_standard_basis(b).passed;

    auto shards = split_search_space(cons, 1);
    std::vector<std::future<SearchOutcome>> futs;
    for (const auto& shard : shards)
        futs.push_back(std::async(std::launch::async,
                                  [shard] { return search_standard_bases(shard); }));
    std::vector<StandardBasis> merged;
    for (auto& f : futs) {
        auto out = f.get();
        merged.insert(merged.end(), out.bases.begin(), out.bases.end());
    }
    ok = ok && merged == sequential.bases;
    report(8, "constrained completion of the published basis; sharded runs identical", ok, ms);
}

// 9. Property suite across 1000 randomized cases plus the fixtures.
void criterion9() {
    std::mt19937 rng(97);
    Cube example = cube_from_basis(order128_example_basis());
    bool ok = true;
    for (int iter = 0; iter < 1000 && ok; ++iter) {
        int n = 1 + static_cast<int>(rng() % 8);
        Cube c(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) c.set_row(i, j, oracle::random_vector(rng, n));

        Gf2Vector x = oracle::random_vector(rng, n), xp = oracle::random_vector(rng, n);
        Gf2Vector y = oracle::random_vector(rng, n);
        ok = ok && multiply(c, x ^ xp, y) == (multiply(c, x, y) ^ multiply(c, xp, y));
        ok = ok && multiply(c, y, x ^ xp) == (multiply(c, y, x) ^ multiply(c, y, xp));

        Gf2Vector p7 = oracle::random_vector(rng, 7);
        ok = ok && multiply(example, Gf2Vector::unit(7, 1), p7) == p7;
        ok = ok && multiply(example, p7, Gf2Vector::unit(7, 1)) == p7;

        ok = ok && cube_from_basis(basis_from_cube(c)) == c;
        ok = ok && opposite(opposite(c)) == c;
        ok = ok && multiply(opposite(c), x, y) == multiply(c, y, x);

        StandardBasis rb = basis_from_cube(c);
        ok = ok && parse_basis(serialize_basis(rb)) == rb;
    }

    // Pruning soundness: pruned DFS equals complete enumeration at n=3 and
    // on an n=4 slice (A_2 = companion of x^4+x+1).
    auto n3 = search_standard_bases(SearchConstraints(3));
    auto brute3 = oracle::brute_force_bases_n3();
    ok = ok && n3.bases.size() == brute3.size();

    Gf2Matrix c4 = companion_matrix(0b10011, 4);
    SearchConstraints cons4(4);
    cons4.fix_matrix(2, c4);
    auto n4 = search_standard_bases(cons4);
    std::size_t brute4 = 0;
    for (std::uint32_t b3 = 0; b3 < (1u << 12); ++b3)
        for (std::uint32_t b4 = 0; b4 < (1u << 12); ++b4) {
            Gf2Matrix a3(4), a4(4);
            a3.set_column(1, Gf2Vector::unit(4, 3));
            a4.set_column(1, Gf2Vector::unit(4, 4));
            for (int j = 0; j < 3; ++j) {
                a3.set_col_bits(j + 1, (b3 >> (4 * j)) & 0xF);
                a4.set_col_bits(j + 1, (b4 >> (4 * j)) & 0xF);
            }
            const Gf2Matrix mats[4] = {Gf2Matrix::identity(4), c4, a3, a4};
            bool valid = true;
            for (std::uint32_t lam = 1; lam < 16 && valid; ++lam) {
                Gf2Matrix s(4);
                for (int i = 0; i < 4; ++i)
                    if ((lam >> i) & 1u) s ^= mats[i];
                valid = rank(s) == 4;
            }
            brute4 += valid;
        }
    ok = ok && n4.bases.size() == brute4;

    report(9, "property suite (bilinearity, unity, round trips, involution, pruning soundness)", ok);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <repo-root>\n";
        return 2;
    }
    cli = argv[1];
    repo_root = argv[2];
    work_dir = fs::temp_directory_path() / "semifield-acceptance";
    fs::create_directories(work_dir);

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
