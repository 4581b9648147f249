#include <map>
#include <set>

#include "doctest.h"
#include "logverlinde/fusion.hpp"
#include "logverlinde/linalg.hpp"
#include "support/fixtures.hpp"

using namespace verlinde;

namespace {

ExactMatrix fixture_matrix(const nlohmann::json& j, int p) {
    std::vector<std::vector<long long>> m;
    for (const auto& row : j) m.push_back(row.get<std::vector<long long>>());
    return ExactMatrix::from_int(m, p);
}

}  // namespace

TEST_CASE("kernel") {
    CHECK(kernel(ExactMatrix::identity(4, 3)).empty());
    CHECK(kernel(ExactMatrix(3, 3, 3)).size() == 3);

    // kernel(J^gr - I) for p = 2 is 2-dimensional
    FusionTable g = grothendieck_table(2);
    auto J = ExactMatrix::from_int(g.fusion_matrix(wp_simple(-1, 1)), 2);
    CHECK(kernel(J.shifted(CycloNum::one(2))).size() == 2);
}

TEST_CASE("inverse and conjugation") {
    FusionTable g = grothendieck_table(2);
    auto J = ExactMatrix::from_int(g.fusion_matrix(wp_simple(-1, 1)), 2);
    auto I = ExactMatrix::identity(4, 2);
    CHECK(J * J.inverse() == I);
    CHECK(verify_conjugation(I, J, J));
    CHECK_THROWS_AS(ExactMatrix(3, 3, 2).inverse(), std::domain_error);
    CHECK_THROWS_AS(verify_conjugation(ExactMatrix(4, 4, 2), J, J), std::domain_error);
}

TEST_CASE("published p=2 change-of-basis matrices") {
    auto fx = testsupport::load_fixture("p2_block_matrices.json");
    FusionTable g = grothendieck_table(2);
    FusionTable t = build_wp_fusion_table(2);
    auto Jg = ExactMatrix::from_int(g.fusion_matrix(wp_simple(-1, 1)), 2);
    auto Yg = ExactMatrix::from_int(g.fusion_matrix(wp_simple(+1, 2)), 2);
    auto Jt = ExactMatrix::from_int(t.fusion_matrix(wp_simple(-1, 1)), 2);
    auto Yt = ExactMatrix::from_int(t.fusion_matrix(wp_simple(+1, 2)), 2);

    auto qgr = fixture_matrix(fx["qgr"], 2);
    CHECK(verify_conjugation(qgr, Jg, fixture_matrix(fx["jgr_diag"], 2)));
    CHECK(verify_conjugation(qgr, Yg, fixture_matrix(fx["ygr_jordan"], 2)));

    // the version in print fails the Jordan-chain condition on its third
    // column; the corrected (4,3) entry -4 is what conjugates exactly
    auto qgr_published = fixture_matrix(fx["qgr_published"], 2);
    CHECK_FALSE(verify_conjugation(qgr_published, Yg, fixture_matrix(fx["ygr_jordan"], 2)));

    auto q6 = fixture_matrix(fx["q6"], 2);
    CHECK(verify_conjugation(q6, Jt, fixture_matrix(fx["j6_diag"], 2)));
    CHECK(verify_conjugation(q6, Yt, fixture_matrix(fx["y6_jordan"], 2)));
}

TEST_CASE("generalized eigenspaces") {
    // diagonal matrix with distinct entries: one-dimensional spaces
    ExactMatrix d(3, 3, 2);
    for (int i = 0; i < 3; ++i) d.at(i, i) = CycloNum(2, Rational(i + 1));
    std::vector<CycloNum> eigs{CycloNum(2, Rational(1)), CycloNum(2, Rational(2)), CycloNum(2, Rational(3))};
    auto spaces = generalized_eigenspaces(d, eigs);
    for (const auto& s : spaces) CHECK(s.basis.size() == 1);

    // Y^gr for p = 2 with eigenvalues {2, 0, -2}: dimensions {1, 2, 1}
    FusionTable g = grothendieck_table(2);
    auto Yg = ExactMatrix::from_int(g.fusion_matrix(wp_simple(+1, 2)), 2);
    std::vector<CycloNum> lam{two_cos(2, 0), two_cos(2, 1), two_cos(2, 2)};
    auto gs = generalized_eigenspaces(Yg, lam);
    CHECK(gs[0].basis.size() == 1);
    CHECK(gs[1].basis.size() == 2);
    CHECK(gs[2].basis.size() == 1);

    // tensor-ring Y for p = 2: dimensions {1, 4, 1}
    FusionTable t = build_wp_fusion_table(2);
    auto Yt = ExactMatrix::from_int(t.fusion_matrix(wp_simple(+1, 2)), 2);
    auto ts = generalized_eigenspaces(Yt, lam);
    CHECK(ts[0].basis.size() == 1);
    CHECK(ts[1].basis.size() == 4);
    CHECK(ts[2].basis.size() == 1);

    // incomplete eigenvalue list is rejected
    CHECK_THROWS_AS(generalized_eigenspaces(Yg, {two_cos(2, 0)}), std::domain_error);
}

TEST_CASE("block diagonalization structure") {
    for (int p : {2, 3, 4}) {
        FusionTable g = grothendieck_table(p);
        auto J = ExactMatrix::from_int(g.fusion_matrix(wp_simple(-1, 1)), p);
        auto Y = ExactMatrix::from_int(g.fusion_matrix(wp_simple(+1, 2)), p);
        auto rep = block_diagonalize_pair(J, Y, p);
        // conjugating back reproduces the inputs exactly
        CHECK(verify_conjugation(rep.change_of_basis, J, rep.j_form));
        CHECK(verify_conjugation(rep.change_of_basis, Y, rep.y_form));
        CHECK(rep.change_of_basis * rep.y_form * rep.change_of_basis.inverse() == Y);
        // sizes (1; 2 x (p-1); 1), eigenvalues 2 cos(pi j / p)
        int total = 0;
        for (const auto& b : rep.blocks) total += b.size;
        CHECK(total == 2 * p);
        CHECK(rep.blocks.front().size == 1);
        CHECK(rep.blocks.back().size == 1);
        for (size_t k = 1; k + 1 < rep.blocks.size(); ++k) CHECK(rep.blocks[k].size == 2);
        for (int j = 0; j <= p; ++j) CHECK(rep.eigenvalues[j] == two_cos(p, j));

        FusionTable t = build_wp_fusion_table(p);
        auto Jt = ExactMatrix::from_int(t.fusion_matrix(wp_simple(-1, 1)), p);
        auto Yt = ExactMatrix::from_int(t.fusion_matrix(wp_simple(+1, 2)), p);
        auto trep = block_diagonalize_pair(Jt, Yt, p);
        CHECK(verify_conjugation(trep.change_of_basis, Yt, trep.y_form));
        std::map<int, std::multiset<int>> sizes;
        for (const auto& b : trep.blocks) {
            for (int j = 0; j <= p; ++j)
                if (two_cos(p, j) == b.eigenvalue) sizes[j].insert(b.size);
        }
        CHECK(sizes[0] == std::multiset<int>{1});
        CHECK(sizes[p] == std::multiset<int>{1});
        for (int j = 1; j < p; ++j) CHECK(sizes[j] == std::multiset<int>{1, 3});
    }

    // non-commuting input is rejected
    ExactMatrix a(2, 2, 2), b(2, 2, 2);
    a.at(0, 1) = CycloNum::one(2);
    b.at(1, 0) = CycloNum::one(2);
    CHECK_THROWS_AS(block_diagonalize_pair(a, b, 2), std::domain_error);
}
