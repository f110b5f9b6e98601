#include <doctest.h>

#include <random>

#include "ipls/builtins.hpp"
#include "ipls/rankone.hpp"
#include "support/reference.hpp"

using namespace ipls;

TEST_CASE("rank_factorize") {
    const RealMatrix coupling{{1, -1}, {-1, 1}};
    const auto f = rank_factorize(coupling);
    CHECK(f.rank == 1);
    CHECK(f.L == RealMatrix{{1}, {-1}});
    CHECK(f.R == RealMatrix{{1, -1}});

    const auto id = rank_factorize(RealMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(max_abs(id.L * id.R - RealMatrix::identity(3)) == 0.0);

    const RealMatrix p1{{0, 0, 0}, {1, 0, 1}, {0, 0, 0}};
    const auto g = rank_factorize(p1);
    CHECK(g.rank == 1);
    CHECK(g.L == RealMatrix{{0}, {1}, {0}});
    CHECK(g.R == RealMatrix{{1, 0, 1}});

    CHECK_THROWS_AS(rank_factorize(RealMatrix(2, 2)), InvalidArgument);
}

TEST_CASE("rank_factorize reproduces random low-rank matrices") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 3 + trial % 4, r = 1 + trial % 3;
        RealMatrix A(n, n);
        for (std::size_t l = 0; l < r; ++l) {
            RealVector u(n), v(n);
            for (auto& x : u) x = testing::uniform(rng, -1, 1);
            for (auto& x : v) x = testing::uniform(rng, -1, 1);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) A(i, j) += u[i] * v[j];
        }
        const auto f = rank_factorize(A);
        CHECK(f.rank == r);
        CHECK(norm_inf(f.L * f.R - A) <= 1e-10 * norm_inf(A));
        for (std::size_t c = 0; c < f.rank; ++c) {
            const RealVector col = f.L.col(c);
            CHECK(norm_inf(col) == doctest::Approx(1.0).epsilon(1e-15));
            for (double x : col)
                if (x != 0.0) {
                    CHECK(x > 0.0);
                    break;
                }
        }
    }
}

TEST_CASE("example2 representation matches the displayed factors") {
    const auto sys = example2_system();
    const auto rep = build_representation(sys);
    CHECK_FALSE(rep.transposed);
    CHECK(rep.gamma() == 4);
    CHECK(rep.L == RealMatrix{{0, 1, 0, 1}, {1, 0, 0, 0}, {0, 1, 1, 0}});
    CHECK(rep.R == RealMatrix{{1, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(rep.F == RealMatrix{{-1}, {1.0 / 3.0}, {0.5}});
    CHECK(rep.t == RealVector{0, 0, 0, 0});
    CHECK(rep.q_parameters() == std::vector<std::size_t>{4, 0, 1, 2, 3});
    const auto chk = verify_representation(sys, rep, 50);
    CHECK(chk.ok);
}

TEST_CASE("okumura representation") {
    const auto sys = okumura_system(0.01);
    const auto rep = build_representation(sys);
    CHECK(rep.gamma() == 9);
    CHECK(rep.F.cols() == 0);
    CHECK(rep.t == RealVector(9, 0.0));
    for (std::size_t k = 0; k < 9; ++k) CHECK(rank_factorize(sys.term(k).A).rank == 1);
    CHECK(verify_representation(sys, rep, 100).ok);
}

TEST_CASE("rhs in the range of L needs no augmentation") {
    const RealVector u{1, 2}, v{0.5, -1};
    RealMatrix A(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) A(i, j) = u[i] * v[j];
    const ParametricLinearSystem sys(RealMatrix{{3, 0}, {0, 3}}, {1, 1}, {{"p", A, u, Interval(-0.1, 0.1)}});
    const auto rep = build_representation(sys);
    CHECK(rep.gamma() == 1);
    CHECK_FALSE(rep.augmented[0]);
    CHECK(rep.L * rep.t == u);
    CHECK(verify_representation(sys, rep, 20).ok);
}

TEST_CASE("rhs outside the range of L is augmented") {
    const ParametricLinearSystem sys(RealMatrix{{3, 0}, {0, 3}}, {1, 1},
                                     {{"p", RealMatrix{{1, 1}, {0, 0}}, {0, 1}, Interval(-0.1, 0.1)}});
    const auto rep = build_representation(sys);
    CHECK(rep.gamma() == 2);
    CHECK(rep.augmented[0]);
    CHECK(rep.gamma_k == std::vector<std::size_t>{2});
    CHECK(rep.t[1] == 1.0);
    CHECK(verify_representation(sys, rep, 20).ok);
}

TEST_CASE("corrupted representation fails verification") {
    const auto sys = example2_system();
    auto rep = build_representation(sys);
    rep.t[0] = 0.5;
    const auto chk = verify_representation(sys, rep, 10);
    CHECK_FALSE(chk.ok);
    CHECK_FALSE(chk.diagnostic.empty());
}

TEST_CASE("expand and collapse are inverse") {
    const auto sys = ParametricLinearSystem(RealMatrix::identity(3), {1, 1, 1},
                                            {{"a", RealMatrix::identity(3), {}, Interval(0, 0.1)},
                                             {"b", RealMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {}, Interval(0, 0.1)}});
    const auto rep = build_representation(sys);
    CHECK(rep.gamma_k == std::vector<std::size_t>{3, 1});
    const RealVector per{2.5, -1.0};
    const RealVector g = rep.expand(per);
    CHECK(g == RealVector{2.5, 2.5, 2.5, -1.0});
    CHECK(rep.collapse(g) == per);
    CHECK_THROWS_AS(rep.collapse(RealVector{1, 2, 1, 0}), InvalidArgument);
}

TEST_CASE("optimality and reconstruction on random systems") {
    std::mt19937_64 rng(33);
    testing::RandomSystemOptions opt;
    opt.rank_one = false;
    for (int trial = 0; trial < 40; ++trial) {
        const auto sys = testing::random_system(rng, opt);
        const auto rep = build_representation(sys);
        std::size_t bound = 0;
        for (std::size_t pos = 0; pos < rep.partition.pi_prime.size(); ++pos) {
            const auto& A = sys.term(rep.partition.pi_prime[pos]).A;
            bound += std::min(rank_factorize(A).rank, rank_factorize(A.transposed()).rank);
            bound += rep.augmented[pos] ? 1 : 0;
        }
        CHECK(rep.gamma() <= bound);
        CHECK(verify_representation(sys, rep, 20).ok);
    }
}
