#include "doctest.h"
#include "oracles.hpp"

#include "dh/abelian.hpp"
#include "dh/error.hpp"
#include "dh/smith.hpp"

using namespace dh;

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows, std::size_t cols = 0)
{
    return IntMatrix::from_rows(rows, cols);
}

bool is_diagonal(const IntMatrix& s)
{
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c)
            if (r != c && s(r, c) != 0)
                return false;
    return true;
}

}  // namespace

TEST_CASE("smith form of diag(2,3) is diag(1,6)")
{
    IntMatrix m = mat({{2, 0}, {0, 3}});
    SmithForm snf = smith_normal_form(m);
    CHECK(snf.factors == IntVector{1, 6});
    CHECK(snf.left * m * snf.right == snf.diagonal);
    CHECK(abs(oracle::determinant(snf.left)) == 1);
    CHECK(abs(oracle::determinant(snf.right)) == 1);
}

TEST_CASE("smith form of identity and zero")
{
    CHECK(smith_normal_form(IntMatrix::identity(3)).factors == IntVector{1, 1, 1});
    SmithForm z = smith_normal_form(IntMatrix(3, 2));
    CHECK(z.rank == 0);
    CHECK(z.diagonal.is_zero());
}

TEST_CASE("smith round trip on random 4x4 matrices")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m = oracle::random_matrix(rng, 4, 4, -9, 9);
        if (trial % 5 == 0)
            m.set_column(3, m.column(0));  // force some singular cases
        SmithForm snf = smith_normal_form(m);
        CHECK(snf.left * m * snf.right == snf.diagonal);
        CHECK(is_diagonal(snf.diagonal));
        CHECK(abs(oracle::determinant(snf.left)) == 1);
        CHECK(abs(oracle::determinant(snf.right)) == 1);
        CHECK(snf.left * snf.left_inverse == IntMatrix::identity(4));
        CHECK(snf.right * snf.right_inverse == IntMatrix::identity(4));
        Integer prod = 1;
        for (std::size_t k = 1; k <= 4; ++k) {
            if (k <= snf.rank)
                prod *= snf.factors[k - 1];
            else
                prod = 0;
            CHECK(prod == oracle::determinantal_divisor(m, k));
        }
        for (std::size_t k = 1; k < snf.rank; ++k)
            CHECK(mpz_divisible_p(snf.factors[k].get_mpz_t(), snf.factors[k - 1].get_mpz_t()));
    }
}

TEST_CASE("sparse invariant factors agree with the determinantal oracle")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        const std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m = oracle::random_matrix(rng, r, c, -3, 3);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if ((i + j + trial) % 3 == 0)
                    m(i, j) = 0;
        CHECK(invariant_factors(m) == oracle::invariant_factors(m));
        CHECK(smith_normal_form(m, kNoTransforms).factors == oracle::invariant_factors(m));
    }
}

TEST_CASE("kernel basis and solve")
{
    IntMatrix m = mat({{1, 2, 3}, {2, 4, 6}});
    IntMatrix k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    auto x = solve(mat({{2, 0}, {0, 3}}), mat({{4}, {9}}));
    REQUIRE(x);
    CHECK(*x == mat({{2}, {3}}));
    CHECK_FALSE(solve(mat({{2}}), mat({{3}})));
}

TEST_CASE("presented groups report invariant factors")
{
    FpAbelianGroup g(3, mat({{2, 0}, {0, 3}, {0, 0}}));
    CHECK(g.to_string() == "Z^1 + Z/6");
    CHECK(g.free_rank() == 1);
    CHECK(FpAbelianGroup().to_string() == "0");
    CHECK(FpAbelianGroup::from_invariants({2, 6}, 1).to_string() == "Z^1 + Z/2 + Z/6");
    CHECK(FpAbelianGroup::cyclic(4) == FpAbelianGroup(1, mat({{4}})));
    CHECK_FALSE(FpAbelianGroup::cyclic(4) == FpAbelianGroup::from_invariants({2, 2}, 0));
    CHECK(FpAbelianGroup::cyclic(1).is_trivial());
    CHECK(FpAbelianGroup::from_invariants({2, 3}, 0).to_string() == "Z/6");
}

TEST_CASE("element enumeration is a bijection onto normal coordinates")
{
    FpAbelianGroup g(2, mat({{2, 4}, {4, 2}}));  // order 12
    CHECK(g.order() == 12);
    auto els = g.elements();
    REQUIRE(els.size() == 12);
    for (std::size_t i = 0; i < els.size(); ++i)
        CHECK(g.element_index(els[i]) == i);
    CHECK(g.is_zero(IntVector{2, 4}));
    CHECK_FALSE(g.is_zero(IntVector{1, 0}));
}

TEST_CASE("cokernel, kernel and image of small maps")
{
    FpAbelianGroup z(1);
    FpAbelianGroup z2 = FpAbelianGroup::cyclic(2);
    AbHom twice(z, z, mat({{2}}));
    CHECK(twice.cokernel().target() == z2);
    CHECK(twice.kernel().source().is_trivial());

    AbHom id_minus_zero = AbHom::identity(z2) - AbHom::zero(z2, z2);
    CHECK(id_minus_zero.kernel().source().is_trivial());
    CHECK(AbHom::zero(z, z).kernel().source() == z);
    CHECK_THROWS_AS(AbHom(z2, z, mat({{1}})), Error);
}

TEST_CASE("order(image) * order(kernel) = order(source) with brute-force kernel")
{
    std::mt19937 rng(99);
    const std::vector<long> orders = {1, 2, 3, 4, 6};
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1), cnt(1, 3);
        const std::size_t gs = cnt(rng), gt = cnt(rng);
        IntVector a(gs), b(gt);
        for (auto& x : a)
            x = orders[pick(rng)];
        for (auto& x : b)
            x = orders[pick(rng)];
        IntMatrix rs = IntMatrix::diagonal(a), rt = IntMatrix::diagonal(b);
        FpAbelianGroup s(gs, rs), t(gt, rt);
        IntMatrix m(gt, gs);
        std::uniform_int_distribution<int> coef(0, 5);
        for (std::size_t i = 0; i < gt; ++i)
            for (std::size_t j = 0; j < gs; ++j)
                m(i, j) = Integer(b[i] / gcd(a[j], b[i])) * coef(rng);
        AbHom f(s, t, m);
        std::size_t brute = 0;
        for (const auto& x : s.elements())
            if (t.is_zero(f.apply(x)))
                ++brute;
        CHECK(f.kernel().source().order() == brute);
        CHECK(f.image().onto.target().order() * f.kernel().source().order() == s.order());
        CHECK(f.image().onto.then(f.image().inclusion).equals(f));
        CHECK(f.kernel().then(f).is_zero());
    }
}

TEST_CASE("homology of small complexes")
{
    FpAbelianGroup z(1);
    ChainComplex circle({z, z}, {AbHom::zero(z, z)});
    CHECK(circle.homology(0) == z);
    CHECK(circle.homology(1) == z);

    ChainComplex twice({z, z}, {AbHom(z, z, mat({{2}}))});
    CHECK(twice.homology(0) == FpAbelianGroup::cyclic(2));
    CHECK(twice.homology(1).is_trivial());

    ChainComplex zero({FpAbelianGroup(), FpAbelianGroup()}, {AbHom::zero(FpAbelianGroup(), FpAbelianGroup())});
    CHECK(zero.homology(0).is_trivial());
    CHECK(zero.homology(1).is_trivial());

    CHECK_THROWS_AS(ChainComplex({z, z, z}, {AbHom::identity(z), AbHom::identity(z)}), Error);
}

TEST_CASE("homology agrees with the rank and torsion oracle on random complexes")
{
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n0 = dim(rng), n1 = dim(rng), n2 = dim(rng);
        IntMatrix d1 = oracle::random_matrix(rng, n0, n1, -2, 2);
        if (trial % 4 == 0)
            d1 = IntMatrix(n0, n1);
        IntMatrix kb = kernel_basis(d1);
        IntMatrix d2 = kb * oracle::random_matrix(rng, kb.cols(), n2, -3, 3);

        std::vector<std::size_t> ranks = {n0, n1, n2};
        FreeChainComplex fc(ranks, {SparseMatrix::from_dense(d1), SparseMatrix::from_dense(d2)});
        ChainComplex cc = fc.to_general();

        IntVector torsion;
        for (const auto& d : oracle::invariant_factors(d2))
            if (d != 1)
                torsion.push_back(d);
        const std::size_t r1 = oracle::rational_rank(d1), r2 = oracle::rational_rank(d2);
        FpAbelianGroup h1 = FpAbelianGroup::from_invariants(torsion, n1 - r1 - r2);
        CHECK(fc.homology(1) == h1);
        CHECK(cc.homology(1) == h1);
        CHECK(cc.homology(0) == fc.homology(0));
        CHECK(cc.homology(2) == fc.homology(2));
        CHECK(fc.homology(2).free_rank() == n2 - r2);
    }
}

TEST_CASE("induced maps on homology compose")
{
    // multiplication by 3 on the complex Z --2--> Z induces the identity on Z/2
    FpAbelianGroup z(1);
    ChainComplex c({z, z}, {AbHom(z, z, mat({{2}}))});
    auto h = c.homology_data(0);
    AbHom three(z, z, mat({{3}}));
    AbHom induced = induced_on_homology(h, h, three);
    CHECK(induced.equals(AbHom::identity(h.group)));
}
