#include <gtest/gtest.h>

#include "helpers.hpp"
#include "shtk/generators.hpp"
#include "shtk/kernels.hpp"

using namespace shtk;
using namespace shtk::test;

namespace {

Matrix random_matrix(gen::Rng& rng, const Group& g, std::size_t r, std::size_t c)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            if (rng.chance(2, 3)) {
                m(i, j) = gen::random_ring_element(rng, g, 3, 5);
            }
        }
    }
    return m;
}

IntMatrix random_int_matrix(gen::Rng& rng, std::size_t r, std::size_t c)
{
    IntMatrix m(r, c);
    for (auto& x : m.data) {
        x = rng.range(-9, 9);
    }
    return m;
}

}  // namespace

TEST(Kernels, ComposeSerialMatchesParallel)
{
    gen::Rng rng(1);
    for (const GroupSpec& spec : {GroupSpec::cyclic(5), GroupSpec::free(2)}) {
        const GroupPtr g = Group::make(spec);
        for (std::size_t n : {1u, 3u, 17u, 40u}) {
            const Matrix a = random_matrix(rng, *g, n, n + 1);
            const Matrix b = random_matrix(rng, *g, n + 1, n + 2);
            const Matrix s = kernels::serial::compose(*g, a, b);
            EXPECT_EQ(kernels::parallel::compose(*g, a, b), s);
            EXPECT_EQ(kernels::compose(*g, a, b), s);
        }
    }
}

TEST(Kernels, ComposeMatchesEntryFormula)
{
    gen::Rng rng(2);
    const GroupPtr g = Group::make(GroupSpec::free(2));
    const Matrix after = random_matrix(rng, *g, 3, 4);
    const Matrix before = random_matrix(rng, *g, 4, 2);
    const Matrix out = kernels::serial::compose(*g, after, before);
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t j = 0; j < 2; ++j) {
            RingElement sum;
            for (std::size_t i = 0; i < 4; ++i) {
                sum += ring_mul(*g, before(i, j), after(l, i));
            }
            EXPECT_EQ(out(l, j), sum);
        }
    }
}

TEST(Kernels, SmithKnownValues)
{
    EXPECT_EQ(kernels::serial::smith_invariants(int_matrix({{2, 4}, {6, 8}})), (std::vector<Integer>{2, 4}));
    EXPECT_EQ(kernels::serial::smith_invariants(int_matrix({{0, 0}, {0, 0}})), std::vector<Integer>{});
    EXPECT_EQ(kernels::serial::smith_invariants(int_matrix({{2, 0}, {0, 3}})), (std::vector<Integer>{1, 6}));
}

TEST(Kernels, SmithSerialMatchesParallel)
{
    gen::Rng rng(3);
    for (std::size_t n : {1u, 2u, 5u, 12u, 30u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const IntMatrix m = random_int_matrix(rng, n, n + rep % 3);
            const auto s = kernels::serial::smith_invariants(m);
            EXPECT_EQ(kernels::parallel::smith_invariants(m), s);
            for (std::size_t i = 1; i < s.size(); ++i) {
                EXPECT_EQ(s[i] % s[i - 1], 0);
            }
        }
    }
}
