#include <gtest/gtest.h>

#include "helpers.hpp"
#include "shtk/generators.hpp"
#include "shtk/kernels.hpp"

using namespace shtk;
using namespace shtk::test;

TEST(Complex, ValidateExamples)
{
    const GroupPtr z2 = Group::make(GroupSpec::cyclic(2));
    EXPECT_NO_THROW(complex_validate(BasedComplex(z2)));
    EXPECT_NO_THROW(complex_validate(one_step(z2)));

    const RingElement d0 = ring({{gel({1}), 1}, {gel({0}), -1}});
    const BasedComplex bad = complex(z2, {{0, {"a"}}, {1, {"b"}}, {2, {"c"}}},
                                     {{0, matrix({{d0}})}, {1, matrix({{ring({{gel({0}), 1}})}})}});
    try {
        complex_validate(bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), "d-squared-nonzero");
        EXPECT_NE(e.message().find("degree 0"), std::string::npos) << e.message();
    }
}

TEST(Complex, ValidateMatchesDSquared)
{
    gen::Rng rng(3);
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    for (int n = 0; n < 30; ++n) {
        gen::ComplexParams p;
        p.max_rank = 3;
        BasedComplex c = gen::random_complex(rng, g, p);
        EXPECT_NO_THROW(complex_validate(c));
        // Perturbing one entry of a differential followed by a nonzero one breaks d o d = 0.
        for (auto& [k, m] : c.diffs) {
            if (c.diffs.count(k + 1) && !c.diffs.at(k + 1).is_zero()) {
                const Matrix next = c.diffs.at(k + 1);
                std::size_t col = 0;
                while (col < next.cols()) {
                    bool nz = false;
                    for (std::size_t r = 0; r < next.rows(); ++r) {
                        nz = nz || !next(r, col).is_zero();
                    }
                    if (nz) {
                        break;
                    }
                    ++col;
                }
                m(col, 0) += RingElement(g->identity());
                const Matrix prod = kernels::compose(*g, next, m);
                EXPECT_EQ(prod.is_zero(), error_code([&] { complex_validate(c); }).empty());
                break;
            }
        }
    }
}

TEST(Complex, Shift)
{
    const GroupPtr z2 = Group::make(GroupSpec::cyclic(2));
    const BasedComplex c = one_step(z2);
    EXPECT_EQ(shift(shift(c, 1), -1), c);
    EXPECT_EQ(shift(BasedComplex(z2), 1), BasedComplex(z2));
    const BasedComplex s = shift(c, 1);
    EXPECT_EQ(s.basis(-1), std::vector<std::string>{"a"});
    EXPECT_EQ(s.basis(0), std::vector<std::string>{"b"});
    EXPECT_EQ(s.d(-1)(0, 0), -c.d(0)(0, 0));
}

TEST(Complex, DirectSum)
{
    const GroupPtr g = Group::make(GroupSpec::free(2));
    const BasedComplex c = one_step(g);
    EXPECT_EQ(direct_sum(c, BasedComplex(g)), c);
    EXPECT_EQ(direct_sum(BasedComplex(g), c), c);
    gen::Rng rng(5);
    for (int n = 0; n < 20; ++n) {
        gen::ComplexParams p;
        p.prefix = "x";
        const BasedComplex a = gen::random_complex(rng, g, p);
        p.prefix = "y";
        const BasedComplex b = gen::random_complex(rng, g, p);
        EXPECT_NO_THROW(complex_validate(direct_sum(a, b)));
    }
}

TEST(Complex, BaseChange)
{
    const GroupPtr z3 = Group::make(GroupSpec::cyclic(3));
    const BasedComplex c = complex(z3, {{0, {"a", "b"}}, {1, {"c"}}},
                                   {{0, matrix({{ring({{gel({1}), 1}}), ring({{gel({2}), -1}})}})}});
    const ZComplex z = base_change_augmentation(c);
    EXPECT_EQ(z.d(0), int_matrix({{1, -1}}));
    EXPECT_TRUE(base_change_augmentation(one_step(z3)).d(0).is_zero());

    gen::Rng rng(9);
    for (int n = 0; n < 20; ++n) {
        const BasedComplex r = gen::random_complex(rng, z3, gen::ComplexParams{});
        EXPECT_NO_THROW(complex_validate(base_change_augmentation(r)));
    }
}

TEST(Complex, HomologyZ2OneStep)
{
    const GroupPtr z2 = Group::make(GroupSpec::cyclic(2));
    const std::vector<HomologyGroup> h = homology_Z(one_step(z2));
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(h[0], (HomologyGroup{0, 1, {}}));
    EXPECT_EQ(h[1], (HomologyGroup{1, 1, {}}));

    // Oracle: restriction of scalars gives the 2x2 matrix with columns (-1, 1), (1, -1)
    // whose Smith form is diag(1, 0): kernel and cokernel are both Z.
    const ZComplex r = restrict_scalars(one_step(z2));
    EXPECT_EQ(kernels::serial::smith_invariants(r.d(0)), std::vector<Integer>{1});
}

TEST(Complex, HomologyOfZeroAndCones)
{
    const GroupPtr z5 = Group::make(GroupSpec::cyclic(5));
    EXPECT_TRUE(homology_Z(BasedComplex(z5)).empty());
    gen::Rng rng(13);
    for (int n = 0; n < 20; ++n) {
        const BasedComplex c = gen::random_complex(rng, z5, gen::ComplexParams{});
        const gen::SimpleMap f = gen::random_simple_map(rng, c, 3, true);
        for (const HomologyGroup& h : homology_Z(cone(f.map))) {
            EXPECT_TRUE(h.is_zero());
        }
    }
    EXPECT_EQ(error_code([] { homology_Z(one_step(Group::make(GroupSpec::free(1)))); }), "unsupported-group");
}
