#include <gtest/gtest.h>

#include "helpers.hpp"
#include "shtk/generators.hpp"
#include "shtk/simplify.hpp"

using namespace shtk;
using namespace shtk::test;

TEST(ChainMap, IdentityAndZero)
{
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    gen::Rng rng(1);
    const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
    EXPECT_NO_THROW(is_chain_map(identity_map(c)));
    EXPECT_NO_THROW(is_chain_map(zero_map(c, c)));
}

TEST(ChainMap, RandomFamilyIsRejected)
{
    const GroupPtr z2 = Group::make(GroupSpec::cyclic(2));
    const BasedComplex c = one_step(z2);
    ChainMap f = zero_map(c, c);
    // f^0 = e, f^1 = 0 does not commute with d = g - e.
    f.matrices[0] = matrix({{ring({{gel({0}), 1}})}});
    EXPECT_EQ(error_code([&] { is_chain_map(f); }), "not-chain-map");
}

TEST(Cone, IdentityOnOneGenerator)
{
    const GroupPtr z2 = Group::make(GroupSpec::cyclic(2));
    const BasedComplex c = complex(z2, {{0, {"a"}}}, {});
    const BasedComplex k = cone(identity_map(c));
    EXPECT_EQ(k.basis(-1), std::vector<std::string>{cone_source_label("a")});
    EXPECT_EQ(k.basis(0), std::vector<std::string>{cone_target_label("a")});
    EXPECT_EQ(k.d(-1), matrix({{ring({{gel({0}), 1}})}}));
}

TEST(Cone, ZeroMapToZeroIsShift)
{
    const GroupPtr g = Group::make(GroupSpec::free(2));
    gen::Rng rng(2);
    const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
    const BasedComplex k = cone(zero_map(c, BasedComplex(g)));
    const BasedComplex s = shift(c, 1);
    EXPECT_EQ(k.bases.size(), s.bases.size());
    for (const auto& [deg, basis] : s.bases) {
        ASSERT_EQ(k.rank(deg), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            EXPECT_EQ(k.basis(deg)[i], cone_source_label(basis[i]));
        }
    }
    EXPECT_EQ(k.diffs, s.diffs);
}

TEST(Cone, RandomMapsSquareToZero)
{
    gen::Rng rng(3);
    for (const GroupSpec& spec : {GroupSpec::cyclic(5), GroupSpec::free(2)}) {
        const GroupPtr g = Group::make(spec);
        for (int n = 0; n < 30; ++n) {
            const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
            const gen::SimpleMap f = gen::random_simple_map(rng, c, 4, true);
            EXPECT_NO_THROW(complex_validate(cone(f.map)));
        }
    }
}

TEST(Compose, Identities)
{
    gen::Rng rng(4);
    const GroupPtr g = Group::make(GroupSpec::free(2));
    const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
    const ChainMap f = gen::random_simple_map(rng, c, 3, true).map;
    EXPECT_EQ(compose(identity_map(f.target), f), f);
    EXPECT_EQ(compose(f, identity_map(f.source)), f);
}

TEST(Compose, RandomComposableMaps)
{
    gen::Rng rng(5);
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    for (int n = 0; n < 20; ++n) {
        const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
        const ChainMap f = gen::random_simple_map(rng, c, 3, true).map;
        const ChainMap h = gen::random_simple_map(rng, f.target, 3, true).map;
        EXPECT_NO_THROW(is_chain_map(compose(h, f)));
    }
    const BasedComplex a = one_step(g);
    const BasedComplex b = complex(g, {{0, {"z"}}}, {});
    EXPECT_EQ(error_code([&] { compose(identity_map(b), identity_map(a)); }), "boundary-mismatch");
}

TEST(Extend, IdentityAndAugmentation)
{
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    const ZComplex z = zcomplex({{0, {"a", "b"}}, {1, {"c", "d"}}}, {{0, int_matrix({{1, 1}, {0, 1}})}});
    IntChainMap id;
    id.source = z;
    id.target = z;
    id.matrices[0] = int_matrix({{1, 0}, {0, 1}});
    id.matrices[1] = int_matrix({{1, 0}, {0, 1}});
    EXPECT_EQ(extend_scalars(id, g), identity_map(extend_scalars(z, g)));

    const IntMatrix m = int_matrix({{3, -2, 0}, {7, 1, -9}});
    EXPECT_EQ(augment(extend(m, *g)), m);
}

TEST(Extend, CertifiedAfterIntegerReduction)
{
    const GroupPtr g = Group::make(GroupSpec::free(2));
    IntChainMap f;
    f.source = zcomplex({{0, {"a", "b"}}}, {});
    f.target = zcomplex({{0, {"c", "d"}}}, {});
    f.matrices[0] = int_matrix({{1, 1}, {0, 1}});
    const Certificate cert = reduce_integer(base_change_augmentation(cone(extend_scalars(f, Group::make(GroupSpec::trivial())))));
    const BasedComplex k = cone(extend_scalars(f, g));
    EXPECT_NO_THROW(verify_certificate(k, extend_certificate(cert, k)));
}
