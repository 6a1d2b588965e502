#include <gtest/gtest.h>

#include "helpers.hpp"
#include "shtk/generators.hpp"
#include "shtk/json_io.hpp"
#include "shtk/simplify.hpp"

using namespace shtk;
using namespace shtk::test;

namespace {

std::size_t count_ops(const Certificate& c, std::size_t index)
{
    std::size_t n = 0;
    for (const Move& m : c.moves) {
        n += m.op.index() == index ? 1 : 0;
    }
    return n;
}

BasedComplex z5_unit_complex()
{
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    return complex(g, {{0, {"a"}}, {1, {"b"}}},
                   {{0, matrix({{ring({{gel({1}), 1}, {gel({4}), 1}, {gel({0}), -1}})}})}});
}

}  // namespace

TEST(Reduce, ConeOfIdentityAlwaysCertified)
{
    gen::Rng rng(1);
    for (const GroupSpec& spec : {GroupSpec::cyclic(2), GroupSpec::cyclic(5), GroupSpec::free(2)}) {
        const GroupPtr g = Group::make(spec);
        for (int n = 0; n < 30; ++n) {
            gen::ComplexParams p;
            p.max_rank = 1 + n % 5;
            const BasedComplex c = gen::random_complex(rng, g, p);
            const BasedComplex k = cone(identity_map(c));
            const ReduceResult r = reduce(k, ReduceOptions{});
            ASSERT_TRUE(std::holds_alternative<Certificate>(r));
            EXPECT_NO_THROW(verify_certificate(k, std::get<Certificate>(r)));
        }
    }
}

TEST(Reduce, Z5UnitIsObstruction)
{
    const BasedComplex c = z5_unit_complex();
    const ReduceResult r = reduce(c, ReduceOptions{});
    const auto* o = std::get_if<Obstruction>(&r);
    ASSERT_NE(o, nullptr);
    EXPECT_EQ(o->degree, 0);
    EXPECT_EQ(o->matrix, c.d(0));
    ASSERT_TRUE(o->inverse.has_value());
    EXPECT_TRUE(o->inverse_verified);
    EXPECT_EQ((*o->inverse)(0, 0), ring({{gel({2}), 1}, {gel({3}), 1}, {gel({0}), -1}}));
}

TEST(Reduce, ZeroComplexGivesEmptyCertificate)
{
    const BasedComplex z(Group::make(GroupSpec::cyclic(5)));
    const ReduceResult r = reduce(z, ReduceOptions{});
    ASSERT_TRUE(std::holds_alternative<Certificate>(r));
    EXPECT_EQ(std::get<Certificate>(r).size(), 0u);
    EXPECT_EQ(std::get<Certificate>(r).initial_hash, complex_hash(z));
}

TEST(Reduce, StuckReasons)
{
    const GroupPtr z2 = Group::make(GroupSpec::cyclic(2));
    const ReduceResult r = reduce(one_step(z2), ReduceOptions{});
    ASSERT_TRUE(std::holds_alternative<Stuck>(r));
    EXPECT_EQ(std::get<Stuck>(r).reason, "not-acyclic");

    gen::Rng rng(2);
    const BasedComplex k = cone(identity_map(gen::random_complex(rng, z2, gen::ComplexParams{})));
    ReduceOptions none;
    none.budget = 0;
    const ReduceResult b = reduce(k, none);
    if (!k.is_zero()) {
        ASSERT_TRUE(std::holds_alternative<Stuck>(b));
        EXPECT_EQ(std::get<Stuck>(b).reason, "budget");
        EXPECT_EQ(std::get<Stuck>(b).residual, k);
    }
}

TEST(Reduce, RejectsInvalidComplex)
{
    const GroupPtr z2 = Group::make(GroupSpec::cyclic(2));
    const RingElement e = ring({{gel({0}), 1}});
    const BasedComplex bad =
        complex(z2, {{0, {"a"}}, {1, {"b"}}, {2, {"c"}}}, {{0, matrix({{e}})}, {1, matrix({{e}})}});
    EXPECT_EQ(error_code([&] { reduce(bad, ReduceOptions{}); }), "invalid-complex");
}

TEST(ReduceInteger, HandElimination)
{
    const ZComplex c = zcomplex({{0, {"a", "b"}}, {1, {"c", "d"}}}, {{0, int_matrix({{1, 1}, {0, 1}})}});
    const Certificate cert = reduce_integer(c);
    EXPECT_NO_THROW(verify_certificate(as_based(c), cert));
    EXPECT_EQ(cert.size(), 3u);
    EXPECT_EQ(count_ops(cert, 2), 1u);  // AddSlide
    EXPECT_EQ(count_ops(cert, 1), 2u);  // Destabilize
}

TEST(ReduceInteger, SingleDestabilize)
{
    const ZComplex c = zcomplex({{0, {"a"}}, {1, {"b"}}}, {{0, int_matrix({{1}})}});
    const Certificate cert = reduce_integer(c);
    ASSERT_EQ(cert.size(), 1u);
    EXPECT_EQ(cert.moves[0], Move(Destabilize{0, {{0, 0}}}));
}

TEST(ReduceInteger, TorsionIsNotAcyclic)
{
    const ZComplex c = zcomplex({{0, {"a"}}, {1, {"b"}}}, {{0, int_matrix({{2}})}});
    EXPECT_EQ(error_code([&] { reduce_integer(c); }), "not-acyclic");
}

TEST(ReduceInteger, RandomAcyclic)
{
    gen::Rng rng(3);
    for (int n = 0; n < 100; ++n) {
        const ZComplex c = gen::random_acyclic_integer(rng, 1 + n % 10, 2 + n % 3);
        EXPECT_NO_THROW(verify_certificate(as_based(c), reduce_integer(c)));
    }
}
