#include <gtest/gtest.h>

#include "helpers.hpp"
#include "shtk/filtered.hpp"
#include "shtk/generators.hpp"
#include "shtk/json_io.hpp"
#include "shtk/simplify.hpp"

using namespace shtk;
using namespace shtk::test;

TEST(Moves, StabilizeThenDestabilize)
{
    gen::Rng rng(1);
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
    for (int k = -1; k <= 3; ++k) {
        const BasedComplex s = apply_move(c, Stabilize{k, 1});
        const Destabilize undo{k, {{s.rank(k) - 1, s.rank(k + 1) - 1}}};
        EXPECT_EQ(apply_move(s, undo), c);
    }
}

TEST(Moves, ZeroSlideIsIdentity)
{
    gen::Rng rng(2);
    const GroupPtr g = Group::make(GroupSpec::free(2));
    gen::ComplexParams p;
    p.max_rank = 3;
    const BasedComplex c = gen::random_complex(rng, g, p);
    for (const auto& [k, b] : c.bases) {
        if (b.size() >= 2) {
            EXPECT_EQ(apply_move(c, AddSlide{k, 0, 1, RingElement()}), c);
        }
    }
}

TEST(Moves, DestabilizeTrivialPair)
{
    const GroupPtr g = Group::make(GroupSpec::cyclic(2));
    const BasedComplex c = complex(g, {{0, {"a"}}, {1, {"b"}}}, {{0, matrix({{ring({{gel({0}), 1}})}})}});
    EXPECT_TRUE(apply_move(c, Destabilize{0, {{0, 0}}}).is_zero());
    EXPECT_EQ(error_code([&] { apply_move(one_step(g), Destabilize{0, {{0, 0}}}); }),
              "destabilize-block-not-trivial");
    EXPECT_EQ(error_code([&] { apply_move(c, ScaleUnit{0, 3, 1, gel({0})}); }), "index-out-of-range");
}

TEST(Moves, RandomMovesKeepDSquaredZero)
{
    gen::Rng rng(3);
    for (const GroupSpec& spec : {GroupSpec::cyclic(2), GroupSpec::cyclic(5), GroupSpec::free(2)}) {
        const GroupPtr g = Group::make(spec);
        for (int n = 0; n < 100; ++n) {
            BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
            for (int i = 0; i < 5; ++i) {
                apply_move_in_place(c, gen::random_move(rng, c));
                EXPECT_NO_THROW(complex_validate(c));
            }
        }
    }
}

TEST(Moves, InverseMoveUndoes)
{
    gen::Rng rng(4);
    const GroupPtr g = Group::make(GroupSpec::free(2));
    for (int n = 0; n < 100; ++n) {
        const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
        const Move m = gen::random_move(rng, c, false);
        const BasedComplex after = apply_move(c, m);
        EXPECT_EQ(apply_move(after, inverse_move(c, m)), c) << m.name();
    }
}

TEST(Verify, EmptyCertificateOnZero)
{
    const BasedComplex z(Group::make(GroupSpec::cyclic(3)));
    EXPECT_NO_THROW(verify_certificate(z, Certificate{complex_hash(z), {}}));
}

TEST(Verify, FilteredExampleAndTruncation)
{
    const GroupPtr g = Group::make(GroupSpec::cyclic(2));
    const RingElement e = ring({{gel({0}), 1}});
    const BasedComplex b =
        complex(g, {{0, {"u", "r"}}, {1, {"t", "s"}}}, {{0, matrix({{e, e}, {RingElement(), e}})}});
    Certificate cert{complex_hash(b),
                     {AddSlide{1, 1, 0, e}, Destabilize{0, {{1, 1}}}, Destabilize{0, {{0, 0}}}}};
    EXPECT_NO_THROW(verify_certificate(b, cert));

    cert.moves.pop_back();
    EXPECT_EQ(error_code([&] { verify_certificate(b, cert); }), "nonzero-residual");
    cert.initial_hash = complex_hash(BasedComplex(g));
    EXPECT_EQ(error_code([&] { verify_certificate(b, cert); }), "hash-mismatch");
}

TEST(ComposeCertificates, IdentityWithItself)
{
    gen::Rng rng(5);
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
    const ChainMap id = identity_map(c);
    const Certificate ci = gen::certify_cone_identity(c);
    const Certificate cc = compose_certificates(id, id, ci, ci);
    EXPECT_NO_THROW(verify_certificate(cone(id), cc));
}

TEST(ComposeCertificates, InclusionThenRetraction)
{
    // f includes C into C + (L --id--> L); g projects back.
    const GroupPtr g = Group::make(GroupSpec::cyclic(2));
    const RingElement e = ring({{gel({0}), 1}});
    const BasedComplex c = one_step(g);
    const BasedComplex d = apply_move(c, Stabilize{0, 1});
    ChainMap f = zero_map(c, d);
    f.matrices[0] = matrix({{e}, {RingElement()}});
    f.matrices[1] = matrix({{e}, {RingElement()}});
    ChainMap r = zero_map(d, c);
    r.matrices[0] = matrix({{e, RingElement()}});
    r.matrices[1] = matrix({{e, RingElement()}});

    const auto certify = [](const ChainMap& m) {
        const ReduceResult res = reduce(cone(m), ReduceOptions{});
        return std::get<Certificate>(res);
    };
    const Certificate cf = certify(f);
    const Certificate cr = certify(r);
    const Certificate out = compose_certificates(f, r, cf, cr);
    EXPECT_NO_THROW(verify_certificate(cone(compose(r, f)), out));
}

TEST(ComposeCertificates, RandomSimplePairs)
{
    gen::Rng rng(6);
    for (const GroupSpec& spec : {GroupSpec::cyclic(5), GroupSpec::free(2)}) {
        const GroupPtr g = Group::make(spec);
        for (int n = 0; n < 30; ++n) {
            const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
            const gen::SimpleMap f = gen::random_simple_map(rng, c, 3, true);
            const gen::SimpleMap h = gen::random_simple_map(rng, f.map.target, 3, true);
            ComposeStats stats;
            const Certificate out = compose_certificates(f.map, h.map, f.cert, h.cert, &stats);
            EXPECT_NO_THROW(verify_certificate(cone(compose(h.map, f.map)), out));
            EXPECT_GE(out.size(), stats.setup_moves);
        }
    }
}

TEST(ComposeCertificates, RejectsBadInput)
{
    gen::Rng rng(7);
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
    const gen::SimpleMap f = gen::random_simple_map(rng, c, 3, true);
    Certificate broken = f.cert;
    broken.moves.pop_back();
    EXPECT_EQ(error_code([&] { compose_certificates(f.map, identity_map(f.map.target), broken,
                                                    gen::certify_cone_identity(f.map.target)); }),
              "certificate-invalid");
    const BasedComplex other = one_step(g);
    EXPECT_EQ(error_code([&] {
                  compose_certificates(identity_map(c), identity_map(other), gen::certify_cone_identity(c),
                                       gen::certify_cone_identity(other));
              }),
              "boundary-mismatch");
}
