#include <gtest/gtest.h>

#include "helpers.hpp"
#include "shtk/filtered.hpp"
#include "shtk/generators.hpp"
#include "shtk/json_io.hpp"
#include "shtk/simplify.hpp"

using namespace shtk;
using namespace shtk::test;

namespace {

// u, t at level 1; r, s at level 2; du = t, dr = s + t.
FilteredBasedComplex correction_example()
{
    const GroupPtr g = Group::make(GroupSpec::cyclic(2));
    const RingElement e = ring({{gel({0}), 1}});
    FilteredBasedComplex fc;
    fc.complex = complex(g, {{0, {"u", "r"}}, {1, {"t", "s"}}}, {{0, matrix({{e, e}, {RingElement(), e}})}});
    fc.level = {{"u", 1}, {"t", 1}, {"r", 2}, {"s", 2}};
    return fc;
}

Certificate reduce_ok(const BasedComplex& c)
{
    const ReduceResult r = reduce(c, ReduceOptions{});
    return std::get<Certificate>(r);
}

}  // namespace

TEST(Filtration, Validate)
{
    FilteredBasedComplex fc = correction_example();
    EXPECT_NO_THROW(filtration_validate(fc));

    FilteredBasedComplex single = fc;
    for (auto& [label, p] : single.level) {
        p = 1;
    }
    EXPECT_NO_THROW(filtration_validate(single));

    // d maps level 1 (u) into level 2 (s).
    fc.level = {{"u", 1}, {"t", 2}, {"r", 2}, {"s", 2}};
    EXPECT_EQ(error_code([&] { filtration_validate(fc); }), "not-a-subfiltration");
    fc.level.erase("t");
    EXPECT_EQ(error_code([&] { filtration_validate(fc); }), "missing-level");
}

TEST(Filtration, AssociatedGraded)
{
    const FilteredBasedComplex fc = correction_example();
    const BasedComplex g1 = associated_graded(fc, 1);
    const BasedComplex g2 = associated_graded(fc, 2);
    EXPECT_EQ(g1.basis(0), std::vector<std::string>{"u"});
    EXPECT_EQ(g2.basis(1), std::vector<std::string>{"s"});
    EXPECT_EQ(g2.d(0), matrix({{ring({{gel({0}), 1}})}}));
    for (const auto& [k, b] : fc.complex.bases) {
        EXPECT_EQ(g1.rank(k) + g2.rank(k), b.size());
    }

    FilteredBasedComplex single = fc;
    for (auto& [label, p] : single.level) {
        p = 1;
    }
    EXPECT_EQ(associated_graded(single, 1), fc.complex);
    EXPECT_EQ(error_code([&] { associated_graded(fc, 3); }), "level-out-of-range");
}

TEST(Lift, SingleLevelIsUnchanged)
{
    gen::Rng rng(1);
    const GroupPtr g = Group::make(GroupSpec::cyclic(5));
    const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
    FilteredBasedComplex fc;
    fc.complex = cone(identity_map(c));
    for (const auto& [k, b] : fc.complex.bases) {
        for (const std::string& l : b) {
            fc.level[l] = 1;
        }
    }
    const Certificate cert = reduce_ok(fc.complex);
    LiftStats stats;
    EXPECT_EQ(lift_certificates(fc, {cert}, &stats), cert);
    EXPECT_EQ(stats.corrections, 0u);
}

TEST(Lift, MinimalCorrection)
{
    const FilteredBasedComplex fc = correction_example();
    const Certificate c1 = reduce_ok(associated_graded(fc, 1));
    const Certificate c2 = reduce_ok(associated_graded(fc, 2));
    LiftStats stats;
    const Certificate lifted = lift_certificates(fc, {c1, c2}, &stats);
    EXPECT_NO_THROW(verify_certificate(fc.complex, lifted));
    EXPECT_EQ(stats.corrections, 1u);

    const RingElement e = ring({{gel({0}), 1}});
    const std::vector<Move> expected = {AddSlide{1, 1, 0, e}, Destabilize{0, {{1, 1}}}, Destabilize{0, {{0, 0}}}};
    EXPECT_EQ(lifted.moves, expected);
}

TEST(Lift, RandomFilteredEquivalences)
{
    gen::Rng rng(2);
    std::size_t corrected = 0;
    for (const GroupSpec& spec : {GroupSpec::cyclic(2), GroupSpec::cyclic(5), GroupSpec::free(2)}) {
        const GroupPtr g = Group::make(spec);
        for (int n = 0; n < 30; ++n) {
            const gen::FilteredCase fc = gen::random_filtered_equivalence(rng, g, 1 + n % 4, 4);
            EXPECT_NO_THROW(filtration_validate(fc.map));
            LiftStats stats;
            const Certificate cert = lift_filtered_certificates(fc.map, fc.graded, &stats);
            EXPECT_NO_THROW(verify_certificate(cone(fc.map.map), cert));
            corrected += stats.corrections > 0 ? 1 : 0;
        }
    }
    EXPECT_GT(corrected, 0u);
}

TEST(Lift, RejectsWrongGradedCertificate)
{
    const FilteredBasedComplex fc = correction_example();
    const Certificate c1 = reduce_ok(associated_graded(fc, 1));
    EXPECT_EQ(error_code([&] { lift_certificates(fc, {c1, c1}); }), "graded-certificate-invalid");
}
