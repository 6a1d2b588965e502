#include <gtest/gtest.h>

#include "helpers.hpp"
#include "shtk/filtered.hpp"
#include "shtk/generators.hpp"
#include "shtk/json_io.hpp"

using namespace shtk;
using namespace shtk::test;

TEST(Json, ComplexRoundTrip)
{
    gen::Rng rng(1);
    const std::vector<GroupSpec> specs = {
        GroupSpec::cyclic(5), GroupSpec::free(2), GroupSpec::free_abelian(2),
        GroupSpec::finite_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})};
    for (const GroupSpec& spec : specs) {
        const GroupPtr g = Group::make(spec);
        for (int n = 0; n < 10; ++n) {
            const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
            EXPECT_EQ(complex_from_json(to_json(c)), c);
            EXPECT_EQ(complex_from_json(Json::parse(canonical(to_json(c)))), c);
        }
    }
}

TEST(Json, MapAndCertificateRoundTrip)
{
    gen::Rng rng(2);
    const GroupPtr g = Group::make(GroupSpec::free(2));
    const BasedComplex c = gen::random_complex(rng, g, gen::ComplexParams{});
    const gen::SimpleMap f = gen::random_simple_map(rng, c, 4, true);
    EXPECT_EQ(chain_map_from_json(to_json(f.map)), f.map);
    EXPECT_EQ(certificate_from_json(to_json(f.cert, g->kind())), f.cert);
}

TEST(Json, FilteredMapRoundTrip)
{
    gen::Rng rng(3);
    const gen::FilteredCase fc = gen::random_filtered_equivalence(rng, Group::make(GroupSpec::cyclic(5)), 3, 3);
    const FilteredChainMap back = filtered_map_from_json(to_json(fc.map));
    EXPECT_EQ(back.map, fc.map.map);
    EXPECT_EQ(back.source_levels, fc.map.source_levels);
    EXPECT_EQ(back.target_levels, fc.map.target_levels);
}

TEST(Json, BigIntegersAsStrings)
{
    const GroupPtr g = Group::make(GroupSpec::cyclic(2));
    RingElement big = RingElement(g->identity(), Integer("123456789012345678901234567890"));
    const Json j = to_json(big, g->kind());
    EXPECT_EQ(ring_element_from_json(j, "x"), big);
    EXPECT_NE(j.dump().find("\"123456789012345678901234567890\""), std::string::npos);
}

TEST(Json, HashIsStableAndSensitive)
{
    const GroupPtr g = Group::make(GroupSpec::cyclic(2));
    const BasedComplex c = one_step(g);
    EXPECT_EQ(complex_hash(c), complex_hash(complex_from_json(to_json(c))));
    EXPECT_EQ(complex_hash(c).size(), 64u);
    EXPECT_NE(complex_hash(c), complex_hash(shift(c, 1)));
}

TEST(Json, MalformedInput)
{
    EXPECT_EQ(error_code([] { complex_from_json(Json::parse(R"({"degrees": {"0": ["a"]}})")); }),
              "malformed-json");
    const Json mismatch = Json::parse(
        R"({"group": {"kind": "cyclic", "order": 2}, "degrees": {"0": ["a"], "1": ["b"]},
            "differentials": {"0": [[[[0, 1]], [[0, 1]]]]}})");
    EXPECT_EQ(error_code([&] { complex_from_json(mismatch); }), "dimension-mismatch");
    EXPECT_EQ(error_code([] { read_json_file("/nonexistent/file.json"); }), "io-error");
}
