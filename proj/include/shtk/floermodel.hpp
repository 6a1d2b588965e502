#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shtk/filtered.hpp"
#include "shtk/json_io.hpp"

namespace shtk {

using Rational = mpq_class;

// Generators with action values; a nonzero differential entry from x to y
// requires action(y) <= action(x).
struct ActionComplex {
    BasedComplex complex;
    std::map<std::string, Rational> action;

    bool operator==(const ActionComplex&) const = default;
};

using Clusters = std::map<std::string, int>;

// One continuation map source -> target between complexes whose actions
// cluster around b_1 < ... < b_k with gap parameter `gap`.
struct ScenarioStep {
    std::vector<Rational> b;
    Rational gap;
    ActionComplex source;
    ActionComplex target;
    Clusters source_clusters;
    Clusters target_clusters;
    ChainMap continuation;
};

// steps[i].continuation : steps[i].source -> steps[i].target, and
// steps[i + 1].target == steps[i].source. The composite is
// steps[0] o steps[1] o ... o steps[n - 1].
struct Scenario {
    std::vector<ScenarioStep> steps;
};

// Level of each generator: the least p with action <= (b_p + b_{p+1}) / 2.
Levels action_levels(const ActionComplex& c, const std::vector<Rational>& b);
FilteredChainMap step_filtered_map(const ScenarioStep& step);

// Throws Error("gap-violated" | "filtration-broken" | "noninteger-graded-entry" |
// "splitting-broken" | "chain-mismatch") with the message naming the step.
void scenario_validate(const Scenario& sc);

// Per level: integer graded map, reduce_integer on its cone, extension of
// scalars; then the filtered lift. Throws Error("graded-map-not-Z-equivalence").
Certificate step_certify(const ScenarioStep& step, LiftStats* stats = nullptr);

struct PipelineResult {
    ChainMap composite;
    Certificate certificate;  // for cone(composite)
};

PipelineResult pipeline_certify(const Scenario& sc);

struct ScenarioParams {
    int steps = 1;
    int clusters = 1;
    int max_rank = 1;  // per cluster and degree
    GroupSpec group = GroupSpec::trivial();
};

Scenario scenario_generate(std::uint64_t seed, const ScenarioParams& params);

// Lower bound on the basis size in each degree of any complex chain
// equivalent to c over Z after augmentation: free rank of H^k plus the number
// of torsion summands of H^k and of H^{k+1}. Degrees with bound 0 are omitted.
std::map<int, long> generator_lower_bound(const BasedComplex& c);

Json to_json(const Scenario& sc);
Scenario scenario_from_json(const Json& j);

}  // namespace shtk
