#include "shtk/floermodel.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include "shtk/error.hpp"
#include "shtk/generators.hpp"
#include "shtk/simplify.hpp"

namespace shtk {

namespace {

bool is_integer_entry(const Group& G, const RingElement& a)
{
    return a.is_zero() || (a.support_size() == 1 && G.is_identity(a.terms().front().first));
}

Rational threshold(const std::vector<Rational>& b, std::size_t p)
{
    return (b[p] + b[p + 1]) / 2;
}

void check_actions(const ActionComplex& c, const std::vector<Rational>& b, const Rational& gap, const char* side)
{
    for (const auto& [k, basis] : c.complex.bases) {
        for (const auto& l : basis) {
            auto it = c.action.find(l);
            if (it == c.action.end()) {
                throw Error("filtration-broken", std::string(side) + " generator " + l + " has no action value");
            }
            const bool near = std::any_of(b.begin(), b.end(), [&](const Rational& v) { return abs(it->second - v) < gap; });
            if (!near) {
                throw Error("gap-violated", std::string(side) + " generator " + l + " has action " +
                                                it->second.get_str() + " outside the gap neighbourhoods");
            }
        }
    }
}

void check_monotone(const ActionComplex& c, const char* side)
{
    for (const auto& [k, d] : c.complex.diffs) {
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t col = 0; col < d.cols(); ++col) {
                if (d(r, col).is_zero()) {
                    continue;
                }
                const std::string& x = c.complex.basis(k)[col];
                const std::string& y = c.complex.basis(k + 1)[r];
                if (c.action.at(y) > c.action.at(x)) {
                    throw Error("filtration-broken", std::string(side) + " differential " + x + " -> " + y +
                                                         " increases the action");
                }
            }
        }
    }
}

void check_clusters(const BasedComplex& c, const Clusters& clusters, const Levels& levels, const char* side)
{
    std::map<int, int> level_of_cluster;
    for (const auto& [k, basis] : c.bases) {
        for (const auto& l : basis) {
            auto it = clusters.find(l);
            if (it == clusters.end()) {
                throw Error("splitting-broken", std::string(side) + " generator " + l + " belongs to no cluster");
            }
            const int p = levels.at(l);
            auto [pos, fresh] = level_of_cluster.emplace(it->second, p);
            if (!fresh && pos->second != p) {
                throw Error("splitting-broken", std::string(side) + " cluster " + std::to_string(it->second) +
                                                    " spans levels " + std::to_string(pos->second) + " and " +
                                                    std::to_string(p));
            }
        }
    }
}

// Entries between generators of the same level: zero across clusters and
// integer within a cluster.
void check_graded_entry(const Group& G, const RingElement& a, const std::string& x, const std::string& y,
                        const Levels& lx, const Levels& ly, const Clusters& cx, const Clusters& cy, const char* what)
{
    if (a.is_zero() || lx.at(x) != ly.at(y)) {
        return;
    }
    if (cx.at(x) != cy.at(y)) {
        throw Error("splitting-broken", std::string(what) + " entry " + x + " -> " + y + " joins clusters " +
                                            std::to_string(cx.at(x)) + " and " + std::to_string(cy.at(y)));
    }
    if (!is_integer_entry(G, a)) {
        throw Error("noninteger-graded-entry", std::string(what) + " entry " + x + " -> " + y +
                                                   " is not an integer multiple of e");
    }
}

void check_graded(const ActionComplex& c, const Clusters& clusters, const Levels& levels, const char* side)
{
    for (const auto& [k, d] : c.complex.diffs) {
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t col = 0; col < d.cols(); ++col) {
                check_graded_entry(c.complex.ring(), d(r, col), c.complex.basis(k)[col], c.complex.basis(k + 1)[r],
                                   levels, levels, clusters, clusters, side);
            }
        }
    }
}

void validate_step(const ScenarioStep& s)
{
    const ChainMap& f = s.continuation;
    if (!(f.source == s.source.complex) || !(f.target == s.target.complex)) {
        throw Error("chain-mismatch", "continuation does not run between the step's complexes");
    }
    is_chain_map(f);
    if (s.b.empty()) {
        throw Error("gap-violated", "no action values");
    }
    if (s.gap <= 0) {
        throw Error("gap-violated", "gap parameter " + s.gap.get_str() + " is not positive");
    }
    for (std::size_t i = 0; i + 1 < s.b.size(); ++i) {
        if (s.b[i + 1] <= s.b[i]) {
            throw Error("gap-violated", "action values must be strictly increasing (b" + std::to_string(i + 1) +
                                            " = " + s.b[i].get_str() + ", b" + std::to_string(i + 2) + " = " +
                                            s.b[i + 1].get_str() + ")");
        }
        const Rational limit = (s.b[i + 1] - s.b[i]) / 4;
        if (s.gap >= limit) {
            throw Error("gap-violated", "gap " + s.gap.get_str() + " is not below (b" + std::to_string(i + 2) +
                                            " - b" + std::to_string(i + 1) + ")/4 = " + limit.get_str());
        }
    }
    check_actions(s.source, s.b, s.gap, "source");
    check_actions(s.target, s.b, s.gap, "target");
    check_monotone(s.source, "source");
    check_monotone(s.target, "target");
    const FilteredChainMap fm = step_filtered_map(s);
    try {
        filtration_validate(fm);
    } catch (const Error& e) {
        throw Error("filtration-broken", e.what());
    }
    check_clusters(s.source.complex, s.source_clusters, fm.source_levels, "source");
    check_clusters(s.target.complex, s.target_clusters, fm.target_levels, "target");
    check_graded(s.source, s.source_clusters, fm.source_levels, "source");
    check_graded(s.target, s.target_clusters, fm.target_levels, "target");
    for (const auto& [k, m] : f.matrices) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t col = 0; col < m.cols(); ++col) {
                check_graded_entry(f.ring(), m(r, col), f.source.basis(k)[col], f.target.basis(k)[r],
                                   fm.source_levels, fm.target_levels, s.source_clusters, s.target_clusters,
                                   "continuation");
            }
        }
    }
}

[[noreturn]] void rethrow_for_step(const Error& e, std::size_t i)
{
    throw Error(e.code(), "step " + std::to_string(i) + ": " + e.message());
}

Rational rational_from_json(const Json& j, const std::string& path)
{
    Rational q;
    if (j.is_number_integer()) {
        q = Rational(std::to_string(j.get<std::int64_t>()));
        return q;
    }
    if (!j.is_string() || q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
        throw Error("malformed-json", path + ": expected a rational \"p/q\"");
    }
    q.canonicalize();
    return q;
}

Json action_to_json(const ActionComplex& c, const Clusters& clusters)
{
    Json j = to_json(c.complex);
    Json action = Json::object();
    for (const auto& [l, a] : c.action) {
        action[l] = a.get_str();
    }
    j["action"] = action;
    j["clusters"] = clusters;
    return j;
}

std::pair<ActionComplex, Clusters> action_from_json(const Json& j, const std::string& path)
{
    ActionComplex c{complex_from_json(j, path), {}};
    if (!j.contains("action") || !j["action"].is_object()) {
        throw Error("malformed-json", path + ": missing field 'action'");
    }
    for (const auto& [l, a] : j["action"].items()) {
        c.action[l] = rational_from_json(a, path + ".action." + l);
    }
    Clusters clusters;
    if (!j.contains("clusters") || !j["clusters"].is_object()) {
        throw Error("malformed-json", path + ": missing field 'clusters'");
    }
    for (const auto& [l, z] : j["clusters"].items()) {
        if (!z.is_number_integer()) {
            throw Error("malformed-json", path + ".clusters." + l + ": expected an integer");
        }
        clusters[l] = z.get<int>();
    }
    return {std::move(c), std::move(clusters)};
}

// Generator bookkeeping for scenario_generate.
struct Layout {
    std::vector<Rational> b;
    int levels = 1;

    int level_of_cluster(int z) const { return z % levels + 1; }

    ActionComplex with_actions(const BasedComplex& c, const Clusters& clusters) const
    {
        ActionComplex out{c, {}};
        for (const auto& [k, basis] : c.bases) {
            for (const auto& l : basis) {
                Rational a = b[static_cast<std::size_t>(level_of_cluster(clusters.at(l)) - 1)] - Rational(k, 8);
                a.canonicalize();
                out.action[l] = a;
            }
        }
        return out;
    }

    Levels levels_of(const BasedComplex& c, const Clusters& clusters) const
    {
        Levels out;
        for (const auto& [k, basis] : c.bases) {
            for (const auto& l : basis) {
                out[l] = level_of_cluster(clusters.at(l));
            }
        }
        return out;
    }
};

// Positions (degree, i, j) of distinct generators in the same degree
// satisfying `ok(label_i, label_j)`.
template <class Pred>
std::vector<std::tuple<int, std::size_t, std::size_t>> slide_options(const BasedComplex& c, Pred ok)
{
    std::vector<std::tuple<int, std::size_t, std::size_t>> out;
    for (const auto& [k, basis] : c.bases) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i != j && ok(basis[i], basis[j])) {
                    out.emplace_back(k, i, j);
                }
            }
        }
    }
    return out;
}

std::size_t cluster_rank(const BasedComplex& c, const Clusters& clusters, int z, int k)
{
    if (!c.bases.contains(k)) {
        return 0;
    }
    return static_cast<std::size_t>(std::count_if(c.basis(k).begin(), c.basis(k).end(),
                                                  [&](const std::string& l) { return clusters.at(l) == z; }));
}

}  // namespace

Levels action_levels(const ActionComplex& c, const std::vector<Rational>& b)
{
    Levels out;
    for (const auto& [k, basis] : c.complex.bases) {
        for (const auto& l : basis) {
            auto it = c.action.find(l);
            if (it == c.action.end()) {
                throw Error("filtration-broken", "generator " + l + " has no action value");
            }
            int p = static_cast<int>(b.size());
            for (std::size_t i = 0; i + 1 < b.size(); ++i) {
                if (it->second <= threshold(b, i)) {
                    p = static_cast<int>(i) + 1;
                    break;
                }
            }
            out[l] = p;
        }
    }
    return out;
}

FilteredChainMap step_filtered_map(const ScenarioStep& step)
{
    return FilteredChainMap{step.continuation, action_levels(step.source, step.b), action_levels(step.target, step.b)};
}

void scenario_validate(const Scenario& sc)
{
    for (std::size_t i = 0; i < sc.steps.size(); ++i) {
        try {
            validate_step(sc.steps[i]);
            if (i + 1 < sc.steps.size()) {
                const ScenarioStep& next = sc.steps[i + 1];
                if (!(next.target == sc.steps[i].source) || next.target_clusters != sc.steps[i].source_clusters) {
                    throw Error("chain-mismatch", "target of step " + std::to_string(i + 1) + " differs from its source");
                }
            }
        } catch (const Error& e) {
            rethrow_for_step(e, i);
        }
    }
}

Certificate step_certify(const ScenarioStep& step, LiftStats* stats)
{
    const FilteredChainMap f = step_filtered_map(step);
    std::vector<Certificate> graded;
    for (int p = 1; p <= f.top_level(); ++p) {
        const ChainMap gm = graded_map(f, p);
        as_int_map(gm);
        const BasedComplex cg = cone(gm);
        try {
            graded.push_back(extend_certificate(reduce_integer(base_change_augmentation(cg)), cg));
        } catch (const Error& e) {
            if (e.code() != "not-acyclic") {
                throw;
            }
            throw Error("graded-map-not-Z-equivalence", "level " + std::to_string(p) + ": " + e.message());
        }
    }
    return lift_filtered_certificates(f, graded, stats);
}

PipelineResult pipeline_certify(const Scenario& sc)
{
    const std::size_t n = sc.steps.size();
    if (n == 0) {
        throw Error("chain-mismatch", "scenario has no steps");
    }
    std::vector<Certificate> certs(n);
    std::vector<std::exception_ptr> failures(n);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
        try {
            certs[i] = step_certify(sc.steps[i]);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (failures[i]) {
            try {
                std::rethrow_exception(failures[i]);
            } catch (const Error& e) {
                rethrow_for_step(e, i);
            }
        }
    }
    ChainMap acc = sc.steps[n - 1].continuation;
    Certificate cert = certs[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        const ChainMap& phi = sc.steps[i].continuation;
        cert = compose_certificates(acc, phi, cert, certs[i]);
        acc = compose(phi, acc);
    }
    return PipelineResult{std::move(acc), std::move(cert)};
}

Scenario scenario_generate(std::uint64_t seed, const ScenarioParams& params)
{
    if (params.steps < 1 || params.clusters < 1 || params.max_rank < 1) {
        throw Error("invalid-parameters", "steps, clusters and rank must be positive");
    }
    gen::Rng rng(seed);
    const GroupPtr group = Group::make(params.group);
    const GroupPtr trivial = Group::make(GroupSpec::trivial());
    Layout layout;
    layout.levels = (params.clusters + 1) / 2;
    for (int p = 0; p < layout.levels; ++p) {
        layout.b.emplace_back(4 * p);
    }
    const Rational gap(1, 2);

    // The last source: integer cluster complexes glued by cross-level slides.
    BasedComplex x(group);
    Clusters clusters;
    for (int z = 0; z < params.clusters; ++z) {
        gen::ComplexParams cp;
        cp.degrees = 3;
        cp.max_rank = params.max_rank;
        cp.slides = 4;
        cp.prefix = "c" + std::to_string(z) + ".";
        const BasedComplex k = extend_scalars(base_change_augmentation(gen::random_complex(rng, trivial, cp)), group);
        for (const auto& [deg, basis] : k.bases) {
            for (const auto& l : basis) {
                clusters[l] = z;
            }
        }
        x = direct_sum(x, k);
    }
    auto lower = [&](const Clusters& cl) {
        return [&layout, &cl](const std::string& a, const std::string& b) {
            return layout.level_of_cluster(cl.at(b)) < layout.level_of_cluster(cl.at(a));
        };
    };
    for (int n = static_cast<int>(rng.range(0, 3)); n > 0; --n) {
        const auto options = slide_options(x, lower(clusters));
        if (options.empty()) {
            break;
        }
        const auto [k, i, j] = options[rng.below(options.size())];
        apply_move_in_place(x, AddSlide{k, i, j, gen::random_ring_element(rng, *group)});
    }

    std::vector<ScenarioStep> steps(static_cast<std::size_t>(params.steps));
    for (int s = params.steps - 1; s >= 0; --s) {
        ChainMap f = identity_map(x);
        Clusters target_clusters = clusters;
        // Integer invertible graded blocks: elementary moves inside clusters.
        for (int n = static_cast<int>(rng.range(1, 4)); n > 0; --n) {
            const BasedComplex& t = f.target;
            const std::size_t kind = rng.below(3);
            if (kind == 0) {
                const auto options = slide_options(t, [&](const std::string& a, const std::string& b) {
                    return target_clusters.at(a) == target_clusters.at(b);
                });
                if (!options.empty()) {
                    const auto [k, i, j] = options[rng.below(options.size())];
                    std::int64_t q = 0;
                    while (q == 0) {
                        q = rng.range(-2, 2);
                    }
                    f = apply_target_move(f, AddSlide{k, i, j, RingElement::integer(Integer(static_cast<long>(q)), *group)});
                }
            } else if (kind == 1 && !t.is_zero()) {
                std::vector<std::pair<int, std::size_t>> gens;
                for (const auto& [k, basis] : t.bases) {
                    for (std::size_t i = 0; i < basis.size(); ++i) {
                        gens.emplace_back(k, i);
                    }
                }
                const auto [k, i] = gens[rng.below(gens.size())];
                f = apply_target_move(f, ScaleUnit{k, i, -1, group->identity()});
            } else {
                const int z = static_cast<int>(rng.below(static_cast<std::size_t>(params.clusters)));
                const int k = static_cast<int>(rng.below(2));
                const auto limit = static_cast<std::size_t>(params.max_rank);
                if (cluster_rank(t, target_clusters, z, k) < limit &&
                    cluster_rank(t, target_clusters, z, k + 1) < limit) {
                    f = apply_target_move(f, Stabilize{k, 1});
                    target_clusters[f.target.basis(k).back()] = z;
                    target_clusters[f.target.basis(k + 1).back()] = z;
                }
            }
        }
        // Lambda corrections strictly below the diagonal of the filtration.
        for (int n = static_cast<int>(rng.range(0, 2)); n > 0; --n) {
            const auto options = slide_options(f.target, lower(target_clusters));
            if (options.empty()) {
                break;
            }
            const auto [k, i, j] = options[rng.below(options.size())];
            f = apply_target_move(f, AddSlide{k, i, j, gen::random_ring_element(rng, *group)});
        }
        if (rng.chance(1, 2)) {
            const Levels sl = layout.levels_of(f.source, clusters);
            const Levels tl = layout.levels_of(f.target, target_clusters);
            const ChainMap h = gen::random_null_homotopic(rng, f.source, f.target, &sl, &tl);
            for (auto& [k, m] : f.matrices) {
                m += h.at(k);
            }
        }
        ScenarioStep& step = steps[static_cast<std::size_t>(s)];
        step.b = layout.b;
        step.gap = gap;
        step.source = layout.with_actions(f.source, clusters);
        step.target = layout.with_actions(f.target, target_clusters);
        step.source_clusters = clusters;
        step.target_clusters = target_clusters;
        x = f.target;
        clusters = target_clusters;
        step.continuation = std::move(f);
    }
    return Scenario{std::move(steps)};
}

std::map<int, long> generator_lower_bound(const BasedComplex& c)
{
    std::map<int, long> out;
    const std::vector<HomologyGroup> h = homology(base_change_augmentation(c));
    for (std::size_t i = 0; i < h.size(); ++i) {
        long bound = h[i].free_rank + static_cast<long>(h[i].torsion.size());
        if (i + 1 < h.size()) {
            bound += static_cast<long>(h[i + 1].torsion.size());
        }
        if (bound > 0) {
            out[h[i].degree] = bound;
        }
    }
    return out;
}

Json to_json(const Scenario& sc)
{
    Json steps = Json::array();
    for (const auto& s : sc.steps) {
        Json j;
        Json b = Json::array();
        for (const auto& v : s.b) {
            b.push_back(v.get_str());
        }
        j["b"] = b;
        j["gap"] = s.gap.get_str();
        j["source"] = action_to_json(s.source, s.source_clusters);
        j["target"] = action_to_json(s.target, s.target_clusters);
        j["continuation"] = to_json(s.continuation)["matrices"];
        steps.push_back(std::move(j));
    }
    return Json{{"steps", steps}};
}

Scenario scenario_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array()) {
        throw Error("malformed-json", "<root>: missing array 'steps'");
    }
    Scenario sc;
    for (std::size_t i = 0; i < j["steps"].size(); ++i) {
        const Json& sj = j["steps"][i];
        const std::string path = "steps[" + std::to_string(i) + "]";
        for (const char* key : {"b", "gap", "source", "target", "continuation"}) {
            if (!sj.is_object() || !sj.contains(key)) {
                throw Error("malformed-json", path + ": missing field '" + key + "'");
            }
        }
        ScenarioStep s;
        if (!sj["b"].is_array()) {
            throw Error("malformed-json", path + ".b: expected an array");
        }
        for (std::size_t n = 0; n < sj["b"].size(); ++n) {
            s.b.push_back(rational_from_json(sj["b"][n], path + ".b[" + std::to_string(n) + "]"));
        }
        s.gap = rational_from_json(sj["gap"], path + ".gap");
        std::tie(s.source, s.source_clusters) = action_from_json(sj["source"], path + ".source");
        std::tie(s.target, s.target_clusters) = action_from_json(sj["target"], path + ".target");
        const Json map{{"source", sj["source"]}, {"target", sj["target"]}, {"matrices", sj["continuation"]}};
        s.continuation = chain_map_from_json(map, path);
        sc.steps.push_back(std::move(s));
    }
    return sc;
}

}  // namespace shtk
