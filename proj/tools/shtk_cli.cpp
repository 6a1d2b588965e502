#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shtk/error.hpp"
#include "shtk/floermodel.hpp"
#include "shtk/simplify.hpp"

using namespace shtk;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kStuck = 2;
constexpr int kObstruction = 3;

void emit(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

std::size_t default_budget()
{
    if (const char* env = std::getenv("SHTK_BUDGET")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            throw Error("invalid-parameters", std::string("SHTK_BUDGET is not a number: ") + env);
        }
    }
    return ReduceOptions{}.budget;
}

GroupSpec parse_group(const std::string& text)
{
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto number = [&]() -> long {
        try {
            return std::stol(arg);
        } catch (const std::exception&) {
            throw Error("invalid-parameters", "group '" + text + "' needs a numeric parameter");
        }
    };
    if (kind == "trivial") {
        return GroupSpec::trivial();
    }
    if (kind == "cyclic") {
        return GroupSpec::cyclic(number());
    }
    if (kind == "free") {
        return GroupSpec::free(static_cast<int>(number()));
    }
    if (kind == "free-abelian") {
        return GroupSpec::free_abelian(static_cast<int>(number()));
    }
    throw Error("invalid-parameters", "unknown group '" + text + "' (trivial, cyclic:n, free:r, free-abelian:r)");
}

Json moves_json(const std::vector<Move>& moves, GroupKind kind)
{
    Json out = Json::array();
    for (const auto& m : moves) {
        out.push_back(to_json(m, kind));
    }
    return out;
}

int report(const ReduceResult& r, GroupKind kind)
{
    if (const auto* cert = std::get_if<Certificate>(&r)) {
        emit(to_json(*cert, kind));
        return kOk;
    }
    if (const auto* o = std::get_if<Obstruction>(&r)) {
        Json j;
        j["degree"] = o->degree;
        Json rows = Json::array();
        for (std::size_t i = 0; i < o->matrix.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t c = 0; c < o->matrix.cols(); ++c) {
                row.push_back(to_json(o->matrix(i, c), kind));
            }
            rows.push_back(row);
        }
        j["matrix"] = rows;
        if (o->inverse) {
            Json inv = Json::array();
            for (std::size_t i = 0; i < o->inverse->rows(); ++i) {
                Json row = Json::array();
                for (std::size_t c = 0; c < o->inverse->cols(); ++c) {
                    row.push_back(to_json((*o->inverse)(i, c), kind));
                }
                inv.push_back(row);
            }
            j["inverse"] = inv;
        } else {
            j["inverse"] = nullptr;
        }
        j["inverse_verified"] = o->inverse_verified;
        j["moves"] = moves_json(o->moves, kind);
        emit(Json{{"obstruction", j}});
        std::cerr << "reduction stopped at an invertible " << o->matrix.rows() << "x" << o->matrix.cols()
                  << " matrix" << (o->inverse_verified ? " (inverse verified)" : " (invertibility unverified)") << "\n";
        return kObstruction;
    }
    const auto& s = std::get<Stuck>(r);
    emit(Json{{"stuck", {{"reason", s.reason}, {"moves", moves_json(s.moves, kind)}, {"residual", to_json(s.residual)}}}});
    std::cerr << "reduction stuck: " << s.reason << "\n";
    return kStuck;
}

Levels levels_of(const Json& doc, const std::string& path)
{
    if (!doc.contains("levels")) {
        throw Error("missing-level", path + ": document has no 'levels'");
    }
    return levels_from_json(doc["levels"], path + ".levels");
}

void write_or_emit(const Json& j, const std::string& out)
{
    if (out.empty()) {
        emit(j);
        return;
    }
    std::ofstream f(out);
    if (!f) {
        throw Error("io-error", "cannot write " + out);
    }
    f << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simple homotopy certificates for based chain complexes over integral group rings"};
    app.require_subcommand(1);

    std::string file_a, file_b, file_c, file_d, out;
    std::vector<std::string> files;
    std::size_t budget = 0;
    int depth = ReduceOptions{}.depth;
    std::uint64_t seed = 0;
    ScenarioParams params;
    std::string group = "trivial";
    std::string scenario_file;

    auto* validate = app.add_subcommand("validate", "check a complex (and its filtration, if given)");
    validate->add_option("complex", file_a)->required();

    auto* cone_cmd = app.add_subcommand("cone", "mapping cone of a chain map");
    cone_cmd->add_option("map", file_a)->required();
    cone_cmd->add_option("-o,--output", out, "output file (stdout if omitted)");

    auto* reduce_cmd = app.add_subcommand("reduce", "search for a certificate reducing a complex to zero");
    reduce_cmd->add_option("complex", file_a)->required();
    auto* budget_opt = reduce_cmd->add_option("--budget", budget, "reduction steps (default $SHTK_BUDGET or 10000)");
    reduce_cmd->add_option("--depth", depth, "product depth of combination coefficients");

    auto* reduce_z = app.add_subcommand("reduce-z", "certificate for an acyclic integer complex");
    reduce_z->add_option("zcomplex", file_a)->required();

    auto* certify_map = app.add_subcommand("certify-map", "reduce the cone of a chain map");
    certify_map->add_option("map", file_a)->required();
    auto* budget_opt2 = certify_map->add_option("--budget", budget, "reduction steps");
    certify_map->add_option("--depth", depth, "product depth of combination coefficients");

    auto* lift = app.add_subcommand("lift", "lift graded certificates to the cone of a filtered map");
    lift->add_option("map", file_a)->required();
    lift->add_option("certs", files, "one certificate per level, lowest level first")->required();

    auto* compose_cmd = app.add_subcommand("compose-certs", "certificate for cone(g o f)");
    compose_cmd->add_option("f", file_a)->required();
    compose_cmd->add_option("g", file_b)->required();
    compose_cmd->add_option("cert_f", file_c)->required();
    compose_cmd->add_option("cert_g", file_d)->required();

    auto* scenario = app.add_subcommand("scenario", "synthetic continuation-map scenarios");
    scenario->require_subcommand(1);
    auto add_gen_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed);
        cmd->add_option("--steps", params.steps);
        cmd->add_option("--clusters", params.clusters);
        cmd->add_option("--rank", params.max_rank);
        cmd->add_option("--group", group, "trivial, cyclic:n, free:r or free-abelian:r");
    };
    auto* sc_validate = scenario->add_subcommand("validate", "check a scenario document");
    sc_validate->add_option("scenario", scenario_file)->required();
    auto* sc_certify = scenario->add_subcommand("certify", "certify the composite continuation map");
    sc_certify->add_option("scenario", scenario_file, "scenario document (generated from flags if omitted)");
    add_gen_flags(sc_certify);
    auto* sc_generate = scenario->add_subcommand("generate", "generate a scenario");
    add_gen_flags(sc_generate);

    auto* bound = app.add_subcommand("bound", "homological lower bound on generator counts");
    bound->add_option("complex", file_a)->required();

    auto* verify = app.add_subcommand("verify", "replay a certificate");
    verify->add_option("complex", file_a)->required();
    verify->add_option("cert", file_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kDomainError;
    }

    try {
        ReduceOptions opts;
        opts.depth = depth;
        opts.budget = (*budget_opt || *budget_opt2) ? budget : default_budget();

        if (*validate) {
            const Json doc = read_json_file(file_a);
            const BasedComplex c = complex_from_json(doc);
            complex_validate(c);
            if (doc.contains("levels")) {
                filtration_validate(FilteredBasedComplex{c, levels_of(doc, file_a)});
            }
            emit(Json{{"status", "ok"}});
        } else if (*cone_cmd) {
            const Json doc = read_json_file(file_a);
            const ChainMap f = chain_map_from_json(doc);
            Json j;
            if (doc["source"].contains("levels") && doc["target"].contains("levels")) {
                const FilteredChainMap fm = filtered_map_from_json(doc);
                filtration_validate(fm);
                is_chain_map(fm.map);
                const FilteredBasedComplex fc = filtered_cone(fm);
                j = to_json(fc.complex);
                j["levels"] = to_json(fc.level);
            } else {
                j = to_json(cone(f));
            }
            write_or_emit(j, out);
        } else if (*reduce_cmd) {
            const BasedComplex c = complex_from_json(read_json_file(file_a));
            return report(reduce(c, opts), c.ring().kind());
        } else if (*reduce_z) {
            const ZComplex z = zcomplex_from_json(read_json_file(file_a));
            emit(to_json(reduce_integer(z), GroupKind::Cyclic));
        } else if (*certify_map) {
            const ChainMap f = chain_map_from_json(read_json_file(file_a));
            return report(reduce(cone(f), opts), f.ring().kind());
        } else if (*lift) {
            const FilteredChainMap f = filtered_map_from_json(read_json_file(file_a));
            std::vector<Certificate> certs;
            for (const auto& path : files) {
                certs.push_back(certificate_from_json(read_json_file(path), path));
            }
            LiftStats stats;
            const Certificate cert = lift_filtered_certificates(f, certs, &stats);
            verify_certificate(cone(f.map), cert);
            emit(to_json(cert, f.map.ring().kind()));
            std::cerr << "lifted " << stats.lifted_moves << " moves, " << stats.corrections << " corrections\n";
        } else if (*compose_cmd) {
            const ChainMap f = chain_map_from_json(read_json_file(file_a));
            const ChainMap g = chain_map_from_json(read_json_file(file_b));
            const Certificate cf = certificate_from_json(read_json_file(file_c), file_c);
            const Certificate cg = certificate_from_json(read_json_file(file_d), file_d);
            emit(to_json(compose_certificates(f, g, cf, cg), f.ring().kind()));
        } else if (*scenario) {
            params.group = parse_group(group);
            if (*sc_validate) {
                scenario_validate(scenario_from_json(read_json_file(scenario_file)));
                emit(Json{{"status", "ok"}});
            } else if (*sc_generate) {
                emit(to_json(scenario_generate(seed, params)));
            } else if (*sc_certify) {
                const Scenario sc = scenario_file.empty() ? scenario_generate(seed, params)
                                                          : scenario_from_json(read_json_file(scenario_file));
                scenario_validate(sc);
                const PipelineResult r = pipeline_certify(sc);
                const GroupKind kind = r.composite.ring().kind();
                emit(Json{{"length", r.certificate.size()}, {"certificate", to_json(r.certificate, kind)}});
                std::cerr << "certificate length " << r.certificate.size() << "\n";
            }
        } else if (*bound) {
            const BasedComplex c = complex_from_json(read_json_file(file_a));
            complex_validate(c);
            Json b = Json::object();
            for (const auto& [k, n] : generator_lower_bound(c)) {
                b[std::to_string(k)] = n;
            }
            emit(Json{{"bound", b}});
        } else if (*verify) {
            const BasedComplex c = complex_from_json(read_json_file(file_a));
            const Certificate cert = certificate_from_json(read_json_file(file_b), file_b);
            verify_certificate(c, cert);
            emit(Json{{"status", "ok"}, {"moves", cert.size()}});
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}
