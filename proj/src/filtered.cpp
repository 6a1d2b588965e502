#include "shtk/filtered.hpp"

#include <algorithm>
#include <set>

#include "shtk/error.hpp"
#include "shtk/json_io.hpp"

namespace shtk {

namespace {

int level_of(const Levels& levels, const std::string& label)
{
    auto it = levels.find(label);
    if (it == levels.end()) {
        throw Error("missing-level", "no filtration level for label '" + label + "'");
    }
    return it->second;
}

int top_of(const BasedComplex& c, const Levels& levels)
{
    int top = 0;
    for (const auto& [k, b] : c.bases) {
        for (const auto& l : b) {
            top = std::max(top, level_of(levels, l));
        }
    }
    return top;
}

std::vector<std::size_t> positions_at(const BasedComplex& c, const Levels& levels, int k, int p)
{
    std::vector<std::size_t> out;
    const auto& b = c.basis(k);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (level_of(levels, b[i]) == p) {
            out.push_back(i);
        }
    }
    return out;
}

BasedComplex restrict_to_level(const BasedComplex& c, const Levels& levels, int p)
{
    BasedComplex out(c.group);
    for (const auto& [k, b] : c.bases) {
        for (auto i : positions_at(c, levels, k, p)) {
            out.bases[k].push_back(b[i]);
        }
    }
    out.normalize();
    for (auto& [k, m] : out.diffs) {
        m = c.d(k).submatrix(positions_at(c, levels, k + 1, p), positions_at(c, levels, k, p));
    }
    return out;
}

void check_levels(const BasedComplex& c, const Levels& levels)
{
    for (const auto& [k, b] : c.bases) {
        for (const auto& l : b) {
            if (level_of(levels, l) < 1) {
                throw Error("not-a-subfiltration", "label '" + l + "' has level < 1");
            }
        }
    }
    for (const auto& [k, m] : c.diffs) {
        const auto& src = c.basis(k);
        const auto& dst = c.basis(k + 1);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (m(i, j).is_zero()) {
                    continue;
                }
                const int from = level_of(levels, src[j]);
                const int to = level_of(levels, dst[i]);
                if (to > from) {
                    throw Error("not-a-subfiltration", "d(" + src[j] + ") has a component on " + dst[i] +
                                                           " (level " + std::to_string(from) + " -> " +
                                                           std::to_string(to) + ")");
                }
            }
        }
    }
}

std::size_t position(const BasedComplex& c, int k, const std::string& label)
{
    const std::size_t i = c.index_of(k, label);
    if (i == static_cast<std::size_t>(-1)) {
        throw Error("lift-internal-error", "label '" + label + "' vanished from degree " + std::to_string(k));
    }
    return i;
}

using LabelMap = std::map<std::pair<int, std::string>, std::string>;

const std::string& mapped(const LabelMap& phi, int k, const std::string& label)
{
    auto it = phi.find({k, label});
    if (it == phi.end()) {
        throw Error("graded-certificate-invalid", "graded label '" + label + "' in degree " + std::to_string(k) +
                                                      " has no counterpart");
    }
    return it->second;
}

// The level-p part of `cur` must be the graded complex `g` under `phi`.
void check_graded_match(const BasedComplex& cur, const Levels& levels, int p, const BasedComplex& g,
                        const LabelMap& phi)
{
    std::set<int> degrees;
    for (const auto& [k, b] : cur.bases) {
        degrees.insert(k);
    }
    for (const auto& [k, b] : g.bases) {
        degrees.insert(k);
    }
    for (int k : degrees) {
        const auto at_p = positions_at(cur, levels, k, p);
        if (at_p.size() != g.rank(k)) {
            throw Error("graded-certificate-invalid", "level " + std::to_string(p) + " has " +
                                                          std::to_string(at_p.size()) + " generators in degree " +
                                                          std::to_string(k) + ", graded complex has " +
                                                          std::to_string(g.rank(k)));
        }
        for (const auto& l : g.basis(k)) {
            const std::string& target = mapped(phi, k, l);
            const std::size_t i = cur.index_of(k, target);
            if (i == static_cast<std::size_t>(-1) || level_of(levels, target) != p) {
                throw Error("graded-certificate-invalid", "graded label '" + l + "' maps to '" + target +
                                                              "', which is not a level-" + std::to_string(p) +
                                                              " generator");
            }
        }
    }
    for (const auto& [k, m] : g.diffs) {
        const Matrix* big = cur.find_d(k);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const std::size_t bi = cur.index_of(k + 1, mapped(phi, k + 1, g.basis(k + 1)[i]));
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const std::size_t bj = cur.index_of(k, mapped(phi, k, g.basis(k)[j]));
                if (big == nullptr || !((*big)(bi, bj) == m(i, j))) {
                    throw Error("graded-certificate-invalid", "graded differential differs at d^" +
                                                                  std::to_string(k) + "(" + g.basis(k + 1)[i] +
                                                                  "," + g.basis(k)[j] + ")");
                }
            }
        }
    }
}

}  // namespace

int FilteredBasedComplex::top_level() const
{
    return top_of(complex, level);
}

int FilteredChainMap::top_level() const
{
    return std::max(top_of(map.source, source_levels), top_of(map.target, target_levels));
}

void filtration_validate(const FilteredBasedComplex& fc)
{
    check_levels(fc.complex, fc.level);
}

void filtration_validate(const FilteredChainMap& f)
{
    check_levels(f.map.source, f.source_levels);
    check_levels(f.map.target, f.target_levels);
    for (const auto& [k, m] : f.map.matrices) {
        const auto& src = f.map.source.basis(k);
        const auto& dst = f.map.target.basis(k);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!m(i, j).is_zero() && level_of(f.target_levels, dst[i]) > level_of(f.source_levels, src[j])) {
                    throw Error("filtration-not-preserved", "f(" + src[j] + ") has a component on " + dst[i] +
                                                                " at a higher level");
                }
            }
        }
    }
}

BasedComplex associated_graded(const FilteredBasedComplex& fc, int p)
{
    const int top = fc.top_level();
    if (p < 1 || p > top) {
        throw Error("level-out-of-range", "level " + std::to_string(p) + " outside 1.." + std::to_string(top));
    }
    return restrict_to_level(fc.complex, fc.level, p);
}

ChainMap graded_map(const FilteredChainMap& f, int p)
{
    const int top = f.top_level();
    if (p < 1 || p > top) {
        throw Error("level-out-of-range", "level " + std::to_string(p) + " outside 1.." + std::to_string(top));
    }
    ChainMap out{restrict_to_level(f.map.source, f.source_levels, p),
                 restrict_to_level(f.map.target, f.target_levels, p),
                 {}};
    out.normalize();
    for (auto& [k, m] : out.matrices) {
        m = f.map.at(k).submatrix(positions_at(f.map.target, f.target_levels, k, p),
                                  positions_at(f.map.source, f.source_levels, k, p));
    }
    return out;
}

FilteredBasedComplex filtered_cone(const FilteredChainMap& f)
{
    FilteredBasedComplex out{cone_unchecked(f.map), {}};
    for (const auto& [k, b] : f.map.source.bases) {
        for (const auto& l : b) {
            out.level[cone_source_label(l)] = level_of(f.source_levels, l);
        }
    }
    for (const auto& [k, b] : f.map.target.bases) {
        for (const auto& l : b) {
            out.level[cone_target_label(l)] = level_of(f.target_levels, l);
        }
    }
    return out;
}

std::vector<Move> lift_moves(const BasedComplex& b, const Levels& levels_in, const std::vector<GradedPiece>& pieces,
                             LiftStats* stats)
{
    BasedComplex cur = b;
    Levels levels = levels_in;
    std::vector<Move> out;
    LiftStats local;

    auto emit = [&](Move m) {
        try {
            apply_move_in_place(cur, m);
        } catch (const Error& e) {
            throw Error("lift-internal-error", std::string("lifted ") + m.name() + " failed: " + e.what());
        }
        out.push_back(std::move(m));
    };

    for (int p = static_cast<int>(pieces.size()); p >= 1; --p) {
        const GradedPiece& piece = pieces[static_cast<std::size_t>(p - 1)];
        try {
            verify_certificate(piece.complex, piece.certificate);
        } catch (const Error& e) {
            throw Error("graded-certificate-invalid", "level " + std::to_string(p) + ": " + e.what());
        }
        BasedComplex g = piece.complex;
        LabelMap phi = piece.to_filtered;
        check_graded_match(cur, levels, p, g, phi);

        for (const Move& m : piece.certificate.moves) {
            const int k = m.degree();
            if (const auto* s = std::get_if<AddSlide>(&m.op)) {
                const auto& bi = mapped(phi, k, g.basis(k).at(s->i));
                const auto& bj = mapped(phi, k, g.basis(k).at(s->j));
                emit(AddSlide{k, position(cur, k, bi), position(cur, k, bj), s->lambda});
            } else if (const auto* u = std::get_if<ScaleUnit>(&m.op)) {
                const auto& bi = mapped(phi, k, g.basis(k).at(u->i));
                emit(ScaleUnit{k, position(cur, k, bi), u->sign, u->g});
            } else if (const auto* st = std::get_if<Stabilize>(&m.op)) {
                emit(*st);
                apply_move_in_place(g, m);
                for (int deg : {k, k + 1}) {
                    const auto& gl = g.basis(deg);
                    const auto& bl = cur.basis(deg);
                    for (std::size_t n = 0; n < st->count; ++n) {
                        const std::string& glabel = gl[gl.size() - st->count + n];
                        const std::string& blabel = bl[bl.size() - st->count + n];
                        phi[{deg, glabel}] = blabel;
                        levels[blabel] = p;
                    }
                }
                ++local.lifted_moves;
                continue;
            } else if (const auto* ds = std::get_if<Destabilize>(&m.op)) {
                Destabilize lifted{k, {}};
                for (const auto& [a, bidx] : ds->pairs) {
                    const std::string rl = mapped(phi, k, g.basis(k).at(a));
                    const std::string sl = mapped(phi, k + 1, g.basis(k + 1).at(bidx));
                    const std::size_t rp = position(cur, k, rl);
                    const std::size_t sp = position(cur, k + 1, sl);
                    // t = d r - s lies in F^{p-1}; replace s by s' = s + t.
                    bool corrected = false;
                    for (std::size_t x = 0; x < cur.rank(k + 1); ++x) {
                        if (x == sp) {
                            continue;
                        }
                        const Matrix* dk = cur.find_d(k);
                        const RingElement entry = dk == nullptr ? RingElement() : (*dk)(x, rp);
                        if (entry.is_zero()) {
                            continue;
                        }
                        if (level_of(levels, cur.basis(k + 1)[x]) >= p) {
                            throw Error("lift-internal-error", "d(" + rl + ") meets " + cur.basis(k + 1)[x] +
                                                                   " at level >= " + std::to_string(p));
                        }
                        emit(AddSlide{k + 1, sp, x, entry});
                        ++local.correction_moves;
                        corrected = true;
                    }
                    if (corrected) {
                        ++local.corrections;
                    }
                    lifted.pairs.emplace_back(rp, sp);
                }
                emit(std::move(lifted));
                apply_move_in_place(g, m);
                ++local.lifted_moves;
                continue;
            }
            apply_move_in_place(g, m);
            ++local.lifted_moves;
        }
        if (!g.is_zero()) {
            throw Error("lift-internal-error", "graded certificate at level " + std::to_string(p) +
                                                   " left a nonzero complex");
        }
    }
    if (!cur.is_zero()) {
        throw Error("lift-internal-error", "lift finished with a nonzero complex");
    }
    if (stats != nullptr) {
        stats->lifted_moves += local.lifted_moves;
        stats->corrections += local.corrections;
        stats->correction_moves += local.correction_moves;
    }
    return out;
}

Certificate lift_certificates(const FilteredBasedComplex& fc, const std::vector<Certificate>& graded_certs,
                              LiftStats* stats)
{
    filtration_validate(fc);
    const int top = fc.top_level();
    if (static_cast<int>(graded_certs.size()) != top) {
        throw Error("graded-certificate-invalid", "expected " + std::to_string(top) + " graded certificates, got " +
                                                      std::to_string(graded_certs.size()));
    }
    std::vector<GradedPiece> pieces;
    for (int p = 1; p <= top; ++p) {
        GradedPiece piece{associated_graded(fc, p), graded_certs[static_cast<std::size_t>(p - 1)], {}};
        for (const auto& [k, b] : piece.complex.bases) {
            for (const auto& l : b) {
                piece.to_filtered[{k, l}] = l;
            }
        }
        pieces.push_back(std::move(piece));
    }
    Certificate cert{complex_hash(fc.complex), lift_moves(fc.complex, fc.level, pieces, stats)};
    return cert;
}

Certificate lift_filtered_certificates(const FilteredChainMap& f, const std::vector<Certificate>& graded_certs,
                                       LiftStats* stats)
{
    filtration_validate(f);
    is_chain_map(f.map);
    return lift_certificates(filtered_cone(f), graded_certs, stats);
}

}  // namespace shtk
