#include "shtk/generators.hpp"

#include <algorithm>

#include "shtk/error.hpp"
#include "shtk/json_io.hpp"
#include "shtk/kernels.hpp"

namespace shtk::gen {

namespace {

using HomotopyData = std::map<int, Matrix>;  // h^k : C^k -> D^{k-1}

int level_or(const Levels* levels, const std::string& label, int fallback)
{
    if (!levels) {
        return fallback;
    }
    auto it = levels->find(label);
    return it == levels->end() ? fallback : it->second;
}

HomotopyData random_h(Rng& rng, const BasedComplex& c, const BasedComplex& d, const Levels* sl, const Levels* tl)
{
    HomotopyData h;
    for (const auto& [k, src] : c.bases) {
        const std::size_t rows = d.rank(k - 1);
        if (rows == 0) {
            continue;
        }
        Matrix m(rows, src.size());
        bool any = false;
        for (std::size_t col = 0; col < src.size(); ++col) {
            for (std::size_t r = 0; r < rows; ++r) {
                const int from = level_or(sl, src[col], 1);
                const int to = level_or(tl, d.basis(k - 1)[r], 0);
                if (to < from && rng.chance(1, 3)) {
                    m(r, col) = random_ring_element(rng, c.ring(), 1, 2);
                    any = any || !m(r, col).is_zero();
                }
            }
        }
        if (any) {
            h[k] = std::move(m);
        }
    }
    return h;
}

// d_D h + h d_C as a chain map C -> D.
ChainMap null_homotopic(const HomotopyData& h, const BasedComplex& c, const BasedComplex& d)
{
    ChainMap out{c, d, {}};
    out.normalize();
    const Group& G = c.ring();
    for (auto& [k, m] : out.matrices) {
        if (auto it = h.find(k); it != h.end()) {
            if (const Matrix* dd = d.find_d(k - 1)) {
                m += kernels::compose(G, *dd, it->second);
            }
        }
        if (auto it = h.find(k + 1); it != h.end()) {
            if (const Matrix* dc = c.find_d(k)) {
                m += kernels::compose(G, it->second, *dc);
            }
        }
    }
    return out;
}

void add_map(ChainMap& f, const ChainMap& g)
{
    for (auto& [k, m] : f.matrices) {
        m += g.at(k);
    }
}

// Positions of a target-side move inside cone(f): the target basis of degree
// k sits after the shifted source basis of degree k + 1.
Move to_cone_target(const Move& m, const BasedComplex& source)
{
    return std::visit(
        [&](const auto& op) -> Move {
            using T = std::decay_t<decltype(op)>;
            T out = op;
            if constexpr (std::is_same_v<T, AddSlide>) {
                out.i += source.rank(op.degree + 1);
                out.j += source.rank(op.degree + 1);
            } else if constexpr (std::is_same_v<T, ScaleUnit>) {
                out.i += source.rank(op.degree + 1);
            } else if constexpr (std::is_same_v<T, Destabilize>) {
                for (auto& [a, b] : out.pairs) {
                    a += source.rank(op.degree + 1);
                    b += source.rank(op.degree + 2);
                }
            }
            return out;
        },
        m.op);
}

ChainMap direct_sum_maps(const ChainMap& f, const ChainMap& g)
{
    ChainMap out{direct_sum(f.source, g.source), direct_sum(f.target, g.target), {}};
    out.normalize();
    for (auto& [k, m] : out.matrices) {
        const Matrix a = f.at(k);
        const Matrix b = g.at(k);
        m.set_block(0, 0, a);
        m.set_block(a.rows(), a.cols(), b);
    }
    return out;
}

void rename_target(ChainMap& f, const std::string& prefix)
{
    for (auto& [k, b] : f.target.bases) {
        for (auto& l : b) {
            if (l.starts_with("~")) {
                l = prefix + l;
            }
        }
    }
}

std::optional<std::pair<std::size_t, std::size_t>> trivial_pair(const BasedComplex& c, int k)
{
    const Matrix* d = c.find_d(k);
    if (!d) {
        return std::nullopt;
    }
    const Matrix* in = c.find_d(k - 1);
    const Matrix* out = c.find_d(k + 1);
    for (std::size_t r = 0; r < d->rows(); ++r) {
        for (std::size_t col = 0; col < d->cols(); ++col) {
            if (!is_one(c.ring(), (*d)(r, col))) {
                continue;
            }
            bool clean = true;
            for (std::size_t x = 0; x < d->rows() && clean; ++x) {
                clean = x == r || (*d)(x, col).is_zero();
            }
            for (std::size_t y = 0; y < d->cols() && clean; ++y) {
                clean = y == col || (*d)(r, y).is_zero();
            }
            for (std::size_t y = 0; in && y < in->cols() && clean; ++y) {
                clean = (*in)(col, y).is_zero();
            }
            for (std::size_t x = 0; out && x < out->rows() && clean; ++x) {
                clean = (*out)(x, r).is_zero();
            }
            if (clean) {
                return std::make_pair(col, r);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

GroupElement random_element(Rng& rng, const Group& group)
{
    if (group.is_finite()) {
        const auto elems = group.elements();
        return elems[rng.below(elems.size())];
    }
    const int rank = group.spec().rank;
    GroupElement g = group.identity();
    if (rank == 0) {
        return g;
    }
    const std::size_t len = rng.below(3);
    for (std::size_t i = 0; i < len; ++i) {
        GroupElement x = group.generator(static_cast<int>(rng.below(static_cast<std::size_t>(rank))));
        if (rng.chance(1, 2)) {
            x = group.inverse(x);
        }
        g = group.mul(g, x);
    }
    return g;
}

RingElement random_ring_element(Rng& rng, const Group& group, int max_terms, int max_coeff)
{
    const std::size_t n = 1 + rng.below(static_cast<std::size_t>(max_terms));
    std::vector<RingElement::Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t coeff = 0;
        while (coeff == 0) {
            coeff = rng.range(-max_coeff, max_coeff);
        }
        terms.emplace_back(random_element(rng, group), Integer(static_cast<long>(coeff)));
    }
    return RingElement::from_terms(std::move(terms));
}

Move random_move(Rng& rng, const BasedComplex& c, bool allow_destabilize)
{
    std::vector<int> degrees;
    for (const auto& [k, b] : c.bases) {
        degrees.push_back(k);
    }
    if (degrees.empty()) {
        return Stabilize{static_cast<int>(rng.range(-1, 1)), 1};
    }
    const std::size_t kind = rng.below(allow_destabilize ? 5 : 4);
    if (kind == 4) {
        for (int k : degrees) {
            if (auto p = trivial_pair(c, k)) {
                return Destabilize{k, {*p}};
            }
        }
    }
    const int k = degrees[rng.below(degrees.size())];
    const std::size_t n = c.rank(k);
    if ((kind == 0 || kind == 1) && n >= 2) {
        const std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        j += j >= i ? 1 : 0;
        return AddSlide{k, i, j, random_ring_element(rng, c.ring())};
    }
    if (kind == 2) {
        return ScaleUnit{k, rng.below(n), rng.chance(1, 2) ? 1 : -1, random_element(rng, c.ring())};
    }
    return Stabilize{k - static_cast<int>(rng.below(2)), 1};
}

BasedComplex random_complex(Rng& rng, GroupPtr group, const ComplexParams& params)
{
    struct Block {
        int degree;
        bool pair;
        RingElement entry;
    };
    std::vector<Block> blocks;
    std::map<int, int> count;
    const Group& G = *group;
    for (int k = 0; k < params.degrees; ++k) {
        for (int attempt = 0; attempt < params.max_rank; ++attempt) {
            if (!rng.chance(1, 2) || count[k] >= params.max_rank) {
                continue;
            }
            const bool can_pair = k + 1 < params.degrees && count[k + 1] < params.max_rank;
            const std::size_t choice = rng.below(params.acyclic ? 1 : 3);
            if (choice == 0 && can_pair) {
                blocks.push_back({k, true, RingElement(G.identity())});
            } else if (choice == 1 && can_pair) {
                blocks.push_back({k, true, random_ring_element(rng, G)});
            } else if (!params.acyclic) {
                blocks.push_back({k, false, {}});
            } else {
                continue;
            }
            ++count[k];
            if (blocks.back().pair) {
                ++count[k + 1];
            }
        }
    }
    BasedComplex c(group);
    std::size_t next = 0;
    std::vector<std::pair<std::string, std::string>> labels;  // (source, target) of each block
    for (const auto& b : blocks) {
        labels.emplace_back(params.prefix + std::to_string(next++), "");
        c.bases[b.degree].push_back(labels.back().first);
        if (b.pair) {
            labels.back().second = params.prefix + std::to_string(next++);
            c.bases[b.degree + 1].push_back(labels.back().second);
        }
    }
    c.normalize();
    for (std::size_t n = 0; n < blocks.size(); ++n) {
        const auto& b = blocks[n];
        if (b.pair) {
            c.d_mut(b.degree)(c.index_of(b.degree + 1, labels[n].second), c.index_of(b.degree, labels[n].first)) = b.entry;
        }
    }
    for (int s = 0; s < params.slides && !c.is_zero(); ++s) {
        Move m = random_move(rng, c, false);
        if (std::holds_alternative<Stabilize>(m.op)) {
            continue;
        }
        apply_move_in_place(c, m);
    }
    return c;
}

ZComplex random_acyclic_integer(Rng& rng, int max_rank, int degrees)
{
    ComplexParams p;
    p.degrees = degrees;
    p.max_rank = max_rank;
    p.slides = 3 * max_rank;
    p.acyclic = true;
    p.prefix = "z";
    return base_change_augmentation(random_complex(rng, Group::make(GroupSpec::trivial()), p));
}

Certificate certify_cone_identity(const BasedComplex& c)
{
    const ChainMap id = identity_map(c);
    if (c.is_zero()) {
        return Certificate{complex_hash(cone(id)), {}};
    }
    const int hi = c.bases.rbegin()->first;
    Levels levels;
    for (const auto& [k, b] : c.bases) {
        for (const auto& l : b) {
            levels[l] = hi - k + 1;
        }
    }
    const FilteredChainMap f{id, levels, levels};
    std::vector<Certificate> graded;
    for (int p = 1; p <= f.top_level(); ++p) {
        const BasedComplex piece = cone(graded_map(f, p));
        Certificate cert{complex_hash(piece), {}};
        if (!piece.diffs.empty()) {
            const auto& [k, d] = *piece.diffs.begin();
            Destabilize m{k, {}};
            for (std::size_t i = 0; i < d.cols(); ++i) {
                m.pairs.emplace_back(i, i);
            }
            cert.moves.push_back(std::move(m));
        }
        graded.push_back(std::move(cert));
    }
    return lift_filtered_certificates(f, graded);
}

ChainMap random_null_homotopic(Rng& rng, const BasedComplex& c, const BasedComplex& d, const Levels* source_levels,
                               const Levels* target_levels)
{
    return null_homotopic(random_h(rng, c, d, source_levels, target_levels), c, d);
}

SimpleMap random_simple_map(Rng& rng, const BasedComplex& c, int target_moves, bool homotopy)
{
    ChainMap f = identity_map(c);
    BasedComplex cone_state = cone(f);
    std::vector<Move> undo;
    for (int i = 0; i < target_moves; ++i) {
        const Move m = random_move(rng, f.target, false);
        const Move shifted = to_cone_target(m, c);
        undo.push_back(inverse_move(cone_state, shifted));
        apply_move_in_place(cone_state, shifted);
        f = apply_target_move(f, m);
    }
    std::vector<Move> moves;
    if (homotopy) {
        const HomotopyData h = random_h(rng, c, f.target, nullptr, nullptr);
        add_map(f, null_homotopic(h, c, f.target));
        for (const auto& [k, m] : h) {
            // h^k : C^k -> D^{k-1}; s:c sits in cone degree k - 1.
            const std::size_t off = c.rank(k);
            for (std::size_t col = 0; col < m.cols(); ++col) {
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    if (!m(r, col).is_zero()) {
                        moves.push_back(AddSlide{k - 1, col, off + r, -m(r, col)});
                    }
                }
            }
        }
    }
    moves.insert(moves.end(), undo.rbegin(), undo.rend());
    const Certificate base = certify_cone_identity(c);
    moves.insert(moves.end(), base.moves.begin(), base.moves.end());
    return SimpleMap{f, Certificate{complex_hash(cone(f)), std::move(moves)}};
}

FilteredCase random_filtered_equivalence(Rng& rng, GroupPtr group, int levels, int max_per_level)
{
    ComplexParams params;
    params.degrees = 3;
    params.max_rank = std::max(1, max_per_level / params.degrees);
    params.slides = 3;
    std::optional<ChainMap> total;
    Levels sl;
    Levels tl;
    std::vector<Certificate> graded;
    for (int p = 1; p <= levels; ++p) {
        params.prefix = "L" + std::to_string(p) + ".";
        const BasedComplex cp = random_complex(rng, group, params);
        SimpleMap sm = random_simple_map(rng, cp, 3, true);
        rename_target(sm.map, params.prefix);
        for (const auto& [k, b] : sm.map.source.bases) {
            for (const auto& l : b) {
                sl[l] = p;
            }
        }
        for (const auto& [k, b] : sm.map.target.bases) {
            for (const auto& l : b) {
                tl[l] = p;
            }
        }
        graded.push_back(std::move(sm.cert));
        total = total ? direct_sum_maps(*total, sm.map) : sm.map;
    }
    ChainMap f = std::move(*total);
    // Cross-level basis changes x <- x + lambda y with level(y) < level(x).
    const int cross = static_cast<int>(rng.range(2, 6));
    for (int n = 0; n < cross; ++n) {
        const bool on_source = rng.chance(1, 2);
        const BasedComplex& side = on_source ? f.source : f.target;
        const Levels& lv = on_source ? sl : tl;
        std::vector<std::tuple<int, std::size_t, std::size_t>> options;
        for (const auto& [k, b] : side.bases) {
            for (std::size_t i = 0; i < b.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    if (lv.at(b[j]) < lv.at(b[i])) {
                        options.emplace_back(k, i, j);
                    }
                }
            }
        }
        if (options.empty()) {
            continue;
        }
        const auto [k, i, j] = options[rng.below(options.size())];
        const Move m = AddSlide{k, i, j, random_ring_element(rng, *group)};
        f = on_source ? apply_source_move(f, m) : apply_target_move(f, m);
    }
    add_map(f, random_null_homotopic(rng, f.source, f.target, &sl, &tl));
    FilteredCase out{FilteredChainMap{std::move(f), std::move(sl), std::move(tl)}, std::move(graded)};
    for (int p = 1; p <= levels; ++p) {
        auto& cert = out.graded[static_cast<std::size_t>(p - 1)];
        cert.initial_hash = complex_hash(cone(graded_map(out.map, p)));
    }
    return out;
}

}  // namespace shtk::gen
