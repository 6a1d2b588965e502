#include "shtk/simplify.hpp"

#include <algorithm>
#include <set>

#include "shtk/error.hpp"
#include "shtk/json_io.hpp"

namespace shtk {

namespace {

struct Pivot {
    int degree;
    std::size_t row;
    std::size_t col;
};

void record(BasedComplex& c, Move m, std::vector<Move>& out)
{
    apply_move_in_place(c, m);
    out.push_back(std::move(m));
}

// Lowest degree, then smallest row, then smallest column.
std::optional<Pivot> find_pivot(const BasedComplex& c)
{
    for (const auto& [k, d] : c.diffs) {
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t col = 0; col < d.cols(); ++col) {
                if (trivial_unit(d(r, col))) {
                    return Pivot{k, r, col};
                }
            }
        }
    }
    return std::nullopt;
}

// Signed entries of all differentials and their products up to `depth`
// factors, deduplicated in a deterministic order.
std::vector<RingElement> coefficient_candidates(const BasedComplex& c, int depth, std::size_t limit)
{
    std::vector<RingElement> base;
    std::set<std::string> seen;
    auto add = [&](std::vector<RingElement>& into, const RingElement& a) {
        if (a.is_zero() || into.size() >= limit) {
            return;
        }
        const std::string key = canonical(to_json(a, c.ring().kind()));
        if (seen.insert(key).second) {
            into.push_back(a);
        }
    };
    for (const auto& [k, d] : c.diffs) {
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t col = 0; col < d.cols(); ++col) {
                add(base, d(r, col));
                add(base, -d(r, col));
            }
        }
    }
    std::vector<RingElement> all = base;
    std::vector<RingElement> layer = base;
    for (int level = 2; level <= depth; ++level) {
        std::vector<RingElement> next;
        for (const auto& a : layer) {
            for (const auto& b : base) {
                const RingElement p = mul(c.ring(), a, b);
                const std::size_t before = all.size();
                add(all, p);
                if (all.size() > before) {
                    next.push_back(p);
                }
            }
        }
        layer = std::move(next);
    }
    return all;
}

// One round of slide combinations creating a trivial unit. Either emits the
// moves of a successful combination or leaves c untouched.
bool combine_round(BasedComplex& c, int depth, std::vector<Move>& out)
{
    const std::vector<RingElement> lambdas = coefficient_candidates(c, depth, 64);
    const Group& G = c.ring();
    for (const auto& [k, d] : c.diffs) {
        // Row slide: row b -= row a * lambda.
        for (std::size_t a = 0; a < d.rows(); ++a) {
            for (std::size_t b = 0; b < d.rows(); ++b) {
                if (a == b) {
                    continue;
                }
                for (const auto& lambda : lambdas) {
                    for (std::size_t col = 0; col < d.cols(); ++col) {
                        if (d(a, col).is_zero()) {
                            continue;
                        }
                        if (trivial_unit(d(b, col) - mul(G, d(a, col), lambda))) {
                            record(c, AddSlide{k + 1, a, b, lambda}, out);
                            return true;
                        }
                    }
                }
            }
        }
        // Column slide: column i += lambda * column j.
        for (std::size_t i = 0; i < d.cols(); ++i) {
            for (std::size_t j = 0; j < d.cols(); ++j) {
                if (i == j) {
                    continue;
                }
                for (const auto& lambda : lambdas) {
                    for (std::size_t r = 0; r < d.rows(); ++r) {
                        if (d(r, j).is_zero()) {
                            continue;
                        }
                        if (trivial_unit(d(r, i) + mul(G, lambda, d(r, j)))) {
                            record(c, AddSlide{k, i, j, lambda}, out);
                            return true;
                        }
                    }
                }
            }
        }
    }
    // Stabilize by x -> y, then c_col += lambda x and y' rows: entry (r, col)
    // becomes a - lambda * mu.
    for (const auto& [k, d] : c.diffs) {
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t col = 0; col < d.cols(); ++col) {
                for (const auto& lambda : lambdas) {
                    for (const auto& mu : lambdas) {
                        if (!trivial_unit(d(r, col) - mul(G, lambda, mu))) {
                            continue;
                        }
                        const int deg = k;
                        const std::size_t x = c.rank(deg);
                        const std::size_t y = c.rank(deg + 1);
                        record(c, Stabilize{deg, 1}, out);
                        record(c, AddSlide{deg, col, x, lambda}, out);
                        record(c, AddSlide{deg + 1, y, r, mu}, out);
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

// Group elements reachable as products of at most `depth` support elements.
std::vector<GroupElement> product_support(const Group& G, const RingElement& a, int depth)
{
    std::set<GroupElement> out{G.identity()};
    std::set<GroupElement> layer{G.identity()};
    for (int i = 0; i < depth; ++i) {
        std::set<GroupElement> next;
        for (const auto& g : layer) {
            for (const auto& [h, coeff] : a.terms()) {
                next.insert(G.mul(g, h));
            }
        }
        out.insert(next.begin(), next.end());
        layer = std::move(next);
    }
    return {out.begin(), out.end()};
}

// Inverse of a 1x1 unit with coefficients in {-1, 0, 1} on the depth-3
// product support.
std::optional<RingElement> search_inverse(const Group& G, const RingElement& a)
{
    const std::vector<GroupElement> support = product_support(G, a, 3);
    if (support.size() > 10) {
        return std::nullopt;
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < support.size(); ++i) {
        total *= 3;
    }
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<RingElement::Term> terms;
        std::size_t rest = code;
        for (const auto& g : support) {
            const int digit = static_cast<int>(rest % 3);
            rest /= 3;
            if (digit != 0) {
                terms.emplace_back(g, Integer(digit == 1 ? 1 : -1));
            }
        }
        const RingElement b = RingElement::from_terms(std::move(terms));
        if (is_one(G, mul(G, a, b)) && is_one(G, mul(G, b, a))) {
            return b;
        }
    }
    return std::nullopt;
}

std::optional<Obstruction> as_obstruction(const BasedComplex& c, const std::vector<Move>& moves)
{
    if (c.diffs.size() != 1 || c.bases.size() != 2) {
        return std::nullopt;
    }
    const auto& [k, d] = *c.diffs.begin();
    if (d.rows() != d.cols()) {
        return std::nullopt;
    }
    Obstruction o;
    o.degree = k;
    o.matrix = d;
    o.moves = moves;
    o.residual = c;
    if (d.rows() == 1) {
        if (auto inv = search_inverse(c.ring(), d(0, 0))) {
            Matrix m(1, 1);
            m(0, 0) = *inv;
            o.inverse = std::move(m);
            o.inverse_verified = true;
        }
    }
    return o;
}

// Exact for finite groups (restriction of scalars); otherwise only the
// necessary condition after augmentation.
bool plausibly_acyclic(const BasedComplex& c)
{
    return c.ring().is_finite() ? is_acyclic(restrict_scalars(c)) : is_acyclic(base_change_augmentation(c));
}

}  // namespace

void eliminate_pivot(BasedComplex& c, int k, std::size_t row, std::size_t col, std::vector<Move>& out)
{
    const Group& G = c.ring();
    const auto unit = trivial_unit(c.find_d(k)->operator()(row, col));
    if (!unit) {
        throw InternalError("pivot is not a trivial unit");
    }
    if (unit->sign != 1 || !G.is_identity(unit->g)) {
        record(c, ScaleUnit{k, col, unit->sign, G.inverse(unit->g)}, out);
    }
    const std::size_t rows = c.rank(k + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        const RingElement a = (*c.find_d(k))(r, col);
        if (r != row && !a.is_zero()) {
            record(c, AddSlide{k + 1, row, r, a}, out);
        }
    }
    const std::size_t cols = c.rank(k);
    for (std::size_t j = 0; j < cols; ++j) {
        const RingElement b = (*c.find_d(k))(row, j);
        if (j != col && !b.is_zero()) {
            record(c, AddSlide{k, j, col, -b}, out);
        }
    }
    record(c, Destabilize{k, {{col, row}}}, out);
}

ReduceResult reduce(const BasedComplex& input, const ReduceOptions& opts)
{
    try {
        complex_validate(input);
    } catch (const Error& e) {
        throw Error("invalid-complex", e.what());
    }
    BasedComplex c = input;
    c.normalize();
    std::vector<Move> moves;
    std::size_t steps = 0;
    while (!c.is_zero()) {
        const auto pivot = find_pivot(c);
        if (pivot && steps >= opts.budget) {
            return Stuck{std::move(moves), std::move(c), "budget"};
        }
        if (pivot) {
            eliminate_pivot(c, pivot->degree, pivot->row, pivot->col, moves);
            ++steps;
            continue;
        }
        if (c.diffs.empty()) {
            // Nonzero generators with zero differential carry homology.
            return Stuck{std::move(moves), std::move(c), "no-progress"};
        }
        if (steps < opts.budget) {
            std::vector<Move> trial;
            BasedComplex work = c;
            if (combine_round(work, opts.depth, trial)) {
                c = std::move(work);
                moves.insert(moves.end(), trial.begin(), trial.end());
                ++steps;
                continue;
            }
        }
        if (!plausibly_acyclic(c)) {
            return Stuck{std::move(moves), std::move(c), "not-acyclic"};
        }
        if (auto o = as_obstruction(c, moves)) {
            return std::move(*o);
        }
        return Stuck{std::move(moves), std::move(c), steps >= opts.budget ? "budget" : "no-progress"};
    }
    Certificate cert{complex_hash(input), std::move(moves)};
    verify_certificate(input, cert);
    return cert;
}

Certificate reduce_integer(const ZComplex& z)
{
    complex_validate(z);
    for (const auto& h : homology(z)) {
        if (!h.is_zero()) {
            throw Error("not-acyclic", "nonzero homology in degree " + std::to_string(h.degree));
        }
    }
    const BasedComplex start = as_based(z);
    BasedComplex c = start;
    std::vector<Move> moves;
    const Group& G = c.ring();
    while (!c.is_zero()) {
        if (c.diffs.empty()) {
            throw InternalError("acyclic complex without differential");
        }
        const int k = c.diffs.begin()->first;
        // The lowest differential is split injective, so its first column is
        // unimodular and Euclid on the rows reaches a +-1 entry.
        std::optional<std::size_t> unit_row;
        while (true) {
            const Matrix& cur = *c.find_d(k);
            std::optional<std::size_t> smallest;
            std::size_t nonzero = 0;
            for (std::size_t r = 0; r < cur.rows(); ++r) {
                const Integer v = augment(cur(r, 0));
                if (v == 0) {
                    continue;
                }
                ++nonzero;
                if (abs(v) == 1) {
                    unit_row = r;
                    break;
                }
                if (!smallest || abs(v) < abs(augment(cur(*smallest, 0)))) {
                    smallest = r;
                }
            }
            if (unit_row) {
                break;
            }
            if (!smallest || nonzero < 2) {
                throw InternalError("integer column without unit gcd");
            }
            const Integer p = augment(cur(*smallest, 0));
            for (std::size_t r = 0; r < cur.rows(); ++r) {
                const Integer v = augment((*c.find_d(k))(r, 0));
                if (r == *smallest || v == 0) {
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
                record(c, AddSlide{k + 1, *smallest, r, RingElement::integer(q, G)}, moves);
            }
        }
        eliminate_pivot(c, k, *unit_row, 0, moves);
    }
    Certificate cert{complex_hash(start), std::move(moves)};
    verify_certificate(start, cert);
    return cert;
}

}  // namespace shtk
