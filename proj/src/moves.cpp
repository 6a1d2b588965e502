#include "shtk/moves.hpp"

#include <algorithm>
#include <set>

#include "shtk/error.hpp"
#include "shtk/json_io.hpp"

namespace shtk {

namespace {

[[noreturn]] void out_of_range(const std::string& what)
{
    throw Error("index-out-of-range", what);
}

void check_index(const BasedComplex& c, int k, std::size_t i)
{
    if (i >= c.rank(k)) {
        out_of_range("index " + std::to_string(i) + " in degree " + std::to_string(k) + " (rank " +
                     std::to_string(c.rank(k)) + ")");
    }
}

std::string entry_name(int k, std::size_t row, std::size_t col)
{
    return "d^" + std::to_string(k) + "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

void stabilize(BasedComplex& c, const Stabilize& m)
{
    if (m.count == 0) {
        throw Error("invalid-move", "Stabilize count must be >= 1");
    }
    const int k = m.degree;
    const std::size_t r = m.count;
    const std::size_t rows0 = c.rank(k + 1);
    const std::size_t cols0 = c.rank(k);
    if (auto it = c.diffs.find(k - 1); it != c.diffs.end()) {
        it->second.append_rows(r);
    }
    if (auto it = c.diffs.find(k); it != c.diffs.end()) {
        it->second.append_rows(r);
        it->second.append_cols(r);
    }
    if (auto it = c.diffs.find(k + 1); it != c.diffs.end()) {
        it->second.append_cols(r);
    }
    std::vector<std::string> fresh;
    for (std::size_t n = 0; n < 2 * r; ++n) {
        fresh.push_back(fresh_label(c, fresh));
    }
    auto& lo = c.bases[k];
    auto& hi = c.bases[k + 1];
    for (std::size_t n = 0; n < r; ++n) {
        lo.push_back(fresh[2 * n]);
        hi.push_back(fresh[2 * n + 1]);
    }
    c.normalize();
    Matrix& d = c.d_mut(k);
    for (std::size_t n = 0; n < r; ++n) {
        d(rows0 + n, cols0 + n) = RingElement(c.ring().identity());
    }
}

void destabilize(BasedComplex& c, const Destabilize& m)
{
    const int k = m.degree;
    if (m.pairs.empty()) {
        throw Error("invalid-move", "Destabilize needs at least one pair");
    }
    std::set<std::size_t> lo;
    std::set<std::size_t> hi;
    for (const auto& [a, b] : m.pairs) {
        check_index(c, k, a);
        check_index(c, k + 1, b);
        if (!lo.insert(a).second || !hi.insert(b).second) {
            throw Error("invalid-move", "Destabilize names a generator twice");
        }
    }
    const Group& g = c.ring();
    const Matrix& d = *c.find_d(k);
    // Columns `lo` and rows `hi` of d^k form exactly the identity pairing.
    for (const auto& [a, b] : m.pairs) {
        for (std::size_t row = 0; row < d.rows(); ++row) {
            const bool expect_one = row == b;
            const RingElement& x = d(row, a);
            if (expect_one ? !is_one(g, x) : !x.is_zero()) {
                throw Error("destabilize-block-not-trivial", entry_name(k, row, a) + " breaks the trivial pair");
            }
        }
        for (std::size_t col = 0; col < d.cols(); ++col) {
            if (col != a && !d(b, col).is_zero()) {
                throw Error("destabilize-block-not-trivial", entry_name(k, b, col) + " breaks the trivial pair");
            }
        }
    }
    if (const Matrix* in = c.find_d(k - 1)) {
        for (auto a : lo) {
            for (std::size_t col = 0; col < in->cols(); ++col) {
                if (!(*in)(a, col).is_zero()) {
                    throw Error("destabilize-block-not-trivial", entry_name(k - 1, a, col) + " is nonzero");
                }
            }
        }
    }
    if (const Matrix* out = c.find_d(k + 1)) {
        for (auto b : hi) {
            for (std::size_t row = 0; row < out->rows(); ++row) {
                if (!(*out)(row, b).is_zero()) {
                    throw Error("destabilize-block-not-trivial", entry_name(k + 1, row, b) + " is nonzero");
                }
            }
        }
    }
    const std::vector<std::size_t> lo_v(lo.begin(), lo.end());
    const std::vector<std::size_t> hi_v(hi.begin(), hi.end());
    if (auto it = c.diffs.find(k - 1); it != c.diffs.end()) {
        it->second.erase_rows(lo_v);
    }
    if (auto it = c.diffs.find(k); it != c.diffs.end()) {
        it->second.erase_rows(hi_v);
        it->second.erase_cols(lo_v);
    }
    if (auto it = c.diffs.find(k + 1); it != c.diffs.end()) {
        it->second.erase_cols(hi_v);
    }
    auto erase_positions = [](std::vector<std::string>& labels, const std::set<std::size_t>& pos) {
        std::vector<std::string> kept;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!pos.contains(i)) {
                kept.push_back(std::move(labels[i]));
            }
        }
        labels = std::move(kept);
    };
    erase_positions(c.bases[k], lo);
    erase_positions(c.bases[k + 1], hi);
    c.normalize();
}

void add_slide(BasedComplex& c, const AddSlide& m)
{
    check_index(c, m.degree, m.i);
    check_index(c, m.degree, m.j);
    if (m.i == m.j) {
        throw Error("invalid-move", "AddSlide needs i != j");
    }
    if (!belongs_to(c.ring(), m.lambda)) {
        throw Error("group-mismatch", "AddSlide coefficient is not in the group ring");
    }
    if (auto it = c.diffs.find(m.degree); it != c.diffs.end()) {
        it->second.source_slide(m.i, m.j, c.ring(), m.lambda);
    }
    if (auto it = c.diffs.find(m.degree - 1); it != c.diffs.end()) {
        it->second.target_slide(m.i, m.j, c.ring(), m.lambda);
    }
}

void scale_unit(BasedComplex& c, const ScaleUnit& m)
{
    check_index(c, m.degree, m.i);
    if (m.sign != 1 && m.sign != -1) {
        throw Error("invalid-move", "ScaleUnit sign must be +1 or -1");
    }
    if (!c.ring().contains(m.g)) {
        throw Error("group-mismatch", "ScaleUnit element is not in the group");
    }
    if (auto it = c.diffs.find(m.degree); it != c.diffs.end()) {
        it->second.source_scale(m.i, c.ring(), m.sign, m.g);
    }
    if (auto it = c.diffs.find(m.degree - 1); it != c.diffs.end()) {
        it->second.target_scale(m.i, c.ring(), m.sign, m.g);
    }
}

}  // namespace

int Move::degree() const
{
    return std::visit([](const auto& m) { return m.degree; }, op);
}

std::string Move::name() const
{
    struct Namer {
        std::string operator()(const Stabilize&) const { return "Stabilize"; }
        std::string operator()(const Destabilize&) const { return "Destabilize"; }
        std::string operator()(const AddSlide&) const { return "AddSlide"; }
        std::string operator()(const ScaleUnit&) const { return "ScaleUnit"; }
    };
    return std::visit(Namer{}, op);
}

void apply_move_in_place(BasedComplex& c, const Move& m)
{
    struct Applier {
        BasedComplex& c;
        void operator()(const Stabilize& s) const { stabilize(c, s); }
        void operator()(const Destabilize& s) const { destabilize(c, s); }
        void operator()(const AddSlide& s) const { add_slide(c, s); }
        void operator()(const ScaleUnit& s) const { scale_unit(c, s); }
    };
    std::visit(Applier{c}, m.op);
}

BasedComplex apply_move(const BasedComplex& c, const Move& m)
{
    BasedComplex out = c;
    apply_move_in_place(out, m);
    return out;
}

Move inverse_move(const BasedComplex& before, const Move& m)
{
    struct Inverter {
        const BasedComplex& c;
        Move operator()(const Stabilize& s) const
        {
            Destabilize d{s.degree, {}};
            for (std::size_t n = 0; n < s.count; ++n) {
                d.pairs.emplace_back(c.rank(s.degree) + n, c.rank(s.degree + 1) + n);
            }
            return d;
        }
        Move operator()(const Destabilize& s) const { return Stabilize{s.degree, s.pairs.size()}; }
        Move operator()(const AddSlide& s) const { return AddSlide{s.degree, s.i, s.j, -s.lambda}; }
        Move operator()(const ScaleUnit& s) const
        {
            return ScaleUnit{s.degree, s.i, s.sign, c.ring().inverse(s.g)};
        }
    };
    return std::visit(Inverter{before}, m.op);
}

BasedComplex replay(const BasedComplex& c, const std::vector<Move>& moves)
{
    BasedComplex cur = c;
    for (std::size_t n = 0; n < moves.size(); ++n) {
        try {
            apply_move_in_place(cur, moves[n]);
        } catch (const Error& e) {
            throw Error("move-failure", "step " + std::to_string(n) + " (" + moves[n].name() + "): " + e.what());
        }
    }
    return cur;
}

void verify_certificate(const BasedComplex& c, const Certificate& cert)
{
    const std::string h = complex_hash(c);
    if (cert.initial_hash != h) {
        throw Error("hash-mismatch", "certificate anchored to " + cert.initial_hash + ", complex hashes to " + h);
    }
    const BasedComplex last = replay(c, cert.moves);
    if (!last.is_zero()) {
        std::string sizes;
        for (const auto& [k, b] : last.bases) {
            sizes += " C^" + std::to_string(k) + "=" + std::to_string(b.size());
        }
        throw Error("nonzero-residual", "replay ends at a nonzero complex:" + sizes);
    }
}

bool certificate_verifies(const BasedComplex& c, const Certificate& cert)
{
    try {
        verify_certificate(c, cert);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Certificate extend_certificate(const Certificate& cert, const BasedComplex& extended)
{
    const Group& g = extended.ring();
    Certificate out;
    out.initial_hash = complex_hash(extended);
    out.moves.reserve(cert.moves.size());
    for (const Move& m : cert.moves) {
        if (const auto* s = std::get_if<AddSlide>(&m.op)) {
            out.moves.push_back(AddSlide{s->degree, s->i, s->j, RingElement::integer(augment(s->lambda), g)});
        } else if (const auto* u = std::get_if<ScaleUnit>(&m.op)) {
            out.moves.push_back(ScaleUnit{u->degree, u->i, u->sign, g.identity()});
        } else {
            out.moves.push_back(m);
        }
    }
    return out;
}

}  // namespace shtk
