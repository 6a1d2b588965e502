// Certificate for cone(g o f) from certificates for cone(f) and cone(g).
//
// Starting from cone(g o f) on C[1] + E, a summand Z = D[1] + D with
// differential [[-d_D, 0], [-1, d_D]] is stabilized into existence, and the
// basis is changed by
//     c  <- c - (f c)'          (f c read in the D[1] summand)
//     d  <- d + (g d)           (g d read in E)
// After this the complex is the cone of F = [[f, -1], [0, g]] : C + D -> D + E,
// which is filtered with graded pieces cone(f) (level 1) and cone(g) (level 2),
// so the two certificates lift.

#include "shtk/error.hpp"
#include "shtk/filtered.hpp"
#include "shtk/json_io.hpp"
#include "shtk/moves.hpp"

namespace shtk {

namespace {

struct Builder {
    BasedComplex cur;
    std::vector<Move> moves;

    void emit(Move m)
    {
        apply_move_in_place(cur, m);
        moves.push_back(std::move(m));
    }

    std::size_t pos(int k, const std::string& label) const
    {
        const std::size_t i = cur.index_of(k, label);
        if (i == static_cast<std::size_t>(-1)) {
            throw InternalError("compose: lost label " + label);
        }
        return i;
    }
};

}  // namespace

Certificate compose_certificates(const ChainMap& f, const ChainMap& g, const Certificate& cert_f,
                                 const Certificate& cert_g, ComposeStats* stats)
{
    if (!(f.target == g.source)) {
        throw Error("boundary-mismatch", "target of f differs from source of g");
    }
    const BasedComplex cone_f = cone(f);
    const BasedComplex cone_g = cone(g);
    try {
        verify_certificate(cone_f, cert_f);
        verify_certificate(cone_g, cert_g);
    } catch (const Error& e) {
        throw Error("certificate-invalid", e.what());
    }
    const ChainMap h = compose(g, f);
    const BasedComplex start = cone(h);
    const Group& grp = h.ring();
    const BasedComplex& dcx = f.target;

    Builder b{start, {}};
    // Labels of the D[1] copy (x, degree j-1) and the D copy (y, degree j).
    std::map<std::pair<int, std::string>, std::string> shifted_label;
    std::map<std::pair<int, std::string>, std::string> plain_label;

    for (const auto& [j, labels] : dcx.bases) {
        b.emit(Stabilize{j - 1, labels.size()});
        const auto& lo = b.cur.basis(j - 1);
        const auto& hi = b.cur.basis(j);
        for (std::size_t n = 0; n < labels.size(); ++n) {
            shifted_label[{j, labels[n]}] = lo[lo.size() - labels.size() + n];
            plain_label[{j, labels[n]}] = hi[hi.size() - labels.size() + n];
        }
    }
    // y_a -> d_a = -y_a - sum_b dD(b, a) x_b
    for (const auto& [j, labels] : dcx.bases) {
        const Matrix dd = dcx.d(j);
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const std::string& ya = plain_label.at({j, labels[a]});
            b.emit(ScaleUnit{j, b.pos(j, ya), -1, grp.identity()});
            for (std::size_t r = 0; r < dd.rows(); ++r) {
                if (dd(r, a).is_zero()) {
                    continue;
                }
                const std::string& xb = shifted_label.at({j + 1, dcx.basis(j + 1)[r]});
                b.emit(AddSlide{j, b.pos(j, ya), b.pos(j, xb), -dd(r, a)});
            }
        }
    }
    // c <- c - (f c)'
    for (const auto& [m, labels] : f.source.bases) {
        const Matrix fm = f.at(m);
        for (std::size_t c = 0; c < labels.size(); ++c) {
            const std::string cl = cone_source_label(labels[c]);
            for (std::size_t r = 0; r < fm.rows(); ++r) {
                if (fm(r, c).is_zero()) {
                    continue;
                }
                const std::string& xb = shifted_label.at({m, dcx.basis(m)[r]});
                b.emit(AddSlide{m - 1, b.pos(m - 1, cl), b.pos(m - 1, xb), -fm(r, c)});
            }
        }
    }
    // d <- d + (g d)
    for (const auto& [j, labels] : dcx.bases) {
        const Matrix gm = g.at(j);
        for (std::size_t a = 0; a < labels.size(); ++a) {
            const std::string& ya = plain_label.at({j, labels[a]});
            for (std::size_t r = 0; r < gm.rows(); ++r) {
                if (gm(r, a).is_zero()) {
                    continue;
                }
                const std::string el = cone_target_label(g.target.basis(j)[r]);
                b.emit(AddSlide{j, b.pos(j, ya), b.pos(j, el), gm(r, a)});
            }
        }
    }
    const std::size_t setup = b.moves.size();

    Levels levels;
    GradedPiece low{cone_f, cert_f, {}};
    GradedPiece high{cone_g, cert_g, {}};
    for (const auto& [m, labels] : f.source.bases) {
        for (const auto& l : labels) {
            levels[cone_source_label(l)] = 1;
            low.to_filtered[{m - 1, cone_source_label(l)}] = cone_source_label(l);
        }
    }
    for (const auto& [j, labels] : dcx.bases) {
        for (const auto& l : labels) {
            const std::string& y = plain_label.at({j, l});
            const std::string& x = shifted_label.at({j, l});
            levels[y] = 1;
            levels[x] = 2;
            low.to_filtered[{j, cone_target_label(l)}] = y;
            high.to_filtered[{j - 1, cone_source_label(l)}] = x;
        }
    }
    for (const auto& [m, labels] : g.target.bases) {
        for (const auto& l : labels) {
            levels[cone_target_label(l)] = 2;
            high.to_filtered[{m, cone_target_label(l)}] = cone_target_label(l);
        }
    }

    LiftStats lift_stats;
    std::vector<Move> lifted;
    try {
        lifted = lift_moves(b.cur, levels, {low, high}, &lift_stats);
    } catch (const Error& e) {
        throw InternalError(std::string("compose: lift failed: ") + e.what());
    }
    Certificate out{complex_hash(start), std::move(b.moves)};
    out.moves.insert(out.moves.end(), std::make_move_iterator(lifted.begin()), std::make_move_iterator(lifted.end()));
    verify_certificate(start, out);
    if (stats != nullptr) {
        stats->setup_moves = setup;
        stats->corrections = lift_stats.correction_moves;
    }
    return out;
}

Certificate compose_certificates(const ChainMap& f, const ChainMap& g, const Certificate& cert_f,
                                 const Certificate& cert_g)
{
    return compose_certificates(f, g, cert_f, cert_g, nullptr);
}

}  // namespace shtk
