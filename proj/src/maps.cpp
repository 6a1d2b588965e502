#include "shtk/maps.hpp"

#include <set>

#include "shtk/error.hpp"
#include "shtk/kernels.hpp"
#include "shtk/moves.hpp"

namespace shtk {

namespace {

std::set<int> degrees_of(const BasedComplex& a, const BasedComplex& b)
{
    std::set<int> out;
    for (const auto& [k, x] : a.bases) {
        out.insert(k);
    }
    for (const auto& [k, x] : b.bases) {
        out.insert(k);
    }
    return out;
}

}  // namespace

Matrix ChainMap::at(int k) const
{
    auto it = matrices.find(k);
    if (it != matrices.end()) {
        return it->second;
    }
    return Matrix(target.rank(k), source.rank(k));
}

void ChainMap::normalize()
{
    std::erase_if(matrices, [this](const auto& kv) {
        return source.rank(kv.first) == 0 || target.rank(kv.first) == 0;
    });
    for (const auto& [k, b] : source.bases) {
        if (target.rank(k) > 0 && !matrices.contains(k)) {
            matrices.emplace(k, Matrix(target.rank(k), source.rank(k)));
        }
    }
}

IntMatrix IntChainMap::at(int k) const
{
    auto it = matrices.find(k);
    if (it != matrices.end()) {
        return it->second;
    }
    return IntMatrix(target.rank(k), source.rank(k));
}

void is_chain_map(const ChainMap& f)
{
    if (!(f.source.ring().spec() == f.target.ring().spec())) {
        throw Error("group-mismatch", "source and target are over different groups");
    }
    for (const auto& [k, m] : f.matrices) {
        if (m.rows() != f.target.rank(k) || m.cols() != f.source.rank(k)) {
            throw Error("dimension-mismatch", "f^" + std::to_string(k) + " is " + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()) + ", expected " +
                                                  std::to_string(f.target.rank(k)) + "x" +
                                                  std::to_string(f.source.rank(k)));
        }
    }
    const Group& g = f.ring();
    for (int k : degrees_of(f.source, f.target)) {
        const Matrix lhs = kernels::compose(g, f.target.d(k), f.at(k));
        const Matrix rhs = kernels::compose(g, f.at(k + 1), f.source.d(k));
        if (!(lhs == rhs)) {
            for (std::size_t i = 0; i < lhs.rows(); ++i) {
                for (std::size_t j = 0; j < lhs.cols(); ++j) {
                    if (!(lhs(i, j) == rhs(i, j))) {
                        throw Error("not-chain-map", "d f != f d at degree " + std::to_string(k) + ", entry (" +
                                                         std::to_string(i) + "," + std::to_string(j) + ")");
                    }
                }
            }
        }
    }
}

ChainMap identity_map(const BasedComplex& c)
{
    ChainMap f{c, c, {}};
    for (const auto& [k, b] : c.bases) {
        f.matrices[k] = Matrix::identity(b.size(), c.ring());
    }
    return f;
}

ChainMap zero_map(const BasedComplex& source, const BasedComplex& target)
{
    ChainMap f{source, target, {}};
    f.normalize();
    return f;
}

std::string cone_source_label(const std::string& label)
{
    return "s:" + label;
}

std::string cone_target_label(const std::string& label)
{
    return "t:" + label;
}

BasedComplex cone_unchecked(const ChainMap& f)
{
    const BasedComplex& c = f.source;
    const BasedComplex& d = f.target;
    BasedComplex out(c.group);
    std::set<int> degrees;
    for (const auto& [k, b] : c.bases) {
        degrees.insert(k - 1);
    }
    for (const auto& [k, b] : d.bases) {
        degrees.insert(k);
    }
    for (int m : degrees) {
        auto& labels = out.bases[m];
        for (const auto& l : c.basis(m + 1)) {
            labels.push_back(cone_source_label(l));
        }
        for (const auto& l : d.basis(m)) {
            labels.push_back(cone_target_label(l));
        }
    }
    out.normalize();
    for (auto& [m, mat] : out.diffs) {
        mat.set_block(0, 0, -c.d(m + 1));
        mat.set_block(c.rank(m + 2), 0, f.at(m + 1));
        mat.set_block(c.rank(m + 2), c.rank(m + 1), d.d(m));
    }
    return out;
}

BasedComplex cone(const ChainMap& f)
{
    is_chain_map(f);
    return cone_unchecked(f);
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (!(f.target == g.source)) {
        throw Error("boundary-mismatch", "target of f differs from source of g");
    }
    ChainMap out{f.source, g.target, {}};
    out.normalize();
    for (auto& [k, m] : out.matrices) {
        m = kernels::compose(f.ring(), g.at(k), f.at(k));
    }
    return out;
}

ChainMap extend_scalars(const IntChainMap& f, GroupPtr group)
{
    ChainMap out{extend_scalars(f.source, group), extend_scalars(f.target, group), {}};
    for (const auto& [k, m] : f.matrices) {
        out.matrices[k] = extend(m, *group);
    }
    out.normalize();
    return out;
}

IntChainMap base_change_augmentation(const ChainMap& f)
{
    IntChainMap out{base_change_augmentation(f.source), base_change_augmentation(f.target), {}};
    for (const auto& [k, m] : f.matrices) {
        out.matrices[k] = augment(m);
    }
    return out;
}

IntChainMap as_int_map(const ChainMap& f)
{
    auto check = [&](const Matrix& m, const std::string& where) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const auto& t = m(i, j).terms();
                if (t.size() > 1 || (t.size() == 1 && !f.ring().is_identity(t.front().first))) {
                    throw Error("noninteger-entry", where + " entry (" + std::to_string(i) + "," +
                                                        std::to_string(j) + ") is not an integer multiple of e");
                }
            }
        }
    };
    for (const auto& [k, m] : f.matrices) {
        check(m, "f^" + std::to_string(k));
    }
    for (const auto& [k, m] : f.source.diffs) {
        check(m, "source d^" + std::to_string(k));
    }
    for (const auto& [k, m] : f.target.diffs) {
        check(m, "target d^" + std::to_string(k));
    }
    return base_change_augmentation(f);
}

namespace {

std::vector<std::size_t> firsts(const Destabilize& d)
{
    std::vector<std::size_t> v;
    for (const auto& p : d.pairs) {
        v.push_back(p.first);
    }
    return v;
}

std::vector<std::size_t> seconds(const Destabilize& d)
{
    std::vector<std::size_t> v;
    for (const auto& p : d.pairs) {
        v.push_back(p.second);
    }
    return v;
}

}  // namespace

ChainMap apply_source_move(const ChainMap& f, const Move& m)
{
    ChainMap out{apply_move(f.source, m), f.target, f.matrices};
    const Group& g = f.ring();
    if (const auto* s = std::get_if<AddSlide>(&m.op)) {
        if (auto it = out.matrices.find(s->degree); it != out.matrices.end()) {
            it->second.source_slide(s->i, s->j, g, s->lambda);
        }
    } else if (const auto* u = std::get_if<ScaleUnit>(&m.op)) {
        if (auto it = out.matrices.find(u->degree); it != out.matrices.end()) {
            it->second.source_scale(u->i, g, u->sign, u->g);
        }
    } else if (const auto* st = std::get_if<Stabilize>(&m.op)) {
        for (int k : {st->degree, st->degree + 1}) {
            if (auto it = out.matrices.find(k); it != out.matrices.end()) {
                it->second.append_cols(st->count);
            }
        }
    } else if (const auto* ds = std::get_if<Destabilize>(&m.op)) {
        if (auto it = out.matrices.find(ds->degree); it != out.matrices.end()) {
            it->second.erase_cols(firsts(*ds));
        }
        if (auto it = out.matrices.find(ds->degree + 1); it != out.matrices.end()) {
            it->second.erase_cols(seconds(*ds));
        }
    }
    out.normalize();
    return out;
}

ChainMap apply_target_move(const ChainMap& f, const Move& m)
{
    ChainMap out{f.source, apply_move(f.target, m), f.matrices};
    const Group& g = f.ring();
    if (const auto* s = std::get_if<AddSlide>(&m.op)) {
        if (auto it = out.matrices.find(s->degree); it != out.matrices.end()) {
            it->second.target_slide(s->i, s->j, g, s->lambda);
        }
    } else if (const auto* u = std::get_if<ScaleUnit>(&m.op)) {
        if (auto it = out.matrices.find(u->degree); it != out.matrices.end()) {
            it->second.target_scale(u->i, g, u->sign, u->g);
        }
    } else if (const auto* st = std::get_if<Stabilize>(&m.op)) {
        for (int k : {st->degree, st->degree + 1}) {
            if (auto it = out.matrices.find(k); it != out.matrices.end()) {
                it->second.append_rows(st->count);
            }
        }
    } else if (const auto* ds = std::get_if<Destabilize>(&m.op)) {
        if (auto it = out.matrices.find(ds->degree); it != out.matrices.end()) {
            it->second.erase_rows(firsts(*ds));
        }
        if (auto it = out.matrices.find(ds->degree + 1); it != out.matrices.end()) {
            it->second.erase_rows(seconds(*ds));
        }
    }
    out.normalize();
    return out;
}

}  // namespace shtk
