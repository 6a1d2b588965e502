#include "shtk/complex.hpp"

#include <set>

#include "shtk/error.hpp"
#include "shtk/kernels.hpp"

namespace shtk {

namespace {

const std::vector<std::string> kEmpty;

void check_labels(const std::map<int, std::vector<std::string>>& bases)
{
    for (const auto& [k, labels] : bases) {
        std::set<std::string> seen;
        for (const auto& l : labels) {
            if (!seen.insert(l).second) {
                throw Error("duplicate-label", "label '" + l + "' repeated in degree " + std::to_string(k));
            }
        }
    }
}

}  // namespace

std::size_t BasedComplex::rank(int k) const
{
    auto it = bases.find(k);
    return it == bases.end() ? 0 : it->second.size();
}

std::size_t BasedComplex::total_rank() const
{
    std::size_t n = 0;
    for (const auto& [k, b] : bases) {
        n += b.size();
    }
    return n;
}

const std::vector<std::string>& BasedComplex::basis(int k) const
{
    auto it = bases.find(k);
    return it == bases.end() ? kEmpty : it->second;
}

Matrix BasedComplex::d(int k) const
{
    if (const Matrix* m = find_d(k)) {
        return *m;
    }
    return Matrix(rank(k + 1), rank(k));
}

const Matrix* BasedComplex::find_d(int k) const
{
    auto it = diffs.find(k);
    return it == diffs.end() ? nullptr : &it->second;
}

Matrix& BasedComplex::d_mut(int k)
{
    auto it = diffs.find(k);
    if (it == diffs.end()) {
        it = diffs.emplace(k, Matrix(rank(k + 1), rank(k))).first;
    }
    return it->second;
}

std::size_t BasedComplex::index_of(int k, const std::string& label) const
{
    const auto& b = basis(k);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == label) {
            return i;
        }
    }
    return static_cast<std::size_t>(-1);
}

void BasedComplex::normalize()
{
    std::erase_if(bases, [](const auto& kv) { return kv.second.empty(); });
    std::erase_if(diffs, [this](const auto& kv) { return rank(kv.first) == 0 || rank(kv.first + 1) == 0; });
    for (const auto& [k, b] : bases) {
        if (rank(k + 1) > 0) {
            d_mut(k);
        }
    }
}

bool BasedComplex::operator==(const BasedComplex& other) const
{
    const bool same_group = (group && other.group) ? group->spec() == other.group->spec() : group == other.group;
    return same_group && bases == other.bases && diffs == other.diffs;
}

std::size_t ZComplex::rank(int k) const
{
    auto it = bases.find(k);
    return it == bases.end() ? 0 : it->second.size();
}

IntMatrix ZComplex::d(int k) const
{
    auto it = diffs.find(k);
    if (it != diffs.end()) {
        return it->second;
    }
    return IntMatrix(rank(k + 1), rank(k));
}

void ZComplex::normalize()
{
    std::erase_if(bases, [](const auto& kv) { return kv.second.empty(); });
    std::erase_if(diffs, [this](const auto& kv) { return rank(kv.first) == 0 || rank(kv.first + 1) == 0; });
    for (const auto& [k, b] : bases) {
        if (rank(k + 1) > 0 && !diffs.contains(k)) {
            diffs.emplace(k, IntMatrix(rank(k + 1), rank(k)));
        }
    }
}

void complex_validate(const BasedComplex& c)
{
    if (!c.group) {
        throw Error("invalid-complex", "complex has no coefficient group");
    }
    check_labels(c.bases);
    for (const auto& [k, m] : c.diffs) {
        if (m.rows() != c.rank(k + 1) || m.cols() != c.rank(k)) {
            throw Error("dimension-mismatch", "d^" + std::to_string(k) + " is " + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()) + ", expected " +
                                                  std::to_string(c.rank(k + 1)) + "x" + std::to_string(c.rank(k)));
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!belongs_to(c.ring(), m(i, j))) {
                    throw Error("group-mismatch", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                      ") of d^" + std::to_string(k) + " is not in the group ring");
                }
            }
        }
    }
    for (const auto& [k, m] : c.diffs) {
        const Matrix* next = c.find_d(k + 1);
        if (next == nullptr) {
            continue;
        }
        const Matrix dd = kernels::compose(c.ring(), *next, m);
        for (std::size_t i = 0; i < dd.rows(); ++i) {
            for (std::size_t j = 0; j < dd.cols(); ++j) {
                if (!dd(i, j).is_zero()) {
                    throw Error("d-squared-nonzero", "d^" + std::to_string(k + 1) + " d^" + std::to_string(k) +
                                                         " has nonzero entry (" + std::to_string(i) + "," +
                                                         std::to_string(j) + ") at degree " + std::to_string(k));
                }
            }
        }
    }
}

void complex_validate(const ZComplex& c)
{
    check_labels(c.bases);
    for (const auto& [k, m] : c.diffs) {
        if (m.rows != c.rank(k + 1) || m.cols != c.rank(k)) {
            throw Error("dimension-mismatch", "d^" + std::to_string(k) + " has wrong shape");
        }
    }
    for (const auto& [k, m] : c.diffs) {
        auto it = c.diffs.find(k + 1);
        if (it == c.diffs.end()) {
            continue;
        }
        const IntMatrix& n = it->second;
        for (std::size_t i = 0; i < n.rows; ++i) {
            for (std::size_t j = 0; j < m.cols; ++j) {
                Integer s = 0;
                for (std::size_t l = 0; l < m.rows; ++l) {
                    s += n(i, l) * m(l, j);
                }
                if (s != 0) {
                    throw Error("d-squared-nonzero", "nonzero entry (" + std::to_string(i) + "," +
                                                         std::to_string(j) + ") at degree " + std::to_string(k));
                }
            }
        }
    }
}

BasedComplex shift(const BasedComplex& c, int by)
{
    BasedComplex out(c.group);
    const bool negate = (by % 2) != 0;
    for (const auto& [k, b] : c.bases) {
        out.bases[k - by] = b;
    }
    for (const auto& [k, m] : c.diffs) {
        out.diffs[k - by] = negate ? -m : m;
    }
    return out;
}

BasedComplex direct_sum(const BasedComplex& c, const BasedComplex& d)
{
    if (!(c.group->spec() == d.group->spec())) {
        throw Error("group-mismatch", "direct sum of complexes over different groups");
    }
    BasedComplex out(c.group);
    std::set<int> degrees;
    for (const auto& [k, b] : c.bases) {
        degrees.insert(k);
    }
    for (const auto& [k, b] : d.bases) {
        degrees.insert(k);
    }
    for (int k : degrees) {
        auto& b = out.bases[k];
        b = c.basis(k);
        b.insert(b.end(), d.basis(k).begin(), d.basis(k).end());
    }
    check_labels(out.bases);
    out.normalize();
    for (auto& [k, m] : out.diffs) {
        m.set_block(0, 0, c.d(k));
        m.set_block(c.rank(k + 1), c.rank(k), d.d(k));
    }
    return out;
}

ZComplex base_change_augmentation(const BasedComplex& c)
{
    ZComplex out;
    out.bases = c.bases;
    for (const auto& [k, m] : c.diffs) {
        out.diffs[k] = augment(m);
    }
    return out;
}

BasedComplex extend_scalars(const ZComplex& c, GroupPtr group)
{
    BasedComplex out(std::move(group));
    out.bases = c.bases;
    for (const auto& [k, m] : c.diffs) {
        out.diffs[k] = extend(m, out.ring());
    }
    out.normalize();
    return out;
}

BasedComplex as_based(const ZComplex& c)
{
    return extend_scalars(c, Group::make(GroupSpec::trivial()));
}

ZComplex restrict_scalars(const BasedComplex& c)
{
    const Group& g = c.ring();
    if (!g.is_finite()) {
        throw Error("unsupported-group", "integer homology needs a finite group, got " + to_string(g.kind()));
    }
    const auto elems = g.elements();
    const std::size_t n = elems.size();
    ZComplex out;
    for (const auto& [k, b] : c.bases) {
        auto& labels = out.bases[k];
        for (const auto& l : b) {
            for (const auto& e : elems) {
                labels.push_back(l + "@" + std::to_string(g.index_of(e)));
            }
        }
    }
    // Z-basis {g c_j}: d(g c_j) = sum_i (g D_ij) c_i.
    for (const auto& [k, m] : c.diffs) {
        IntMatrix z(m.rows() * n, m.cols() * n);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                for (const auto& [h, coeff] : m(i, j).terms()) {
                    for (const auto& gel : elems) {
                        const std::size_t row = i * n + g.index_of(g.mul(gel, h));
                        const std::size_t col = j * n + g.index_of(gel);
                        z(row, col) += coeff;
                    }
                }
            }
        }
        out.diffs[k] = std::move(z);
    }
    out.normalize();
    return out;
}

std::vector<HomologyGroup> homology(const ZComplex& c)
{
    std::vector<HomologyGroup> out;
    if (c.bases.empty()) {
        return out;
    }
    const int lo = c.bases.begin()->first;
    const int hi = c.bases.rbegin()->first;
    std::map<int, std::vector<Integer>> invariants;
    for (const auto& [k, m] : c.diffs) {
        invariants[k] = kernels::smith_invariants(m);
    }
    for (int k = lo; k <= hi; ++k) {
        HomologyGroup h;
        h.degree = k;
        const long out_rank = invariants.contains(k) ? static_cast<long>(invariants[k].size()) : 0;
        long in_rank = 0;
        if (invariants.contains(k - 1)) {
            for (const auto& x : invariants[k - 1]) {
                ++in_rank;
                if (x > 1) {
                    h.torsion.push_back(x);
                }
            }
        }
        h.free_rank = static_cast<long>(c.rank(k)) - out_rank - in_rank;
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<HomologyGroup> homology_Z(const BasedComplex& c)
{
    return homology(restrict_scalars(c));
}

bool is_acyclic(const ZComplex& c)
{
    for (const auto& h : homology(c)) {
        if (!h.is_zero()) {
            return false;
        }
    }
    return true;
}

std::string fresh_label(const BasedComplex& c, const std::vector<std::string>& taken)
{
    std::set<std::string> used(taken.begin(), taken.end());
    for (const auto& [k, b] : c.bases) {
        used.insert(b.begin(), b.end());
    }
    for (std::size_t n = 0;; ++n) {
        std::string l = "~" + std::to_string(n);
        if (!used.contains(l)) {
            return l;
        }
    }
}

}  // namespace shtk
