#pragma once

#include <map>
#include <string>
#include <vector>

#include "shtk/matrix.hpp"

namespace shtk {

// Based, free, finitely generated cochain complex over Z[G].
//
// d^k : C^k -> C^{k+1} is stored as a |C^{k+1}| x |C^k| matrix whose column j
// lists the coefficients of d(c_j); scalars act on the left. Degrees with an
// empty basis are not stored, and a differential is stored exactly when both
// adjacent bases are nonempty (normalize() restores this).
struct BasedComplex {
    GroupPtr group;
    std::map<int, std::vector<std::string>> bases;
    std::map<int, Matrix> diffs;

    BasedComplex() = default;
    explicit BasedComplex(GroupPtr g) : group(std::move(g)) {}

    const Group& ring() const { return *group; }
    std::size_t rank(int k) const;
    std::size_t total_rank() const;
    const std::vector<std::string>& basis(int k) const;
    // Copy of d^k, a zero matrix of the right shape when not stored.
    Matrix d(int k) const;
    const Matrix* find_d(int k) const;
    // Mutable d^k; creates a zero matrix of the right shape if missing.
    Matrix& d_mut(int k);
    bool is_zero() const { return bases.empty(); }
    // Position of `label` in degree k, or npos.
    std::size_t index_of(int k, const std::string& label) const;

    void normalize();

    bool operator==(const BasedComplex& other) const;
};

// Integer complex (trivial coefficient group), same conventions.
struct ZComplex {
    std::map<int, std::vector<std::string>> bases;
    std::map<int, IntMatrix> diffs;

    std::size_t rank(int k) const;
    IntMatrix d(int k) const;
    void normalize();
    bool operator==(const ZComplex&) const = default;
};

struct HomologyGroup {
    int degree = 0;
    long free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

// Throws Error("dimension-mismatch" | "duplicate-label" | "d-squared-nonzero").
void complex_validate(const BasedComplex& c);
void complex_validate(const ZComplex& c);

// (C[n])^k = C^{k+n}, differential multiplied by (-1)^n.
BasedComplex shift(const BasedComplex& c, int by);

// Block-diagonal sum; the basis of c precedes the basis of d in every degree.
// Throws Error("group-mismatch" | "duplicate-label").
BasedComplex direct_sum(const BasedComplex& c, const BasedComplex& d);

ZComplex base_change_augmentation(const BasedComplex& c);
BasedComplex extend_scalars(const ZComplex& c, GroupPtr group);
// Integer complex with n -> n*e over the trivial group.
BasedComplex as_based(const ZComplex& c);

// Homology over Z of C regarded as a Z-complex (restriction of scalars, so
// the group must be finite). Throws Error("unsupported-group"). One entry per
// degree from the lowest to the highest stored degree.
std::vector<HomologyGroup> homology_Z(const BasedComplex& c);
std::vector<HomologyGroup> homology(const ZComplex& c);
// Restriction of scalars to Z (finite groups only).
ZComplex restrict_scalars(const BasedComplex& c);

bool is_acyclic(const ZComplex& c);

// Smallest "~n" label unused in every degree of c, skipping `taken`.
std::string fresh_label(const BasedComplex& c, const std::vector<std::string>& taken = {});

}  // namespace shtk
