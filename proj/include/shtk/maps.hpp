#pragma once

#include <map>

#include "shtk/complex.hpp"

namespace shtk {

struct Move;

// Degree-0 map f : source -> target; matrices[k] is |target^k| x |source^k|.
struct ChainMap {
    BasedComplex source;
    BasedComplex target;
    std::map<int, Matrix> matrices;

    const Group& ring() const { return source.ring(); }
    Matrix at(int k) const;
    void normalize();
    bool operator==(const ChainMap&) const = default;
};

struct IntChainMap {
    ZComplex source;
    ZComplex target;
    std::map<int, IntMatrix> matrices;

    IntMatrix at(int k) const;
};

// Throws Error("dimension-mismatch" | "not-chain-map" | "group-mismatch").
void is_chain_map(const ChainMap& f);

ChainMap identity_map(const BasedComplex& c);
ChainMap zero_map(const BasedComplex& source, const BasedComplex& target);

// Cone C_f on C[1] + D with d = [[-d_C, 0], [f, d_D]]. Source labels get the
// prefix "s:", target labels "t:"; in every degree the shifted source basis
// comes first.
BasedComplex cone(const ChainMap& f);
BasedComplex cone_unchecked(const ChainMap& f);
std::string cone_source_label(const std::string& label);
std::string cone_target_label(const std::string& label);

// g o f. Throws Error("boundary-mismatch").
ChainMap compose(const ChainMap& g, const ChainMap& f);

ChainMap extend_scalars(const IntChainMap& f, GroupPtr group);
IntChainMap base_change_augmentation(const ChainMap& f);
IntChainMap as_int_map(const ChainMap& f);  // requires every entry in Z*e

// Elementary move applied to the source (resp. target) complex of f with the
// map matrices re-expressed in the new basis. Stabilized generators map to and
// from zero; destabilized ones are dropped.
ChainMap apply_source_move(const ChainMap& f, const Move& m);
ChainMap apply_target_move(const ChainMap& f, const Move& m);

}  // namespace shtk
