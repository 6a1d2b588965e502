#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shtk/filtered.hpp"

// Seeded random instances with certificates known by construction.
namespace shtk::gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    // Uniform in [0, n); n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
    // Uniform in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(unsigned num, unsigned den) { return eng_() % den < num; }

private:
    std::mt19937_64 eng_;
};

GroupElement random_element(Rng& rng, const Group& group);
// Up to `max_terms` terms with coefficients in [-max_coeff, max_coeff].
RingElement random_ring_element(Rng& rng, const Group& group, int max_terms = 2, int max_coeff = 2);

// Random elementary move applicable to c. Destabilize is only proposed on a
// trivial pair that already exists.
Move random_move(Rng& rng, const BasedComplex& c, bool allow_destabilize = true);

struct ComplexParams {
    int degrees = 3;          // generators live in degrees 0 .. degrees-1
    int max_rank = 4;         // per degree
    int slides = 6;           // random basis changes after assembly
    bool acyclic = false;     // only trivial summands
    std::string prefix = "x";
};

// Trivial summands, free generators and two-term blocks [a] assembled and
// then mixed by random basis changes. Labels are prefix + index.
BasedComplex random_complex(Rng& rng, GroupPtr group, const ComplexParams& params);

// Acyclic integer complex from random moves on zero, then de-based.
ZComplex random_acyclic_integer(Rng& rng, int max_rank, int degrees = 3);

// Certificate for cone(id_c), lifted over the filtration of c by degree.
Certificate certify_cone_identity(const BasedComplex& c);

struct SimpleMap {
    ChainMap map;
    Certificate cert;  // for cone(map)
};

// c -> T(c) where T is a random sequence of target moves (no Destabilize),
// optionally perturbed by dh + hd.
SimpleMap random_simple_map(Rng& rng, const BasedComplex& c, int target_moves, bool homotopy);

// d_D h + h d_C for a random degree -1 map h: C -> D. With `levels`, h only
// maps a generator into strictly lower levels.
ChainMap random_null_homotopic(Rng& rng, const BasedComplex& c, const BasedComplex& d, const Levels* source_levels = nullptr,
                               const Levels* target_levels = nullptr);

struct FilteredCase {
    FilteredChainMap map;
    std::vector<Certificate> graded;  // graded[p - 1] certifies cone(f^p)
};

// Level-wise simple maps glued by cross-level basis changes and a null
// homotopic perturbation that strictly lowers the level.
FilteredCase random_filtered_equivalence(Rng& rng, GroupPtr group, int levels, int max_per_level);

}  // namespace shtk::gen
