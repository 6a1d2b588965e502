#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shtk/maps.hpp"
#include "shtk/moves.hpp"

namespace shtk {

// Filtration level (1..k) of each basis label. F^p is spanned by the
// generators of level <= p.
using Levels = std::map<std::string, int>;

struct FilteredBasedComplex {
    BasedComplex complex;
    Levels level;

    int top_level() const;
};

struct FilteredChainMap {
    ChainMap map;
    Levels source_levels;
    Levels target_levels;

    int top_level() const;
};

// Throws Error("not-a-subfiltration" | "missing-level").
void filtration_validate(const FilteredBasedComplex& fc);
// Additionally Error("filtration-not-preserved").
void filtration_validate(const FilteredChainMap& f);

// G^p = F^p / F^{p-1}: generators of level p, differential restricted to the
// level-p block. Throws Error("level-out-of-range").
BasedComplex associated_graded(const FilteredBasedComplex& fc, int p);
ChainMap graded_map(const FilteredChainMap& f, int p);

// Cone of f with the induced filtration F^p C_f = F^p C[1] + F^p D.
FilteredBasedComplex filtered_cone(const FilteredChainMap& f);

struct LiftStats {
    std::size_t lifted_moves = 0;
    // Destabilized pairs that needed the s' = s + t replacement.
    std::size_t corrections = 0;
    std::size_t correction_moves = 0;
};

// A graded complex with a positional certificate and the correspondence
// (degree, graded label) -> label in the filtered complex.
struct GradedPiece {
    BasedComplex complex;
    Certificate certificate;
    std::map<std::pair<int, std::string>, std::string> to_filtered;
};

// Replays the level-p certificates from the top level down on `b`, lifting
// each move and replacing s by s + t before every destabilization. Returns the
// positional moves reducing `b` to zero. pieces[p - 1] serves level p.
// Throws Error("graded-certificate-invalid" | "lift-internal-error").
std::vector<Move> lift_moves(const BasedComplex& b, const Levels& levels, const std::vector<GradedPiece>& pieces,
                             LiftStats* stats = nullptr);

// Certificate for fc.complex from certificates for each associated graded
// complex (graded_certs[p - 1] certifies associated_graded(fc, p)).
Certificate lift_certificates(const FilteredBasedComplex& fc, const std::vector<Certificate>& graded_certs,
                              LiftStats* stats = nullptr);

// Certificate for cone(f.map) from certificates for the cones of the graded
// maps f^p. Throws additionally Error("filtration-not-preserved").
Certificate lift_filtered_certificates(const FilteredChainMap& f, const std::vector<Certificate>& graded_certs,
                                       LiftStats* stats = nullptr);

}  // namespace shtk
