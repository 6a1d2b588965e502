#pragma once

#include <string>
#include <variant>
#include <vector>

#include "shtk/complex.hpp"

namespace shtk {

struct ChainMap;

// Insert 0 -> L^count --id--> L^count -> 0 in degrees (degree, degree+1),
// appended at the end of both bases.
struct Stabilize {
    int degree = 0;
    std::size_t count = 1;
    bool operator==(const Stabilize&) const = default;
};

// Remove the pairs (index in C^degree, index in C^{degree+1}). The named
// generators must span an identity block with no other differential entries
// touching them.
struct Destabilize {
    int degree = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    bool operator==(const Destabilize&) const = default;
};

// c_i <- c_i + lambda c_j in degree `degree`, i != j.
struct AddSlide {
    int degree = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    RingElement lambda;
    bool operator==(const AddSlide&) const = default;
};

// c_i <- sign g c_i.
struct ScaleUnit {
    int degree = 0;
    std::size_t i = 0;
    int sign = 1;
    GroupElement g;
    bool operator==(const ScaleUnit&) const = default;
};

struct Move {
    std::variant<Stabilize, Destabilize, AddSlide, ScaleUnit> op;

    Move() = default;
    Move(Stabilize m) : op(std::move(m)) {}
    Move(Destabilize m) : op(std::move(m)) {}
    Move(AddSlide m) : op(std::move(m)) {}
    Move(ScaleUnit m) : op(std::move(m)) {}

    int degree() const;
    std::string name() const;
    bool operator==(const Move&) const = default;
};

struct Certificate {
    std::string initial_hash;
    std::vector<Move> moves;

    std::size_t size() const { return moves.size(); }
    bool operator==(const Certificate&) const = default;
};

// Throws Error("index-out-of-range" | "destabilize-block-not-trivial" |
// "invalid-move"). The result always satisfies d o d = 0 when c does.
BasedComplex apply_move(const BasedComplex& c, const Move& m);
void apply_move_in_place(BasedComplex& c, const Move& m);

// Move undoing `m` when applied to apply_move(before, m). Destabilize is undone
// by a Stabilize that re-appends the pairs at the end of the bases.
Move inverse_move(const BasedComplex& before, const Move& m);

// Replays all moves; Error("move-failure") names the failing step.
BasedComplex replay(const BasedComplex& c, const std::vector<Move>& moves);

// Throws Error("hash-mismatch" | "move-failure" | "nonzero-residual").
void verify_certificate(const BasedComplex& c, const Certificate& cert);
bool certificate_verifies(const BasedComplex& c, const Certificate& cert);

// Certificate for an integer complex re-expressed over `group`: every integer
// n in a move becomes n*e. `extended` is the complex the result anchors to.
Certificate extend_certificate(const Certificate& cert, const BasedComplex& extended);

// Certificate for cone(g o f) from certificates for cone(f) and cone(g).
// Throws Error("certificate-invalid" | "boundary-mismatch").
Certificate compose_certificates(const ChainMap& f, const ChainMap& g, const Certificate& cert_f,
                                 const Certificate& cert_g);

// Number of moves compose_certificates adds on top of the lifted certificates,
// excluding lift corrections: see docs/certificates.md.
struct ComposeStats {
    std::size_t setup_moves = 0;
    std::size_t corrections = 0;
};
Certificate compose_certificates(const ChainMap& f, const ChainMap& g, const Certificate& cert_f,
                                 const Certificate& cert_g, ComposeStats* stats);

}  // namespace shtk
