#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shtk/moves.hpp"

namespace shtk {

struct ReduceOptions {
    // Number of reduction steps (pivot eliminations and successful combine
    // rounds) the engine may take.
    std::size_t budget = 10000;
    // Maximal length of entry products used as slide coefficients.
    int depth = 2;
};

// Reduction stalled on 0 -> L^m --A--> L^m -> 0 with A invertible; A represents
// the K1 class. `inverse` is set when the bounded search found one.
struct Obstruction {
    int degree = 0;
    Matrix matrix;
    std::optional<Matrix> inverse;
    bool inverse_verified = false;
    std::vector<Move> moves;
    BasedComplex residual;
};

struct Stuck {
    std::vector<Move> moves;
    BasedComplex residual;
    std::string reason;  // "budget", "no-progress" or "not-acyclic"
};

using ReduceResult = std::variant<Certificate, Obstruction, Stuck>;

// Heuristic search for a certificate. Throws Error("invalid-complex").
ReduceResult reduce(const BasedComplex& c, const ReduceOptions& opts = {});

// Complete elimination for acyclic integer complexes; the certificate is
// anchored to as_based(c). Throws Error("not-acyclic").
Certificate reduce_integer(const ZComplex& c);

// Eliminates the trivial-unit entry (row, col) of d^k: scales it to e, clears
// its row and column and destabilizes the pair. Appends the moves to `out`.
void eliminate_pivot(BasedComplex& c, int k, std::size_t row, std::size_t col, std::vector<Move>& out);

}  // namespace shtk
