#pragma once

#include <vector>

#include "shtk/matrix.hpp"

// Hot exact kernels. `serial` is the reference implementation; `parallel`
// distributes independent output rows across OpenMP threads and must agree
// with `serial` exactly. The unqualified entry points pick one by size.
namespace shtk::kernels {

namespace serial {

// Matrix of (after o before) in the column convention with left action:
// (after o before)(l, j) = sum_i before(i, j) * after(l, i).
Matrix compose(const Group& group, const Matrix& after, const Matrix& before);

// Nonzero Smith invariant factors d_1 | d_2 | ... (all positive).
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace serial

namespace parallel {

Matrix compose(const Group& group, const Matrix& after, const Matrix& before);
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace parallel

Matrix compose(const Group& group, const Matrix& after, const Matrix& before);
std::vector<Integer> smith_invariants(IntMatrix m);

}  // namespace shtk::kernels
