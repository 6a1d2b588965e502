#include "shtk/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "shtk/error.hpp"

namespace shtk::kernels {

namespace {

constexpr std::size_t kParallelWork = 4096;

void check_shapes(const Matrix& after, const Matrix& before)
{
    if (after.cols() != before.rows()) {
        throw Error("dimension-mismatch", "cannot compose " + std::to_string(after.rows()) + "x" +
                                              std::to_string(after.cols()) + " after " +
                                              std::to_string(before.rows()) + "x" +
                                              std::to_string(before.cols()));
    }
}

RingElement compose_entry(const Group& group, const Matrix& after, const Matrix& before, std::size_t l,
                          std::size_t j)
{
    RingElement acc;
    for (std::size_t i = 0; i < before.rows(); ++i) {
        const RingElement& b = before(i, j);
        if (b.is_zero()) {
            continue;
        }
        const RingElement& a = after(l, i);
        if (a.is_zero()) {
            continue;
        }
        acc += mul(group, b, a);
    }
    return acc;
}

// Diagonalizes rows/cols >= t around pivot (t, t). Returns when row t and
// column t are clear apart from the pivot. `par` enables threaded row sweeps.
void clear_cross(IntMatrix& m, std::size_t t, bool par)
{
    for (;;) {
        // Move the smallest nonzero entry of row t / column t to the pivot.
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t; i < m.rows; ++i) {
            if (m(i, t) != 0 && (m(bi, bj) == 0 || abs(m(i, t)) < abs(m(bi, bj)))) {
                bi = i;
                bj = t;
            }
        }
        for (std::size_t j = t; j < m.cols; ++j) {
            if (m(t, j) != 0 && (m(bi, bj) == 0 || abs(m(t, j)) < abs(m(bi, bj)))) {
                bi = t;
                bj = j;
            }
        }
        if (bi != t) {
            for (std::size_t j = 0; j < m.cols; ++j) {
                std::swap(m(t, j), m(bi, j));
            }
        }
        if (bj != t) {
            for (std::size_t i = 0; i < m.rows; ++i) {
                std::swap(m(i, t), m(i, bj));
            }
        }
        const Integer p = m(t, t);
        bool dirty = false;

        const auto nrows = static_cast<std::ptrdiff_t>(m.rows);
#pragma omp parallel for if (par) schedule(static) reduction(|| : dirty)
        for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(t) + 1; ii < nrows; ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            if (m(i, t) == 0) {
                continue;
            }
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), p.get_mpz_t());
            for (std::size_t j = t; j < m.cols; ++j) {
                if (m(t, j) != 0) {
                    m(i, j) -= q * m(t, j);
                }
            }
            dirty = dirty || m(i, t) != 0;
        }
        for (std::size_t j = t + 1; j < m.cols; ++j) {
            if (m(t, j) == 0) {
                continue;
            }
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), p.get_mpz_t());
            for (std::size_t i = t; i < m.rows; ++i) {
                if (m(i, t) != 0) {
                    m(i, j) -= q * m(i, t);
                }
            }
            dirty = dirty || m(t, j) != 0;
        }
        if (!dirty) {
            return;
        }
    }
}

std::vector<Integer> smith(IntMatrix m, bool par)
{
    std::vector<Integer> diag;
    const std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t) {
        // Find any nonzero entry in the trailing block.
        std::size_t bi = m.rows;
        std::size_t bj = m.cols;
        for (std::size_t i = t; i < m.rows && bi == m.rows; ++i) {
            for (std::size_t j = t; j < m.cols; ++j) {
                if (m(i, j) != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
            }
        }
        if (bi == m.rows) {
            break;
        }
        for (std::size_t j = 0; j < m.cols; ++j) {
            std::swap(m(t, j), m(bi, j));
        }
        for (std::size_t i = 0; i < m.rows; ++i) {
            std::swap(m(i, t), m(i, bj));
        }
        clear_cross(m, t, par);
        diag.push_back(abs(m(t, t)));
    }
    // Enforce divisibility: (a, b) -> (gcd, lcm) pairwise.
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Integer g = gcd(diag[i], diag[j]);
            Integer l = lcm(diag[i], diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    return diag;
}

}  // namespace

namespace serial {

Matrix compose(const Group& group, const Matrix& after, const Matrix& before)
{
    check_shapes(after, before);
    Matrix out(after.rows(), before.cols());
    for (std::size_t l = 0; l < out.rows(); ++l) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(l, j) = compose_entry(group, after, before, l, j);
        }
    }
    return out;
}

std::vector<Integer> smith_invariants(IntMatrix m)
{
    return smith(std::move(m), false);
}

}  // namespace serial

namespace parallel {

Matrix compose(const Group& group, const Matrix& after, const Matrix& before)
{
    check_shapes(after, before);
    Matrix out(after.rows(), before.cols());
    const auto total = static_cast<std::ptrdiff_t>(out.rows() * out.cols());
    const std::size_t cols = out.cols();
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
        const auto l = static_cast<std::size_t>(k) / cols;
        const auto j = static_cast<std::size_t>(k) % cols;
        out(l, j) = compose_entry(group, after, before, l, j);
    }
    return out;
}

std::vector<Integer> smith_invariants(IntMatrix m)
{
    return smith(std::move(m), true);
}

}  // namespace parallel

Matrix compose(const Group& group, const Matrix& after, const Matrix& before)
{
    if (after.rows() * after.cols() * before.cols() >= kParallelWork && omp_get_max_threads() > 1) {
        return parallel::compose(group, after, before);
    }
    return serial::compose(group, after, before);
}

std::vector<Integer> smith_invariants(IntMatrix m)
{
    if (m.rows * m.cols >= kParallelWork && omp_get_max_threads() > 1) {
        return parallel::smith_invariants(std::move(m));
    }
    return serial::smith_invariants(std::move(m));
}

}  // namespace shtk::kernels
