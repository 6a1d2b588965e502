#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shtk/complex.hpp"
#include "shtk/error.hpp"
#include "shtk/maps.hpp"
#include "shtk/moves.hpp"

namespace shtk::test {

inline GroupElement gel(std::initializer_list<std::int64_t> word)
{
    return GroupElement{std::vector<std::int64_t>(word)};
}

// Sum of c * g over the listed terms.
inline RingElement ring(std::initializer_list<std::pair<GroupElement, long>> terms)
{
    std::vector<RingElement::Term> out;
    for (const auto& [g, c] : terms) {
        out.emplace_back(g, Integer(c));
    }
    return RingElement::from_terms(std::move(out));
}

inline Matrix matrix(std::vector<std::vector<RingElement>> rows)
{
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

inline IntMatrix int_matrix(std::vector<std::vector<long>> rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

inline BasedComplex complex(GroupPtr g, std::map<int, std::vector<std::string>> bases, std::map<int, Matrix> diffs)
{
    BasedComplex c(std::move(g));
    c.bases = std::move(bases);
    c.diffs = std::move(diffs);
    c.normalize();
    return c;
}

inline ZComplex zcomplex(std::map<int, std::vector<std::string>> bases, std::map<int, IntMatrix> diffs)
{
    ZComplex c;
    c.bases = std::move(bases);
    c.diffs = std::move(diffs);
    c.normalize();
    return c;
}

// 0 -> L --(g - e)--> L -> 0 in degrees 0, 1 for a group with generator 0.
inline BasedComplex one_step(GroupPtr g)
{
    const GroupElement t = g->generator(0);
    const RingElement d = RingElement(t) - RingElement(g->identity());
    return complex(g, {{0, {"a"}}, {1, {"b"}}}, {{0, matrix({{d}})}});
}

template <class F>
std::string error_code(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace shtk::test
