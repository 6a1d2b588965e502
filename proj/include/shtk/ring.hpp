#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "shtk/group.hpp"

namespace shtk {

using Integer = mpz_class;

// Element of the integral group ring Z[G]: a finite Z-linear combination of
// group elements. Terms are kept sorted by normal form with no zero
// coefficients, so equality is structural.
class RingElement {
public:
    using Term = std::pair<GroupElement, Integer>;

    RingElement() = default;
    RingElement(const GroupElement& g, Integer c = 1);
    static RingElement from_terms(std::vector<Term> terms);
    static RingElement integer(const Integer& n, const Group& group);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }

    RingElement scaled(const Integer& n) const;

    bool operator==(const RingElement& other) const { return terms_ == other.terms_; }

private:
    void normalize();

    std::vector<Term> terms_;
};

// Convolution product sum a_g b_h (gh). No membership checks.
RingElement mul(const Group& group, const RingElement& a, const RingElement& b);

// Checked product: throws Error("group-mismatch") if either operand carries a
// word that is not a normal form of `group`.
RingElement ring_mul(const Group& group, const RingElement& a, const RingElement& b);

bool belongs_to(const Group& group, const RingElement& a);

// Left multiplication by a signed group element, u = sign*g.
RingElement mul_unit_left(const Group& group, int sign, const GroupElement& g, const RingElement& a);
RingElement mul_unit_right(const Group& group, const RingElement& a, int sign, const GroupElement& g);

// Sum of coefficients; the ring map Z[G] -> Z sending every g to 1.
Integer augment(const RingElement& a);

struct TrivialUnit {
    int sign;
    GroupElement g;
    bool operator==(const TrivialUnit&) const = default;
};

// (sign, g) iff a = sign*g exactly.
std::optional<TrivialUnit> trivial_unit(const RingElement& a);

bool is_one(const Group& group, const RingElement& a);

}  // namespace shtk
