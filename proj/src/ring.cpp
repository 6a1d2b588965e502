#include "shtk/ring.hpp"

#include <algorithm>

#include "shtk/error.hpp"

namespace shtk {

RingElement::RingElement(const GroupElement& g, Integer c)
{
    if (c != 0) {
        terms_.emplace_back(g, std::move(c));
    }
}

RingElement RingElement::from_terms(std::vector<Term> terms)
{
    RingElement r;
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
}

RingElement RingElement::integer(const Integer& n, const Group& group)
{
    return RingElement(group.identity(), n);
}

void RingElement::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(out);
}

RingElement RingElement::operator-() const
{
    RingElement r = *this;
    for (auto& t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

namespace {

std::vector<RingElement::Term> merge(const std::vector<RingElement::Term>& a,
                                     const std::vector<RingElement::Term>& b, bool subtract)
{
    std::vector<RingElement::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, subtract ? Integer(-b[j].second) : b[j].second);
            ++j;
        } else {
            Integer c = subtract ? Integer(a[i].second - b[j].second) : Integer(a[i].second + b[j].second);
            if (c != 0) {
                out.emplace_back(a[i].first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

RingElement& RingElement::operator+=(const RingElement& other)
{
    if (other.terms_.empty()) {
        return *this;
    }
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other)
{
    if (other.terms_.empty()) {
        return *this;
    }
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

RingElement RingElement::scaled(const Integer& n) const
{
    if (n == 0) {
        return {};
    }
    RingElement r = *this;
    for (auto& t : r.terms_) {
        t.second *= n;
    }
    return r;
}

RingElement mul(const Group& group, const RingElement& a, const RingElement& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<RingElement::Term> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto& [g, x] : a.terms()) {
        for (const auto& [h, y] : b.terms()) {
            terms.emplace_back(group.mul(g, h), x * y);
        }
    }
    return RingElement::from_terms(std::move(terms));
}

bool belongs_to(const Group& group, const RingElement& a)
{
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [&](const RingElement::Term& t) { return group.contains(t.first); });
}

RingElement ring_mul(const Group& group, const RingElement& a, const RingElement& b)
{
    if (!belongs_to(group, a) || !belongs_to(group, b)) {
        throw Error("group-mismatch", "operand is not an element of Z[" + to_string(group.kind()) + "]");
    }
    return mul(group, a, b);
}

RingElement mul_unit_left(const Group& group, int sign, const GroupElement& g, const RingElement& a)
{
    std::vector<RingElement::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& [h, x] : a.terms()) {
        terms.emplace_back(group.mul(g, h), sign < 0 ? Integer(-x) : x);
    }
    return RingElement::from_terms(std::move(terms));
}

RingElement mul_unit_right(const Group& group, const RingElement& a, int sign, const GroupElement& g)
{
    std::vector<RingElement::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& [h, x] : a.terms()) {
        terms.emplace_back(group.mul(h, g), sign < 0 ? Integer(-x) : x);
    }
    return RingElement::from_terms(std::move(terms));
}

Integer augment(const RingElement& a)
{
    Integer s = 0;
    for (const auto& t : a.terms()) {
        s += t.second;
    }
    return s;
}

std::optional<TrivialUnit> trivial_unit(const RingElement& a)
{
    if (a.terms().size() != 1) {
        return std::nullopt;
    }
    const auto& [g, c] = a.terms().front();
    if (c == 1) {
        return TrivialUnit{1, g};
    }
    if (c == -1) {
        return TrivialUnit{-1, g};
    }
    return std::nullopt;
}

bool is_one(const Group& group, const RingElement& a)
{
    return a.terms().size() == 1 && a.terms().front().second == 1 && group.is_identity(a.terms().front().first);
}

}  // namespace shtk
