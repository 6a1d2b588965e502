#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace shtk {

enum class GroupKind { FiniteTable, Cyclic, FreeAbelian, Free };

std::string to_string(GroupKind kind);

// Syntactic description of a group with solvable word problem.
struct GroupSpec {
    GroupKind kind = GroupKind::Cyclic;
    // finite-table: table[a][b] = index of a*b, identity at index 0
    std::vector<std::vector<int>> table;
    // cyclic
    std::int64_t order = 1;
    // free-abelian / free
    int rank = 0;

    bool operator==(const GroupSpec&) const = default;

    static GroupSpec trivial() { return cyclic(1); }
    static GroupSpec cyclic(std::int64_t n);
    static GroupSpec free_abelian(int r);
    static GroupSpec free(int r);
    static GroupSpec finite_table(std::vector<std::vector<int>> t);
};

// Normal form of a group element:
//   finite-table  {index}
//   cyclic        {exponent mod n}
//   free-abelian  exponent vector of length rank
//   free          freely reduced word of signed 1-based generator indices
// Equality of elements is equality of normal forms.
struct GroupElement {
    std::vector<std::int64_t> word;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
public:
    // Validates the group description; throws Error("table-not-a-group" | "invalid-order" | "invalid-rank").
    static GroupPtr make(const GroupSpec& spec);

    const GroupSpec& spec() const { return spec_; }
    GroupKind kind() const { return spec_.kind; }
    bool is_finite() const;
    // Number of elements; only meaningful for finite groups.
    std::size_t order() const;
    // All elements in normal-form order (finite groups only).
    std::vector<GroupElement> elements() const;
    // Position of an element in elements() (finite groups only).
    std::size_t index_of(const GroupElement& g) const;

    GroupElement identity() const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const { return a == identity(); }

    // True when `a` is a normal form of this group.
    bool contains(const GroupElement& a) const;
    // Generator i (0-based) for cyclic (i = 0), free-abelian and free groups.
    GroupElement generator(int i) const;

private:
    explicit Group(GroupSpec spec);

    GroupSpec spec_;
    std::vector<int> inverse_of_;
};

// Word encoding used by the JSON interface.
//   finite-table, cyclic -> integer; free-abelian -> array; free -> "1 -2 1"
std::string format_free_word(const std::vector<std::int64_t>& word);
std::vector<std::int64_t> parse_free_word(const std::string& text);

}  // namespace shtk
