#include "shtk/group.hpp"

#include <sstream>

#include "shtk/error.hpp"

namespace shtk {

std::string to_string(GroupKind kind)
{
    switch (kind) {
        case GroupKind::FiniteTable: return "finite-table";
        case GroupKind::Cyclic: return "cyclic";
        case GroupKind::FreeAbelian: return "free-abelian";
        case GroupKind::Free: return "free";
    }
    return "unknown";
}

GroupSpec GroupSpec::cyclic(std::int64_t n)
{
    GroupSpec s;
    s.kind = GroupKind::Cyclic;
    s.order = n;
    return s;
}

GroupSpec GroupSpec::free_abelian(int r)
{
    GroupSpec s;
    s.kind = GroupKind::FreeAbelian;
    s.rank = r;
    return s;
}

GroupSpec GroupSpec::free(int r)
{
    GroupSpec s;
    s.kind = GroupKind::Free;
    s.rank = r;
    return s;
}

GroupSpec GroupSpec::finite_table(std::vector<std::vector<int>> t)
{
    GroupSpec s;
    s.kind = GroupKind::FiniteTable;
    s.table = std::move(t);
    return s;
}

namespace {

void check_table(const std::vector<std::vector<int>>& t)
{
    const std::size_t n = t.size();
    if (n == 0) {
        throw Error("table-not-a-group", "empty multiplication table");
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (t[a].size() != n) {
            throw Error("table-not-a-group", "row " + std::to_string(a) + " has wrong length");
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (t[a][b] < 0 || static_cast<std::size_t>(t[a][b]) >= n) {
                throw Error("table-not-a-group", "closure fails at (" + std::to_string(a) + "," +
                                                     std::to_string(b) + ")");
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (t[0][a] != static_cast<int>(a) || t[a][0] != static_cast<int>(a)) {
            throw Error("table-not-a-group",
                        "index 0 is not an identity for element " + std::to_string(a));
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (t[t[a][b]][c] != t[a][t[b][c]]) {
                    throw Error("table-not-a-group", "associativity fails for triple (" +
                                                         std::to_string(a) + "," + std::to_string(b) +
                                                         "," + std::to_string(c) + ")");
                }
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n && !found; ++b) {
            found = t[a][b] == 0 && t[b][a] == 0;
        }
        if (!found) {
            throw Error("table-not-a-group", "element " + std::to_string(a) + " has no inverse");
        }
    }
}

std::int64_t mod(std::int64_t a, std::int64_t n)
{
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

Group::Group(GroupSpec spec) : spec_(std::move(spec))
{
    if (spec_.kind == GroupKind::FiniteTable) {
        const auto& t = spec_.table;
        inverse_of_.assign(t.size(), 0);
        for (std::size_t a = 0; a < t.size(); ++a) {
            for (std::size_t b = 0; b < t.size(); ++b) {
                if (t[a][b] == 0) {
                    inverse_of_[a] = static_cast<int>(b);
                    break;
                }
            }
        }
    }
}

GroupPtr Group::make(const GroupSpec& spec)
{
    switch (spec.kind) {
        case GroupKind::FiniteTable:
            check_table(spec.table);
            break;
        case GroupKind::Cyclic:
            if (spec.order < 1) {
                throw Error("invalid-order", "cyclic order must be >= 1, got " + std::to_string(spec.order));
            }
            break;
        case GroupKind::FreeAbelian:
        case GroupKind::Free:
            if (spec.rank < 0) {
                throw Error("invalid-rank", "rank must be >= 0, got " + std::to_string(spec.rank));
            }
            break;
    }
    return GroupPtr(new Group(spec));
}

bool Group::is_finite() const
{
    switch (spec_.kind) {
        case GroupKind::FiniteTable:
        case GroupKind::Cyclic:
            return true;
        case GroupKind::FreeAbelian:
        case GroupKind::Free:
            return spec_.rank == 0;
    }
    return false;
}

std::size_t Group::order() const
{
    switch (spec_.kind) {
        case GroupKind::FiniteTable: return spec_.table.size();
        case GroupKind::Cyclic: return static_cast<std::size_t>(spec_.order);
        default: return spec_.rank == 0 ? 1 : 0;
    }
}

std::vector<GroupElement> Group::elements() const
{
    std::vector<GroupElement> out;
    if (!is_finite()) {
        throw Error("unsupported-group", "group " + to_string(spec_.kind) + " is infinite");
    }
    if (spec_.kind == GroupKind::FreeAbelian || spec_.kind == GroupKind::Free) {
        out.push_back(identity());
        return out;
    }
    for (std::size_t i = 0; i < order(); ++i) {
        out.push_back(GroupElement{{static_cast<std::int64_t>(i)}});
    }
    return out;
}

std::size_t Group::index_of(const GroupElement& g) const
{
    if (spec_.kind == GroupKind::FiniteTable || spec_.kind == GroupKind::Cyclic) {
        return static_cast<std::size_t>(g.word.at(0));
    }
    return 0;
}

GroupElement Group::identity() const
{
    switch (spec_.kind) {
        case GroupKind::FiniteTable:
        case GroupKind::Cyclic:
            return GroupElement{{0}};
        case GroupKind::FreeAbelian:
            return GroupElement{std::vector<std::int64_t>(static_cast<std::size_t>(spec_.rank), 0)};
        case GroupKind::Free:
            return GroupElement{};
    }
    return GroupElement{};
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const
{
    switch (spec_.kind) {
        case GroupKind::FiniteTable:
            return GroupElement{{spec_.table[static_cast<std::size_t>(a.word[0])][static_cast<std::size_t>(b.word[0])]}};
        case GroupKind::Cyclic:
            return GroupElement{{mod(a.word[0] + b.word[0], spec_.order)}};
        case GroupKind::FreeAbelian: {
            GroupElement r = a;
            for (std::size_t i = 0; i < r.word.size(); ++i) {
                r.word[i] += b.word[i];
            }
            return r;
        }
        case GroupKind::Free: {
            GroupElement r = a;
            for (std::int64_t letter : b.word) {
                if (!r.word.empty() && r.word.back() == -letter) {
                    r.word.pop_back();
                } else {
                    r.word.push_back(letter);
                }
            }
            return r;
        }
    }
    return a;
}

GroupElement Group::inverse(const GroupElement& a) const
{
    switch (spec_.kind) {
        case GroupKind::FiniteTable:
            return GroupElement{{inverse_of_[static_cast<std::size_t>(a.word[0])]}};
        case GroupKind::Cyclic:
            return GroupElement{{mod(-a.word[0], spec_.order)}};
        case GroupKind::FreeAbelian: {
            GroupElement r = a;
            for (auto& x : r.word) {
                x = -x;
            }
            return r;
        }
        case GroupKind::Free: {
            GroupElement r;
            r.word.reserve(a.word.size());
            for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) {
                r.word.push_back(-*it);
            }
            return r;
        }
    }
    return a;
}

bool Group::contains(const GroupElement& a) const
{
    switch (spec_.kind) {
        case GroupKind::FiniteTable:
            return a.word.size() == 1 && a.word[0] >= 0 &&
                   a.word[0] < static_cast<std::int64_t>(spec_.table.size());
        case GroupKind::Cyclic:
            return a.word.size() == 1 && a.word[0] >= 0 && a.word[0] < spec_.order;
        case GroupKind::FreeAbelian:
            return a.word.size() == static_cast<std::size_t>(spec_.rank);
        case GroupKind::Free:
            for (std::size_t i = 0; i < a.word.size(); ++i) {
                const std::int64_t x = a.word[i];
                if (x == 0 || x > spec_.rank || x < -spec_.rank) {
                    return false;
                }
                if (i > 0 && a.word[i - 1] == -x) {
                    return false;
                }
            }
            return true;
    }
    return false;
}

GroupElement Group::generator(int i) const
{
    switch (spec_.kind) {
        case GroupKind::Cyclic:
            return GroupElement{{mod(1, spec_.order)}};
        case GroupKind::FreeAbelian: {
            GroupElement g = identity();
            g.word.at(static_cast<std::size_t>(i)) = 1;
            return g;
        }
        case GroupKind::Free:
            if (i < 0 || i >= spec_.rank) {
                throw Error("invalid-rank", "no generator " + std::to_string(i));
            }
            return GroupElement{{i + 1}};
        case GroupKind::FiniteTable:
            return GroupElement{{i}};
    }
    return identity();
}

std::string format_free_word(const std::vector<std::int64_t>& word)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) {
            os << ' ';
        }
        os << word[i];
    }
    return os.str();
}

std::vector<std::int64_t> parse_free_word(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::istringstream is(text);
    std::int64_t x;
    while (is >> x) {
        out.push_back(x);
    }
    if (!is.eof()) {
        throw Error("malformed-word", "cannot parse free-group word '" + text + "'");
    }
    return out;
}

}  // namespace shtk
