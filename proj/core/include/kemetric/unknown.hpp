#ifndef KEMETRIC_UNKNOWN_HPP
#define KEMETRIC_UNKNOWN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "kemetric/multi_index.hpp"

namespace kemetric
{

using UnknownId = std::uint32_t;

// The Einstein constant always has id 0. A support coefficient attached to
// monomial m has id 1 + graded_rank(m), so ids are canonical for a fixed
// dimension and sort in the same order as their monomials.
inline constexpr UnknownId kEinsteinConstant = 0;

UnknownId support_unknown_id(const MultiIndex& m);

struct Unknown
{
    UnknownId id = kEinsteinConstant;
    std::optional<MultiIndex> support; // empty for the Einstein constant
    std::string name;

    bool is_einstein_constant() const { return !support.has_value(); }

    static Unknown einstein_constant(std::string name = "lambda");
    static Unknown support_coefficient(const MultiIndex& m, std::string name = {});

    friend bool operator==(const Unknown& a, const Unknown& b) { return a.id == b.id && a.name == b.name; }
};

// "a[2,0]" for the coefficient of x1^2 when n = 2.
std::string default_unknown_name(const MultiIndex& m);

// Display names for unknowns; ids without an explicit entry fall back to
// "u<id>" (or "lambda" for the Einstein constant).
class SymbolTable
{
public:
    void add(const Unknown& u);
    bool contains(UnknownId id) const { return unknowns_.count(id) != 0; }
    const Unknown* find(UnknownId id) const;
    std::string name(UnknownId id) const;
    std::optional<UnknownId> lookup(const std::string& name) const;
    const std::map<UnknownId, Unknown>& all() const { return unknowns_; }

    void merge(const SymbolTable& other);

private:
    std::map<UnknownId, Unknown> unknowns_;
};

} // namespace kemetric

#endif
