#include "kemetric/unknown.hpp"

#include <limits>

#include "kemetric/errors.hpp"

namespace kemetric
{

UnknownId support_unknown_id(const MultiIndex& m)
{
    const std::uint64_t rank = graded_rank(m);
    if (rank >= std::numeric_limits<UnknownId>::max())
        throw UsageError("support monomial too large for an unknown id");
    return static_cast<UnknownId>(rank + 1);
}

Unknown Unknown::einstein_constant(std::string name)
{
    return Unknown{kEinsteinConstant, std::nullopt, std::move(name)};
}

Unknown Unknown::support_coefficient(const MultiIndex& m, std::string name)
{
    if (name.empty())
        name = default_unknown_name(m);
    return Unknown{support_unknown_id(m), m, std::move(name)};
}

std::string default_unknown_name(const MultiIndex& m)
{
    std::string s = "a[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(m[i]);
    }
    return s + ']';
}

void SymbolTable::add(const Unknown& u)
{
    auto [it, inserted] = unknowns_.emplace(u.id, u);
    if (!inserted && it->second.name != u.name)
        throw SpecError("unknown id " + std::to_string(u.id) + " registered under two names: " + it->second.name +
                        ", " + u.name);
}

const Unknown* SymbolTable::find(UnknownId id) const
{
    auto it = unknowns_.find(id);
    return it == unknowns_.end() ? nullptr : &it->second;
}

std::string SymbolTable::name(UnknownId id) const
{
    if (const Unknown* u = find(id))
        return u->name;
    if (id == kEinsteinConstant)
        return "lambda";
    return "u" + std::to_string(id);
}

std::optional<UnknownId> SymbolTable::lookup(const std::string& name) const
{
    for (const auto& [id, u] : unknowns_)
        if (u.name == name)
            return id;
    return std::nullopt;
}

void SymbolTable::merge(const SymbolTable& other)
{
    for (const auto& [id, u] : other.unknowns_)
        add(u);
}

} // namespace kemetric
