/* automaton.hpp -- register automata: syntax, configurations, validation */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ra/atoms.hpp"
#include "ra/constraint.hpp"
#include "ra/data_word.hpp"

namespace ra {

using LocationId = std::size_t;
using SymbolId = std::size_t;

/// p --label,guard,store--> q. A label of nullopt denotes an epsilon rule,
/// which reads no input: its guard must not mention y and its store set
/// must be empty.
struct TransitionRule {
    LocationId from = 0;
    std::optional<SymbolId> label;
    Constraint guard;
    std::vector<std::size_t> store; // register indices, sorted and unique
    LocationId to = 0;

    bool is_epsilon() const { return !label.has_value(); }
};

/// One automaton type serves both the nondeterministic and the deterministic
/// model; determinism is a checked predicate, not a separate type.
struct Automaton {
    std::size_t registers = 0;
    std::vector<std::string> alphabet;
    std::vector<std::string> locations;
    std::vector<LocationId> initials; // sorted, unique
    std::vector<LocationId> finals;   // sorted, unique
    std::vector<TransitionRule> rules;

    std::optional<SymbolId> symbol_id(std::string_view name) const;
    std::optional<LocationId> location_id(std::string_view name) const;

    bool is_initial(LocationId l) const;
    bool is_final(LocationId l) const;
    bool has_epsilon_rules() const;

    LocationId add_location(const std::string& name);
    SymbolId add_symbol(const std::string& name);
    /// Fresh location whose name starts with `stem` and clashes with nothing.
    LocationId add_fresh_location(const std::string& stem);

    void add_rule(const std::string& from, std::optional<std::string> symbol,
                  const std::string& guard, std::vector<std::size_t> store,
                  const std::string& to);
};

struct Configuration {
    LocationId location = 0;
    Valuation valuation;

    bool operator==(const Configuration&) const = default;
};

Configuration permuted(const AtomPermutation& pi, const Configuration& c);

/// All invariant violations, empty when the automaton is well-formed:
/// dangling location/symbol references, guards out of register range,
/// y in an epsilon guard, stores on epsilon rules, duplicate names.
std::vector<std::string> validate(const Automaton& a);

/// Throws std::invalid_argument listing every violation.
void validate_or_throw(const Automaton& a);

} // namespace ra
