#include "ra/automaton.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ra {

std::optional<SymbolId> Automaton::symbol_id(std::string_view name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return i;
    return std::nullopt;
}

std::optional<LocationId> Automaton::location_id(std::string_view name) const {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i] == name) return i;
    return std::nullopt;
}

bool Automaton::is_initial(LocationId l) const {
    return std::binary_search(initials.begin(), initials.end(), l);
}

bool Automaton::is_final(LocationId l) const {
    return std::binary_search(finals.begin(), finals.end(), l);
}

bool Automaton::has_epsilon_rules() const {
    return std::any_of(rules.begin(), rules.end(),
                       [](const TransitionRule& r) { return r.is_epsilon(); });
}

LocationId Automaton::add_location(const std::string& name) {
    if (auto existing = location_id(name)) return *existing;
    locations.push_back(name);
    return locations.size() - 1;
}

SymbolId Automaton::add_symbol(const std::string& name) {
    if (auto existing = symbol_id(name)) return *existing;
    alphabet.push_back(name);
    return alphabet.size() - 1;
}

LocationId Automaton::add_fresh_location(const std::string& stem) {
    std::string name = stem;
    for (int i = 0; location_id(name).has_value(); ++i)
        name = stem + "_" + std::to_string(i);
    return add_location(name);
}

void Automaton::add_rule(const std::string& from, std::optional<std::string> symbol,
                         const std::string& guard, std::vector<std::size_t> store,
                         const std::string& to) {
    TransitionRule rule;
    rule.from = add_location(from);
    if (symbol) rule.label = add_symbol(*symbol);
    rule.guard = Constraint::parse(guard, registers);
    std::sort(store.begin(), store.end());
    store.erase(std::unique(store.begin(), store.end()), store.end());
    rule.store = std::move(store);
    rule.to = add_location(to);
    rules.push_back(std::move(rule));
}

Configuration permuted(const AtomPermutation& pi, const Configuration& c) {
    return {c.location, permuted(pi, c.valuation)};
}

std::vector<std::string> validate(const Automaton& a) {
    std::vector<std::string> problems;
    auto complain = [&problems](std::string message) {
        problems.push_back(std::move(message));
    };

    std::unordered_set<std::string> seen;
    for (const std::string& name : a.locations)
        if (!seen.insert(name).second)
            complain("duplicate location name '" + name + "'");
    seen.clear();
    for (const std::string& name : a.alphabet) {
        if (!seen.insert(name).second)
            complain("duplicate alphabet symbol '" + name + "'");
        if (name == "eps")
            complain("alphabet symbol 'eps' collides with the epsilon label");
        if (name.empty() || name.find(':') != std::string::npos ||
            name.find(',') != std::string::npos)
            complain("alphabet symbol '" + name +
                     "' is empty or contains ':' or ','");
    }

    for (LocationId l : a.initials)
        if (l >= a.locations.size())
            complain("initial location id " + std::to_string(l) + " out of range");
    for (LocationId l : a.finals)
        if (l >= a.locations.size())
            complain("final location id " + std::to_string(l) + " out of range");

    for (std::size_t i = 0; i < a.rules.size(); ++i) {
        const TransitionRule& r = a.rules[i];
        const std::string where = "rule #" + std::to_string(i);
        if (r.from >= a.locations.size())
            complain(where + ": unknown source location");
        if (r.to >= a.locations.size())
            complain(where + ": unknown target location");
        if (r.label && *r.label >= a.alphabet.size())
            complain(where + ": unknown symbol");
        if (r.guard.register_span() > a.registers)
            complain(where + ": guard references register x" +
                     std::to_string(r.guard.register_span()) + " but only " +
                     std::to_string(a.registers) + " registers are declared");
        for (std::size_t reg : r.store)
            if (reg >= a.registers)
                complain(where + ": store references register x" +
                         std::to_string(reg + 1) + " out of range");
        if (r.is_epsilon()) {
            if (r.guard.uses_input())
                complain(where + ": epsilon rule guard mentions the input y");
            if (!r.store.empty())
                complain(where + ": epsilon rule has a non-empty store set");
        }
    }
    return problems;
}

void validate_or_throw(const Automaton& a) {
    const std::vector<std::string> problems = validate(a);
    if (problems.empty()) return;
    std::string message = "invalid automaton:";
    for (const std::string& p : problems) message += "\n  - " + p;
    throw std::invalid_argument(message);
}

} // namespace ra
