/* constraint.hpp -- guard expressions over registers x1..xk, the input y, and bot */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ra/atoms.hpp"

namespace ra {

enum class TermKind : std::uint8_t { Input, Register, Bot };

/// A term of a comparison: y, x<i> (0-based index stored), or bot.
struct Term {
    TermKind kind = TermKind::Bot;
    std::size_t reg = 0;

    static Term input() { return {TermKind::Input, 0}; }
    static Term registr(std::size_t index) { return {TermKind::Register, index}; }
    static Term bottom() { return {TermKind::Bot, 0}; }

    bool operator==(const Term&) const = default;
};

struct ConstraintParseError : std::runtime_error {
    ConstraintParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

struct UnboundVariableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable guard formula. Negated comparisons are represented as
/// Not(Eq(...)), so "a != b" and "!(a == b)" parse to the same tree.
class Constraint {
public:
    enum class Op : std::uint8_t { True, False, Eq, Not, And, Or };

    Constraint() : Constraint(make_true()) {}

    static Constraint make_true();
    static Constraint make_false();
    static Constraint equal(Term lhs, Term rhs);
    static Constraint not_equal(Term lhs, Term rhs) { return negation(equal(lhs, rhs)); }
    static Constraint negation(Constraint c);
    static Constraint conjunction(Constraint lhs, Constraint rhs);
    static Constraint disjunction(Constraint lhs, Constraint rhs);

    /// Folds a list into a conjunction; empty list yields true.
    static Constraint conjunction_of(std::vector<Constraint> parts);
    /// Folds a list into a disjunction; empty list yields false.
    static Constraint disjunction_of(std::vector<Constraint> parts);

    /// Parses the guard grammar:
    ///   expr := "true" | "false" | cmp | "!" expr | expr "&&" expr
    ///         | expr "||" expr | "(" expr ")"
    ///   cmp  := term ("==" | "!=") term
    ///   term := "y" | "x"<positive int> | "bot"
    /// with precedence ! > && > || and insignificant whitespace.
    /// Register indices are checked against `register_count`.
    static Constraint parse(std::string_view text, std::size_t register_count);

    std::string to_string() const;

    /// Standard Boolean semantics; two bot values are equal, bot never
    /// equals an atom. Throws UnboundVariableError if y occurs unbound,
    /// std::out_of_range if a register index exceeds the valuation.
    bool eval(const Valuation& v) const;

    bool uses_input() const;
    /// Largest register index referenced plus one; 0 when none occur.
    std::size_t register_span() const;

    bool operator==(const Constraint& other) const {
        return to_string() == other.to_string();
    }

private:
    struct Node {
        Op op;
        Term lhs{}, rhs{};          // valid for Eq
        std::uint32_t a = 0, b = 0; // child indices for Not/And/Or
    };

    std::vector<Node> nodes_; // root is nodes_.back()

    std::uint32_t splice(const Constraint& other);
    bool eval_node(std::uint32_t index, const Valuation& v) const;
    void print_node(std::uint32_t index, int parent_level, std::string& out) const;

    friend class ConstraintParser;
};

/// True iff some valuation over atoms-or-bot for x1..xk and y satisfies c,
/// decided by enumerating equality types of the k+1 variables.
bool satisfiable(const Constraint& c, std::size_t register_count);

// --- Equality types -------------------------------------------------------
//
// An equality type assigns each variable either bot or an atom class;
// variables in the same class hold the same atom, distinct classes hold
// distinct atoms. Types are complete: they decide every guard literal.

enum class InputVar : std::uint8_t { None, AtomOnly, AtomOrBot };

struct EqualityType {
    /// Per register: 0 = bot, c >= 1 = atom class c (classes appear in
    /// first-use order, so the encoding is canonical).
    std::vector<int> reg_code;
    /// Meaningful only when enumerated with an input variable; same coding.
    int input_code = -1;

    int class_count() const;
    /// Representative valuation assigning atom (c-1) to class c.
    Valuation representative() const;
    /// Complete formula pinning this type (bot-ness of every register,
    /// all pairwise register relations, and the input's relation to each
    /// register class when present).
    Constraint to_constraint() const;

    bool operator==(const EqualityType&) const = default;
};

std::vector<EqualityType> enumerate_equality_types(std::size_t register_count,
                                                   InputVar input);

/// The equality type of a concrete valuation (with input iff bound).
EqualityType equality_type_of(const Valuation& v);

} // namespace ra
