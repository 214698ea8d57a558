#include "ra/constraint.hpp"

#include <algorithm>
#include <cctype>

namespace ra {

Constraint Constraint::make_true() {
    Constraint c;
    c.nodes_ = {Node{Op::True}};
    return c;
}

Constraint Constraint::make_false() {
    Constraint c;
    c.nodes_ = {Node{Op::False}};
    return c;
}

Constraint Constraint::equal(Term lhs, Term rhs) {
    Constraint c;
    c.nodes_ = {Node{Op::Eq, lhs, rhs}};
    return c;
}

std::uint32_t Constraint::splice(const Constraint& other) {
    const auto offset = static_cast<std::uint32_t>(nodes_.size());
    for (Node n : other.nodes_) {
        if (n.op == Op::Not || n.op == Op::And || n.op == Op::Or) {
            n.a += offset;
            n.b += offset;
        }
        nodes_.push_back(n);
    }
    return static_cast<std::uint32_t>(nodes_.size()) - 1;
}

Constraint Constraint::negation(Constraint c) {
    Constraint out;
    out.nodes_.clear();
    const std::uint32_t child = out.splice(c);
    out.nodes_.push_back(Node{Op::Not, {}, {}, child, 0});
    return out;
}

Constraint Constraint::conjunction(Constraint lhs, Constraint rhs) {
    Constraint out;
    out.nodes_.clear();
    const std::uint32_t a = out.splice(lhs);
    const std::uint32_t b = out.splice(rhs);
    out.nodes_.push_back(Node{Op::And, {}, {}, a, b});
    return out;
}

Constraint Constraint::disjunction(Constraint lhs, Constraint rhs) {
    Constraint out;
    out.nodes_.clear();
    const std::uint32_t a = out.splice(lhs);
    const std::uint32_t b = out.splice(rhs);
    out.nodes_.push_back(Node{Op::Or, {}, {}, a, b});
    return out;
}

Constraint Constraint::conjunction_of(std::vector<Constraint> parts) {
    if (parts.empty()) return make_true();
    Constraint acc = std::move(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = conjunction(std::move(acc), std::move(parts[i]));
    return acc;
}

Constraint Constraint::disjunction_of(std::vector<Constraint> parts) {
    if (parts.empty()) return make_false();
    Constraint acc = std::move(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = disjunction(std::move(acc), std::move(parts[i]));
    return acc;
}

// --- parser ----------------------------------------------------------------

class ConstraintParser {
public:
    ConstraintParser(std::string_view text, std::size_t register_count)
        : text_(text), k_(register_count) {}

    Constraint run() {
        Constraint c = parse_or();
        skip_ws();
        if (pos_ != text_.size())
            throw ConstraintParseError("trailing input", pos_);
        return c;
    }

private:
    std::string_view text_;
    std::size_t k_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool try_consume(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool try_consume_word(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t end = pos_ + word.size();
        if (end < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    Constraint parse_or() {
        Constraint lhs = parse_and();
        while (try_consume("||")) lhs = Constraint::disjunction(lhs, parse_and());
        return lhs;
    }

    Constraint parse_and() {
        Constraint lhs = parse_unary();
        while (try_consume("&&")) lhs = Constraint::conjunction(lhs, parse_unary());
        return lhs;
    }

    Constraint parse_unary() {
        if (try_consume("!")) return Constraint::negation(parse_unary());
        return parse_primary();
    }

    Constraint parse_primary() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ConstraintParseError("unexpected end of guard", pos_);
        if (try_consume("(")) {
            Constraint inner = parse_or();
            if (!try_consume(")"))
                throw ConstraintParseError("expected ')'", pos_);
            return inner;
        }
        if (try_consume_word("true")) return Constraint::make_true();
        if (try_consume_word("false")) return Constraint::make_false();
        return parse_comparison();
    }

    Constraint parse_comparison() {
        Term lhs = parse_term();
        skip_ws();
        bool negated;
        if (try_consume("==")) {
            negated = false;
        } else if (try_consume("!=")) {
            negated = true;
        } else {
            throw ConstraintParseError("expected '==' or '!='", pos_);
        }
        Term rhs = parse_term();
        Constraint eq = Constraint::equal(lhs, rhs);
        return negated ? Constraint::negation(eq) : eq;
    }

    Term parse_term() {
        skip_ws();
        const std::size_t start = pos_;
        if (try_consume_word("y")) return Term::input();
        if (try_consume_word("bot")) return Term::bottom();
        if (pos_ < text_.size() && text_[pos_] == 'x') {
            ++pos_;
            std::size_t value = 0;
            std::size_t digits = 0;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
                ++pos_;
                ++digits;
            }
            if (digits == 0 || value == 0)
                throw ConstraintParseError("expected positive register index after 'x'",
                                           start);
            if (value > k_)
                throw ConstraintParseError(
                    "register index x" + std::to_string(value) +
                        " out of range (automaton has " + std::to_string(k_) +
                        " registers)",
                    start);
            return Term::registr(value - 1);
        }
        throw ConstraintParseError("expected term 'y', 'x<i>' or 'bot'", start);
    }
};

Constraint Constraint::parse(std::string_view text, std::size_t register_count) {
    return ConstraintParser(text, register_count).run();
}

// --- printing ---------------------------------------------------------------

namespace {

std::string term_string(const Term& t) {
    switch (t.kind) {
        case TermKind::Input: return "y";
        case TermKind::Bot: return "bot";
        case TermKind::Register: return "x" + std::to_string(t.reg + 1);
    }
    return "?";
}

// Precedence levels: || = 0, && = 1, ! = 2, atoms = 3.
} // namespace

void Constraint::print_node(std::uint32_t index, int parent_level,
                            std::string& out) const {
    const Node& n = nodes_[index];
    int level = 3;
    switch (n.op) {
        case Op::Or: level = 0; break;
        case Op::And: level = 1; break;
        case Op::Not: level = 2; break;
        default: break;
    }
    // "a != b" sugar for Not(Eq(a, b)).
    if (n.op == Op::Not && nodes_[n.a].op == Op::Eq) {
        const Node& eq = nodes_[n.a];
        out += term_string(eq.lhs) + " != " + term_string(eq.rhs);
        return;
    }
    const bool parens = level < parent_level;
    if (parens) out += "(";
    switch (n.op) {
        case Op::True: out += "true"; break;
        case Op::False: out += "false"; break;
        case Op::Eq:
            out += term_string(n.lhs) + " == " + term_string(n.rhs);
            break;
        case Op::Not:
            out += "!";
            print_node(n.a, 3, out);
            break;
        case Op::And:
            print_node(n.a, 1, out);
            out += " && ";
            print_node(n.b, 2, out);
            break;
        case Op::Or:
            print_node(n.a, 0, out);
            out += " || ";
            print_node(n.b, 1, out);
            break;
    }
    if (parens) out += ")";
}

std::string Constraint::to_string() const {
    std::string out;
    print_node(static_cast<std::uint32_t>(nodes_.size()) - 1, 0, out);
    return out;
}

// --- evaluation -------------------------------------------------------------

namespace {

AtomOrBot term_value(const Term& t, const Valuation& v) {
    switch (t.kind) {
        case TermKind::Bot: return bot;
        case TermKind::Register: return v.reg(t.reg);
        case TermKind::Input:
            if (!v.has_input())
                throw UnboundVariableError("guard references unbound input variable y");
            return v.input();
    }
    return bot;
}

} // namespace

bool Constraint::eval_node(std::uint32_t index, const Valuation& v) const {
    const Node& n = nodes_[index];
    switch (n.op) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Eq: return term_value(n.lhs, v) == term_value(n.rhs, v);
        case Op::Not: return !eval_node(n.a, v);
        case Op::And: return eval_node(n.a, v) && eval_node(n.b, v);
        case Op::Or: return eval_node(n.a, v) || eval_node(n.b, v);
    }
    return false;
}

bool Constraint::eval(const Valuation& v) const {
    return eval_node(static_cast<std::uint32_t>(nodes_.size()) - 1, v);
}

bool Constraint::uses_input() const {
    return std::any_of(nodes_.begin(), nodes_.end(), [](const Node& n) {
        return n.op == Op::Eq && (n.lhs.kind == TermKind::Input ||
                                  n.rhs.kind == TermKind::Input);
    });
}

std::size_t Constraint::register_span() const {
    std::size_t span = 0;
    for (const Node& n : nodes_) {
        if (n.op != Op::Eq) continue;
        for (const Term* t : {&n.lhs, &n.rhs})
            if (t->kind == TermKind::Register) span = std::max(span, t->reg + 1);
    }
    return span;
}

// --- equality types ---------------------------------------------------------

int EqualityType::class_count() const {
    int m = input_code;
    for (int c : reg_code) m = std::max(m, c);
    return std::max(m, 0);
}

Valuation EqualityType::representative() const {
    Valuation v(reg_code.size());
    for (std::size_t i = 0; i < reg_code.size(); ++i)
        v.set_reg(i, reg_code[i] == 0 ? bot
                                      : AtomOrBot{static_cast<Atom>(reg_code[i] - 1)});
    if (input_code >= 0)
        v = v.with_input(input_code == 0
                             ? bot
                             : AtomOrBot{static_cast<Atom>(input_code - 1)});
    return v;
}

Constraint EqualityType::to_constraint() const {
    std::vector<Constraint> parts;
    const std::size_t k = reg_code.size();
    for (std::size_t i = 0; i < k; ++i) {
        Constraint is_bot = Constraint::equal(Term::registr(i), Term::bottom());
        parts.push_back(reg_code[i] == 0 ? is_bot : Constraint::negation(is_bot));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (reg_code[i] == 0) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (reg_code[j] == 0) continue;
            Constraint eq = Constraint::equal(Term::registr(i), Term::registr(j));
            parts.push_back(reg_code[i] == reg_code[j] ? eq
                                                       : Constraint::negation(eq));
        }
    }
    if (input_code > 0) {
        // One literal per distinct register class: y's relation is then pinned.
        std::vector<int> seen;
        for (std::size_t i = 0; i < k; ++i) {
            if (reg_code[i] == 0) continue;
            if (std::find(seen.begin(), seen.end(), reg_code[i]) != seen.end())
                continue;
            seen.push_back(reg_code[i]);
            Constraint eq = Constraint::equal(Term::input(), Term::registr(i));
            parts.push_back(reg_code[i] == input_code ? eq
                                                      : Constraint::negation(eq));
        }
    } else if (input_code == 0) {
        parts.push_back(Constraint::equal(Term::input(), Term::bottom()));
    }
    return Constraint::conjunction_of(std::move(parts));
}

namespace {

void enumerate_codes(std::size_t total_vars, bool last_is_input, InputVar input,
                     std::vector<int>& codes, int used_classes,
                     std::vector<EqualityType>& out) {
    if (codes.size() == total_vars) {
        EqualityType t;
        if (last_is_input) {
            t.reg_code.assign(codes.begin(), codes.end() - 1);
            t.input_code = codes.back();
        } else {
            t.reg_code = codes;
            t.input_code = -1;
        }
        out.push_back(std::move(t));
        return;
    }
    const bool is_input_slot = last_is_input && codes.size() + 1 == total_vars;
    const bool bot_allowed = !is_input_slot || input == InputVar::AtomOrBot;
    if (bot_allowed) {
        codes.push_back(0);
        enumerate_codes(total_vars, last_is_input, input, codes, used_classes, out);
        codes.pop_back();
    }
    for (int c = 1; c <= used_classes + 1; ++c) {
        codes.push_back(c);
        enumerate_codes(total_vars, last_is_input, input, codes,
                        std::max(used_classes, c), out);
        codes.pop_back();
    }
}

} // namespace

std::vector<EqualityType> enumerate_equality_types(std::size_t register_count,
                                                   InputVar input) {
    std::vector<EqualityType> out;
    std::vector<int> codes;
    const bool with_input = input != InputVar::None;
    enumerate_codes(register_count + (with_input ? 1 : 0), with_input, input,
                    codes, 0, out);
    return out;
}

EqualityType equality_type_of(const Valuation& v) {
    EqualityType t;
    std::vector<Atom> classes;
    auto code_of = [&classes](AtomOrBot a) -> int {
        if (!a) return 0;
        auto it = std::find(classes.begin(), classes.end(), *a);
        if (it == classes.end()) {
            classes.push_back(*a);
            return static_cast<int>(classes.size());
        }
        return static_cast<int>(it - classes.begin()) + 1;
    };
    for (std::size_t i = 0; i < v.register_count(); ++i)
        t.reg_code.push_back(code_of(v.reg(i)));
    t.input_code = v.has_input() ? code_of(v.input()) : -1;
    return t;
}

bool satisfiable(const Constraint& c, std::size_t register_count) {
    for (const EqualityType& t :
         enumerate_equality_types(register_count, InputVar::AtomOrBot)) {
        if (c.eval(t.representative())) return true;
    }
    return false;
}

} // namespace ra
