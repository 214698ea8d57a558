/* atoms.hpp -- equality atoms, finitely supported permutations, valuations */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace ra {

/// An atom is an opaque name; only equality between ids carries meaning.
/// The ordering of ids is used for canonical naming (fresh = least unused)
/// and never influences a semantic decision.
using Atom = std::uint32_t;

/// An atom or the undefined value bot.
using AtomOrBot = std::optional<Atom>;

inline constexpr AtomOrBot bot = std::nullopt;

/// A finite, duplicate-free, sorted set of atoms.
using SupportSet = std::vector<Atom>;

/// Least atom id not occurring in `used` (which need not be sorted).
Atom fresh_atom(const std::vector<Atom>& used);

bool support_contains(const SupportSet& s, Atom a);

/// Sorts and deduplicates in place.
void normalize_support(SupportSet& s);

/// A bijection on atoms described by a finite map and extended by the
/// identity outside its carrier. Sufficient for acting on any finitely
/// supported object.
class AtomPermutation {
public:
    AtomPermutation() = default;

    /// Builds the permutation from explicit pairs a -> pi(a).
    /// Throws std::invalid_argument unless the map is injective and its
    /// domain and range coincide (so extending by identity is a bijection).
    static AtomPermutation from_pairs(const std::vector<std::pair<Atom, Atom>>& pairs);

    static AtomPermutation identity() { return AtomPermutation{}; }

    /// The transposition a <-> b.
    static AtomPermutation transposition(Atom a, Atom b);

    Atom apply(Atom a) const;
    AtomOrBot apply(AtomOrBot a) const { return a ? AtomOrBot{apply(*a)} : bot; }

    AtomPermutation inverse() const;

    bool is_identity() const { return map_.empty(); }

private:
    std::unordered_map<Atom, Atom> map_;
};

/// Total map from registers x1..xk (0-based indices internally) to
/// atoms-or-bot, with an optional binding for the input variable y.
class Valuation {
public:
    Valuation() = default;
    explicit Valuation(std::size_t register_count) : regs_(register_count) {}

    static Valuation all_bot(std::size_t register_count) {
        return Valuation(register_count);
    }

    std::size_t register_count() const { return regs_.size(); }

    AtomOrBot reg(std::size_t index) const { return regs_.at(index); }
    void set_reg(std::size_t index, AtomOrBot v) { regs_.at(index) = v; }

    bool has_input() const { return input_bound_; }
    AtomOrBot input() const { return input_; }

    Valuation with_input(AtomOrBot a) const {
        Valuation v = *this;
        v.input_bound_ = true;
        v.input_ = a;
        return v;
    }

    /// Distinct non-bot register values, in first-occurrence order.
    std::vector<Atom> atoms() const;

    bool operator==(const Valuation& other) const {
        return regs_ == other.regs_ && input_bound_ == other.input_bound_ &&
               (!input_bound_ || input_ == other.input_);
    }

private:
    std::vector<AtomOrBot> regs_;
    AtomOrBot input_;
    bool input_bound_ = false;
};

/// The valuation that is `value` on the registers listed in `targets`
/// and agrees with `v` elsewhere.
Valuation register_extend(const std::vector<std::size_t>& targets, Atom value,
                          const Valuation& v);

Valuation permuted(const AtomPermutation& pi, const Valuation& v);

std::size_t hash_valuation(const Valuation& v);

} // namespace ra
