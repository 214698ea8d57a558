#include "ra/atoms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ra {

Atom fresh_atom(const std::vector<Atom>& used) {
    std::vector<Atom> sorted = used;
    std::sort(sorted.begin(), sorted.end());
    Atom candidate = 0;
    for (Atom a : sorted) {
        if (a > candidate) break;
        if (a == candidate) ++candidate;
    }
    return candidate;
}

bool support_contains(const SupportSet& s, Atom a) {
    return std::binary_search(s.begin(), s.end(), a);
}

void normalize_support(SupportSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

AtomPermutation AtomPermutation::from_pairs(
    const std::vector<std::pair<Atom, Atom>>& pairs) {
    AtomPermutation pi;
    std::unordered_map<Atom, Atom> inverse;
    for (auto [a, b] : pairs) {
        if (!pi.map_.emplace(a, b).second)
            throw std::invalid_argument("permutation: duplicate domain atom");
        if (!inverse.emplace(b, a).second)
            throw std::invalid_argument("permutation: not injective");
    }
    for (auto [a, b] : pi.map_) {
        (void)b;
        if (inverse.find(a) == inverse.end())
            throw std::invalid_argument(
                "permutation: domain and range differ; not a bijection under "
                "identity extension");
    }
    // Drop fixpoints so is_identity() is meaningful.
    std::erase_if(pi.map_, [](const auto& kv) { return kv.first == kv.second; });
    return pi;
}

AtomPermutation AtomPermutation::transposition(Atom a, Atom b) {
    if (a == b) return identity();
    return from_pairs({{a, b}, {b, a}});
}

Atom AtomPermutation::apply(Atom a) const {
    auto it = map_.find(a);
    return it == map_.end() ? a : it->second;
}

AtomPermutation AtomPermutation::inverse() const {
    AtomPermutation pi;
    for (auto [a, b] : map_) pi.map_.emplace(b, a);
    return pi;
}

std::vector<Atom> Valuation::atoms() const {
    std::vector<Atom> result;
    for (const AtomOrBot& v : regs_) {
        if (v && std::find(result.begin(), result.end(), *v) == result.end())
            result.push_back(*v);
    }
    return result;
}

Valuation register_extend(const std::vector<std::size_t>& targets, Atom value,
                          const Valuation& v) {
    Valuation result = v;
    for (std::size_t r : targets) result.set_reg(r, value);
    return result;
}

Valuation permuted(const AtomPermutation& pi, const Valuation& v) {
    Valuation result = v;
    for (std::size_t i = 0; i < v.register_count(); ++i)
        result.set_reg(i, pi.apply(v.reg(i)));
    if (v.has_input()) result = result.with_input(pi.apply(v.input()));
    return result;
}

std::size_t hash_valuation(const Valuation& v) {
    std::size_t h = v.register_count();
    auto mix = [&h](std::size_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (std::size_t i = 0; i < v.register_count(); ++i) {
        AtomOrBot a = v.reg(i);
        mix(a ? static_cast<std::size_t>(*a) + 1 : 0);
    }
    if (v.has_input()) {
        AtomOrBot a = v.input();
        mix(a ? static_cast<std::size_t>(*a) + 2 : 1);
    }
    return h;
}

} // namespace ra
