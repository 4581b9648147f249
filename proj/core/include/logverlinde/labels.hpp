#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace verlinde {

enum class Family {
    WpSimple,      // X^eps_s, 1 <= s <= p
    WpProjective,  // P^eps_s, 1 <= s <= p-1  (P^eps_p is normalized to X^eps_p)
    SFSimple,      // index 1: SF^eps, index 2: SF^eps(theta)
    SFProjective,  // index 1: P^eps
    AffineSL2,     // 1 <= s <= k+1, no sign
};

// Basis label of one of the module rings.
struct ModuleLabel {
    Family family = Family::WpSimple;
    int sign = +1;  // +1 or -1; ignored for AffineSL2
    int index = 1;

    auto operator<=>(const ModuleLabel&) const = default;

    std::string str() const;
    static ModuleLabel parse(const std::string& s);
};

inline ModuleLabel wp_simple(int sign, int s) { return {Family::WpSimple, sign, s}; }
inline ModuleLabel wp_projective(int sign, int s) { return {Family::WpProjective, sign, s}; }

// Formal nonnegative-integer combination of labels.
using RingElement = std::map<ModuleLabel, long long>;

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement scale(const RingElement& a, long long m);

// Quantum-group side labels.  U^eps_s mirrors X^eps_s and R^eps_i mirrors
// P^eps_i; the namespaces are kept apart because only a fixed dictionary,
// not an identification, relates them.
struct QuantumLabel {
    bool projective_cover = false;  // false: U^eps_s, true: R^eps_i
    int sign = +1;
    int index = 1;

    auto operator<=>(const QuantumLabel&) const = default;

    std::string str() const;
};

inline QuantumLabel u_label(int sign, int s) { return {false, sign, s}; }
inline QuantumLabel r_label(int sign, int i) { return {true, sign, i}; }

// Dictionary X^eps_s <-> U^eps_s, P^eps_i <-> R^eps_i.
QuantumLabel to_quantum(const ModuleLabel& m);
ModuleLabel to_module(const QuantumLabel& q);

}  // namespace verlinde
