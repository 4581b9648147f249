#include "logverlinde/labels.hpp"

namespace verlinde {

namespace {

const char* family_tag(Family f) {
    switch (f) {
        case Family::WpSimple: return "X";
        case Family::WpProjective: return "P";
        case Family::SFSimple: return "SF";
        case Family::SFProjective: return "SP";
        case Family::AffineSL2: return "A";
    }
    return "?";
}

}  // namespace

std::string ModuleLabel::str() const {
    std::string out = family_tag(family);
    if (family != Family::AffineSL2) out += (sign > 0 ? '+' : '-');
    out += std::to_string(index);
    return out;
}

ModuleLabel ModuleLabel::parse(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::string fam = s.substr(0, i);
    ModuleLabel m;
    if (fam == "X")
        m.family = Family::WpSimple;
    else if (fam == "P")
        m.family = Family::WpProjective;
    else if (fam == "SF")
        m.family = Family::SFSimple;
    else if (fam == "SP")
        m.family = Family::SFProjective;
    else if (fam == "A")
        m.family = Family::AffineSL2;
    else
        throw std::invalid_argument("ModuleLabel::parse: unknown family in '" + s + "'");
    if (m.family != Family::AffineSL2) {
        if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
            throw std::invalid_argument("ModuleLabel::parse: missing sign in '" + s + "'");
        m.sign = (s[i] == '+') ? +1 : -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("ModuleLabel::parse: missing index in '" + s + "'");
    m.index = std::stoi(s.substr(i));
    return m;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    RingElement out = a;
    for (const auto& [lab, m] : b) {
        out[lab] += m;
        if (out[lab] == 0) out.erase(lab);
    }
    return out;
}

RingElement scale(const RingElement& a, long long m) {
    RingElement out;
    if (m == 0) return out;
    for (const auto& [lab, v] : a) out[lab] = v * m;
    return out;
}

std::string QuantumLabel::str() const {
    std::string out = projective_cover ? "R" : "U";
    out += (sign > 0 ? '+' : '-');
    out += std::to_string(index);
    return out;
}

QuantumLabel to_quantum(const ModuleLabel& m) {
    switch (m.family) {
        case Family::WpSimple: return u_label(m.sign, m.index);
        case Family::WpProjective: return r_label(m.sign, m.index);
        default: throw std::invalid_argument("to_quantum: only W_p labels have quantum counterparts");
    }
}

ModuleLabel to_module(const QuantumLabel& q) {
    return q.projective_cover ? wp_projective(q.sign, q.index) : wp_simple(q.sign, q.index);
}

}  // namespace verlinde
