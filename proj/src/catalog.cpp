// SPDX-License-Identifier: Apache-2.0
#include "catalog.hpp"

#include "error.hpp"

#include <cctype>

namespace sublat {

namespace {

struct Transcribed {
    const char* labels;
    const char* covers;
};

// Cover edges, "xy" meaning y covers x.
constexpr Transcribed kA0{"oiabcABC", "oa ob oc Ai Bi Ci aB aC bA bC cA cB"};
constexpr Transcribed kB{"oiabcdefg", "oa ob oc od ae be bf bg cf dg ei fi gi"};
constexpr Transcribed kC{"oiabcdefg", "ai bi ci da db eb ec fb gd ge og of"};
constexpr Transcribed kD{"oiabcdefg", "oa ob ac ae ad be cf dg ef eg fi gi"};
constexpr Transcribed kE0{"oiabcdefg", "ai bi ci db ea ed fd fc gb oe of og"};
constexpr Transcribed kE1{"oiabcdefghj", "ai bi ca da ei fb fc gc gd hd he ja of og oh oj"};
constexpr Transcribed kF0{"oiabcdefg", "ai bi ca da eb ec fe fd gc of og"};
constexpr Transcribed kF1{"oiabcdefghj", "oa od ab ac ah be bf cf cg dg ei fj gj hj ji"};
constexpr Transcribed kG0{"oiabcdefghj", "oa ob ac ad ag bd ce de df eh ej fj gj hi ji"};
constexpr Transcribed kH0{"oiabcdefgh", "oa ob oc ad bd be bh cg df dg eg fi gi hi"};
constexpr Transcribed kK5{"oiabcdefghjk", "oa ob ac bc bd ce cf df eg fg fh gj gk hk ji ki"};
constexpr Transcribed kFence8{"abcdefgh", "ab cb cd ed ef gf gh"};
constexpr Transcribed kCrown8{"abcdefgh", "ab cb cd ed ef gf gh ah"};

FiniteLattice build(const Transcribed& t)
{
    return lattice_from_covers(t.labels, t.covers);
}

/// Builds a lattice from index-based cover edges with default labels.
class Builder {
public:
    std::uint8_t add()
    {
        return static_cast<std::uint8_t>(n_++);
    }
    void cover(std::uint8_t lower, std::uint8_t upper) { covers_.emplace_back(lower, upper); }
    FiniteLattice finish() const
    {
        return lattice_from_covers(PosetSpec{Universe(default_labels(n_)), covers_});
    }

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> covers_;
};

void check_size(KRName name, std::size_t size)
{
    if (size > kMaxUniverse)
        throw Error(ErrorKind::UniverseTooLarge, name.to_string() + " has more than 64 elements");
}

[[noreturn]] void not_transcribed(KRName name)
{
    throw Error(ErrorKind::NotTranscribed, name.to_string() + " is not transcribed in the catalog");
}

}  // namespace

bool KRName::indexed() const noexcept
{
    switch (family) {
    case KRFamily::A:
    case KRFamily::E:
    case KRFamily::F:
    case KRFamily::G:
    case KRFamily::H:
    case KRFamily::DualE:
        return true;
    default:
        return false;
    }
}

std::string KRName::to_string() const
{
    const std::string i = std::to_string(index);
    switch (family) {
    case KRFamily::A: return "A_" + i;
    case KRFamily::B: return "B";
    case KRFamily::C: return "C";
    case KRFamily::D: return "D";
    case KRFamily::E: return "E_" + i;
    case KRFamily::F: return "F_" + i;
    case KRFamily::G: return "G_" + i;
    case KRFamily::H: return "H_" + i;
    case KRFamily::DualB: return "dual B";
    case KRFamily::DualC: return "dual C";
    case KRFamily::DualD: return "dual D";
    case KRFamily::DualE: return "dual E_" + i;
    case KRFamily::K5: return "K_5";
    case KRFamily::Fence8: return "fence_8";
    case KRFamily::Crown8: return "crown_8";
    case KRFamily::EncapsulatedLadder: return "encapsulated_ladder";
    case KRFamily::H0plus: return "H_0^+";
    }
    return "?";
}

KRName KRName::parse(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '^')
            t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    const auto bad = [&] { return Error(ErrorKind::InvalidArgument, "unknown catalog name '" + std::string(text) + "'"); };
    if (t == "K5")
        return {KRFamily::K5, 0};
    if (t == "FENCE8")
        return {KRFamily::Fence8, 0};
    if (t == "CROWN8")
        return {KRFamily::Crown8, 0};
    if (t == "ENCAPSULATEDLADDER" || t == "LADDER")
        return {KRFamily::EncapsulatedLadder, 0};
    if (t == "H0+" || t == "H0PLUS")
        return {KRFamily::H0plus, 0};
    bool is_dual = false;
    if (t.starts_with("DUAL")) {
        is_dual = true;
        t.erase(0, 4);
    }
    if (t.empty())
        throw bad();
    const char f = t[0];
    const std::string digits = t.substr(1);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw bad();
    if (digits.size() > 6)
        throw bad();
    const unsigned index = digits.empty() ? 0 : static_cast<unsigned>(std::stoul(digits));
    KRName name;
    name.index = index;
    // A, F, G and H are selfdual; "dual F_0" names F_0 itself.
    switch (f) {
    case 'A': name.family = KRFamily::A; break;
    case 'B': name.family = is_dual ? KRFamily::DualB : KRFamily::B; break;
    case 'C': name.family = is_dual ? KRFamily::DualC : KRFamily::C; break;
    case 'D': name.family = is_dual ? KRFamily::DualD : KRFamily::D; break;
    case 'E': name.family = is_dual ? KRFamily::DualE : KRFamily::E; break;
    case 'F': name.family = KRFamily::F; break;
    case 'G': name.family = KRFamily::G; break;
    case 'H': name.family = KRFamily::H; break;
    default: throw bad();
    }
    if (name.indexed() != !digits.empty())
        throw bad();
    return name;
}

FiniteLattice kr_a(unsigned n)
{
    check_size({KRFamily::A, n}, 2 * std::size_t{n} + 8);
    const unsigned k = n + 3;
    Builder b;
    const auto bottom = b.add();
    std::vector<std::uint8_t> atom(k);
    std::vector<std::uint8_t> coatom(k);
    for (auto& a : atom)
        a = b.add();
    for (auto& c : coatom)
        c = b.add();
    const auto top = b.add();
    for (unsigned i = 0; i < k; ++i) {
        b.cover(bottom, atom[i]);
        b.cover(atom[i], coatom[i]);
        b.cover(atom[i], coatom[(i + 1) % k]);
        b.cover(coatom[i], top);
    }
    return b.finish();
}

FiniteLattice kr_e(unsigned n)
{
    check_size({KRFamily::E, n}, 2 * std::size_t{n} + 9);
    Builder b;
    const auto bottom = b.add();
    std::vector<std::uint8_t> x(n + 2);
    for (auto& v : x) {
        v = b.add();
        b.cover(bottom, v);
    }
    const auto extra = b.add();
    b.cover(bottom, extra);
    const auto spine = b.add();
    b.cover(extra, spine);
    for (unsigned k = 1; k <= n + 1; ++k) {
        const auto m = b.add();
        b.cover(x[k - 1], m);
        b.cover(x[k], m);
        b.cover(m, spine);
    }
    const auto left = b.add();
    const auto right = b.add();
    const auto top = b.add();
    b.cover(x.front(), left);
    b.cover(x.back(), right);
    b.cover(left, top);
    b.cover(right, top);
    b.cover(spine, top);
    return b.finish();
}

FiniteLattice kr_f(unsigned n)
{
    check_size({KRFamily::F, n}, 2 * std::size_t{n} + 9);
    Builder b;
    const auto bottom = b.add();
    const auto foot = b.add();
    const auto side_low = b.add();
    b.cover(bottom, foot);
    b.cover(bottom, side_low);
    std::vector<std::uint8_t> x(n + 1);
    for (auto& v : x) {
        v = b.add();
        b.cover(foot, v);
    }
    const auto head = b.add();
    for (unsigned k = 0; k <= n; ++k) {
        const auto y = b.add();
        b.cover(x[k], y);
        b.cover(k < n ? x[k + 1] : side_low, y);
        b.cover(y, head);
    }
    const auto pole = b.add();
    b.cover(foot, pole);
    b.cover(pole, head);
    const auto side_high = b.add();
    b.cover(x.front(), side_high);
    const auto top = b.add();
    b.cover(head, top);
    b.cover(side_high, top);
    return b.finish();
}

bool is_transcribed(KRName name) noexcept
{
    switch (name.family) {
    case KRFamily::G:
    case KRFamily::H:
        return name.index == 0;
    case KRFamily::H0plus:
        return false;
    default:
        return true;
    }
}

MemberSize member_size(KRName name)
{
    const std::size_t n = name.index;
    switch (name.family) {
    case KRFamily::A: return {2 * n + 8, true};
    case KRFamily::E:
    case KRFamily::DualE:
    case KRFamily::F: return {2 * n + 9, true};
    // G_n and H_n with n >= 1 contain K_5 as a sublattice.
    case KRFamily::G: return n == 0 ? MemberSize{11, true} : MemberSize{12, false};
    case KRFamily::H: return n == 0 ? MemberSize{10, true} : MemberSize{12, false};
    case KRFamily::B:
    case KRFamily::C:
    case KRFamily::D:
    case KRFamily::DualB:
    case KRFamily::DualC:
    case KRFamily::DualD: return {9, true};
    case KRFamily::K5: return {12, true};
    case KRFamily::Fence8:
    case KRFamily::Crown8: return {8, true};
    case KRFamily::EncapsulatedLadder: return {10, true};
    case KRFamily::H0plus: return {0, false};
    }
    return {0, false};
}

KRMember kr_member(KRName name)
{
    const unsigned n = name.index;
    switch (name.family) {
    case KRFamily::A: return n == 0 ? build(kA0) : kr_a(n);
    case KRFamily::B: return build(kB);
    case KRFamily::C: return build(kC);
    case KRFamily::D: return build(kD);
    case KRFamily::E: return n == 0 ? build(kE0) : n == 1 ? build(kE1) : kr_e(n);
    case KRFamily::F: return n == 0 ? build(kF0) : n == 1 ? build(kF1) : kr_f(n);
    case KRFamily::G:
        if (n == 0)
            return build(kG0);
        not_transcribed(name);
    case KRFamily::H:
        if (n == 0)
            return build(kH0);
        not_transcribed(name);
    case KRFamily::DualB: return dual(build(kB));
    case KRFamily::DualC: return dual(build(kC));
    case KRFamily::DualD: return dual(build(kD));
    case KRFamily::DualE: return dual(kr_lattice({KRFamily::E, n}));
    case KRFamily::K5: return build(kK5);
    case KRFamily::Fence8: return PosetSpec::from_text(kFence8.labels, kFence8.covers);
    case KRFamily::Crown8: return PosetSpec::from_text(kCrown8.labels, kCrown8.covers);
    case KRFamily::EncapsulatedLadder: {
        const FiniteLattice f1 = build(kF1);
        return sublattice(f1, SubsetMask{full_mask(f1.size()) & ~(std::uint64_t{1} << *f1.universe().index_of('h'))});
    }
    case KRFamily::H0plus: not_transcribed(name);
    }
    not_transcribed(name);
}

FiniteLattice kr_lattice(KRName name)
{
    KRMember m = kr_member(name);
    if (auto* l = std::get_if<FiniteLattice>(&m))
        return std::move(*l);
    throw Error(ErrorKind::InvalidArgument, name.to_string() + " is a poset, not a lattice");
}

}  // namespace sublat
