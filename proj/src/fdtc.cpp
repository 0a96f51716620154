#include "fpf/fdtc.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpf {

std::string Fdtc::str() const {
    std::string s = value.numerator().str();
    if (value.denominator() != 1) s += "/" + value.denominator().str();
    return s;
}

Fdtc make_fdtc(long num, long den) { return Fdtc{Rational(BigInt(num), BigInt(den))}; }

Rational rotation_fraction(const std::vector<int>& perm) {
    const int k = (int)perm.size();
    if (k == 0) throw std::invalid_argument("empty permutation");
    int m = ((perm[0] % k) + k) % k;
    for (int i = 0; i < k; ++i)
        if (perm[i] != (i + m) % k) throw std::invalid_argument("not a cyclic rotation");
    return Rational(BigInt(m), BigInt(k));
}

Rational boundary_rotation(const TrackMap& m) {
    const Track& t = *m.track;
    const Face& f = t.faces.at(t.peripheral_face());
    std::vector<int> cusp_sw;
    for (const Corner& c : f.corners)
        if (t.side(t.germ_at(c.sw, c.idx)) == t.side(t.germ_at(c.sw, c.idx + 1))) cusp_sw.push_back(c.sw);
    if (cusp_sw.empty()) throw std::invalid_argument("peripheral region has no cusp");
    if (cusp_sw.size() == 1) return Rational(0);
    auto vm = vertex_map(m);
    if (!vm) throw std::invalid_argument("malformed map: no polygon vertex map");
    std::vector<int> perm;
    for (int s : cusp_sw) {
        int img = (*vm)[s];
        auto it = std::find(cusp_sw.begin(), cusp_sw.end(), img);
        if (img < 0 || it == cusp_sw.end())
            throw std::invalid_argument("malformed map: peripheral cusps not permuted");
        perm.push_back((int)(it - cusp_sw.begin()));
    }
    return rotation_fraction(perm);
}

Fdtc fdtc_compose(const Fdtc& base, long boundary_twists, long power) {
    return Fdtc{Rational(BigInt(boundary_twists)) + Rational(BigInt(power)) * base.value};
}

Fdtc cover_relation(const Fdtc& c_braid) { return Fdtc{c_braid.value / Rational(BigInt(2))}; }
Fdtc braid_level(const Fdtc& c_surface) { return Fdtc{c_surface.value * Rational(BigInt(2))}; }

LspaceAdmissibility lspace_admissible(const Fdtc& c, long bound) {
    Rational a = c.value < Rational(0) ? -c.value : c.value;
    return {a < Rational(BigInt(bound)), c.value != Rational(0)};
}

}  // namespace fpf
