#include "fpf/track.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fpf {

void Stratum::normalize() {
    for (auto* v : {&boundary, &marked, &interior}) std::sort(v->begin(), v->end(), std::greater<>());
}

namespace {

std::string list_str(const std::vector<int>& v) {
    if (v.empty()) return "\xE2\x88\x85";  // empty set sign
    std::ostringstream os;
    for (size_t i = 0; i < v.size();) {
        size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (i) os << ',';
        os << v[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty() || s == "\xE2\x88\x85" || s == "-" || s == "empty") return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto caret = item.find('^');
        int p = std::stoi(item.substr(0, caret));
        int mult = caret == std::string::npos ? 1 : std::stoi(item.substr(caret + 1));
        if (p < 1 || mult < 1) throw std::invalid_argument("bad prong entry: " + item);
        out.insert(out.end(), mult, p);
    }
    return out;
}

// Partitions of `total` into parts >= minpart, non-increasing, each part <= maxpart.
void partitions(int total, int minpart, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, maxpart); p >= minpart; --p) {
        cur.push_back(p);
        partitions(total - p, minpart, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::string Stratum::str() const {
    return "(" + list_str(boundary) + ";" + list_str(marked) + ";" + list_str(interior) + ")";
}

int Stratum::euler_sum() const {
    int s = 0;
    for (int p : marked) s += 2 - p;
    for (int p : interior) s += 2 - p;
    for (int p : boundary) s -= p;
    return s;
}

Stratum Stratum::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t.size() < 4 || t.front() != '(' || t.back() != ')') throw std::invalid_argument("stratum must be (b;m;k)");
    t = t.substr(1, t.size() - 2);
    auto a = t.find(';'), b = t.find(';', a + 1);
    if (a == std::string::npos || b == std::string::npos) throw std::invalid_argument("stratum needs two ';'");
    Stratum s{parse_list(t.substr(0, a)), parse_list(t.substr(a + 1, b - a - 1)), parse_list(t.substr(b + 1))};
    s.normalize();
    return s;
}

// Euler-Poincare: sum over interior and marked (2-p) minus boundary prongs = 2 chi,
// chi = 2 - 2g - (boundary components).  Every boundary component carries >= 1 prong,
// marked points >= 1, unmarked interior singularities >= 3.
std::vector<Stratum> enumerate_strata(int genus, int boundary_components, int marked,
                                      const std::function<bool(const Stratum&)>& keep) {
    if (genus < 0 || boundary_components < 0 || marked < 0) throw std::invalid_argument("negative surface data");
    const int two_chi = 2 * (2 - 2 * genus - boundary_components);
    // Write marked prongs as 1 + m_i, interior as 2 + k_i (k_i >= 1), boundary b_j >= 1:
    //   marked - sum m_i - sum k_i - sum b_j = two_chi
    const int budget = marked - two_chi;  // = sum m_i + sum k_i + sum b_j
    std::vector<Stratum> out;
    if (budget < boundary_components) return out;
    for (int bsum = boundary_components; bsum <= budget; ++bsum) {
        std::vector<std::vector<int>> bparts;
        std::vector<int> cur;
        if (boundary_components == 0) {
            if (bsum != 0) continue;
            bparts.push_back({});
        } else {
            partitions(bsum, 1, bsum, cur, bparts);
            std::erase_if(bparts, [&](const auto& p) { return (int)p.size() != boundary_components; });
        }
        for (int msum = 0; msum + bsum <= budget; ++msum) {
            int ksum = budget - bsum - msum;
            // marked excess: multiset of `marked` values >= 0 summing to msum
            std::vector<std::vector<int>> mparts;
            partitions(msum, 1, msum, cur, mparts);
            std::erase_if(mparts, [&](const auto& p) { return (int)p.size() > marked; });
            std::vector<std::vector<int>> kparts;
            partitions(ksum, 1, ksum, cur, kparts);
            for (const auto& bp : bparts)
                for (const auto& mp : mparts)
                    for (const auto& kp : kparts) {
                        Stratum s;
                        s.boundary = bp;
                        s.marked.assign(marked, 1);
                        for (size_t i = 0; i < mp.size(); ++i) s.marked[i] += mp[i];
                        for (int k : kp) s.interior.push_back(k + 2);
                        s.normalize();
                        if (s.euler_sum() != two_chi) continue;
                        if (!keep || keep(s)) out.push_back(s);
                    }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool even_boundary_prongs(const Stratum& s) {
    return std::all_of(s.boundary.begin(), s.boundary.end(), [](int p) { return p % 2 == 0; });
}

bool hyperelliptic_lift_compatible(const Stratum& s) {
    if (!even_boundary_prongs(s)) return false;
    std::map<int, int> count;
    for (int p : s.interior) ++count[p];
    int fixed = 0;
    for (auto [p, c] : count) {
        if (c % 2 == 0) continue;
        if (p % 2 != 0) return false;
        ++fixed;
    }
    return fixed <= 5;
}

}  // namespace fpf
