#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpf {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Word in the Artin generators: +i is sigma_i, -i its inverse.
struct BraidWord {
    int n = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands, std::vector<int> l);

    BraidWord reduced() const;
    BraidWord inverse() const;
    BraidWord mirror() const;  // flip every exponent
    int exponent_sum() const;
    size_t size() const { return letters.size(); }
    std::string str() const;

    static BraidWord identity(int n) { return BraidWord(n, {}); }
    static BraidWord full_twist(int n);  // Delta^2
    static BraidWord half_twist(int n);  // Delta
    // "4 3 4 3 -2 -1 -2 -1", "(1 2)^5", "D2 1 2", "1 2 3 4 ^3" (suffix applies to
    // everything before it at the same nesting level).
    static BraidWord parse(int n, std::string_view text);
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& a, int k);
BraidWord conjugate(const BraidWord& b, const BraidWord& by);  // by * b * by^-1

// perm[i] = position where the strand starting at i ends (0-based).
std::vector<int> strand_permutation(const BraidWord& b);
int cycle_count(const std::vector<int>& perm);
bool closure_is_knot(const BraidWord& b);

// Dynnikov coordinates (a_1..a_{n-2}, b_1..b_{n-2}).  Letters act on the right,
// left to right.  sigma_i^-1 uses the update with
//   c = a_{i-1} - a_i - b_i^+ + b_{i-1}^-,
// sigma_i is its conjugate by the reflection (a,b) -> (-a,b).
using Dynnikov = std::vector<int64_t>;

bool dynnikov_valid(int n, const Dynnikov& x);
Dynnikov dynnikov_apply(const BraidWord& b, const Dynnikov& x);
std::vector<double> dynnikov_apply_real(const BraidWord& b, std::vector<double> x);
Dynnikov round_curve(int n, int i);  // curve around punctures i, i+1 (1-based)
Dynnikov nested_curve(int n, int k);  // curve around punctures 1..k, 2 <= k <= n-1
// Round curve around punctures i < j passing on one fixed side of those in between:
// round_curve(n, i) pushed along sigma_{i+1} ... sigma_{j-1}.
Dynnikov pair_curve(int n, int i, int j);

// Test family: round curves, nested curves and `random` seeded extra laminations.
std::vector<Dynnikov> test_laminations(int n, int random, uint64_t seed);

bool braids_equal(const BraidWord& a, const BraidWord& b, int random = 32, uint64_t seed = 1);

// Shortest w (length <= max_len, Artin letters) with a == w b w^-1.
std::optional<BraidWord> find_conjugator(const BraidWord& a, const BraidWord& b, int max_len);

struct GrowthEstimate {
    double rate = 1.0;
    bool growing = false;  // false: no exponential growth (periodic or reducible signal)
};
GrowthEstimate dilatation_estimate(const BraidWord& b, int iters, const Dynnikov& seed = {});

}  // namespace fpf
