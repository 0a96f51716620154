#pragma once

#include "fpf/braid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fpf {

enum class NodeKind { Enoki, Camel, Aux };

struct AutomatonNode {
    std::string name;
    NodeKind kind = NodeKind::Aux;
    std::string track;  // fixture name, empty for auxiliary nodes
};

struct AutomatonEdge {
    int from = -1, to = -1;
    BraidWord label;
    bool dashed = false;
};

struct Automaton {
    std::string name;
    int strands = 5;
    std::vector<AutomatonNode> nodes;
    std::vector<AutomatonEdge> edges;

    int node_id(const std::string& n) const;  // -1 if absent
    std::string edge_str(int e) const;        // "enoki-l -> top [-1 -2 -3]"
};

Automaton parse_automaton(const std::string& text);
Automaton load_automaton(const std::string& path);
Automaton stratum_automaton();  // data/automaton/folding-33.aut

struct Loop {
    std::vector<int> edges;
    BraidWord word;
    bool passes_camel = false;
    bool dashed_only = false;
};

// Labels composed in traversal order; the empty loop is the identity.
BraidWord compose_loop(const Automaton& a, const std::vector<int>& edges);
// All closed walks through `base` with 1..max_len edges.
std::vector<Loop> loops(const Automaton& a, int base, int max_len);

// A Camel-avoiding loop cut at each return to its base; after conjugating by one word
// (shared by all loops at that base) every block is beta(a, b) or beta(a1, b1) beta(a2, b2).
struct BetaFactor {
    int a = 0, b = 0;
};
struct EnokiDecomposition {
    std::vector<int> edges;
    BraidWord conjugator;
    std::vector<std::vector<BetaFactor>> blocks;
    bool ok = false;
    std::string str() const;  // "[b(1,0)][b(0,1) b(2,0)]"
};
// Loops of length <= max_len at `base` avoiding Camel nodes.  Conjugators are tried by
// increasing length up to max_conj; the first one decomposing every loop wins.
std::vector<EnokiDecomposition> decompose_enoki_loops(const Automaton& a, int base, int max_len,
                                                      int max_conj = 2);

// Beta(a, b) = sigma_4^a sigma_3 sigma_2 sigma_1^-b sigma_2^-1 sigma_3^-1, and its
// conjugate (sigma_3^-1 sigma_4^a sigma_3)(sigma_2 sigma_1^-b sigma_2^-1).
BraidWord beta_ab(int a, int b);
BraidWord beta_ab_split(int a, int b);

// The argument for beta(a, b): it is conjugate to the split form, which fixes the {2,4}
// curve, so beta(a, b) fixes that curve pushed by the conjugator.
struct SplitWitness {
    BraidWord conjugator;  // split = conjugator . beta . conjugator^-1
    Dynnikov curve;        // pair_curve(5, 2, 4) . conjugator
    bool split_fixes = false, beta_fixes = false;
};
std::optional<SplitWitness> beta_ab_witness(int a, int b, int max_conj = 2);

struct ReducibilityWitness {
    bool trivial = false;  // b acts trivially: every curve is fixed
    Dynnikov curve;        // fixed by b
    std::string standard;  // the standard curve it comes from, e.g. "{2,4}"
    BraidWord conjugator;  // curve = standard . conjugator
    std::vector<std::string> also;  // other standard curves fixed at the same conjugator length
};

// Fixed curve among standard round curves (adjacent pairs, pairs {i,j}, nested 1..k)
// pushed by conjugators of length <= max_conj.  Absence is not a pA certificate.
std::optional<ReducibilityWitness> reducibility_witness(const BraidWord& b, int max_conj = 2);

struct PassageReport {
    long loops = 0;  // up to cyclic rotation
    long through_camel = 0;
    long trivial = 0;
    long reducible = 0;
    std::vector<std::string> flagged;  // neither: needs manual review
    std::string str() const;
};
PassageReport camel_passage_check(const Automaton& a, int max_len);

}  // namespace fpf
