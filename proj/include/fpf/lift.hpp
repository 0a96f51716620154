#pragma once

#include "fpf/track.hpp"
#include "fpf/trackmap.hpp"

#include <string>
#include <vector>

namespace fpf {

// Branched double cover: boundary prongs double, 1-pronged marked points become regular,
// p-pronged marked points become 2p-pronged, interior singularities lift to two copies.
Stratum lift_stratum(const Stratum& s);

// Parity (0 even, 1 odd) of the side-swapping letters strictly before `position`:
// every marked-monogon letter swaps sheets once, d-type letters never do.
int prefix_swap_parity(const Track& t, const DecoratedPath& p, size_t position);

// Sheet shift of every interior polygon: the lift sends P^i to f(P)^(i + s_P).
// The polygon holding the tail of the first d-type edge (or the only polygon) gets
// `toggle`; the others follow along d-type images.  Indexed like polygon_faces().
std::vector<int> sheet_shifts(const TrackMap& m, bool toggle);

// Trace of the lifted transition matrix.
int lifted_trace(const TrackMap& m, bool toggle = false);

std::vector<std::string> trace_lemma_check(const TrackMap& m);

struct LiftedSingularities {
    // Lifted interior singularities numbered 2*k + sheet for the k-th polygon.
    std::vector<int> perm;
    std::vector<int> fixed;
    std::string case_tag;  // A, B, C, D, violation, or "-" when the table does not apply
    bool relabelled = false;  // matches the tag only after exchanging the lifts of one triangle
    std::vector<int> labels;  // display label of each lifted singularity (1..4 for two triangles)
    std::string cycles() const;
};
LiftedSingularities lifted_singularity_permutation(const TrackMap& m, bool toggle = false);

struct LiftReport {
    bool toggled = false;
    int lifted_trace = 0;
    LiftedSingularities singularities;
    std::vector<int> fixed_marked;  // marked switches sent to themselves
    bool fpf = false;
    Stratum lifted_stratum;
    std::string str() const;
};
// toggle models composition with the full twist (the hyperelliptic involution upstairs).
LiftReport fpf_verdict(const TrackMap& m, bool toggle = false);

}  // namespace fpf
