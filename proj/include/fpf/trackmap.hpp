#pragma once

#include "fpf/matrix.hpp"
#include "fpf/track.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fpf {

// Decorations.  Monogon edges (real edges ending at a marked switch) carry +, - or the
// terminal o; a non-terminal monogon letter X+ / X- is shorthand for the doubled passage
// up X, once around the marked point, and back down X.  Edges between polygon vertices
// (the "d-type" edges) are plain or barred (~d, traversed head to tail).
enum class Dec { Plus, Minus, Terminal, Plain, Bar };

struct Letter {
    int edge = -1;
    Dec dec = Dec::Plain;
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

struct DecoratedPath {
    std::vector<Letter> letters;
    bool operator==(const DecoratedPath&) const = default;
    auto operator<=>(const DecoratedPath&) const = default;
};

bool is_monogon_edge(const Track& t, int e);
std::string letter_str(const Track& t, const Letter& l);
std::string path_str(const Track& t, const DecoratedPath& p);
DecoratedPath parse_path(const Track& t, const std::string& text);
// Real edges traversed: doubled letters count 2, terminals 1 (2 for a closing X o of a
// d-type image), d letters 1.
int path_length(const Track& t, int edge, const DecoratedPath& p);

struct TrackMap {
    std::shared_ptr<const Track> track;
    std::map<int, DecoratedPath> images;  // real edge -> image; d-type reverse is implied

    const DecoratedPath& image(int e) const { return images.at(e); }
    std::string str() const;  // "r -> b o" lines in real-edge order
    bool operator==(const TrackMap& o) const { return images == o.images; }
    bool operator<(const TrackMap& o) const { return images < o.images; }
};

TrackMap parse_trackmap(std::shared_ptr<const Track> t, const std::string& text);

// The same path run backwards: letters reversed, d <-> ~d, loop directions flipped.
// A closing X o becomes a doubled X+ first (its sign is free).
DecoratedPath reversed_path(const Track& t, int edge, const DecoratedPath& p);
// h = f o g (g first).  Closing terminals of d-type images are expanded as X+; signs do
// not affect edge counts, so transition_matrix(h) = transition_matrix(g) * transition_matrix(f).
TrackMap compose_maps(const TrackMap& f, const TrackMap& g);

// Vertex data of a letter: start switch, leaving germ, end switch, arriving germ.
struct LetterEnds {
    int start_sw, start_germ, end_sw, end_germ;
};
LetterEnds letter_ends(const Track& t, const Letter& l);

// Polygon vertex map read off from the first letters (and the end of d-type images);
// nullopt when the images disagree or do not induce a polygon map preserving order.
std::optional<std::vector<int>> vertex_map(const TrackMap& m);
// All order-preserving polygon maps (polygon -> polygon with the same cusp count).
std::vector<std::vector<int>> polygon_maps(const Track& t);

// --- passages ---------------------------------------------------------------------
// Positions around a switch: germ i sits at 64*i, virtual points strictly between.
constexpr int kOpen = -1;

struct Passage {
    int sw;
    int in, out;  // positions; kOpen marks a partial end
};
using PassageList = std::vector<Passage>;

int virtual_start(const Track& t, int target_sw, int source_germ);
int marked_position(const Track& t, int sw);

// Expand an image into passages.  `complete` false leaves the end open; `closing_sign`
// picks the loop direction for a closing X o in a d-type image (+1 / -1).
// Returns nullopt if consecutive letters are not joined by a single infinitesimal hop.
std::optional<PassageList> expand(const Track& t, const std::vector<int>& vmap, int edge,
                                  const DecoratedPath& p, bool complete, int closing_sign = 1);

PassageList reversed(const PassageList& p);

enum class Cross { No, Yes, Unknown };
// Crossing between two passage lists (self = same path).
bool paths_cross(const Track& t, const PassageList& a, const PassageList& b, bool self);
bool crossing_free(const Track& t, const std::vector<PassageList>& paths);

std::vector<std::string> check_legal(const TrackMap& m);
// Images drawable disjointly in a fibred neighbourhood (some closing-sign choice).
bool realisable(const TrackMap& m);

IntMatrix transition_matrix(const TrackMap& m);  // rows/cols in real-edge order
bool weight_space_unimodular(const TrackMap& m);
// Integer basis of the switch-condition solutions, restricted to real edges (columns).
IntMatrix weight_lattice(const Track& t);

}  // namespace fpf
