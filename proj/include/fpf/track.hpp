#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpf {

// Singularity data (boundary prongs; marked prongs; interior prongs), each sorted descending.
struct Stratum {
    std::vector<int> boundary, marked, interior;

    void normalize();
    bool operator==(const Stratum&) const = default;
    auto operator<=>(const Stratum&) const = default;
    std::string str() const;  // "(1;1^5;3^2)", empty lists print as the empty-set sign
    // 2*chi of the underlying surface implied by the prong data.
    int euler_sum() const;
    static Stratum parse(const std::string& text);
};

std::vector<Stratum> enumerate_strata(int genus, int boundary_components, int marked,
                                      const std::function<bool(const Stratum&)>& keep);
bool even_boundary_prongs(const Stratum& s);
// Could the stratum be the lift of a 5-marked disk stratum under the hyperelliptic
// involution?  Interior singularities must split into swapped equal pairs plus at most
// five fixed ones, each fixed one even (a p-pronged marked point lifts to 2p prongs).
bool hyperelliptic_lift_compatible(const Stratum& s);

enum class EdgeKind { Real, Inf };

// Germs are edge ends: germ 2e is the tail of edge e, 2e+1 its head.
inline int tail_germ(int e) { return 2 * e; }
inline int head_germ(int e) { return 2 * e + 1; }
inline int germ_edge(int g) { return g >> 1; }
inline int opposite_germ(int g) { return g ^ 1; }

struct Edge {
    std::string name;
    EdgeKind kind = EdgeKind::Real;
    int tail = -1, head = -1;  // switch indices
};

struct Switch {
    std::string name;
    std::vector<int> germs;  // counter-clockwise
};

struct Corner {
    int sw = -1;
    int idx = 0;  // corner between germs[idx] and germs[idx+1] (cyclically)
    bool operator==(const Corner&) const = default;
};

enum class FaceKind { Marked, Peripheral, Polygon, Other };

struct Face {
    std::vector<Corner> corners;
    std::vector<int> edges;  // boundary edges in traversal order
    int cusps = 0;
    FaceKind kind = FaceKind::Other;
    int marked_index = -1;
};

struct Track {
    std::string name;
    int n_marked = 0;
    std::vector<Edge> edges;
    std::vector<Switch> switches;
    std::vector<Corner> marked;           // one corner inside each marked face
    std::optional<Corner> peripheral;
    std::map<int, int> above;             // marked index -> side-swapping edge
    std::optional<Stratum> declared;

    // derived by finalize()
    std::vector<int> germ_switch, germ_pos;
    std::vector<Face> faces;
    std::vector<int> corner_face;  // flattened (switch offset + idx) -> face

    void finalize();
    int edge_id(const std::string& n) const;  // -1 if absent
    int switch_id(const std::string& n) const;
    bool is_real(int e) const { return edges[e].kind == EdgeKind::Real; }
    int side(int germ) const { return is_real(germ_edge(germ)) ? 0 : 1; }
    int degree(int sw) const { return (int)switches[sw].germs.size(); }
    int germ_at(int sw, int i) const;  // cyclic index
    int face_of(Corner c) const;
    int peripheral_face() const;
    std::vector<int> real_edges() const;
    std::vector<int> polygon_faces() const;
    // Vertices of a polygon face in traversal (counter-clockwise) order.
    std::vector<int> polygon_vertices(int face) const;
    std::string germ_name(int g) const;
    std::vector<int> real_germs(int sw) const;  // ccw, starting just after the inf run
};

struct TrackParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Track parse_track(const std::string& text);
Track load_track(const std::string& path);
std::string print_track(const Track& t);

std::vector<std::string> validate(const Track& t);
Stratum stratum_of(const Track& t);
bool is_standard(const Track& t);
std::vector<std::string> standard_violations(const Track& t);
bool is_jointless(const Track& t);

// Fixture directory (compiled-in default, overridable with FPF_DATA_DIR).
std::string data_dir();
// camel-r, camel-l, jellyfish, enoki-l, enoki-r
Track named_track(const std::string& name);
std::vector<std::string> named_track_names();

}  // namespace fpf
