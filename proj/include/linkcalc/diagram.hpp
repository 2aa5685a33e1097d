#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

namespace linkcalc {

/// One crossing of a planar-diagram code. Slot 0 holds the incoming
/// under-strand edge and slots continue counterclockwise, so slots 0/2
/// carry the under-strand and slots 1/3 the over-strand.
struct crossing {
  std::array<int, 4> e{0, 0, 0, 0};
  bool operator==(const crossing&) const = default;
};

struct band_pass {
  int edge = 0;
  bool band_over = true;
  bool operator==(const band_pass&) const = default;
};

/// Combinatorial description of an embedded band joining two components.
/// from_edge/to_edge of -1 mean the corresponding component is a
/// crossingless loop (it has no edges to name).
struct band_spec {
  int from_edge = -1;
  int to_edge = -1;
  std::vector<band_pass> path;
  long long half_twists = 0;
  bool operator==(const band_spec&) const = default;
};

/// An oriented link diagram: a PD code plus a count of crossingless unknot
/// components. `reversed` lists component indices whose default orientation
/// is flipped; it only affects components whose orientation is not already
/// pinned by an under-strand passage. Diagrams are immutable values.
class diagram {
 public:
  diagram() = default;
  diagram(std::vector<crossing> cs, int free_loops, std::vector<int> reversed = {});

  const std::vector<crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  const std::vector<int>& reversed_components() const { return reversed_; }
  int max_edge_id() const;
  bool operator==(const diagram&) const = default;

 private:
  std::vector<crossing> crossings_;
  int free_loops_ = 0;
  std::vector<int> reversed_;
};

enum class issue_kind { edge_degree, trace_failure };

struct diagram_issue {
  issue_kind kind;
  std::string message;
};

/// Orientation and component data derived from a valid code.
struct traced {
  struct component {
    std::vector<int> edges;  // cyclic, in orientation order, smallest edge first
    bool pinned = false;     // orientation forced by an under-strand passage
    bool free_loop = false;
  };
  std::vector<component> components;
  std::vector<int> crossing_sign;  // +1 / -1 per crossing
  std::vector<int> over_in_slot;   // 1 or 3 per crossing
  std::unordered_map<int, int> edge_component;
  // head port of each edge, encoded 4*crossing+slot, under the chosen
  // orientations
  std::unordered_map<int, int> edge_head;

  int component_of_edge(int e) const { return edge_component.at(e); }
};

std::vector<diagram_issue> validate(const diagram& d);

/// Trace orientations; throws errc::invalid_diagram when validate would
/// report an issue.
traced trace(const diagram& d);

int component_count(const diagram& d);
long long writhe(const diagram& d);
long long self_writhe(const diagram& d, int comp);
std::vector<std::vector<long long>> linking_matrix(const diagram& d);

diagram mirror(const diagram& d);
diagram reverse_component(const diagram& d, int comp);
diagram disjoint_union(const diagram& a, const diagram& b);
diagram delete_component(const diagram& d, int comp);

struct cable_result {
  diagram d;
  int cable_component = -1;
  int core_component = -1;              // -1 unless the core is kept
  std::vector<int> braid_crossings;     // result indices of twist-tangle crossings
};

/// Replace component `comp` by the single curve of slope p/q on the boundary
/// of its neighbourhood, measured against the Seifert framing. q blackboard
/// copies are corrected by a torus braid with exponent p - q*w, w the
/// self-writhe of `comp`.
cable_result cable(const diagram& d, int comp, long long p, long long q);

/// Same construction but keeping `comp` itself as a separate component (the
/// cable then winds around it); used for diagram-level handle slides.
cable_result cable_with_core(const diagram& d, int comp, long long p, long long q);

struct band_sum_result {
  diagram d;
  int merged_component = -1;
  int arc_out = -1;   // band edge running from the slid component to the target
  int arc_back = -1;  // band edge running back
};

/// Join components `from` and `to` along two parallel arcs following
/// band.path; orientation of the target is traversed compatibly.
band_sum_result band_sum(const diagram& d, int from, int to, const band_spec& band);

/// Remove R1 kinks and R2 bigons until none remain. Orientations of surviving
/// components are preserved via explicit overrides where needed.
diagram simplify(const diagram& d);

}  // namespace linkcalc
