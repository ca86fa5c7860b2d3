#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etg4/graph.hpp"
#include "etg4/group.hpp"

namespace etg4 {

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Vec2&) const = default;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(std::int64_t k, Vec2 a) { return {k * a.x, k * a.y}; }
};

/// Unit steps in rotation order: +x, +y, -x, -y.
inline constexpr std::array<Vec2, 4> kUnitSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

/// Additive subgroup of Z^2 in normal form.
///
/// Rank 2 is stored as rows (a,b), (0,d) with a > 0, d > 0, 0 <= b < d, so
/// the index is a*d. Rank 1 stores the generator with its first nonzero
/// coordinate positive. Equal subgroups have equal normal forms.
class Lattice2D {
 public:
  Lattice2D() = default;

  int rank() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Vec2>& basis() const noexcept { return basis_; }
  /// Number of cosets; nullopt below rank 2.
  std::optional<std::int64_t> index() const;

  bool contains(Vec2 p) const;
  /// Coset representative: x in [0,a), y in [0,d). Rank 2 only.
  Vec2 reduce(Vec2 p) const;
  /// Image under the linear map (x,y) -> (m00*x + m01*y, m10*x + m11*y).
  Lattice2D transformed(const std::array<std::int64_t, 4>& m) const;

  /// "[(a,b),(c,d)]", "[(a,b)]" or "[]".
  std::string to_string() const;

  bool operator==(const Lattice2D&) const = default;
  auto operator<=>(const Lattice2D&) const = default;

  friend Lattice2D hnf_normalize(std::span<const Vec2> vectors);

 private:
  std::vector<Vec2> basis_;
};

Lattice2D hnf_normalize(std::span<const Vec2> vectors);

/// Parses "a b; c d" (or "a b" for one generator); throws Parse.
Lattice2D parse_lattice(std::string_view text);

/// Least normal form over the eight images under the symmetries of the
/// square, generated by (x,y) -> (y,x) and (x,y) -> (-y,x).
Lattice2D normalize_frame(const Lattice2D& lattice);

struct FrameNormalization {
  Lattice2D lattice;
  std::array<std::int64_t, 4> matrix{};  // row-major; lattice = matrix * input
};
FrameNormalization frame_normalization(const Lattice2D& lattice);

Vec2 apply(const std::array<std::int64_t, 4>& matrix, Vec2 v);

/// Vertex id of p's coset in coset_quotient(lattice).
int coset_id(const Lattice2D& lattice, Vec2 p);

enum class Surface { Plane, Cylinder, Torus };
std::string to_string(Surface surface);
Surface surface_of(const Lattice2D& lattice);

/// One of the five generator shapes of edge-transitive quotients:
///   1: trivial; 2: <(a,-a)>, a != 0; 3: <(a,b),(-b,a)>, (a,b) != (0,0);
///   4: <(a,b),(b,a)>, a != b; 5: <(a,a),(b,-b)>, a,b != 0.
struct LatticeRow {
  int row = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

/// Throws Parameter when the row constraints fail.
Lattice2D family_from_row(const LatticeRow& row);

/// Rows whose shape can generate this lattice. Rank 0 -> {1}; rank 1 -> {2}
/// when the generator lies on x = -y; rank 2 -> 3 when rotation-closed, and
/// 4 / 5 when reflection-closed with the matching generators present.
std::set<int> row_symmetry_check(const Lattice2D& lattice);

struct QuadEmbedding {
  Graph graph;
  std::vector<FourCycle> faces;
  /// Neighbours of each vertex in cyclic order; consecutive entries share a face.
  std::vector<std::array<Vertex, 4>> rotation;
  std::optional<std::vector<Vec2>> coordinates;
};

struct CosetQuotient {
  QuadEmbedding embedding;
  Lattice2D lattice;
  /// False when some unit step closes a loop or two step classes join the
  /// same pair of cosets; the graph then holds the simple shadow.
  bool simple = true;
  std::optional<int> girth;
  /// Edges {R, R+(0,1)}.
  std::vector<int> horizontal_edges;
  /// Edges {R, R+(1,0)}.
  std::vector<int> vertical_edges;
};

/// Z^2 / lattice for rank 2. Vertex id of coset rep (x,y) is x*d + y.
/// Rank < 2 throws Precondition; use the window generators instead.
CosetQuotient coset_quotient(const Lattice2D& lattice);

/// w x h rectangle of the square grid (rank 0 window).
Graph plane_window(int width, int height);
/// Cosets of a rank-1 lattice within `levels` steps of the axis (cylinder window).
Graph cylinder_window(const Lattice2D& lattice, int levels);

/// The two unit translations acting on the vertices of coset_quotient(lattice).
GeneratedGroup translation_group(const QuadEmbedding& embedding, const Lattice2D& lattice);

/// Faces are all 4-cycles, rotations come from the angles at each vertex.
/// Precondition: connected, 4-regular, girth 4, every edge in exactly two
/// 4-cycles, no K_{3,2}. Throws Embedding when the angles at a vertex do not
/// close into one 4-cycle.
QuadEmbedding faces_from_frequency2(const Graph& g);

struct Development {
  Lattice2D lattice;
  std::vector<Vec2> coordinates;  // lift of each vertex
  /// vertex -> vertex id in coset_quotient(lattice); an isomorphism.
  std::vector<int> to_quotient;
};

/// Unrolls the embedding over Z^2 from vertex 0 with frame rotation[0].
/// Throws NonOrientable on a reflected frame and Embedding on any other
/// inconsistency or a quotient mismatch.
Development develop(const QuadEmbedding& embedding);

}  // namespace etg4
