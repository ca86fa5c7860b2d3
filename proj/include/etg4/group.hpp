#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace etg4 {

/// Bijection of 0..n-1 in image notation: p(x) = images()[x].
class Permutation {
 public:
  Permutation() = default;
  /// Throws ContractViolation if images is not a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const noexcept { return images_; }
  bool is_identity() const;

  /// (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Stabilizer chain with explicit coset representatives, built by
/// Schreier-Sims. Level i fixes base points 0..i-1 and stores, for every
/// point in the orbit of base[i], a representative mapping base[i] to it.
class StabilizerChain {
 public:
  /// The base starts with base_prefix (in order) and is extended as needed.
  StabilizerChain(int degree, std::span<const Permutation> generators,
                  std::span<const int> base_prefix = {});

  int degree() const noexcept { return degree_; }
  /// Exact group order; throws ContractViolation on 64-bit overflow.
  std::uint64_t order() const;
  std::size_t level_count() const noexcept { return levels_.size(); }
  int base_point(std::size_t level) const { return levels_.at(level).base; }
  const std::vector<Permutation>& level_generators(std::size_t level) const {
    return levels_.at(level).generators;
  }
  std::vector<int> level_orbit(std::size_t level) const;
  bool contains(const Permutation& g) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> generators;
    std::vector<std::optional<Permutation>> reps;
  };

  void rebuild_orbit(Level& level) const;
  /// Sifts g from level `from`; returns the residue and the level it stuck at.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void add_strong_generator(const Permutation& h, std::size_t from_level);

  int degree_;
  std::vector<Level> levels_;
};

/// Permutation group given by generators; the order is computed on
/// construction. Immutable.
class GeneratedGroup {
 public:
  GeneratedGroup() = default;
  GeneratedGroup(int degree, std::vector<Permutation> generators);

  static GeneratedGroup trivial(int degree) { return GeneratedGroup(degree, {}); }

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }
  bool contains(const Permutation& g) const;

  /// Explicit element list by closure; throws Precondition above max_order.
  std::vector<Permutation> elements(std::uint64_t max_order = 1'000'000) const;

  /// One generator per line, images separated by single spaces.
  std::string to_text() const;
  /// Inverse of to_text. Blank lines and '#' comments are skipped; every
  /// line must hold exactly `degree` ids.
  static GeneratedGroup parse(std::string_view text, int degree);

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::uint64_t order_ = 1;
};

/// Orbits of the generated group on 0..degree-1, each sorted, listed by
/// smallest element.
std::vector<std::vector<int>> point_orbits(int degree, std::span<const Permutation> generators);

}  // namespace etg4
