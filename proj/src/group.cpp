#include "etg4/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "etg4/error.hpp"

namespace etg4 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    require(x >= 0 && x < degree() && !hit[x], ErrorKind::ContractViolation,
            "images do not form a permutation");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require(a.degree() == b.degree(), ErrorKind::ContractViolation, "degree mismatch in product");
  Permutation out;
  out.images_.resize(a.images_.size());
  for (int x = 0; x < b.degree(); ++x) out.images_[x] = a.images_[b.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (int x = 0; x < degree(); ++x) out.images_[images_[x]] = x;
  return out;
}

// ---------------------------------------------------------------------------

StabilizerChain::StabilizerChain(int degree, std::span<const Permutation> generators,
                                 std::span<const int> base_prefix)
    : degree_(degree) {
  for (int b : base_prefix) {
    require(b >= 0 && b < degree, ErrorKind::ContractViolation, "base point out of range");
    levels_.push_back({b, {}, {}});
  }
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    require(g.degree() == degree, ErrorKind::ContractViolation, "generator degree mismatch");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  for (const auto& g : gens) {
    const bool moves_base = std::any_of(levels_.begin(), levels_.end(),
                                        [&](const Level& l) { return g(l.base) != l.base; });
    if (!moves_base) {
      int moved = 0;
      while (g(moved) == moved) ++moved;
      levels_.push_back({moved, {}, {}});
    }
  }
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t l = 0; l < j && fixes_prefix; ++l) fixes_prefix = g(levels_[l].base) == levels_[l].base;
      if (fixes_prefix) levels_[j].generators.push_back(g);
    }
  }
  for (auto& level : levels_) rebuild_orbit(level);

  // Verify every Schreier generator sifts; a residue becomes a new strong
  // generator and the deeper levels are re-verified first.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto& level = levels_[i];
    for (int beta = 0; !restarted && beta < degree_; ++beta) {
      if (!level.reps[beta]) continue;
      for (std::size_t s = 0; !restarted && s < level.generators.size(); ++s) {
        const Permutation& gen = level.generators[s];
        const int image = gen(beta);
        Permutation h = level.reps[image]->inverse() * gen * *level.reps[beta];
        if (h.is_identity()) continue;
        auto [residue, stuck] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
        if (stuck == levels_.size() && residue.is_identity()) continue;
        add_strong_generator(residue, static_cast<std::size_t>(i) + 1);
        i = static_cast<std::ptrdiff_t>(stuck < levels_.size() ? stuck : levels_.size() - 1);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.reps.assign(degree_, std::nullopt);
  level.reps[level.base] = Permutation::identity(degree_);
  std::vector<int> queue{level.base};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int gamma = queue[head];
    for (const auto& s : level.generators) {
      const int delta = s(gamma);
      if (!level.reps[delta]) {
        level.reps[delta] = s * *level.reps[gamma];
        queue.push_back(delta);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const int beta = g(levels_[l].base);
    if (!levels_[l].reps[beta]) return {std::move(g), l};
    g = levels_[l].reps[beta]->inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::add_strong_generator(const Permutation& h, std::size_t from_level) {
  // h fixes the base points of levels < from_level. Add it to every level
  // whose earlier base points it fixes, appending a level if it fixes all.
  std::size_t l = from_level;
  for (; l < levels_.size(); ++l) {
    levels_[l].generators.push_back(h);
    rebuild_orbit(levels_[l]);
    if (h(levels_[l].base) != levels_[l].base) return;
  }
  int moved = 0;
  while (h(moved) == moved) ++moved;
  levels_.push_back({moved, {h}, {}});
  rebuild_orbit(levels_.back());
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t order = 1;
  for (const auto& level : levels_) {
    const auto size = static_cast<std::uint64_t>(
        std::count_if(level.reps.begin(), level.reps.end(), [](const auto& r) { return r.has_value(); }));
    require(order <= UINT64_MAX / size, ErrorKind::ContractViolation, "group order exceeds 64 bits");
    order *= size;
  }
  return order;
}

std::vector<int> StabilizerChain::level_orbit(std::size_t level) const {
  std::vector<int> orbit;
  const auto& reps = levels_.at(level).reps;
  for (int x = 0; x < degree_; ++x)
    if (reps[x]) orbit.push_back(x);
  return orbit;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0).first.is_identity();
}

// ---------------------------------------------------------------------------

GeneratedGroup::GeneratedGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  order_ = StabilizerChain(degree_, generators_).order();
}

bool GeneratedGroup::contains(const Permutation& g) const {
  return StabilizerChain(degree_, generators_).contains(g);
}

std::vector<Permutation> GeneratedGroup::elements(std::uint64_t max_order) const {
  require(order_ <= max_order, ErrorKind::Precondition, "group too large to enumerate");
  std::set<Permutation> seen{Permutation::identity(degree_)};
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      Permutation next = g * out[head];
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::string GeneratedGroup::to_text() const {
  std::string out;
  for (const auto& g : generators_) {
    for (int x = 0; x < degree_; ++x) {
      if (x) out += ' ';
      out += std::to_string(g(x));
    }
    out += '\n';
  }
  return out;
}

GeneratedGroup GeneratedGroup::parse(std::string_view text, int degree) {
  std::vector<Permutation> gens;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::vector<int> images;
    int x = 0;
    while (fields >> x) images.push_back(x);
    if (!fields.eof() || static_cast<int>(images.size()) != degree) {
      fail(ErrorKind::Parse, "generator line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(degree) + " ids");
    }
    try {
      gens.emplace_back(std::move(images));
    } catch (const Error&) {
      fail(ErrorKind::Parse, "generator line " + std::to_string(line_no) + " is not a permutation");
    }
  }
  return GeneratedGroup(degree, std::move(gens));
}

std::vector<std::vector<int>> point_orbits(int degree, std::span<const Permutation> generators) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators) {
    for (int x = 0; x < degree; ++x) {
      const int a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> by_root(degree);
  for (int x = 0; x < degree; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<int>> orbits;
  for (auto& o : by_root)
    if (!o.empty()) orbits.push_back(std::move(o));
  return orbits;
}

}  // namespace etg4
