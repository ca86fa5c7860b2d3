#include <algorithm>
#include <cstdint>
#include <map>

#include "etg4/classifier.hpp"
#include "etg4/error.hpp"
#include "etg4/symmetry.hpp"

namespace etg4 {
namespace {

using Clock = std::chrono::steady_clock;

// Breadth-first generation: vertex i, in order, takes its missing neighbours
// from the discovered-but-unprocessed vertices after it and from the next
// unused labels. Every connected 4-regular graph has such a labelling.
class Generator {
 public:
  Generator(int n, std::optional<Clock::time_point> deadline, CensusReport& report,
            std::map<std::pair<int, std::string>, CensusMember>& found)
      : n_(n), deadline_(deadline), report_(report), found_(found), adj_(n, 0), deg_(n, 0) {}

  void run() {
    next_fresh_ = 1;
    process(0);
  }

 private:
  void add(int a, int b) {
    adj_[a] |= 1u << b;
    adj_[b] |= 1u << a;
    ++deg_[a];
    ++deg_[b];
  }
  void remove(int a, int b) {
    adj_[a] &= ~(1u << b);
    adj_[b] &= ~(1u << a);
    --deg_[a];
    --deg_[b];
  }

  bool out_of_time() {
    if (!deadline_) return false;
    if (++ticks_ % 1024 == 0 && Clock::now() > *deadline_) report_.partial = true;
    return report_.partial;
  }

  void process(int i) {
    if (out_of_time()) return;
    if (i == n_) {
      leaf();
      return;
    }
    if (i >= next_fresh_) return;  // nothing left to reach: disconnected
    const int need = 4 - deg_[i];
    std::vector<int> candidates;
    for (int j = i + 1; j < next_fresh_; ++j)
      if (deg_[j] < 4 && !(adj_[i] >> j & 1u) && (adj_[i] & adj_[j]) == 0) candidates.push_back(j);
    std::vector<int> chosen;
    choose(i, need, candidates, 0, chosen);
  }

  void choose(int i, int need, const std::vector<int>& candidates, std::size_t from, std::vector<int>& chosen) {
    const int fresh = need - static_cast<int>(chosen.size());
    if (next_fresh_ + fresh <= n_) {
      const int first_fresh = next_fresh_;
      for (int f = 0; f < fresh; ++f) add(i, first_fresh + f);
      next_fresh_ += fresh;
      process(i + 1);
      next_fresh_ -= fresh;
      for (int f = 0; f < fresh; ++f) remove(i, first_fresh + f);
    }
    if (static_cast<int>(chosen.size()) == need) return;
    for (std::size_t c = from; c < candidates.size(); ++c) {
      const int j = candidates[c];
      if (adj_[i] & adj_[j]) continue;  // would close a triangle
      add(i, j);
      chosen.push_back(j);
      choose(i, need, candidates, c + 1, chosen);
      chosen.pop_back();
      remove(i, j);
    }
  }

  void leaf() {
    ++report_.generated[n_];
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adj_[u] >> v & 1u) pairs.emplace_back(u, v);
    const Graph g = Graph::from_edge_list(n_, pairs);
    // Edge-transitive graphs have uniform 4-cycle counts.
    if (!four_cycle_census(g).uniform_k) return;
    CanonicalForm cf = canonical_form(g);
    const auto key = std::make_pair(n_, cf.certificate);
    if (found_.count(key) || rejected_.count(cf.certificate)) return;
    if (!check_F_membership(cf.graph).member()) {
      rejected_.insert(cf.certificate);
      return;
    }
    CensusMember member;
    member.graph = std::move(cf.graph);
    member.certificate = cf.certificate;
    try {
      member.classification = classify(member.graph);
    } catch (const Error& e) {
      member.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    found_.emplace(key, std::move(member));
  }

  int n_;
  std::optional<Clock::time_point> deadline_;
  CensusReport& report_;
  std::map<std::pair<int, std::string>, CensusMember>& found_;
  std::set<std::string> rejected_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> deg_;
  int next_fresh_ = 1;
  std::uint64_t ticks_ = 0;
};

}  // namespace

CensusReport census(int max_n, std::optional<std::chrono::milliseconds> time_limit) {
  require(max_n >= 1 && max_n <= kCensusMaxN, ErrorKind::Parameter,
          "census max_n must be in 1.." + std::to_string(kCensusMaxN) + ", got " + std::to_string(max_n));
  CensusReport report;
  report.max_n = max_n;
  report.generated.assign(max_n + 1, 0);
  std::optional<Clock::time_point> deadline;
  if (time_limit) deadline = Clock::now() + *time_limit;
  std::map<std::pair<int, std::string>, CensusMember> found;
  for (int n = 5; n <= max_n && !report.partial; ++n) Generator(n, deadline, report, found).run();
  for (auto& [key, member] : found) report.members.push_back(std::move(member));
  return report;
}

}  // namespace etg4
