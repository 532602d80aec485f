#pragma once

// w-matchings of ideal tuples.

#include <lojex/multiplicity.hpp>

#include <optional>
#include <vector>

namespace lojex {

// tau and i0 are 0-based; printing adds 1.
struct MatchingWitness {
  std::vector<std::size_t> tau;
  std::size_t i0 = 0;

  friend bool operator==(const MatchingWitness&, const MatchingWitness&) = default;
};

inline std::vector<std::int64_t> weighted_degrees(const IdealTuple& T, const Weights& w) {
  if (w.size() != T.dimension()) throw InputError("weights and tuple dimension differ");
  std::vector<std::int64_t> r;
  for (const auto& I : T) {
    auto d = weighted_degree(I, w);
    if (!d) throw InputError("weighted degree of the zero ideal is infinite");
    r.push_back(*d);
  }
  return r;
}

namespace detail {

// Kuhn's augmenting paths; rows and columns tried in increasing order.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(std::vector<std::vector<std::size_t>> adj, std::size_t columns)
      : adj_(std::move(adj)), owner_(columns, npos) {}

  bool perfect() {
    for (std::size_t row = 0; row < adj_.size(); ++row) {
      seen_.assign(owner_.size(), false);
      if (!augment(row)) return false;
    }
    return true;
  }

  // Column matched to each row.
  std::vector<std::size_t> assignment() const {
    std::vector<std::size_t> out(adj_.size(), npos);
    for (std::size_t c = 0; c < owner_.size(); ++c)
      if (owner_[c] != npos) out[owner_[c]] = c;
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  bool augment(std::size_t row) {
    for (auto c : adj_[row]) {
      if (seen_[c]) continue;
      seen_[c] = true;
      if (owner_[c] == npos || augment(owner_[c])) {
        owner_[c] = row;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> owner_;
  std::vector<bool> seen_;
};

}  // namespace detail

// (a) w_{i0} minimal, (b) r_{tau(i0)} maximal, (c) x_i^{r_tau(i) / w_i} in
// I_tau(i) for i != i0. The first witness in index order is returned.
inline std::optional<MatchingWitness> check_w_matching(const IdealTuple& T, const Weights& w) {
  const std::size_t n = T.dimension();
  const auto r = weighted_degrees(T, w);
  const auto rmax = *std::max_element(r.begin(), r.end());

  auto edge = [&](std::size_t i, std::size_t j) {
    if (r[j] % w[i] != 0) return false;
    return T[j].contains(ExponentVector::unit(n, i, static_cast<int>(r[j] / w[i])));
  };

  for (auto i0 : w.min_indices()) {
    for (std::size_t t0 = 0; t0 < n; ++t0) {
      if (r[t0] != rmax) continue;
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < n; ++i)
        if (i != i0) rows.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (j != t0) cols.push_back(j);
      std::vector<std::vector<std::size_t>> adj(rows.size());
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
          if (edge(rows[a], cols[b])) adj[a].push_back(b);
      detail::BipartiteMatcher m(std::move(adj), cols.size());
      if (!m.perfect()) continue;
      MatchingWitness wit;
      wit.i0 = i0;
      wit.tau.assign(n, 0);
      wit.tau[i0] = t0;
      auto asg = m.assignment();
      for (std::size_t a = 0; a < rows.size(); ++a) wit.tau[rows[a]] = cols[asg[a]];
      return wit;
    }
  }
  return std::nullopt;
}

}  // namespace lojex
