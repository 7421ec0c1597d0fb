#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <vector>

#include "nk/errors.hpp"
#include "nk/finite_group.hpp"

namespace nk::groups {

template <typename G>
concept GroupLike = requires(const G& g, int a, int b) {
  { g.order() } -> std::convertible_to<int>;
  { g.identity() } -> std::convertible_to<int>;
  { g.mul(a, b) } -> std::convertible_to<int>;
  { g.inverse(a) } -> std::convertible_to<int>;
};

/// Automorphism of a fixed group, stored as the image permutation.
struct GroupAutomorphism {
  std::vector<int> images;

  int operator()(int x) const { return images[x]; }
  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
  friend auto operator<=>(const GroupAutomorphism& a, const GroupAutomorphism& b) {
    return a.images <=> b.images;
  }
};

namespace detail {

template <GroupLike G>
int element_order_of(const G& g, int a) {
  int n = 1, x = a;
  while (x != g.identity()) {
    x = g.mul(x, a);
    ++n;
  }
  return n;
}

/// Per-element profile preserved by every automorphism; used to prune
/// generator images.
template <GroupLike G>
std::vector<long long> element_profiles(const G& g) {
  const int n = g.order();
  std::vector<int> ord(n), cent(n, 0), sqrts(n, 0);
  for (int a = 0; a < n; ++a) ord[a] = element_order_of(g, a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.mul(b, a)) ++cent[a];
    }
  for (int x = 0; x < n; ++x) ++sqrts[g.mul(x, x)];
  std::vector<long long> profile(n);
  for (int a = 0; a < n; ++a)
    profile[a] = (static_cast<long long>(ord[a]) << 40) |
                 (static_cast<long long>(cent[a]) << 20) | sqrts[a];
  return profile;
}

/// Deterministic generating set: repeatedly adjoin the outside element of
/// maximal order (lowest index on ties) and re-close.
template <GroupLike G>
std::vector<int> generating_set(const G& g) {
  const int n = g.order();
  std::vector<int> orders(n);
  for (int a = 0; a < n; ++a) orders[a] = element_order_of(g, a);

  std::vector<int> gens;
  std::vector<char> in(n, 0);
  in[g.identity()] = 1;
  int covered = 1;

  while (covered < n) {
    int best = -1;
    for (int a = 0; a < n; ++a)
      if (!in[a] && (best < 0 || orders[a] > orders[best])) best = a;
    gens.push_back(best);

    std::vector<char> mem(n, 0);
    std::vector<int> elems;
    auto push = [&](int x) {
      if (!mem[x]) {
        mem[x] = 1;
        elems.push_back(x);
      }
    };
    push(g.identity());
    for (int x : gens) push(x);
    for (std::size_t h = 0; h < elems.size(); ++h)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        push(g.mul(elems[h], elems[j]));
        push(g.mul(elems[j], elems[h]));
      }
    in = std::move(mem);
    covered = static_cast<int>(elems.size());
  }
  return gens;
}

}  // namespace detail

/// Checks bijectivity and the homomorphism law on all pairs.
template <GroupLike G>
bool is_automorphism(const G& g, const std::vector<int>& images) {
  const int n = g.order();
  if (static_cast<int>(images.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  if (images[g.identity()] != g.identity()) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[g.mul(a, b)] != g.mul(images[a], images[b])) return false;
  return true;
}

/// Complete enumeration of Aut(g) by backtracking over generator images.
/// Results are sorted lexicographically by image vector (canonical order).
/// Throws CapError when more than `count_cap` automorphisms are found.
template <GroupLike G>
std::vector<GroupAutomorphism> enumerate_automorphisms(
    const G& g, std::size_t count_cap = 1000000) {
  const int n = g.order();
  const auto profile = detail::element_profiles(g);
  const auto gens = detail::generating_set(g);
  const int k = static_cast<int>(gens.size());

  // candidate images per generator: same profile
  std::vector<std::vector<int>> candidates(k);
  for (int t = 0; t < k; ++t)
    for (int a = 0; a < n; ++a)
      if (profile[a] == profile[gens[t]]) candidates[t].push_back(a);

  std::vector<GroupAutomorphism> out;
  if (n == 1) {
    out.push_back(GroupAutomorphism{{0}});
    return out;
  }

  std::vector<int> chosen(k, -1);
  std::vector<int> phi(n), queue(n);
  std::vector<char> known(n), used(n);

  // Builds phi on <gens[0..depth]> by BFS; fails on any inconsistency or
  // collision.  Returns the number of elements reached.
  auto closure_check = [&](int depth, int& reached) -> bool {
    std::fill(known.begin(), known.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    int head = 0, tail = 0;
    phi[g.identity()] = g.identity();
    known[g.identity()] = 1;
    used[g.identity()] = 1;
    queue[tail++] = g.identity();
    while (head < tail) {
      int x = queue[head++];
      for (int t = 0; t <= depth; ++t) {
        int y = g.mul(x, gens[t]);
        int img = g.mul(phi[x], chosen[t]);
        if (!known[y]) {
          if (used[img]) return false;
          known[y] = 1;
          used[img] = 1;
          phi[y] = img;
          queue[tail++] = y;
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    reached = tail;
    return true;
  };

  int depth = 0;
  std::vector<std::size_t> pos(k, 0);
  while (depth >= 0) {
    if (pos[depth] == candidates[depth].size()) {
      pos[depth] = 0;
      --depth;
      if (depth >= 0) ++pos[depth];
      continue;
    }
    chosen[depth] = candidates[depth][pos[depth]];
    int reached = 0;
    if (!closure_check(depth, reached)) {
      ++pos[depth];
      continue;
    }
    if (depth == k - 1) {
      if (reached == n) {
        out.push_back(GroupAutomorphism{phi});
        if (out.size() > count_cap)
          throw CapError("enumerate_automorphisms: count cap exceeded");
      }
      ++pos[depth];
    } else {
      ++depth;
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

/// First isomorphism a -> b in candidate order, or nullopt.
template <GroupLike GA, GroupLike GB>
std::optional<std::vector<int>> find_isomorphism(const GA& a, const GB& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  if (n == 1) return std::vector<int>{0};

  const auto prof_a = detail::element_profiles(a);
  const auto prof_b = detail::element_profiles(b);
  {
    auto sa = prof_a, sb = prof_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  const auto gens = detail::generating_set(a);
  const int k = static_cast<int>(gens.size());
  std::vector<std::vector<int>> candidates(k);
  for (int t = 0; t < k; ++t)
    for (int x = 0; x < n; ++x)
      if (prof_b[x] == prof_a[gens[t]]) candidates[t].push_back(x);

  std::vector<int> chosen(k, -1);
  std::vector<int> phi(n), queue(n);
  std::vector<char> known(n), used(n);

  auto closure_check = [&](int depth, int& reached) -> bool {
    std::fill(known.begin(), known.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    int head = 0, tail = 0;
    phi[a.identity()] = b.identity();
    known[a.identity()] = 1;
    used[b.identity()] = 1;
    queue[tail++] = a.identity();
    while (head < tail) {
      int x = queue[head++];
      for (int t = 0; t <= depth; ++t) {
        int y = a.mul(x, gens[t]);
        int img = b.mul(phi[x], chosen[t]);
        if (!known[y]) {
          if (used[img]) return false;
          known[y] = 1;
          used[img] = 1;
          phi[y] = img;
          queue[tail++] = y;
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    reached = tail;
    return true;
  };

  int depth = 0;
  std::vector<std::size_t> pos(k, 0);
  while (depth >= 0) {
    if (pos[depth] == candidates[depth].size()) {
      pos[depth] = 0;
      --depth;
      if (depth >= 0) ++pos[depth];
      continue;
    }
    chosen[depth] = candidates[depth][pos[depth]];
    int reached = 0;
    if (!closure_check(depth, reached)) {
      ++pos[depth];
      continue;
    }
    if (depth == k - 1) {
      if (reached == n) return phi;
      ++pos[depth];
    } else {
      ++depth;
    }
  }
  return std::nullopt;
}

/// Aut(G) for a table group, guarded by the |G| cap (default 120).
std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g,
                                             int order_cap = 120,
                                             std::size_t count_cap = 1000000);

}  // namespace nk::groups
