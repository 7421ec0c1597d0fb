#include "nk/automorphisms.hpp"

namespace nk::groups {

std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, int order_cap,
                                             std::size_t count_cap) {
  if (g.order() > order_cap)
    throw CapError("automorphisms: group order " + std::to_string(g.order()) +
                   " exceeds cap " + std::to_string(order_cap));
  return enumerate_automorphisms(g, count_cap);
}

}  // namespace nk::groups
