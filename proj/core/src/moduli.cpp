#include "pshodge/moduli.hpp"

namespace pshodge {

namespace {

std::string empty_message(int g, int n, Space space) {
  const std::string where = "(" + std::to_string(g) + "," + std::to_string(n) + ")";
  if (space == Space::pseudostable) {
    return where +
           " is not a pseudostable index: the pseudostable moduli space is empty for "
           "(g,n) in {(0,0), (0,1), (0,2), (1,0), (1,1), (2,0)}";
  }
  return where +
         " is not a stable index: the stable moduli space is empty for "
         "(g,n) in {(0,0), (0,1), (0,2), (1,0)}";
}

}  // namespace

EmptyModuliError::EmptyModuliError(int g, int n, Space space)
    : std::domain_error(empty_message(g, n, space)), g_(g), n_(n), space_(space) {}

void require_nonempty(int g, int n, Space space) {
  const bool ok = space == Space::pseudostable ? is_pseudostable(g, n) : is_stable(g, n);
  if (!ok) throw EmptyModuliError(g, n, space);
}

std::string to_string(Space space) { return space == Space::pseudostable ? "ps" : "stable"; }

}  // namespace pshodge
