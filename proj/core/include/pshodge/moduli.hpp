#pragma once

#include <stdexcept>
#include <string>

namespace pshodge {

/// 2g-2+n > 0: the moduli space of stable curves is nonempty.
constexpr bool is_stable(int g, int n) noexcept { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

/// Stable indices other than (1,1) and (2,0).
constexpr bool is_pseudostable(int g, int n) noexcept {
  return is_stable(g, n) && !(g == 1 && n == 1) && !(g == 2 && n == 0);
}

constexpr int moduli_dimension(int g, int n) noexcept { return 3 * g - 3 + n; }

enum class Space { stable, pseudostable };

/// Raised when a user asks for an integral over an empty moduli space.
class EmptyModuliError : public std::domain_error {
 public:
  EmptyModuliError(int g, int n, Space space);

  int genus() const noexcept { return g_; }
  int markings() const noexcept { return n_; }
  Space space() const noexcept { return space_; }

 private:
  int g_;
  int n_;
  Space space_;
};

/// Throws EmptyModuliError unless (g,n) indexes a nonempty space of the given kind.
void require_nonempty(int g, int n, Space space);

std::string to_string(Space space);

}  // namespace pshodge
