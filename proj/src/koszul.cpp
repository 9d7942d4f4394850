#include "huainf/koszul.hpp"

#include <stdexcept>
#include <vector>

namespace huainf {

int koszul_sign(std::span<const int> degrees, std::span<const std::size_t> perm) {
  const std::size_t n = degrees.size();
  if (perm.size() != n) throw std::invalid_argument("koszul_sign: permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t k : perm) {
    if (k >= n || seen[k]) throw std::invalid_argument("koszul_sign: not a permutation");
    seen[k] = true;
  }
  int odd = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (degrees[perm[a]] % 2 == 0) continue;
    for (std::size_t b = a + 1; b < n; ++b)
      if (perm[b] < perm[a] && degrees[perm[b]] % 2 != 0) odd ^= 1;
  }
  return odd ? -1 : 1;
}

}  // namespace huainf
