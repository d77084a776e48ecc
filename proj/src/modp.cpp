#include "tenfold/modp.hpp"

namespace tenfold::modp
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::uint64_t order(std::uint64_t a, std::uint64_t p)
{
  a %= p;
  std::uint64_t k = 1;
  for (std::uint64_t x = a; x != 1; x = mul(x, a, p))
    ++k;
  return k;
}

} // namespace tenfold::modp
