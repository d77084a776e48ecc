#ifndef TENFOLD_MODP_HPP
#define TENFOLD_MODP_HPP

#include <cstdint>
#include <utility>

namespace tenfold::modp
{

// Arithmetic in Z/pZ for word-sized primes (p < 2^32).

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{ return a >= b ? a - b : a + p - b; }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{ return (a * b) % p; }

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p)
{ return a == 0 ? 0 : p - a; }

inline std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1)
      result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1;
  }
  return result;
}

// p must be prime and a nonzero mod p.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p)
{ return pow(a, p - 2, p); }

inline std::uint64_t reduce(std::int64_t a, std::uint64_t p)
{
  auto const sp = static_cast<std::int64_t>(p);
  std::int64_t r = a % sp;
  return static_cast<std::uint64_t>(r < 0 ? r + sp : r);
}

// Symmetric lift into (-p/2, p/2].
inline std::int64_t lift(std::uint64_t a, std::uint64_t p)
{
  return a > p / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p)
                   : static_cast<std::int64_t>(a);
}

bool is_prime(std::uint64_t n);

// Multiplicative order of a modulo p (a nonzero).
std::uint64_t order(std::uint64_t a, std::uint64_t p);

} // namespace tenfold::modp

#endif // TENFOLD_MODP_HPP
