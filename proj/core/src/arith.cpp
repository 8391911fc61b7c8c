#include "nsfn/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nsfn {

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& [p, e] : factors) {
    for (std::uint32_t i = 0; i < e; ++i) {
      n *= p;
    }
  }
  return n;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("gcd: n must be positive");
  }
  return std::gcd(a, n);
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("factorize: n must be positive");
  }
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) {
      continue;
    }
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (n > 1) {
    f.factors.push_back({n, 1});
  }
  return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i + 1 < e; ++i) {
      pe *= p;
    }
    phi *= pe * (p - 1);
  }
  return phi;
}

int mobius(std::uint64_t n) {
  const Factorization f = factorize(n);
  for (const auto& [p, e] : f.factors) {
    if (e > 1) {
      return 0;
    }
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint32_t distinct_prime_count(std::uint64_t n) {
  return static_cast<std::uint32_t>(factorize(n).factors.size());
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base_count = divs.size();
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base_count; ++j) {
        divs.push_back(divs[j] * pe);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rational sigma(int s, std::uint64_t n) {
  Rational total(0);
  for (std::uint64_t d : divisors(n)) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(s < 0 ? -s : s));
    total += s < 0 ? make_rational(BigInt(1), power) : Rational(power);
  }
  return total;
}

std::size_t SieveTables::checked(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw std::out_of_range("SieveTables: index outside [1, limit]");
  }
  return static_cast<std::size_t>(n);
}

SieveTables build_sieve(std::uint64_t limit) {
  if (limit == 0) {
    throw std::domain_error("build_sieve: limit must be positive");
  }
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("build_sieve: limit exceeds 32-bit sieve range");
  }

  SieveTables t;
  t.limit_ = limit;
  t.phi_.assign(limit + 1, 0);
  t.mu_.assign(limit + 1, 0);
  t.spf_.assign(limit + 1, 0);
  t.phi_[1] = 1;
  t.mu_[1] = 1;

  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::uint32_t>(i);
      t.phi_[i] = i - 1;
      t.mu_[i] = -1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > t.spf_[i] || i * p > limit) {
        break;
      }
      const std::uint64_t ip = i * p;
      t.spf_[ip] = p;
      if (p == t.spf_[i]) {
        t.phi_[ip] = t.phi_[i] * p;
        t.mu_[ip] = 0;
        break;
      }
      t.phi_[ip] = t.phi_[i] * (p - 1);
      t.mu_[ip] = static_cast<std::int8_t>(-t.mu_[i]);
    }
  }
  return t;
}

}  // namespace nsfn
