#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "vdcq/errors.hpp"

namespace vdcq {

// A squarefree integer together with its prime factorisation and its
// smoothness exponent delta = log(max prime)/log(q). All moduli in this
// project are of this shape; products are routed through 128-bit
// intermediates so q up to 2^40 is safe.
struct SquarefreeModulus {
    long long q = 1;
    std::vector<long long> primes;  // strictly increasing
    double delta = 0.0;             // 0 for q = 1

    bool is_smooth(double delta_max) const { return delta <= delta_max; }
};

// Per-prime discrete-log table against the least primitive root g:
// ind[g^j mod p] = j for j in [0, p-2], ind[0] = -1.
struct PrimeContext {
    long long p = 0;
    long long g = 0;
    std::vector<int32_t> ind;

    static constexpr int32_t kNoIndex = -1;
};

long long mod_reduce(long long n, long long m);            // into [0, m)
long long mul_mod(long long a, long long b, long long m);  // 128-bit intermediate
long long pow_mod(long long a, long long e, long long m);
bool is_prime(long long n);  // deterministic Miller-Rabin, 64-bit range

SquarefreeModulus factor_squarefree(long long q);  // throws NotSquarefree
long long primitive_root(long long p);             // smallest generator; 1 for p = 2
long long inverse_mod(long long a, long long m);   // throws NotCoprime
std::complex<double> unit_phase(long long q, long long t);  // e^{2 pi i t / q}

// Cached, immutable after construction; shared across characters of the
// same modulus. Table construction is capped at p <= 2^24.
std::shared_ptr<const PrimeContext> prime_context(long long p);

// All squarefree q in [lo, hi] whose prime factors are all <= q^delta_max,
// in increasing order. If more than max_count qualify, an evenly spaced
// subsequence is returned. odd_only skips q divisible by 2 (even moduli
// carry no primitive characters).
std::vector<long long> generate_smooth_squarefree(long long lo, long long hi, double delta_max,
                                                  std::size_t max_count, bool odd_only);

}  // namespace vdcq
