#include "vdcq/residue.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

namespace vdcq {

long long mod_reduce(long long n, long long m) {
    long long r = n % m;
    return r < 0 ? r + m : r;
}

long long mul_mod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long pow_mod(long long a, long long e, long long m) {
    if (m == 1) return 0;
    long long base = mod_reduce(a, m);
    long long acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return acc;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n % p == 0) return n == p;
    }
    long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sufficient witness set for all n < 3.3e24.
    for (long long a : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        long long x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

SquarefreeModulus factor_squarefree(long long q) {
    if (q < 1) throw NotSquarefree("factor_squarefree: q must be positive");
    SquarefreeModulus m;
    m.q = q;
    long long rest = q;
    for (long long p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        rest /= p;
        if (rest % p == 0)
            throw NotSquarefree("factor_squarefree: " + std::to_string(p * p) + " divides " +
                                std::to_string(q));
        m.primes.push_back(p);
    }
    if (rest > 1) m.primes.push_back(rest);
    if (q > 1) m.delta = std::log(static_cast<double>(m.primes.back())) / std::log(static_cast<double>(q));
    return m;
}

namespace {

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

long long primitive_root(long long p) {
    if (p == 2) return 1;
    const long long order = p - 1;
    const auto factors = prime_factors(order);
    for (long long g = 2; g < p; ++g) {
        bool generates = true;
        for (long long f : factors) {
            if (pow_mod(g, order / f, p) == 1) { generates = false; break; }
        }
        if (generates) return g;
    }
    throw std::logic_error("primitive_root: no generator found (input not prime?)");
}

long long inverse_mod(long long a, long long m) {
    long long r0 = m, r1 = mod_reduce(a, m);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long quot = r0 / r1;
        r0 -= quot * r1;
        std::swap(r0, r1);
        t0 -= quot * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1 && m != 1)
        throw NotCoprime("inverse_mod: gcd(" + std::to_string(a) + ", " + std::to_string(m) +
                         ") = " + std::to_string(r0));
    return mod_reduce(t0, m);
}

std::complex<double> unit_phase(long long q, long long t) {
    const long long r = mod_reduce(t, q);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
}

std::shared_ptr<const PrimeContext> prime_context(long long p) {
    static std::map<long long, std::shared_ptr<const PrimeContext>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    if (!is_prime(p)) throw std::domain_error("prime_context: " + std::to_string(p) + " is not prime");
    if (p > (1LL << 24))
        throw std::domain_error("prime_context: table for p = " + std::to_string(p) + " too large");
    auto ctx = std::make_shared<PrimeContext>();
    ctx->p = p;
    ctx->g = primitive_root(p);
    ctx->ind.assign(static_cast<std::size_t>(p), PrimeContext::kNoIndex);
    long long power = 1;
    for (long long j = 0; j < p - 1; ++j) {
        ctx->ind[static_cast<std::size_t>(power)] = static_cast<int32_t>(j);
        power = mul_mod(power, ctx->g, p);
    }
    std::lock_guard<std::mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(p, std::move(ctx));
    return it->second;
}

namespace {

void collect_smooth(const std::vector<long long>& pool, std::size_t start, long long product,
                    long long maxp, long long lo, long long hi, double delta_max,
                    std::vector<long long>& out) {
    if (product >= lo && product > 1) {
        // q^delta_max-smooth means maxp <= q^delta_max.
        if (std::log(static_cast<double>(maxp)) <=
            delta_max * std::log(static_cast<double>(product)) + 1e-12)
            out.push_back(product);
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool[i] > hi / product) break;
        collect_smooth(pool, i + 1, product * pool[i], std::max(maxp, pool[i]), lo, hi, delta_max,
                       out);
    }
}

}  // namespace

std::vector<long long> generate_smooth_squarefree(long long lo, long long hi, double delta_max,
                                                  std::size_t max_count, bool odd_only) {
    std::vector<long long> pool;
    const long long pool_cap =
        static_cast<long long>(std::pow(static_cast<double>(hi), delta_max)) + 1;
    for (long long p = odd_only ? 3 : 2; p <= pool_cap && p <= 100000; ++p) {
        if (is_prime(p)) pool.push_back(p);
    }
    std::vector<long long> out;
    collect_smooth(pool, 0, 1, 1, lo, hi, delta_max, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > max_count && max_count > 0) {
        std::vector<long long> picked;
        picked.reserve(max_count);
        for (std::size_t i = 0; i < max_count; ++i) {
            std::size_t idx = i * (out.size() - 1) / (max_count - 1 ? max_count - 1 : 1);
            picked.push_back(out[idx]);
        }
        picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
        return picked;
    }
    return out;
}

}  // namespace vdcq
