#include "frobtsct/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace frobtsct {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> f;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        f.emplace_back(d, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

long euler_phi(long n) {
    long phi = n;
    for (long p : prime_divisors(n)) phi = phi / p * (p - 1);
    return phi;
}

std::vector<long> divisors(long n) {
    std::vector<long> ds{1};
    for (auto& [p, e] : factorize(n)) {
        size_t sz = ds.size();
        long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long pow_mod(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

long order_mod(long a, long n) {
    if (std::gcd(a, n) != 1) throw std::invalid_argument("order_mod: gcd(a,n) != 1");
    long phi = euler_phi(n), ord = phi;
    for (long q : prime_divisors(phi))
        while (ord % q == 0 && pow_mod(a, ord / q, n) == 1) ord /= q;
    return ord;
}

long smallest_primitive_root(long p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("smallest_primitive_root: p must be an odd prime");
    auto qs = prime_divisors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : qs)
            if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

long smallest_quadratic_nonresidue(long p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("smallest_quadratic_nonresidue: p must be an odd prime");
    for (long a = 2; a < p; ++a)
        if (pow_mod(a, (p - 1) / 2, p) == p - 1) return a;
    throw std::logic_error("smallest_quadratic_nonresidue: none found");
}

namespace {

// exact division of integer polynomials, monic divisor; coefficients index = degree
std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    long dn = (long)num.size() - 1, dd = (long)den.size() - 1;
    std::vector<Integer> q(dn - dd + 1);
    for (long k = dn - dd; k >= 0; --k) {
        Integer c = num[k + dd]; // den is monic
        q[k] = c;
        if (c == 0) continue;
        for (long i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (auto& c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return q;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // compute iteratively so recursion never re-locks
    for (long d : divisors(n)) {
        if (cache.count(d)) continue;
        std::vector<Integer> poly(d + 1); // x^d - 1
        poly[0] = -1;
        poly[d] = 1;
        for (long dd : divisors(d))
            if (dd < d) poly = poly_divide_exact(std::move(poly), cache.at(dd));
        cache.emplace(d, std::move(poly));
    }
    return cache.at(n);
}

} // namespace frobtsct
