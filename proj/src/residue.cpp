#include "qaut/residue.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qaut {

bool UnitSubgroup::contains(std::int64_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t euler_phi(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("euler_phi: k must be >= 1");
    std::int64_t result = k;
    std::int64_t m = k;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    base %= mod;
    if (base < 0) base += mod;
    std::int64_t acc = 1 % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

UnitSubgroup unit_group(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("unit_group: modulus must be >= 2");
    UnitSubgroup g;
    g.modulus = n;
    for (std::int64_t x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) g.elements.push_back(x);
    return g;
}

UnitSubgroup subgroup_of_order(std::int64_t p, std::int64_t k) {
    if (!is_prime(p)) throw std::invalid_argument("subgroup_of_order: modulus is not prime");
    if (k < 1 || (p - 1) % k != 0)
        throw std::invalid_argument("subgroup_of_order: order does not divide p-1");
    const std::int64_t e = (p - 1) / k;
    std::set<std::int64_t> img;
    for (std::int64_t x = 1; x < p; ++x) img.insert(mod_pow(x, e, p));
    UnitSubgroup g;
    g.modulus = p;
    g.elements.assign(img.begin(), img.end());
    if (g.order() != k) throw std::logic_error("subgroup_of_order: image has wrong order");
    return g;
}

UnitSubgroup symbol_stabilizer(const std::vector<std::int64_t>& symbols, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("symbol_stabilizer: modulus must be >= 2");
    if (symbols.empty()) throw std::invalid_argument("symbol_stabilizer: empty symbol set");
    std::set<std::int64_t> s;
    for (std::int64_t x : symbols) {
        std::int64_t v = x % n;
        if (v < 0) v += n;
        if (v == 0) throw std::invalid_argument("symbol_stabilizer: 0 is not a valid symbol");
        s.insert(v);
    }
    for (std::int64_t v : s)
        if (!s.count((n - v) % n))
            throw std::invalid_argument("symbol_stabilizer: symbol set is not symmetric (S != -S)");
    UnitSubgroup g;
    g.modulus = n;
    for (std::int64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        bool stable = true;
        for (std::int64_t v : s)
            if (!s.count(a * v % n)) { stable = false; break; }
        if (stable) g.elements.push_back(a);
    }
    return g;
}

std::vector<std::int64_t> coset_representatives(const UnitSubgroup& e) {
    const std::int64_t p = e.modulus;
    if (!is_prime(p)) throw std::invalid_argument("coset_representatives: modulus is not prime");
    std::vector<bool> seen(p, false);
    std::vector<std::int64_t> reps;
    for (std::int64_t x = 1; x < p; ++x) {
        if (seen[x]) continue;
        std::int64_t least = p;
        for (std::int64_t g : e.elements) {
            std::int64_t y = x * g % p;
            seen[y] = true;
            least = std::min(least, y);
        }
        reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

bool is_two_maximal(const UnitSubgroup& e, std::int64_t p) {
    if (!is_prime(p) || p < 5) throw std::invalid_argument("is_two_maximal: need a prime p >= 5");
    if (!e.contains(p - 1))
        throw std::invalid_argument("is_two_maximal: subgroup is not even (-1 missing)");
    std::unordered_set<std::int64_t> doubled;  // all 2(c-d) mod p
    for (std::int64_t c : e.elements)
        for (std::int64_t d : e.elements)
            doubled.insert(2 * ((c - d + p) % p) % p);
    for (std::int64_t a : e.elements)
        for (std::int64_t b : e.elements) {
            if (a == b || (a + b) % p == 0) continue;
            if (doubled.count((a - b + p) % p)) return false;
        }
    return true;
}

CirculantTypeData circulant_type_data(std::int64_t p, const std::vector<std::int64_t>& symbols) {
    if (!is_prime(p))
        throw std::invalid_argument("circulant_type_data: modulus " + std::to_string(p) +
                                    " is not prime");
    CirculantTypeData d;
    d.p = p;
    std::set<std::int64_t> s;
    for (std::int64_t x : symbols) {
        std::int64_t v = x % p;
        if (v < 0) v += p;
        s.insert(v);
    }
    d.symbol_set.assign(s.begin(), s.end());
    d.stabilizer = symbol_stabilizer(d.symbol_set, p);
    d.type_k = d.stabilizer.order();
    d.r = (p - 1) / d.type_k;
    d.coset_reps = coset_representatives(d.stabilizer);
    return d;
}

}  // namespace qaut
