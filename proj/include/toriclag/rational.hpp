#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace toriclag {

// Exact scalars. mpq_class keeps values reduced with positive denominator,
// which is exactly the representation every check here depends on.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

/// Parses "p", "-p" or "p/q" (q > 0). Returns nullopt for anything else,
/// including "1/0" and non-canonical junk like "1/-2" or "1.5".
inline std::optional<Rat> parse_rational(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) return std::nullopt;
    std::string num = s.substr(0, i);
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        std::size_t den_begin = ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == den_begin || i != s.size()) return std::nullopt;
        den = s.substr(den_begin);
    }
    Int p(num), q(den);
    if (q == 0) return std::nullopt;
    Rat r(p, q);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" or "p/q" with q > 1.
inline std::string format_rational(const Rat& r) { return r.get_str(); }

/// lcm of the denominators of a vector (1 for an empty vector).
inline Int denominator_lcm(const RatVec& v) {
    Int l = 1;
    for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

}  // namespace toriclag
