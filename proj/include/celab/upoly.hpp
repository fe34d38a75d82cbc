#ifndef CELAB_UPOLY_HPP
#define CELAB_UPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace celab {

/// Dense univariate polynomial over F_p, low degree first, no trailing zeros.
using UPoly = std::vector<std::int64_t>;

namespace upoly {

std::int64_t mod(std::int64_t a, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

void trim(UPoly &f);
int degree(const UPoly &f);  // -1 for zero
UPoly add(const UPoly &f, const UPoly &g, std::int64_t p);
UPoly sub(const UPoly &f, const UPoly &g, std::int64_t p);
UPoly scale(const UPoly &f, std::int64_t c, std::int64_t p);
UPoly mul(const UPoly &f, const UPoly &g, std::int64_t p);
void divmod(const UPoly &f, const UPoly &g, std::int64_t p, UPoly &q, UPoly &r);
UPoly rem(const UPoly &f, const UPoly &g, std::int64_t p);
UPoly gcd(UPoly f, UPoly g, std::int64_t p);
UPoly monic(const UPoly &f, std::int64_t p);
UPoly derivative(const UPoly &f, std::int64_t p);
bool is_irreducible(const UPoly &f, std::int64_t p);
/// Lexicographically first monic irreducible polynomial of the given degree.
UPoly first_irreducible(int degree, std::int64_t p);
std::string format(const UPoly &f, const std::string &var);

}  // namespace upoly
}  // namespace celab

#endif
