#ifndef COSET_ATLAS_BIGINT_HPP
#define COSET_ATLAS_BIGINT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coset_atlas {

// All vector/coset counts are exact arbitrary-precision integers. GMP does
// the heavy lifting; these helpers cover the handful of shapes we need.
using Int = mpz_class;

inline Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int ipow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline std::string dec(const Int& v) { return v.get_str(10); }

inline Int parse_int(const std::string& s) { return Int(s, 10); }

// Exact division; throws if the divisor does not divide evenly. The closed
// forms divide by 2, 3 and 6 and those divisions must never truncate.
Int exact_div(const Int& num, long den);

Int sum(const std::vector<Int>& v);

} // namespace coset_atlas

#endif
