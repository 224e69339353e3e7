#include "coset_atlas/bigint.hpp"

#include "coset_atlas/errors.hpp"

namespace coset_atlas {

Int exact_div(const Int& num, long den) {
    invariant(den != 0, "division by zero");
    Int q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                   static_cast<unsigned long>(den < 0 ? -den : den));
    invariant(r == 0, "division expected to be exact: " + dec(num) + " / " + std::to_string(den));
    if (den < 0) q = -q;
    return q;
}

Int sum(const std::vector<Int>& v) {
    Int acc = 0;
    for (const auto& x : v) acc += x;
    return acc;
}

} // namespace coset_atlas
