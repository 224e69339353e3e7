#ifndef COSET_ATLAS_ORACLE_HPP
#define COSET_ATLAS_ORACLE_HPP

#include "coset_atlas/bigint.hpp"
#include "coset_atlas/gf.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

// Brute-force ground truth. Everything here works from the field and the raw
// parity-check matrix alone; the geometric classifier and the closed forms are
// deliberately out of reach so that a shared bug cannot confirm itself.
namespace coset_atlas::oracle {

using gf::Fe;
using gf::Field;

//! Visits every weight-w vector of F_q^n exactly once: supports in
//! colexicographic order, nonzero coefficients in field order. The callback
//! receives parallel arrays of support positions and coefficients.
void for_each_weight_w(const Field& f, int n, int w,
                       const std::function<void(std::span<const int>, std::span<const Fe>)>& fn);

//! Mixed-radix rank of a length-4 syndrome in [0, q^4).
std::size_t syndrome_rank(std::span<const Fe> s);

//! Tally of weight-w vectors per syndrome: result[rank] is the number of
//! weight-w vectors of F_q^{q+1} whose syndrome has that rank, i.e. B_w of the
//! corresponding coset. Throws WeightTooLarge for w > 4.
std::vector<long long> histogram_weight_w(const Field& f, const gf::Matrix& h, int w,
                                          int jobs = 1);

//! Generator matrix: k x n whose rows span the null space of h.
//! Throws RankDeficient unless h has full rank 4.
gf::Matrix derive_generator(const Field& f, const gf::Matrix& h);

//! Full weight distribution of the coset (representative + code) by
//! enumerating all q^{q-3} codewords. Guarded to q <= 9 (531441 codewords);
//! larger q throws ScopeExceeded instead of silently truncating.
std::vector<Int> brute_coset_distribution(const Field& f, const gf::Matrix& h,
                                          std::span<const Fe> representative, int jobs = 1);

//! Smallest-weight vector with the given syndrome, searching supports of size
//! 0, 1, 2, 3 in order. Throws NoRepresentativeWithin3 if none exists (that
//! would contradict covering radius 3).
std::vector<Fe> find_representative(const Field& f, const gf::Matrix& h,
                                    std::span<const Fe> syndrome);

//! Leader weight of every coset at once: entry [rank] is the minimum weight
//! over vectors with that syndrome, obtained by sweeping weights 0..3. Every
//! syndrome must be reached within weight 3.
std::vector<std::int8_t> leader_weight_sweep(const Field& f, const gf::Matrix& h);

} // namespace coset_atlas::oracle

#endif
