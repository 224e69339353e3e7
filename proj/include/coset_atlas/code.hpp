#ifndef COSET_ATLAS_CODE_HPP
#define COSET_ATLAS_CODE_HPP

#include "coset_atlas/bigint.hpp"
#include "coset_atlas/cubic.hpp"

#include <array>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coset_atlas::code {

using gf::Fe;
using gf::Field;

//! Parameter bundle of the [q+1, q-3, 5] code with covering radius 3.
struct CodeParameters {
    int q;
    int n;  // q + 1
    int k;  // q - 3
    int d;  // 5
    int r;  // covering radius, 3
    int xi; // q mod 3, centered in {-1, 0, 1}

    static CodeParameters for_q(int q);
};

//! Identity of a coset's weight distribution. Which values are meaningful
//! depends on the residue of q mod 3: W2a/W2b exist only for xi = 1, W2 only
//! otherwise, W3c only for xi = -1.
enum class CosetClass : unsigned char { Code, W1, W2, W2a, W2b, W3a, W3b, W3c };

int leader_weight(CosetClass cls);
bool class_valid(CosetClass cls, int xi);
//! Classes in table-row order for the given residue, starting with Code.
std::vector<CosetClass> classes_for(int xi);
//! Row number (1..13) of the class in the classification table.
int table_row(CosetClass cls, int xi);
std::string class_label(CosetClass cls);
CosetClass class_from_label(const std::string& label);

CosetClass class_for_orbit(cubic::PointOrbitLabel label, int xi);
//! Point orbits whose syndromes generate the class (reverse of the above).
std::vector<cubic::PointOrbitLabel> orbits_for_class(CosetClass cls, int xi);

//! Number of weight-3 vectors in a coset of the class, in closed form.
//! Throws ClassResidueMismatch when the class does not exist for q's residue.
long long b3_closed_form(CosetClass cls, int q);

//! Number of cosets of the class.
Int coset_count_closed_form(CosetClass cls, int q);
std::vector<std::pair<CosetClass, Int>> classification_counts(const CodeParameters& cp);

//! B_0..B_n as exact integers.
using WeightDistribution = std::vector<Int>;

//! A_w of the MDS code itself (1 at w = 0, zero below the minimum distance).
Int mds_weight_count(const CodeParameters& cp, int w);
WeightDistribution mds_code_distribution(const CodeParameters& cp);

//! Distribution of a weight-1 coset.
WeightDistribution wd_weight1(const CodeParameters& cp);
//! Distribution of a weight-2 coset with the given B_3. Throws IllegalB3 when
//! the value is not admissible for q's residue.
WeightDistribution wd_weight2(const CodeParameters& cp, long long b3);
//! Distribution of a weight-3 coset with the given B_3.
WeightDistribution wd_weight3(const CodeParameters& cp, long long b3);

//! Completion of an MDS coset distribution from its first d-1 entries
//! (B_0..B_{d-2}); the remaining entries are forced.
WeightDistribution bonneau_complete(int n, int d, int q, const std::vector<Int>& low);

//! Closed-form distribution of a class; internally recomputed through the
//! completion route and both must agree.
WeightDistribution class_distribution(const CodeParameters& cp, CosetClass cls);

// --- the concrete code -------------------------------------------------------

//! The code itself: the 4 x (q+1) parity-check matrix whose columns are the
//! cubic points in parameter order, plus syndrome classification against the
//! geometry.
class Code {
public:
    explicit Code(const cubic::GeometryContext& geo);

    const CodeParameters& params() const { return params_; }
    const gf::Matrix& parity_check() const { return h_; }
    const cubic::GeometryContext& geometry() const { return *geo_; }

    std::vector<Fe> syndrome(std::span<const Fe> x) const; // LengthMismatch

    struct Classified {
        CosetClass cls;
        int leader_weight;
    };
    Classified classify_syndrome(const std::array<Fe, 4>& s) const;

    std::pair<CosetClass, WeightDistribution>
    coset_distribution(const std::array<Fe, 4>& s) const;

    //! Mixed-radix rank of a syndrome in [0, q^4); rank 0 is the zero syndrome.
    std::size_t syndrome_rank(const std::array<Fe, 4>& s) const;
    std::array<Fe, 4> syndrome_from_rank(std::size_t rank) const;

private:
    const cubic::GeometryContext* geo_;
    CodeParameters params_;
    gf::Matrix h_;
};

//! Nonzero weights of the dual code, by enumerating all q^4 words of the row
//! space of H. The dual is MDS of minimum distance q-2 with exactly four
//! nonzero weights; both facts are asserted.
struct DualWeightSet {
    std::set<int> weights;
    int count;
    int min_weight;
};

DualWeightSet dual_weight_set(const Code& code);

// --- distribution laws --------------------------------------------------------

//! Families of same-weight classes with distinct distributions, per residue.
std::vector<std::vector<CosetClass>> law_families(int xi);

struct DifferenceEntry {
    CosetClass a, b;
    int w;
    Int lhs, rhs;
};
struct DifferenceReport {
    std::vector<DifferenceEntry> entries; // lhs == rhs for every entry
};

//! Checks that for same-weight classes the w-th components differ exactly by
//! -(-1)^w (B3(a)-B3(b)) C(q-2, w-3) for 3 <= w <= q+1. Throws LawViolation
//! on any mismatch.
DifferenceReport difference_law_check(const CodeParameters& cp);

struct SymmetryEntry {
    int family_weight; // leader weight shared by the family
    int w;
    Int constant; // common value of B_{q+4-w} - (-1)^q B_w across the family
};
struct SymmetryReport {
    std::vector<SymmetryEntry> entries;

    const Int& constant_for(int family_weight, int w) const;
};

//! Checks the distribution symmetry B_{q+4-w} - (-1)^q B_w = const across each
//! family, w = 3..floor((q+3)/2). Throws LawViolation on any mismatch.
SymmetryReport symmetry_check(const CodeParameters& cp);

} // namespace coset_atlas::code

#endif
