#ifndef COSET_ATLAS_GF_HPP
#define COSET_ATLAS_GF_HPP

#include "coset_atlas/errors.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coset_atlas::gf {

class Field;

//! One element of GF(q), held as an index into the field's canonical element
//! order (lexicographic on the coefficient vector, zero first). Elements keep
//! a handle to their field; mixing elements of different fields throws.
class Fe {
public:
    Fe() : field_(nullptr), idx_(0) {}

    int index() const { return idx_; }
    const Field& field() const;
    bool is_zero() const { return idx_ == 0; }

    Fe operator+(Fe rhs) const;
    Fe operator-(Fe rhs) const;
    Fe operator*(Fe rhs) const;
    Fe operator-() const;
    Fe inverse() const;
    Fe pow(long long e) const;

    Fe& operator+=(Fe rhs) { return *this = *this + rhs; }
    Fe& operator-=(Fe rhs) { return *this = *this - rhs; }
    Fe& operator*=(Fe rhs) { return *this = *this * rhs; }

    bool operator==(Fe rhs) const { return field_ == rhs.field_ && idx_ == rhs.idx_; }
    bool operator!=(Fe rhs) const { return !(*this == rhs); }

private:
    friend class Field;
    Fe(const Field* f, int idx) : field_(f), idx_(idx) {}

    const Field* field_;
    int idx_;
};

//! GF(p^m) with exact table-driven arithmetic, q = p^m in [5, 128].
//!
//! Elements are polynomials over GF(p) modulo a monic irreducible modulus,
//! enumerated in lexicographic coefficient order (constant term first, most
//! significant for the ordering). That order is the canonical element order
//! used for parity-check columns, CLI element indices and reports.
class Field {
public:
    //! Builds GF(p^m). Without an explicit modulus the built-in default table
    //! supplies one for every prime power q <= 128. The modulus is checked
    //! monic and irreducible (trial division up to degree m/2).
    static Field build(int p, int m);
    static Field build(int p, int m, const std::vector<int>& modulus);

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    int order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Fe zero() const { return Fe(this, 0); }
    Fe one() const { return Fe(this, one_); }
    Fe element(int index) const;
    //! Canonical embedding of an integer: n mod p as a constant polynomial.
    Fe from_int(long long n) const;
    Fe from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<Fe> all_elements() const;

    //! Coefficient vector of an element, length m, low degree first.
    const std::vector<int>& coeffs(Fe e) const;
    std::string to_string(Fe e) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe pow(Fe a, long long e) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;
    Field(Field&&) = default;

private:
    Field() = default;
    void check_same(Fe a, Fe b) const;
    void check_mine(Fe a) const;

    int p_ = 0;
    int m_ = 0;
    int q_ = 0;
    int one_ = 0;
    std::vector<int> modulus_;                 // m+1 coeffs, low first, monic
    std::vector<std::vector<int>> elements_;   // index -> coeffs
    std::vector<uint16_t> add_;                // q*q
    std::vector<uint16_t> mul_;                // q*q
    std::vector<uint16_t> neg_;                // q
    std::vector<uint16_t> inv_;                // q (inv_[0] unused)
};

inline const Field& Fe::field() const {
    invariant(field_ != nullptr, "use of default-constructed field element");
    return *field_;
}
inline Fe Fe::operator+(Fe rhs) const { return field().add(*this, rhs); }
inline Fe Fe::operator-(Fe rhs) const { return field().sub(*this, rhs); }
inline Fe Fe::operator*(Fe rhs) const { return field().mul(*this, rhs); }
inline Fe Fe::operator-() const { return field().neg(*this); }
inline Fe Fe::inverse() const { return field().inv(*this); }
inline Fe Fe::pow(long long e) const { return field().pow(*this, e); }

// --- dense linear algebra over GF(q) ---------------------------------------

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Fe fill);
    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Fe& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Fe& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Fe> a_;
};

struct LinearSolution {
    std::vector<Fe> particular;
    std::size_t solution_dim; // dimension of the affine solution space
};

//! Gaussian elimination. Throws InconsistentSystem when no solution exists.
LinearSolution solve_linear(const Matrix& a, const std::vector<Fe>& b);

//! Reduced-echelon canonical basis of the right null space of a.
std::vector<std::vector<Fe>> null_space(const Matrix& a);

std::size_t rank(Matrix a);

std::vector<Fe> mat_vec(const Matrix& a, std::span<const Fe> x);

// --- modulus tables ---------------------------------------------------------

//! Default modulus (low-first coefficients) for a prime power q = p^m <= 128,
//! possibly overridden by the table file named in COSET_ATLAS_FIELD_TABLE.
std::vector<int> default_modulus(int p, int m);

//! Parses a field-spec string "p^m:c0,c1,...,cm" (prime fields: "p" or
//! "p^1:0,1"). Returns the built field.
Field parse_field_spec(const std::string& text);

//! Builds the field of order q from the default (or overridden) table.
Field field_of_order(int q);

//! Factors q as p^m with p prime; throws UnsupportedOrder otherwise.
std::pair<int, int> factor_prime_power(int q);

} // namespace coset_atlas::gf

#endif
