#include "coset_atlas/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace coset_atlas::gf {

namespace {

constexpr int kMaxOrder = 128;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p), coefficients low degree first, trailing zeros
// trimmed. Only what the modulus check needs.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_rem(Poly a, const Poly& b, int p) {
    // b monic is guaranteed by callers.
    a = trim(std::move(a));
    while (pdeg(a) >= pdeg(b)) {
        int shift = pdeg(a) - pdeg(b);
        int lead = a.back();
        for (int i = 0; i <= pdeg(b); ++i) {
            int& c = a[static_cast<std::size_t>(i + shift)];
            c = ((c - lead * b[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

// Enumerates every monic polynomial of the given degree over GF(p).
template <typename Fn>
void for_each_monic(int p, int deg, Fn fn) {
    std::vector<int> c(static_cast<std::size_t>(deg) + 1, 0);
    c.back() = 1;
    while (true) {
        fn(c);
        int i = 0;
        while (i < deg && ++c[static_cast<std::size_t>(i)] == p) {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == deg) break;
    }
}

// A reducible polynomial of degree m has a monic factor of degree <= m/2,
// so trial division up to m/2 is a complete check.
bool is_irreducible(const Poly& f, int p) {
    int m = pdeg(f);
    for (int d = 1; 2 * d <= m; ++d) {
        bool divisible = false;
        for_each_monic(p, d, [&](const Poly& g) {
            if (!divisible && poly_rem(f, g, p).empty()) divisible = true;
        });
        if (divisible) return false;
    }
    return true;
}

struct DefaultModulus {
    int p, m;
    std::vector<int> coeffs;
};

// Conway-style fixed choices so element order is reproducible across runs.
const std::vector<DefaultModulus>& builtin_moduli() {
    static const std::vector<DefaultModulus> table = {
        {2, 3, {1, 1, 0, 1}},             // x^3 + x + 1
        {2, 4, {1, 1, 0, 0, 1}},          // x^4 + x + 1
        {2, 5, {1, 0, 1, 0, 0, 1}},       // x^5 + x^2 + 1
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},    // x^6 + x^4 + x^3 + x + 1
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}}, // x^7 + x + 1
        {3, 2, {2, 2, 1}},                // x^2 + 2x + 2
        {3, 3, {1, 2, 0, 1}},             // x^3 + 2x + 1
        {3, 4, {2, 0, 0, 2, 1}},          // x^4 + 2x^3 + 2
        {5, 2, {2, 4, 1}},                // x^2 + 4x + 2
        {5, 3, {3, 3, 0, 1}},             // x^3 + 3x + 3
        {7, 2, {3, 6, 1}},                // x^2 + 6x + 3
        {11, 2, {2, 7, 1}},               // x^2 + 7x + 2
    };
    return table;
}

int parse_number(const std::string& tok, const std::string& context) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        raise(Errc::UsageError, "bad number '" + tok + "' in " + context);
    }
}

std::vector<int> parse_coeff_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) raise(Errc::UsageError, "empty coefficient in '" + text + "'");
        out.push_back(parse_number(tok, "coefficient list '" + text + "'"));
    }
    return out;
}

// "p^m:c0,c1,...,cm" -> (p, m, coeffs). The coefficient list is optional.
struct FieldSpecText {
    int p, m;
    std::optional<std::vector<int>> coeffs;
};

FieldSpecText parse_spec_text(const std::string& text) {
    FieldSpecText out;
    std::string head = text;
    std::string tail;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        head = text.substr(0, colon);
        tail = text.substr(colon + 1);
    }
    if (auto caret = head.find('^'); caret != std::string::npos) {
        out.p = parse_number(head.substr(0, caret), "field spec '" + text + "'");
        out.m = parse_number(head.substr(caret + 1), "field spec '" + text + "'");
    } else {
        out.p = parse_number(head, "field spec '" + text + "'");
        out.m = 1;
    }
    if (!tail.empty()) out.coeffs = parse_coeff_list(tail);
    return out;
}

std::optional<std::vector<int>> table_file_modulus(int p, int m) {
    const char* path = std::getenv("COSET_ATLAS_FIELD_TABLE");
    if (path == nullptr || *path == '\0') return std::nullopt;
    std::ifstream in(path);
    if (!in) raise(Errc::UsageError, std::string("cannot open field table file ") + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        FieldSpecText spec = parse_spec_text(line.substr(first, last - first + 1));
        if (spec.p == p && spec.m == m) {
            if (!spec.coeffs)
                raise(Errc::UsageError, "field table entry without coefficients: " + line);
            return spec.coeffs;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<int> default_modulus(int p, int m) {
    if (m == 1) return {0, 1}; // identity placeholder, arithmetic is mod p
    if (auto custom = table_file_modulus(p, m)) return *custom;
    for (const auto& e : builtin_moduli())
        if (e.p == p && e.m == m) return e.coeffs;
    raise(Errc::UnsupportedOrder,
          "no default modulus for p=" + std::to_string(p) + ", m=" + std::to_string(m));
}

Field Field::build(int p, int m) { return build(p, m, default_modulus(p, m)); }

Field Field::build(int p, int m, const std::vector<int>& modulus) {
    if (!is_prime(p))
        raise(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (m < 1) raise(Errc::UnsupportedOrder, "degree must be >= 1");

    long long q_ll = 1;
    for (int i = 0; i < m; ++i) q_ll *= p;
    if (q_ll < 5 || q_ll > kMaxOrder)
        raise(Errc::UnsupportedOrder, "q = " + std::to_string(q_ll) + " outside [5, 128]");
    int q = static_cast<int>(q_ll);

    if (static_cast<int>(modulus.size()) != m + 1)
        raise(Errc::ReducibleModulus, "modulus must have m+1 coefficients");
    for (int c : modulus)
        if (c < 0 || c >= p) raise(Errc::ReducibleModulus, "modulus coefficient out of [0,p)");
    if (modulus.back() != 1) raise(Errc::ReducibleModulus, "modulus must be monic");
    if (m > 1 && !is_irreducible(modulus, p))
        raise(Errc::ReducibleModulus, "modulus is reducible over GF(p)");

    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = q;
    f.modulus_ = modulus;

    // Elements in lexicographic coefficient order: the constant term is the
    // most significant digit of the index.
    f.elements_.resize(static_cast<std::size_t>(q));
    for (int idx = 0; idx < q; ++idx) {
        std::vector<int> c(static_cast<std::size_t>(m));
        int rest = idx;
        for (int i = m - 1; i >= 0; --i) {
            c[static_cast<std::size_t>(i)] = rest % p;
            rest /= p;
        }
        f.elements_[static_cast<std::size_t>(idx)] = std::move(c);
    }

    auto index_of = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int i = 0; i < m; ++i) idx = idx * p + c[static_cast<std::size_t>(i)];
        return idx;
    };

    {
        std::vector<int> one_coeffs(static_cast<std::size_t>(m), 0);
        one_coeffs[0] = 1;
        f.one_ = index_of(one_coeffs);
    }

    f.add_.resize(static_cast<std::size_t>(q) * q);
    f.neg_.resize(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            std::vector<int> c(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                c[static_cast<std::size_t>(i)] =
                    (f.elements_[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] +
                     f.elements_[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]) %
                    p;
            f.add_[static_cast<std::size_t>(a) * q + b] = static_cast<uint16_t>(index_of(c));
        }
        std::vector<int> c(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            c[static_cast<std::size_t>(i)] =
                (p - f.elements_[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]) % p;
        f.neg_[static_cast<std::size_t>(a)] = static_cast<uint16_t>(index_of(c));
    }

    f.mul_.resize(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a) {
        const auto& ca = f.elements_[static_cast<std::size_t>(a)];
        for (int b = 0; b < q; ++b) {
            const auto& cb = f.elements_[static_cast<std::size_t>(b)];
            std::vector<int> prod(static_cast<std::size_t>(2 * m - 1), 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] +
                         ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) %
                        p;
            Poly rem = poly_rem(prod, modulus, p);
            rem.resize(static_cast<std::size_t>(m), 0);
            f.mul_[static_cast<std::size_t>(a) * q + b] = static_cast<uint16_t>(index_of(rem));
        }
    }

    f.inv_.assign(static_cast<std::size_t>(q), 0);
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (f.mul_[static_cast<std::size_t>(a) * q + b] == f.one_) {
                f.inv_[static_cast<std::size_t>(a)] = static_cast<uint16_t>(b);
                break;
            }
        }
        invariant(f.inv_[static_cast<std::size_t>(a)] != 0, "element without inverse");
    }

    return f;
}

Fe Field::element(int index) const {
    invariant(index >= 0 && index < q_, "element index out of range");
    return Fe(this, index);
}

Fe Field::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    std::vector<int> c(static_cast<std::size_t>(m_), 0);
    c[0] = static_cast<int>(r);
    return from_coeffs(c);
}

Fe Field::from_coeffs(const std::vector<int>& coeffs) const {
    invariant(static_cast<int>(coeffs.size()) == m_, "coefficient count mismatch");
    int idx = 0;
    for (int i = 0; i < m_; ++i) {
        int c = coeffs[static_cast<std::size_t>(i)];
        invariant(c >= 0 && c < p_, "coefficient out of [0,p)");
        idx = idx * p_ + c;
    }
    return Fe(this, idx);
}

std::vector<Fe> Field::all_elements() const {
    std::vector<Fe> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i) out.push_back(Fe(this, i));
    return out;
}

const std::vector<int>& Field::coeffs(Fe e) const {
    check_mine(e);
    return elements_[static_cast<std::size_t>(e.index())];
}

std::string Field::to_string(Fe e) const {
    check_mine(e);
    return std::to_string(e.index());
}

void Field::check_mine(Fe a) const {
    if (&a.field() != this) raise(Errc::MixedFields, "element belongs to a different field");
}

void Field::check_same(Fe a, Fe b) const {
    check_mine(a);
    check_mine(b);
}

Fe Field::add(Fe a, Fe b) const {
    check_same(a, b);
    return Fe(this, add_[static_cast<std::size_t>(a.index()) * q_ + b.index()]);
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::neg(Fe a) const {
    check_mine(a);
    return Fe(this, neg_[static_cast<std::size_t>(a.index())]);
}

Fe Field::mul(Fe a, Fe b) const {
    check_same(a, b);
    return Fe(this, mul_[static_cast<std::size_t>(a.index()) * q_ + b.index()]);
}

Fe Field::inv(Fe a) const {
    check_mine(a);
    if (a.is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
    return Fe(this, inv_[static_cast<std::size_t>(a.index())]);
}

Fe Field::pow(Fe a, long long e) const {
    check_mine(a);
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Fe acc = one();
    Fe base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

// --- linear algebra ----------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, Fe fill)
    : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

Matrix Matrix::zero(const Field& f, std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, f.zero());
}

namespace {

// Row echelon with full pivot normalization (RREF). Returns pivot column of
// each pivot row in order.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(sel, c));
        Fe scale = m(row, col).inverse();
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) * scale;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Fe factor = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = m(r, c) - factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

LinearSolution solve_linear(const Matrix& a, const std::vector<Fe>& b) {
    invariant(b.size() == a.rows(), "rhs length mismatch");
    invariant(a.rows() > 0 && a.cols() > 0, "empty matrix");
    const Field& f = a(0, 0).field();
    Matrix aug(a.rows(), a.cols() + 1, f.zero());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        raise(Errc::InconsistentSystem, "no solution");

    LinearSolution out;
    out.particular.assign(a.cols(), f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        out.particular[pivots[i]] = aug(i, a.cols());
    out.solution_dim = a.cols() - pivots.size();
    return out;
}

std::vector<std::vector<Fe>> null_space(const Matrix& a) {
    invariant(a.rows() > 0 && a.cols() > 0, "empty matrix");
    const Field& f = a(0, 0).field();
    Matrix m = a;
    std::vector<std::size_t> pivots = rref(m);

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Fe>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fe> v(a.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(Matrix a) { return rref(a).size(); }

std::vector<Fe> mat_vec(const Matrix& a, std::span<const Fe> x) {
    invariant(x.size() == a.cols(), "vector length mismatch");
    const Field& f = a(0, 0).field();
    std::vector<Fe> out(a.rows(), f.zero());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Fe acc = f.zero();
        for (std::size_t c = 0; c < a.cols(); ++c) acc = acc + a(r, c) * x[c];
        out[r] = acc;
    }
    return out;
}

// --- spec parsing ------------------------------------------------------------

Field parse_field_spec(const std::string& text) {
    FieldSpecText spec = parse_spec_text(text);
    if (spec.coeffs) return Field::build(spec.p, spec.m, *spec.coeffs);
    return Field::build(spec.p, spec.m);
}

std::pair<int, int> factor_prime_power(int q) {
    if (q < 2) raise(Errc::UnsupportedOrder, "q must be >= 5");
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        raise(Errc::UnsupportedOrder, std::to_string(q) + " is not a prime power");
    return {p, m};
}

Field field_of_order(int q) {
    auto [p, m] = factor_prime_power(q);
    return Field::build(p, m);
}

} // namespace coset_atlas::gf
