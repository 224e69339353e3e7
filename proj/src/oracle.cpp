#include "coset_atlas/oracle.hpp"

#include "coset_atlas/errors.hpp"
#include "coset_atlas/parallel.hpp"

#include <algorithm>
#include <array>

namespace coset_atlas::oracle {

namespace {

// Supports of size w over {0..n-1} in colexicographic order (largest position
// varies slowest); empty support for w = 0.
std::vector<std::vector<int>> supports_colex(int n, int w) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(w));
    std::function<void(int, int)> rec = [&](int slot, int limit) {
        if (slot < 0) {
            out.push_back(cur);
            return;
        }
        for (int pos = slot; pos < limit; ++pos) {
            cur[static_cast<std::size_t>(slot)] = pos;
            rec(slot - 1, pos);
        }
    };
    if (w == 0) {
        out.push_back({});
        return out;
    }
    rec(w - 1, n);
    return out;
}

} // namespace

void for_each_weight_w(const Field& f, int n, int w,
                       const std::function<void(std::span<const int>, std::span<const Fe>)>& fn) {
    int q = f.order();
    for (const auto& support : supports_colex(n, w)) {
        std::vector<int> coef_idx(static_cast<std::size_t>(w), 1);
        std::vector<Fe> coef(static_cast<std::size_t>(w), f.element(1));
        while (true) {
            fn(support, coef);
            int pos = w - 1;
            while (pos >= 0 && coef_idx[static_cast<std::size_t>(pos)] == q - 1) {
                coef_idx[static_cast<std::size_t>(pos)] = 1;
                coef[static_cast<std::size_t>(pos)] = f.element(1);
                --pos;
            }
            if (pos < 0) break;
            ++coef_idx[static_cast<std::size_t>(pos)];
            coef[static_cast<std::size_t>(pos)] = f.element(coef_idx[static_cast<std::size_t>(pos)]);
        }
    }
}

std::size_t syndrome_rank(std::span<const Fe> s) {
    invariant(s.size() == 4, "syndromes have four coordinates");
    std::size_t q = static_cast<std::size_t>(s[0].field().order());
    std::size_t rank = 0;
    for (const Fe& e : s) rank = rank * q + static_cast<std::size_t>(e.index());
    return rank;
}

std::vector<long long> histogram_weight_w(const Field& f, const gf::Matrix& h, int w, int jobs) {
    if (w > 4) raise(Errc::WeightTooLarge, "histogram is bounded to weight <= 4");
    invariant(h.rows() == 4, "parity-check matrix must have 4 rows");
    int n = static_cast<int>(h.cols());
    int q = f.order();
    std::size_t space = 1;
    for (int i = 0; i < 4; ++i) space *= static_cast<std::size_t>(q);

    std::vector<long long> tally(space, 0);
    if (w == 0) {
        tally[0] = 1;
        return tally;
    }

    auto supports = supports_colex(n, w);
    parallel_chunks<std::vector<long long>>(
        supports.size(), jobs,
        [&](std::size_t lo, std::size_t hi, std::vector<long long>& local) {
            local.assign(space, 0);
            std::vector<int> coef_idx(static_cast<std::size_t>(w));
            std::array<Fe, 4> s{f.zero(), f.zero(), f.zero(), f.zero()};
            for (std::size_t si = lo; si < hi; ++si) {
                const auto& support = supports[si];
                std::fill(coef_idx.begin(), coef_idx.end(), 1);
                while (true) {
                    for (int r = 0; r < 4; ++r) {
                        Fe acc = f.zero();
                        for (int i = 0; i < w; ++i)
                            acc = acc + f.element(coef_idx[static_cast<std::size_t>(i)]) *
                                            h(static_cast<std::size_t>(r),
                                              static_cast<std::size_t>(support[static_cast<std::size_t>(i)]));
                        s[static_cast<std::size_t>(r)] = acc;
                    }
                    ++local[syndrome_rank(s)];
                    int pos = w - 1;
                    while (pos >= 0 && coef_idx[static_cast<std::size_t>(pos)] == q - 1) {
                        coef_idx[static_cast<std::size_t>(pos)] = 1;
                        --pos;
                    }
                    if (pos < 0) break;
                    ++coef_idx[static_cast<std::size_t>(pos)];
                }
            }
        },
        [&](std::vector<long long>& local) {
            if (local.empty()) return;
            for (std::size_t i = 0; i < space; ++i) tally[i] += local[i];
        });

    long long total = 0;
    for (long long t : tally) total += t;
    Int expected = binom(static_cast<unsigned long>(n), static_cast<unsigned long>(w)) *
                   ipow(static_cast<unsigned long>(q - 1), static_cast<unsigned long>(w));
    invariant(Int(static_cast<long>(total)) == expected,
              "weight enumeration must visit every vector once");
    return tally;
}

gf::Matrix derive_generator(const Field& f, const gf::Matrix& h) {
    auto basis = gf::null_space(h);
    std::size_t n = h.cols();
    std::size_t k = n - 4;
    if (basis.size() != k || gf::rank(h) != 4)
        raise(Errc::RankDeficient, "parity-check matrix must have rank 4");

    gf::Matrix g(k, n, f.zero());
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, c) = basis[r][c];

    // G H^T = 0 by construction of the null space; check it anyway.
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t hr = 0; hr < 4; ++hr) {
            Fe acc = f.zero();
            for (std::size_t c = 0; c < n; ++c) acc = acc + g(r, c) * h(hr, c);
            invariant(acc.is_zero(), "generator rows must be codewords");
        }
    }
    invariant(gf::rank(g) == k, "generator must have rank k");
    return g;
}

std::vector<Int> brute_coset_distribution(const Field& f, const gf::Matrix& h,
                                          std::span<const Fe> representative, int jobs) {
    int q = f.order();
    if (q > 9)
        raise(Errc::ScopeExceeded,
              "full coset enumeration is limited to q <= 9 (q^{q-3} codewords)");
    std::size_t n = h.cols();
    invariant(representative.size() == n, "representative length mismatch");

    gf::Matrix g = derive_generator(f, h);
    std::size_t k = g.rows();

    // Scalar multiples of every generator row, indexed [row][element].
    std::vector<std::vector<std::vector<Fe>>> mult(k);
    for (std::size_t r = 0; r < k; ++r) {
        mult[r].resize(static_cast<std::size_t>(q));
        for (int e = 0; e < q; ++e) {
            std::vector<Fe> row(n, f.zero());
            for (std::size_t c = 0; c < n; ++c) row[c] = f.element(e) * g(r, c);
            mult[r][static_cast<std::size_t>(e)] = std::move(row);
        }
    }

    std::vector<Int> dist(n + 1, Int(0));
    // Parallel split on the first message symbol; each worker walks the rest
    // of the message space depth-first with per-level partial sums.
    parallel_chunks<std::vector<long long>>(
        static_cast<std::size_t>(q), jobs,
        [&](std::size_t lo, std::size_t hi, std::vector<long long>& local) {
            local.assign(n + 1, 0);
            std::vector<std::vector<Fe>> partial(k + 1,
                                                 std::vector<Fe>(n, f.zero()));
            for (std::size_t c = 0; c < n; ++c) partial[0][c] = representative[c];
            std::function<void(std::size_t)> walk = [&](std::size_t level) {
                if (level == k) {
                    int weight = 0;
                    for (std::size_t c = 0; c < n; ++c)
                        if (!partial[k][c].is_zero()) ++weight;
                    ++local[static_cast<std::size_t>(weight)];
                    return;
                }
                for (int e = 0; e < q; ++e) {
                    const auto& delta = mult[level][static_cast<std::size_t>(e)];
                    for (std::size_t c = 0; c < n; ++c)
                        partial[level + 1][c] = partial[level][c] + delta[c];
                    walk(level + 1);
                }
            };
            for (std::size_t first = lo; first < hi; ++first) {
                const auto& delta = mult[0][first];
                for (std::size_t c = 0; c < n; ++c) partial[1][c] = partial[0][c] + delta[c];
                walk(1);
            }
        },
        [&](std::vector<long long>& local) {
            if (local.empty()) return;
            for (std::size_t w = 0; w <= n; ++w) dist[w] += static_cast<long>(local[w]);
        });

    invariant(sum(dist) == ipow(static_cast<unsigned long>(q), static_cast<unsigned long>(k)),
              "coset enumeration must cover q^k vectors");
    return dist;
}

std::vector<Fe> find_representative(const Field& f, const gf::Matrix& h,
                                    std::span<const Fe> syndrome) {
    invariant(syndrome.size() == 4, "syndromes have four coordinates");
    std::size_t n = h.cols();

    bool zero = true;
    for (const Fe& e : syndrome) zero = zero && e.is_zero();
    if (zero) return std::vector<Fe>(n, f.zero());

    std::vector<Fe> found;
    for (int w = 1; w <= 3 && found.empty(); ++w) {
        for_each_weight_w(f, static_cast<int>(n), w,
                          [&](std::span<const int> support, std::span<const Fe> coef) {
                              if (!found.empty()) return;
                              for (int r = 0; r < 4; ++r) {
                                  Fe acc = f.zero();
                                  for (std::size_t i = 0; i < support.size(); ++i)
                                      acc = acc + coef[i] *
                                                      h(static_cast<std::size_t>(r),
                                                        static_cast<std::size_t>(support[i]));
                                  if (acc != syndrome[static_cast<std::size_t>(r)]) return;
                              }
                              found.assign(n, f.zero());
                              for (std::size_t i = 0; i < support.size(); ++i)
                                  found[static_cast<std::size_t>(support[i])] = coef[i];
                          });
    }
    if (found.empty())
        raise(Errc::NoRepresentativeWithin3,
              "no vector of weight <= 3 has the requested syndrome");
    return found;
}

std::vector<std::int8_t> leader_weight_sweep(const Field& f, const gf::Matrix& h) {
    int q = f.order();
    int n = static_cast<int>(h.cols());
    std::size_t space = 1;
    for (int i = 0; i < 4; ++i) space *= static_cast<std::size_t>(q);

    std::vector<std::int8_t> weight(space, -1);
    weight[0] = 0;
    for (int w = 1; w <= 3; ++w) {
        for_each_weight_w(f, n, w,
                          [&](std::span<const int> support, std::span<const Fe> coef) {
                              std::array<Fe, 4> s{f.zero(), f.zero(), f.zero(), f.zero()};
                              for (int r = 0; r < 4; ++r) {
                                  Fe acc = f.zero();
                                  for (std::size_t i = 0; i < support.size(); ++i)
                                      acc = acc + coef[i] *
                                                      h(static_cast<std::size_t>(r),
                                                        static_cast<std::size_t>(support[i]));
                                  s[static_cast<std::size_t>(r)] = acc;
                              }
                              std::size_t rank = syndrome_rank(s);
                              if (weight[rank] < 0) weight[rank] = static_cast<std::int8_t>(w);
                          });
    }
    for (std::size_t i = 0; i < space; ++i)
        if (weight[i] < 0)
            raise(Errc::NoRepresentativeWithin3,
                  "syndrome not covered within weight 3; covering radius violated");
    return weight;
}

} // namespace coset_atlas::oracle
