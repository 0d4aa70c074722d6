#include "isopieri/triple_intersection.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isopieri {

FormSystem build_Z(const SkewShape& s, Family family) {
    FormSystem fs;
    fs.family = family;
    fs.n = s.mu.n();
    for (int j : s.fixed_indices) fs.alphas.push_back(-s.lambda(j));
    if (family == Family::B && s.zero_is_fixed) fs.alphas.push_back(0);
    for (const auto& d : s.components) {
        if (d.meets_first_column && family == Family::C) continue;
        fs.betas.push_back(d.col_set);
        if (d.meets_first_column) fs.has_first_column_beta = true;
    }
    return fs;
}

template <class F>
typename F::value_type beta_value(const F& f, const BilinearSpace& space, const std::vector<int>& col_set,
                                  const Vec<typename F::value_type>& v) {
    using T = typename F::value_type;
    T total = f.zero();
    for (int c : col_set) {
        if (c == 0) {
            T sq = at(space, v, 0) * at(space, v, 0);
            total += sq;
            continue;
        }
        T term = at(space, v, c) * at(space, v, -c);
        total += term;
        if (space.family() == Family::B) total += term;
    }
    return total;
}

template <class F>
bool member_of_Z(const F& f, const BilinearSpace& space, const FormSystem& fs, const Vec<typename F::value_type>& v) {
    if (space.family() != fs.family || space.n() != fs.n)
        throw Error(Errc::DimensionMismatch, "form system and space disagree");
    for (int c : fs.alphas)
        if (!f.is_zero(at(space, v, c))) return false;
    for (const auto& cols : fs.betas)
        if (!f.is_zero(beta_value(f, space, cols, v))) return false;
    if (fs.family == Family::B && !f.is_zero(form_value(f, space, v, v)))
        throw std::logic_error("vector satisfies every form of Z but is not isotropic");
    return true;
}

template <class F>
Vec<typename F::value_type> sample_Z_vector(const F& f, const BilinearSpace& space, const FormSystem& fs,
                                            const SkewShape& s, std::mt19937_64& rng) {
    using T = typename F::value_type;
    auto v = zero_vector(f, space);
    for (int j : s.fixed_indices) at(space, v, s.mu(j)) = f.random_nonzero(rng);
    for (const auto& d : s.components) {
        if (d.meets_first_column) {
            int l = d.columns.back();
            for (int c = -l; c <= l; ++c)
                if (space.has_coord(c)) at(space, v, c) = f.random(rng);
            if (fs.family == Family::B) {
                // Solve β_0 = 0 for x_1 with x_{-1} ≠ 0.
                at(space, v, -1) = f.random_nonzero(rng);
                at(space, v, 1) = f.zero();
                T rest = beta_value(f, space, d.col_set, v);
                at(space, v, 1) = f.div(-rest, f.from_int(2) * at(space, v, -1));
            }
            continue;
        }
        for (int c : d.col_set) {
            at(space, v, c) = f.random(rng);
            at(space, v, -c) = f.random(rng);
        }
        int a = d.col_set.front();
        at(space, v, -a) = f.random_nonzero(rng);
        at(space, v, a) = f.zero();
        T rest = beta_value(f, space, d.col_set, v);
        T scale = space.family() == Family::B ? f.from_int(2) * at(space, v, -a) : at(space, v, -a);
        at(space, v, a) = f.div(-rest, scale);
    }
    if (!member_of_Z(f, space, fs, v)) throw std::logic_error("sampled vector is not in Z");
    return v;
}

Blocks orthogonal_blocks(const SkewShape& s, Family family) {
    Blocks b;
    for (int j : s.fixed_indices) {
        b.fixed.push_back(s.mu(j));
        b.fixed.push_back(-s.mu(j));
    }
    if (family == Family::B && s.zero_is_fixed) b.fixed.push_back(0);
    std::sort(b.fixed.begin(), b.fixed.end());
    b.fixed_dim = static_cast<int>(s.fixed_indices.size());
    for (const auto& d : s.components) {
        if (d.meets_first_column) {
            int l = d.columns.back();
            for (int c = -l; c <= l; ++c)
                if (c != 0 || family == Family::B) b.first_column.push_back(c);
            b.first_column_dim = l;
            continue;
        }
        std::vector<int> coords;
        for (int c : d.col_set) {
            coords.push_back(c);
            coords.push_back(-c);
        }
        std::sort(coords.begin(), coords.end());
        b.components.push_back(coords);
        b.component_dims.push_back(static_cast<int>(d.col_set.size()));
    }
    return b;
}

namespace {

bool single_first_column_component(const SignedSequence& mu, const SignedSequence& lambda) {
    if (!bruhat_leq(mu, lambda)) return false;
    auto s = skew(mu, lambda);
    return s.components.size() == 1 && s.components.front().meets_first_column && s.fixed_indices.empty() &&
           is_skew_row(s);
}

int last_row_length(const SignedSequence& mu, const SignedSequence& lambda) {
    int k = mu.positive_count();
    if (k >= mu.n()) return -1;
    return lambda(k + 1);
}

}  // namespace

NormalizedPair normalize_last_row(const SignedSequence& mu, const SignedSequence& lambda) {
    if (!single_first_column_component(mu, lambda))
        throw Error(Errc::BadInput, "expected a single first-column component without fixed rows");
    if (last_row_length(mu, lambda) == 1) return {mu, lambda, false};
    auto mu2 = complement(lambda);
    auto lambda2 = complement(mu);
    if (single_first_column_component(mu2, lambda2) && last_row_length(mu2, lambda2) == 1)
        return {mu2, lambda2, true};
    throw Error(Errc::Unnormalizable, "neither " + lambda.to_string() + "/" + mu.to_string() +
                                          " nor its complement has a last row of length one");
}

namespace {

void require_chart_shape(const SignedSequence& mu, const SignedSequence& lambda) {
    if (!single_first_column_component(mu, lambda) || last_row_length(mu, lambda) != 1)
        throw Error(Errc::BadInput, "chart needs a single first-column component with λ_{k+1} = 1");
}

}  // namespace

template <class F>
std::vector<Vec<typename F::value_type>> chart_vectors(const F& f, const BilinearSpace& space,
                                                       const SignedSequence& mu, const SignedSequence& lambda,
                                                       const std::vector<typename F::value_type>& x,
                                                       const std::vector<typename F::value_type>& y) {
    using T = typename F::value_type;
    require_chart_shape(mu, lambda);
    int n = mu.n();
    if (space.n() != n || static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n + 1)
        throw Error(Errc::DimensionMismatch, "chart parameters do not match n");
    int k = mu.positive_count();
    std::vector<Vec<T>> g;
    for (int j = 1; j <= n; ++j) {
        auto v = unit_vector(f, space, j == k + 1 ? -1 : lambda(j));
        if (j <= k) {
            for (int c = mu(j); c < lambda(j); ++c) at(space, v, c) = x[static_cast<std::size_t>(c)];
        } else {
            int top = j == k + 1 ? -2 : lambda(j) - 1;
            for (int c = mu(j); c <= top; ++c) at(space, v, c) = y[static_cast<std::size_t>(-c)];
            if (j == k + 1) {
                const T& x0 = x[0];
                if (space.family() == Family::B) {
                    T sq = x0 * x0;
                    at(space, v, 1) = -(f.from_int(2) * sq);
                    at(space, v, 0) = f.from_int(2) * x0;
                } else {
                    at(space, v, 1) = x0;
                }
            }
        }
        g.push_back(std::move(v));
    }
    return g;
}

template <class F>
std::vector<typename F::value_type> solve_ys(const F& f, Family family, const SignedSequence& mu,
                                             const SignedSequence& lambda,
                                             const std::vector<typename F::value_type>& x) {
    using T = typename F::value_type;
    require_chart_shape(mu, lambda);
    int n = mu.n();
    int k = mu.positive_count();
    BilinearSpace space(family, n);
    std::vector<T> y(static_cast<std::size_t>(n + 1), f.zero());
    // With y = 0 the chart gives the constant part of every g_j.
    auto g = chart_vectors(f, space, mu, lambda, x, y);

    // y_l sits at coordinate -l of g_j for l in slots[j].
    std::vector<std::vector<int>> slots(static_cast<std::size_t>(n + 1));
    for (int j = k + 1; j <= n; ++j) {
        int top = j == k + 1 ? -2 : lambda(j) - 1;
        for (int c = mu(j); c <= top; ++c) slots[static_cast<std::size_t>(j)].push_back(-c);
    }
    std::vector<bool> known(static_cast<std::size_t>(n + 1), false);
    int unknown = 0;
    for (int j = k + 1; j <= n; ++j) unknown += static_cast<int>(slots[static_cast<std::size_t>(j)].size());

    auto gi = [&](int i) -> const Vec<T>& { return g[static_cast<std::size_t>(i - 1)]; };
    // β(g_i, e_{-l}) is structurally present iff l lies in the support of g_i.
    auto present = [&](int i, int l) { return mu(i) <= l && l <= lambda(i); };

    bool zero_pivot = false;
    while (unknown > 0) {
        bool progress = false;
        for (int j = k + 1; j <= n; ++j)
            for (int i = 1; i <= k; ++i) {
                const auto& ls = slots[static_cast<std::size_t>(j)];
                int pending = 0, target = 0;
                for (int l : ls)
                    if (present(i, l) && !known[static_cast<std::size_t>(l)]) {
                        ++pending;
                        target = l;
                    }
                if (pending != 1) continue;
                T coeff = form_value(f, space, gi(i), unit_vector(f, space, -target));
                if (f.is_zero(coeff)) {
                    zero_pivot = true;
                    continue;
                }
                T rhs = form_value(f, space, gi(i), g[static_cast<std::size_t>(j - 1)]);
                for (int l : ls) {
                    if (l == target || !known[static_cast<std::size_t>(l)] || !present(i, l)) continue;
                    T c = form_value(f, space, gi(i), unit_vector(f, space, -l));
                    T term = c * y[static_cast<std::size_t>(l)];
                    rhs += term;
                }
                y[static_cast<std::size_t>(target)] = f.div(-rhs, coeff);
                known[static_cast<std::size_t>(target)] = true;
                --unknown;
                progress = true;
            }
        if (!progress) {
            if (zero_pivot) throw Error(Errc::SingularPivot, "a needed pivot coefficient is zero");
            throw Error(Errc::Stuck, "no equation with a single unresolved y");
        }
    }
    auto full = chart_vectors(f, space, mu, lambda, x, y);
    for (std::size_t i = 0; i < full.size(); ++i)
        for (std::size_t j = i; j < full.size(); ++j)
            if (!f.is_zero(form_value(f, space, full[i], full[j]))) {
                if (zero_pivot) throw Error(Errc::SingularPivot, "isotropy fails after a zero pivot");
                throw Error(Errc::Stuck, "solved chart is not isotropic");
            }
    return y;
}

namespace {

[[noreturn]] void degenerate(const std::string& why) { throw Error(Errc::DegenerateVector, why); }

// φ(e_c) for φ = β(·, minus).
template <class F>
typename F::value_type phi(const BilinearSpace& space, const Vec<typename F::value_type>& minus, int c) {
    const auto& m = at(space, minus, -c);
    return space.pairing_sign(c) > 0 ? m : -m;
}

template <class F>
typename F::value_type phi_of(const F& f, const BilinearSpace& space, const Vec<typename F::value_type>& minus,
                              const Vec<typename F::value_type>& x, int lo, int hi) {
    using T = typename F::value_type;
    T total = f.zero();
    for (int c = lo; c <= hi; ++c) {
        T term = at(space, x, c) * phi<F>(space, minus, c);
        total += term;
    }
    return total;
}

// ker φ ∩ ⟨e_lo .. e_hi⟩.
template <class F>
Subspace<F> kernel_in_range(const F& f, const BilinearSpace& space, const Vec<typename F::value_type>& minus, int lo,
                            int hi) {
    using T = typename F::value_type;
    Matrix<T> m(1, hi - lo + 1, f.zero());
    for (int c = lo; c <= hi; ++c) m(0, c - lo) = phi<F>(space, minus, c);
    auto ker = nullspace(f, m);
    std::vector<Vec<T>> rows;
    for (int r = 0; r < ker.rows(); ++r) {
        auto v = zero_vector(f, space);
        for (int c = lo; c <= hi; ++c) at(space, v, c) = ker(r, c - lo);
        rows.push_back(std::move(v));
    }
    return Subspace<F>::span(f, space, rows);
}

// The plane L with u ∈ L ⊂ ker φ whose rows i..j satisfy the Schubert
// conditions of the chained intervals [μ_r, λ_r] (μ_r = λ_{r+1}). At a junction
// c with φ(e_c) ≠ 0, e_c ∉ L, so L splits as (L ∩ F_{≥c}) ⊕ (L ∩ F_{≤c}) and u
// splits with it. When every junction has φ(e_c) = 0, L is ker φ if the
// dimensions agree.
template <class F>
void solve_block(const F& f, const BilinearSpace& space, const std::vector<std::pair<int, int>>& intervals,
                 std::size_t i, std::size_t j, const Vec<typename F::value_type>& u,
                 const Vec<typename F::value_type>& minus, std::vector<Vec<typename F::value_type>>& out) {
    using T = typename F::value_type;
    int lo = intervals[j].first;
    int hi = intervals[i].second;
    if (i == j) {
        if (!is_zero_vector(f, u)) {
            if (!f.is_zero(phi_of(f, space, minus, u, lo, hi))) degenerate("row vector is not orthogonal to v⁻");
            out.push_back(u);
            return;
        }
        auto line = kernel_in_range(f, space, minus, lo, hi);
        if (line.dim() != 1) degenerate("row direction is not determined");
        out.push_back(line.vectors().front());
        return;
    }
    for (std::size_t r = i; r < j; ++r) {
        int c = intervals[r].first;
        T pivot = phi<F>(space, minus, c);
        if (f.is_zero(pivot)) continue;
        auto up = zero_vector(f, space);
        for (int cc = c + 1; cc <= hi; ++cc) at(space, up, cc) = at(space, u, cc);
        at(space, up, c) = f.div(-phi_of(f, space, minus, up, c + 1, hi), pivot);
        auto low = u;
        for (std::size_t t = 0; t < low.size(); ++t) low[t] -= up[t];
        solve_block(f, space, intervals, i, r, up, minus, out);
        solve_block(f, space, intervals, r + 1, j, low, minus, out);
        return;
    }
    auto ker = kernel_in_range(f, space, minus, lo, hi);
    if (ker.dim() != static_cast<int>(j - i + 1) || !ker.contains(u)) degenerate("block plane is not determined");
    for (auto& v : ker.vectors()) out.push_back(std::move(v));
}

template <class F>
Subspace<F> solve_plane(const F& f, const BilinearSpace& space, const std::vector<std::pair<int, int>>& intervals,
                        const Vec<typename F::value_type>& u, const Vec<typename F::value_type>& minus) {
    std::vector<Vec<typename F::value_type>> rows;
    if (intervals.empty()) {
        if (!is_zero_vector(f, u)) degenerate("positive part has no rows to lie in");
    } else {
        solve_block(f, space, intervals, 0, intervals.size() - 1, u, minus, rows);
    }
    auto plane = Subspace<F>::span(f, space, rows);
    if (plane.dim() != static_cast<int>(intervals.size())) degenerate("positive plane has the wrong dimension");
    return plane;
}

template <class F>
std::vector<Vec<typename F::value_type>> reconstruct_first_column(const F& f, const BilinearSpace& space,
                                                                  const SignedSequence& mu0,
                                                                  const SignedSequence& lambda0,
                                                                  Vec<typename F::value_type> w) {
    using T = typename F::value_type;
    auto norm = normalize_last_row(mu0, lambda0);
    const auto& mu = norm.mu;
    const auto& lambda = norm.lambda;
    int l = mu.n();
    int k = mu.positive_count();
    if (norm.flipped) w = involution(space, w);
    T lead = at(space, w, -1);
    if (f.is_zero(lead)) degenerate("first-column vector has zero e_{-1} coefficient");
    T inv = f.inv(lead);
    for (auto& c : w) c *= inv;

    Vec<T> plus = zero_vector(f, space);
    Vec<T> minus = zero_vector(f, space);
    for (int c = 1; c <= l; ++c) {
        at(space, plus, c) = at(space, w, c);
        at(space, minus, -c) = at(space, w, -c);
    }
    // v' = v⁺ + 2z² e_1 with x_0 = z (B); w' = w⁺ − x_0 f_1 with w' ⊥ w⁻ (C).
    T x0 = f.zero();
    if (space.family() == Family::B) {
        x0 = f.div(at(space, w, 0), f.from_int(2));
        T sq = x0 * x0;
        at(space, plus, 1) += f.from_int(2) * sq;
    } else {
        x0 = f.div(phi_of(f, space, minus, plus, 1, l), phi<F>(space, minus, 1));
        at(space, plus, 1) -= x0;
    }
    std::vector<std::pair<int, int>> intervals;
    for (int i = 1; i <= k; ++i) intervals.emplace_back(mu(i), lambda(i));
    auto plane = solve_plane(f, space, intervals, plus, minus);

    std::vector<T> x(static_cast<std::size_t>(l), f.zero());
    x[0] = x0;
    for (int i = 1; i <= k; ++i) {
        std::vector<int> coords;
        for (int c = mu(i); c <= lambda(i); ++c) coords.push_back(c);
        auto row = intersection(plane, coordinate_span(f, space, coords));
        if (row.dim() != 1) degenerate("positive plane is outside the chart");
        auto g = row.vectors().front();
        const T& top = at(space, g, lambda(i));
        if (f.is_zero(top)) degenerate("chart leading coefficient vanishes");
        for (int c = mu(i); c < lambda(i); ++c) x[static_cast<std::size_t>(c)] = f.div(at(space, g, c), top);
    }
    auto y = solve_ys(f, space.family(), mu, lambda, x);
    auto g = chart_vectors(f, space, mu, lambda, x, y);
    if (norm.flipped)
        for (auto& v : g) v = involution(space, v);
    return g;
}

}  // namespace

template <class F>
Subspace<F> reconstruct(const F& f, const BilinearSpace& space, const SignedSequence& mu,
                        const SignedSequence& lambda, const Vec<typename F::value_type>& v) {
    using T = typename F::value_type;
    if (mu.n() != space.n() || lambda.n() != space.n()) throw Error(Errc::DimensionMismatch, "n mismatch");
    auto s = skew(mu, lambda);
    if (!is_skew_row(s)) throw Error(Errc::BadInput, "λ/μ is not a skew row");
    auto fs = build_Z(s, space.family());
    if (!member_of_Z(f, space, fs, v)) throw Error(Errc::BadInput, "vector is not in Z");
    if (is_zero_vector(f, v)) throw Error(Errc::BadInput, "zero vector");
    try {
        std::vector<Vec<T>> basis;
        for (int j : s.fixed_indices) basis.push_back(unit_vector(f, space, s.mu(j)));
        for (const auto& d : s.components) {
            if (d.meets_first_column) {
                auto sub = first_column_subproblem(s);
                int l = sub.mu.n();
                BilinearSpace local(space.family(), l);
                auto w = zero_vector(f, local);
                for (int c = -l; c <= l; ++c)
                    if (local.has_coord(c)) at(local, w, c) = at(space, v, c);
                for (const auto& g : reconstruct_first_column(f, local, sub.mu, sub.lambda, w)) {
                    auto full = zero_vector(f, space);
                    for (int c = -l; c <= l; ++c)
                        if (local.has_coord(c)) at(space, full, c) = at(local, g, c);
                    basis.push_back(std::move(full));
                }
                continue;
            }
            Vec<T> plus = zero_vector(f, space);
            Vec<T> minus = zero_vector(f, space);
            std::vector<int> negatives;
            for (int c : d.col_set) {
                at(space, plus, c) = at(space, v, c);
                at(space, minus, -c) = at(space, v, -c);
                negatives.push_back(-c);
            }
            std::vector<std::pair<int, int>> intervals;
            for (int r : d.rows) intervals.emplace_back(s.mu(r), s.lambda(r));
            auto plane = solve_plane(f, space, intervals, plus, minus);
            auto rest = intersection(orthogonal_complement(plane), coordinate_span(f, space, negatives));
            for (auto& r : plane.vectors()) basis.push_back(std::move(r));
            for (auto& r : rest.vectors()) basis.push_back(std::move(r));
        }
        auto h = Subspace<F>::span(f, space, basis);
        if (h.dim() != space.n()) degenerate("reconstructed subspace has the wrong dimension");
        if (!is_isotropic(h)) degenerate("reconstructed subspace is not isotropic");
        if (!h.contains(v)) degenerate("reconstructed subspace misses v");
        if (!in_schubert(mu, h, false) || !in_schubert(complement(lambda), h, true))
            degenerate("reconstructed subspace is outside the intersection");
        return h;
    } catch (const Error& e) {
        if (e.code() == Errc::DegenerateVector) throw;
        degenerate(std::string("reconstruction failed: ") + e.what());
    }
}

template <class F>
Vec<typename F::value_type> normalize_line(const F& f, Vec<typename F::value_type> v) {
    for (const auto& c : v)
        if (!f.is_zero(c)) {
            auto inv = f.inv(c);
            for (auto& x : v) x *= inv;
            return v;
        }
    return v;
}

template <class F>
std::vector<Vec<typename F::value_type>> lines_in_K(const Subspace<F>& k, const FormSystem& fs,
                                                    const std::vector<Vec<typename F::value_type>>& candidates) {
    std::vector<Vec<typename F::value_type>> out;
    for (const auto& c : candidates) {
        if (is_zero_vector(k.field(), c) || !k.contains(c)) continue;
        if (!member_of_Z(k.field(), k.space(), fs, c)) continue;
        auto line = normalize_line(k.field(), c);
        if (std::find(out.begin(), out.end(), line) == out.end()) out.push_back(std::move(line));
    }
    return out;
}

std::vector<Vec<Fp>> lines_in_K(const Subspace<PrimeField>& k, const FormSystem& fs, std::uint64_t budget) {
    const auto& f = k.field();
    std::uint64_t p = f.characteristic();
    int d = k.dim();
    std::uint64_t points = 0, pw = 1;
    for (int i = 0; i < d; ++i) {
        points += pw;
        pw *= p;
        if (points > budget) throw Error(Errc::BudgetExceeded, "K has too many points to visit");
    }
    std::vector<Vec<Fp>> out;
    auto rows = k.vectors();
    // Coefficient vectors whose first nonzero entry is 1.
    for (int lead = 0; lead < d; ++lead) {
        std::uint64_t tail = 1;
        for (int i = lead + 1; i < d; ++i) tail *= p;
        for (std::uint64_t code = 0; code < tail; ++code) {
            auto v = rows[static_cast<std::size_t>(lead)];
            std::uint64_t rem = code;
            for (int i = lead + 1; i < d; ++i) {
                Fp c = f.from_int(static_cast<long>(rem % p));
                rem /= p;
                if (f.is_zero(c)) continue;
                const auto& r = rows[static_cast<std::size_t>(i)];
                for (std::size_t t = 0; t < v.size(); ++t) v[t] += c * r[t];
            }
            if (member_of_Z(f, k.space(), fs, v)) out.push_back(normalize_line(f, v));
        }
    }
    return out;
}

namespace {

using Key = std::vector<std::uint32_t>;

Key subspace_key(const Subspace<PrimeField>& h) {
    Key key;
    const auto& b = h.basis();
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) key.push_back(b(r, c).v);
    return key;
}

}  // namespace

IntersectionEnumerator::IntersectionEnumerator(const PrimeField& f, Family family, int n, std::uint64_t budget)
    : field_(f), space_(family, n), budget_(budget) {
    all_ = enumerate_maximal_isotropic(space_, field_, budget_);
    profiles_.reserve(all_.size());
    for (const auto& h : all_) profiles_.push_back(flag_profile(h));
}

const std::vector<Subspace<PrimeField>>& IntersectionEnumerator::intersection(const SignedSequence& mu,
                                                                              const SignedSequence& lambda) {
    auto key = std::make_pair(mu, lambda);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto lc = complement(lambda);
    std::vector<Subspace<PrimeField>> out;
    for (std::size_t i = 0; i < all_.size(); ++i)
        if (in_schubert(mu, profiles_[i], false) && in_schubert(lc, profiles_[i], true)) out.push_back(all_[i]);
    return cache_.emplace(key, std::move(out)).first->second;
}

TripleCountResult IntersectionEnumerator::triple_count(const SignedSequence& mu, const SignedSequence& lambda, int m,
                                                       std::mt19937_64& rng, int max_retries) {
    TripleCountResult res;
    res.prediction = triple_degree_prediction(space_.family(), mu, lambda, m);
    const auto& points = intersection(mu, lambda);
    bool skew_row = false;
    FormSystem fs;
    if (bruhat_leq(mu, lambda)) {
        auto s = skew(mu, lambda);
        skew_row = is_skew_row(s);
        if (skew_row) fs = build_Z(s, space_.family());
    }
    int kdim = space_.n() + 1 - m;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        res.retries = attempt;
        auto k = random_isotropic_subspace(space_, field_, kdim, rng);
        std::set<Key> enumerated;
        for (const auto& h : points)
            if (intersection_dim(h, k) >= 1) enumerated.insert(subspace_key(h));
        std::set<Key> rebuilt;
        bool degenerate_sample = false;
        if (skew_row) {
            for (const auto& v : lines_in_K(k, fs, budget_)) {
                try {
                    rebuilt.insert(subspace_key(reconstruct(field_, space_, mu, lambda, v)));
                } catch (const Error& e) {
                    if (e.code() != Errc::DegenerateVector) throw;
                    degenerate_sample = true;
                    break;
                }
            }
        }
        res.enumerated = enumerated.size();
        res.reconstructed = rebuilt.size();
        std::ostringstream diag;
        diag << "attempt " << attempt << ": enumerated " << enumerated.size();
        if (degenerate_sample) {
            ++res.degenerate_samples;
            diag << ", degenerate line in K";
            res.diagnostics.push_back(diag.str());
            continue;
        }
        diag << ", reconstructed " << rebuilt.size();
        if (enumerated == rebuilt && BigInt(static_cast<unsigned long>(enumerated.size())) == res.prediction) {
            res.count = enumerated.size();
            res.stable = true;
            return res;
        }
        res.diagnostics.push_back(diag.str());
    }
    return res;
}

TripleCountResult triple_count(IntersectionEnumerator& e, const SignedSequence& mu, const SignedSequence& lambda,
                               int m, std::mt19937_64& rng, int max_retries) {
    auto res = e.triple_count(mu, lambda, m, rng, max_retries);
    if (!res.stable) {
        std::string detail = "count for " + mu.to_string() + " → " + lambda.to_string() + " never settled";
        if (!res.diagnostics.empty()) detail += " (" + res.diagnostics.back() + ")";
        throw Error(Errc::NeverStabilized, detail);
    }
    return res;
}

template <class F>
Subspace<F> transfer_to_symplectic(const Subspace<F>& h, const SignedSequence& mu, const SignedSequence& lambda) {
    const auto& src = h.space();
    if (src.family() != Family::B) throw Error(Errc::FamilyMismatch, "transfer starts in family B");
    auto s = skew(mu, lambda);
    for (const auto& d : s.components)
        if (d.meets_first_column) throw Error(Errc::FirstColumnComponent, "shape has a first-column component");
    if (!in_schubert(mu, h, false) || !in_schubert(complement(lambda), h, true))
        throw Error(Errc::NotInIntersection, "H is not in X_μ ∩ X'_{λ^c}");
    const auto& f = h.field();
    BilinearSpace dst(Family::C, src.n());
    std::vector<Vec<typename F::value_type>> rows;
    for (const auto& v : h.vectors()) {
        auto w = zero_vector(f, dst);
        for (int c = -src.n(); c <= src.n(); ++c)
            if (c != 0) at(dst, w, c) = at(src, v, c);
        rows.push_back(std::move(w));
    }
    return Subspace<F>::span(f, dst, rows);
}

#define ISOPIERI_INSTANTIATE(F)                                                                                    \
    template F::value_type beta_value(const F&, const BilinearSpace&, const std::vector<int>&,                    \
                                      const Vec<F::value_type>&);                                                  \
    template bool member_of_Z(const F&, const BilinearSpace&, const FormSystem&, const Vec<F::value_type>&);       \
    template Vec<F::value_type> sample_Z_vector(const F&, const BilinearSpace&, const FormSystem&,                 \
                                                const SkewShape&, std::mt19937_64&);                               \
    template std::vector<Vec<F::value_type>> chart_vectors(const F&, const BilinearSpace&, const SignedSequence&, \
                                                           const SignedSequence&,                                  \
                                                           const std::vector<F::value_type>&,                      \
                                                           const std::vector<F::value_type>&);                     \
    template std::vector<F::value_type> solve_ys(const F&, Family, const SignedSequence&, const SignedSequence&,   \
                                                 const std::vector<F::value_type>&);                               \
    template Subspace<F> reconstruct(const F&, const BilinearSpace&, const SignedSequence&,                        \
                                     const SignedSequence&, const Vec<F::value_type>&);                            \
    template Vec<F::value_type> normalize_line(const F&, Vec<F::value_type>);                                      \
    template std::vector<Vec<F::value_type>> lines_in_K(const Subspace<F>&, const FormSystem&,                     \
                                                        const std::vector<Vec<F::value_type>>&);                   \
    template Subspace<F> transfer_to_symplectic(const Subspace<F>&, const SignedSequence&, const SignedSequence&);

ISOPIERI_INSTANTIATE(PrimeField)
ISOPIERI_INSTANTIATE(RationalField)

#undef ISOPIERI_INSTANTIATE

}  // namespace isopieri
