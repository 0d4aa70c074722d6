#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "isopieri/common.hpp"
#include "isopieri/field.hpp"
#include "isopieri/matrix.hpp"
#include "isopieri/shifted_shapes.hpp"

namespace isopieri {

/// V (family B): basis e_{-n..n}, β(e_i, e_j) = [i = -j].
/// W (family C): basis f_{-n..-1, 1..n}, β(f_i, f_j) = sign(j)·[i = -j].
/// Vectors are stored densely with coordinates in increasing signed order.
class BilinearSpace {
public:
    BilinearSpace(Family family, int n);

    Family family() const { return family_; }
    int n() const { return n_; }
    int dim() const { return family_ == Family::B ? 2 * n_ + 1 : 2 * n_; }
    bool has_coord(int c) const { return c >= -n_ && c <= n_ && (c != 0 || family_ == Family::B); }
    int index(int coord) const;
    int coord(int index) const;
    /// β(e_c, e_{-c}).
    int pairing_sign(int coord) const { return family_ == Family::B ? 1 : (coord < 0 ? 1 : -1); }
    std::string basis_name(int coord) const;

    bool operator==(const BilinearSpace&) const = default;

private:
    Family family_;
    int n_;
};

template <class T>
using Vec = std::vector<T>;

template <class F>
Vec<typename F::value_type> zero_vector(const F& f, const BilinearSpace& space) {
    return Vec<typename F::value_type>(static_cast<std::size_t>(space.dim()), f.zero());
}

template <class F>
Vec<typename F::value_type> unit_vector(const F& f, const BilinearSpace& space, int coord) {
    auto v = zero_vector(f, space);
    v[static_cast<std::size_t>(space.index(coord))] = f.one();
    return v;
}

template <class T>
const T& at(const BilinearSpace& space, const Vec<T>& v, int coord) {
    return v[static_cast<std::size_t>(space.index(coord))];
}

template <class T>
T& at(const BilinearSpace& space, Vec<T>& v, int coord) {
    return v[static_cast<std::size_t>(space.index(coord))];
}

template <class F>
typename F::value_type form_value(const F& f, const BilinearSpace& space, const Vec<typename F::value_type>& u,
                                  const Vec<typename F::value_type>& v) {
    if (static_cast<int>(u.size()) != space.dim() || static_cast<int>(v.size()) != space.dim())
        throw Error(Errc::DimensionMismatch, "vector length does not match the space");
    using T = typename F::value_type;
    T total = f.zero();
    for (int c = -space.n(); c <= space.n(); ++c) {
        if (!space.has_coord(c)) continue;
        const T& a = at(space, u, c);
        if (f.is_zero(a)) continue;
        T term = a * at(space, v, -c);
        if (space.pairing_sign(c) > 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

template <class F>
bool is_zero_vector(const F& f, const Vec<typename F::value_type>& v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

/// Subspace stored by its canonical reduced row echelon basis.
template <class F>
class Subspace {
public:
    using T = typename F::value_type;

    Subspace(const F& field, const BilinearSpace& space, Matrix<T> rows)
        : field_(field), space_(space), basis_(std::move(rows)) {
        if (basis_.cols() != space.dim()) throw Error(Errc::DimensionMismatch, "matrix width ≠ ambient dimension");
        auto pivots = rref(field_, basis_);
        basis_.truncate_rows(static_cast<int>(pivots.size()));
        pivots_ = std::move(pivots);
    }

    static Subspace span(const F& field, const BilinearSpace& space, const std::vector<Vec<T>>& vectors) {
        return Subspace(field, space, Matrix<T>::from_rows(vectors, space.dim(), field.zero()));
    }

    const F& field() const { return field_; }
    const BilinearSpace& space() const { return space_; }
    const Matrix<T>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    int dim() const { return basis_.rows(); }
    std::vector<Vec<T>> vectors() const {
        std::vector<Vec<T>> out;
        for (int r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
        return out;
    }

    bool contains(const Vec<T>& v) const {
        Matrix<T> m = basis_;
        m.append_row(v);
        return rank(field_, m) == dim();
    }

    /// dim(S ∩ span{e_c : lo ≤ c ≤ hi}).
    int dim_in_coordinate_range(int lo, int hi) const {
        Matrix<T> outside(dim(), space_.dim(), field_.zero());
        for (int r = 0; r < dim(); ++r)
            for (int i = 0; i < space_.dim(); ++i) {
                int c = space_.coord(i);
                if (c < lo || c > hi) outside(r, i) = basis_(r, i);
            }
        return dim() - rank(field_, outside);
    }

    bool operator==(const Subspace& o) const { return space_ == o.space_ && basis_ == o.basis_; }

private:
    F field_;
    BilinearSpace space_;
    Matrix<T> basis_;
    std::vector<int> pivots_;
};

template <class F>
bool is_isotropic(const Subspace<F>& s) {
    auto vs = s.vectors();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i; j < vs.size(); ++j)
            if (!s.field().is_zero(form_value(s.field(), s.space(), vs[i], vs[j]))) return false;
    return true;
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
    auto rows = a.vectors();
    for (auto& v : b.vectors()) rows.push_back(v);
    return Subspace<F>::span(a.field(), a.space(), rows);
}

template <class F>
int intersection_dim(const Subspace<F>& a, const Subspace<F>& b) {
    if (!(a.space() == b.space())) throw Error(Errc::DimensionMismatch, "subspaces of different spaces");
    return a.dim() + b.dim() - sum(a, b).dim();
}

template <class F>
Subspace<F> orthogonal_complement(const Subspace<F>& s) {
    const auto& f = s.field();
    const auto& space = s.space();
    // Row r of the system is the functional x ↦ β(b_r, x).
    Matrix<typename F::value_type> m(s.dim(), space.dim(), f.zero());
    for (int r = 0; r < s.dim(); ++r)
        for (int i = 0; i < space.dim(); ++i) {
            int c = space.coord(i);
            const auto& a = s.basis()(r, space.index(-c));
            // β(b, e_c) = b_{-c} · β(e_{-c}, e_c)
            m(r, i) = space.pairing_sign(-c) > 0 ? a : -a;
        }
    return Subspace<F>(f, space, nullspace(f, m));
}

template <class F>
Subspace<F> coordinate_span(const F& f, const BilinearSpace& space, const std::vector<int>& coords) {
    std::vector<Vec<typename F::value_type>> rows;
    for (int c : coords) rows.push_back(unit_vector(f, space, c));
    return Subspace<F>::span(f, space, rows);
}

template <class F>
Subspace<F> intersection(const Subspace<F>& a, const Subspace<F>& b) {
    // x = Σ s_i a_i = Σ t_j b_j: solve for (s, t) in the kernel of [A^T | -B^T].
    const auto& f = a.field();
    int n = a.space().dim();
    Matrix<typename F::value_type> m(n, a.dim() + b.dim(), f.zero());
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r < a.dim(); ++r) m(i, r) = a.basis()(r, i);
        for (int r = 0; r < b.dim(); ++r) m(i, a.dim() + r) = -b.basis()(r, i);
    }
    auto ker = nullspace(f, m);
    std::vector<Vec<typename F::value_type>> rows;
    for (int k = 0; k < ker.rows(); ++k) {
        auto v = zero_vector(f, a.space());
        for (int r = 0; r < a.dim(); ++r)
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] += ker(k, r) * a.basis()(r, i);
        rows.push_back(v);
    }
    return Subspace<F>::span(f, a.space(), rows);
}

/// e_c ↦ e_{-c} (f_c ↦ f_{-c}); preserves isotropy in both families.
template <class T>
Vec<T> involution(const BilinearSpace& space, const Vec<T>& v) {
    Vec<T> out(v.size(), v.front());
    for (int i = 0; i < space.dim(); ++i) out[static_cast<std::size_t>(space.index(-space.coord(i)))] = v[static_cast<std::size_t>(i)];
    return out;
}

template <class F>
Subspace<F> involution(const Subspace<F>& s) {
    std::vector<Vec<typename F::value_type>> rows;
    for (const auto& v : s.vectors()) rows.push_back(involution(s.space(), v));
    return Subspace<F>::span(s.field(), s.space(), rows);
}

/// dim H ∩ ⟨e_a..e_n⟩ and dim H ∩ ⟨e_{-n}..e_a⟩ for every coordinate a, so that
/// Schubert conditions from both flags become table lookups.
struct FlagProfile {
    int n = 0;
    std::vector<int> upper;  // indexed by a + n
    std::vector<int> lower;  // indexed by a + n
    int upper_dim(int a) const { return upper[static_cast<std::size_t>(a + n)]; }
    int lower_dim(int a) const { return lower[static_cast<std::size_t>(a + n)]; }
};

template <class F>
FlagProfile flag_profile(const Subspace<F>& h) {
    int n = h.space().n();
    FlagProfile p;
    p.n = n;
    p.upper.assign(static_cast<std::size_t>(2 * n + 1), 0);
    p.lower.assign(static_cast<std::size_t>(2 * n + 1), 0);
    for (int a = -n; a <= n; ++a) {
        p.upper[static_cast<std::size_t>(a + n)] = h.dim_in_coordinate_range(a, n);
        p.lower[static_cast<std::size_t>(a + n)] = h.dim_in_coordinate_range(-n, a);
    }
    return p;
}

/// H ∈ X_κ (primed = false) or H ∈ X'_κ (primed = true), read off a profile.
bool in_schubert(const SignedSequence& kappa, const FlagProfile& profile, bool primed);

template <class F>
bool in_schubert(const SignedSequence& kappa, const Subspace<F>& h, bool primed) {
    if (kappa.n() != h.space().n()) throw Error(Errc::DimensionMismatch, "index and space have different n");
    if (h.dim() != h.space().n()) throw Error(Errc::WrongDimension, "H must have dimension n");
    return in_schubert(kappa, flag_profile(h), primed);
}

template <class F>
bool in_special(const Subspace<F>& k, const Subspace<F>& h) {
    return intersection_dim(k, h) >= 1;
}

inline std::uint64_t maximal_isotropic_count(std::uint64_t p, int n) {
    std::uint64_t total = 1, pw = 1;
    for (int i = 1; i <= n; ++i) {
        pw *= p;
        total *= 1 + pw;
    }
    return total;
}

namespace detail {

// Coordinates of V_{j-1} = ⟨e_c : |c| < j⟩ that are not pivots of U; vectors
// supported there form a complement of U in V_{j-1}.
template <class F>
std::vector<int> free_coordinates(const Subspace<F>& u, int j) {
    const auto& space = u.space();
    std::vector<bool> pivot(static_cast<std::size_t>(space.dim()), false);
    for (int p : u.pivots()) pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> out;
    for (int c = -(j - 1); c <= j - 1; ++c)
        if (space.has_coord(c) && !pivot[static_cast<std::size_t>(space.index(c))]) out.push_back(c);
    return out;
}

// Every maximal isotropic H of V_j either contains e_j, and then H = U ⊕ ⟨e_j⟩,
// or meets e_j^⊥ in a graph over a maximal isotropic U of V_{j-1}:
// H = {u − β(u0, u) e_j : u ∈ U} ⊕ ⟨e_{-j} + a e_j + u0⟩ with u0 in the
// complement of U, where a = −β(u0, u0)/2 (family B) or a is free (family C).
// `values` holds u0 on the free coordinates followed by a (ignored for B).
template <class F>
Subspace<F> extend_generic(const Subspace<F>& u, int j, const std::vector<int>& free_coords,
                           const Vec<typename F::value_type>& values) {
    using T = typename F::value_type;
    const auto& f = u.field();
    const auto& space = u.space();
    Vec<T> u0 = zero_vector(f, space);
    for (std::size_t i = 0; i < free_coords.size(); ++i) at(space, u0, free_coords[i]) = values[i];
    T a = space.family() == Family::B ? f.div(-form_value(f, space, u0, u0), f.from_int(2)) : values.back();
    std::vector<Vec<T>> rows;
    for (auto r : u.vectors()) {
        at(space, r, j) = -form_value(f, space, u0, r);
        rows.push_back(std::move(r));
    }
    Vec<T> w = u0;
    at(space, w, -j) = f.one();
    at(space, w, j) = a;
    rows.push_back(std::move(w));
    return Subspace<F>::span(f, space, rows);
}

template <class F>
Subspace<F> extend_containing(const Subspace<F>& u, int j) {
    auto rows = u.vectors();
    rows.push_back(unit_vector(u.field(), u.space(), j));
    return Subspace<F>::span(u.field(), u.space(), rows);
}

inline std::size_t generic_parameter_count(Family family, std::size_t free_count) {
    return family == Family::C ? free_count + 1 : free_count;
}

}  // namespace detail

/// Visits every maximal isotropic subspace of V (or W) over F_p exactly once.
/// Throws BudgetExceeded if ∏(1 + p^i) exceeds budget.
void enumerate_maximal_isotropic(const BilinearSpace& space, const PrimeField& f, std::uint64_t budget,
                                 const std::function<void(const Subspace<PrimeField>&)>& visit);

std::vector<Subspace<PrimeField>> enumerate_maximal_isotropic(const BilinearSpace& space, const PrimeField& f,
                                                              std::uint64_t budget);

template <class F>
Subspace<F> random_maximal_isotropic(const BilinearSpace& space, const F& f, std::mt19937_64& rng);

/// A random isotropic d-plane: a random d-dimensional subspace of a random
/// maximal isotropic subspace.
template <class F>
Subspace<F> random_isotropic_subspace(const BilinearSpace& space, const F& f, int d, std::mt19937_64& rng);

}  // namespace isopieri
