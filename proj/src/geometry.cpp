#include "isopieri/geometry.hpp"

namespace isopieri {

BilinearSpace::BilinearSpace(Family family, int n) : family_(family), n_(n) {
    if (n < 1) throw Error(Errc::OutOfRange, "n must be positive");
}

int BilinearSpace::index(int coord) const {
    if (!has_coord(coord)) throw Error(Errc::OutOfRange, "no basis vector with index " + std::to_string(coord));
    if (family_ == Family::B) return coord + n_;
    return coord < 0 ? coord + n_ : coord + n_ - 1;
}

int BilinearSpace::coord(int index) const {
    if (family_ == Family::B) return index - n_;
    return index < n_ ? index - n_ : index - n_ + 1;
}

std::string BilinearSpace::basis_name(int coord) const {
    return std::string(family_ == Family::B ? "e" : "f") + std::to_string(coord);
}

bool in_schubert(const SignedSequence& kappa, const FlagProfile& profile, bool primed) {
    int n = kappa.n();
    if (profile.n != n) throw Error(Errc::DimensionMismatch, "index and space have different n");
    if (!primed) {
        for (int j = 1; j <= n; ++j)
            if (profile.upper_dim(kappa(j)) < j) return false;
        return true;
    }
    SignedSequence lambda = complement(kappa);
    for (int j = 1; j <= n; ++j)
        if (profile.lower_dim(lambda(j)) < n + 1 - j) return false;
    return true;
}

namespace {

void enumerate_from(const Subspace<PrimeField>& u, int j, std::uint64_t& count,
                    const std::function<void(const Subspace<PrimeField>&)>& visit) {
    const auto& space = u.space();
    if (j > space.n()) {
        ++count;
        visit(u);
        return;
    }
    enumerate_from(detail::extend_containing(u, j), j + 1, count, visit);
    const auto& f = u.field();
    std::vector<int> free = detail::free_coordinates(u, j);
    std::size_t k = detail::generic_parameter_count(space.family(), free.size());
    Vec<Fp> values(k, f.zero());
    for (;;) {
        enumerate_from(detail::extend_generic(u, j, free, values), j + 1, count, visit);
        std::size_t pos = 0;
        while (pos < k) {
            values[pos] = values[pos] + f.one();
            if (!f.is_zero(values[pos])) break;
            ++pos;
        }
        if (pos == k) break;
    }
}

bool take_containing_branch(const PrimeField& f, int j, std::mt19937_64& rng) {
    std::uint64_t pj = 1;
    for (int i = 0; i < j; ++i) pj *= f.characteristic();
    std::uniform_int_distribution<std::uint64_t> dist(0, pj);
    return dist(rng) == 0;
}

bool take_containing_branch(const RationalField&, int, std::mt19937_64&) { return false; }

}  // namespace

void enumerate_maximal_isotropic(const BilinearSpace& space, const PrimeField& f, std::uint64_t budget,
                                 const std::function<void(const Subspace<PrimeField>&)>& visit) {
    std::uint64_t expected = maximal_isotropic_count(f.characteristic(), space.n());
    if (expected > budget)
        throw Error(Errc::BudgetExceeded, std::to_string(expected) + " subspaces exceed budget " +
                                              std::to_string(budget));
    std::uint64_t count = 0;
    Subspace<PrimeField> start(f, space, Matrix<Fp>(0, space.dim(), f.zero()));
    enumerate_from(start, 1, count, visit);
    if (count != expected) throw std::logic_error("maximal isotropic enumeration produced a wrong count");
}

std::vector<Subspace<PrimeField>> enumerate_maximal_isotropic(const BilinearSpace& space, const PrimeField& f,
                                                              std::uint64_t budget) {
    std::vector<Subspace<PrimeField>> out;
    enumerate_maximal_isotropic(space, f, budget, [&](const Subspace<PrimeField>& h) { out.push_back(h); });
    return out;
}

template <class F>
Subspace<F> random_maximal_isotropic(const BilinearSpace& space, const F& f, std::mt19937_64& rng) {
    Subspace<F> u(f, space, Matrix<typename F::value_type>(0, space.dim(), f.zero()));
    for (int j = 1; j <= space.n(); ++j) {
        if (take_containing_branch(f, j, rng)) {
            u = detail::extend_containing(u, j);
            continue;
        }
        std::vector<int> free = detail::free_coordinates(u, j);
        Vec<typename F::value_type> values;
        for (std::size_t i = 0; i < detail::generic_parameter_count(space.family(), free.size()); ++i)
            values.push_back(f.random(rng));
        u = detail::extend_generic(u, j, free, values);
    }
    return u;
}

template <class F>
Subspace<F> random_isotropic_subspace(const BilinearSpace& space, const F& f, int d, std::mt19937_64& rng) {
    if (d < 0 || d > space.n()) throw Error(Errc::OutOfRange, "isotropic subspaces have dimension ≤ n");
    Subspace<F> h = random_maximal_isotropic(space, f, rng);
    for (;;) {
        std::vector<Vec<typename F::value_type>> rows;
        for (int r = 0; r < d; ++r) {
            auto v = zero_vector(f, space);
            for (int s = 0; s < h.dim(); ++s) {
                auto c = f.random(rng);
                for (int i = 0; i < space.dim(); ++i) v[static_cast<std::size_t>(i)] += c * h.basis()(s, i);
            }
            rows.push_back(v);
        }
        Subspace<F> k = Subspace<F>::span(f, space, rows);
        if (k.dim() == d) return k;
    }
}

template Subspace<PrimeField> random_maximal_isotropic(const BilinearSpace&, const PrimeField&, std::mt19937_64&);
template Subspace<RationalField> random_maximal_isotropic(const BilinearSpace&, const RationalField&,
                                                          std::mt19937_64&);
template Subspace<PrimeField> random_isotropic_subspace(const BilinearSpace&, const PrimeField&, int,
                                                        std::mt19937_64&);
template Subspace<RationalField> random_isotropic_subspace(const BilinearSpace&, const RationalField&, int,
                                                           std::mt19937_64&);

}  // namespace isopieri
