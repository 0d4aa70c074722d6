#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "isopieri/geometry.hpp"
#include "isopieri/pieri_engine.hpp"
#include "isopieri/shifted_shapes.hpp"

namespace isopieri {

/// The linear forms α (a coordinate that must vanish) and quadratic forms β_d
/// (one per col_set) cutting out Z_{λ/μ}.
struct FormSystem {
    Family family = Family::B;
    int n = 0;
    std::vector<int> alphas;              // coordinates c with α = x_c
    std::vector<std::vector<int>> betas;  // col_set of each β_d
    bool has_first_column_beta = false;   // family B only
};

FormSystem build_Z(const SkewShape& s, Family family);

/// β_d(v). Family B: the restriction of β to the coordinates ±col_set,
/// 2Σ x_c x_{-c} (+ x_0² if 0 ∈ col_set). Family C: Σ x_c x_{-c}.
template <class F>
typename F::value_type beta_value(const F& f, const BilinearSpace& space, const std::vector<int>& col_set,
                                  const Vec<typename F::value_type>& v);

/// Throws std::logic_error if v satisfies every form of a family-B system
/// without being isotropic.
template <class F>
bool member_of_Z(const F& f, const BilinearSpace& space, const FormSystem& fs, const Vec<typename F::value_type>& v);

template <class F>
Vec<typename F::value_type> sample_Z_vector(const F& f, const BilinearSpace& space, const FormSystem& fs,
                                            const SkewShape& s, std::mt19937_64& rng);

/// Coordinates of the mutually orthogonal pieces of the space that H splits along:
/// fixed rows (with e_0 when 0 is fixed in family B), the first-column block
/// [-l, l], and ±col_set of every other component.
struct Blocks {
    std::vector<int> fixed;
    std::vector<int> first_column;
    std::vector<std::vector<int>> components;
    int fixed_dim = 0;
    int first_column_dim = 0;
    std::vector<int> component_dims;
};

Blocks orthogonal_blocks(const SkewShape& s, Family family);

struct NormalizedPair {
    SignedSequence mu;
    SignedSequence lambda;
    bool flipped = false;  // conjugate vectors and subspaces by e_c ↦ e_{-c}
};

/// For a single first-column component without fixed rows, returns a pair whose
/// row k+1 has length one, swapping to (λ^c, μ^c) when needed.
NormalizedPair normalize_last_row(const SignedSequence& mu, const SignedSequence& lambda);

/// The vectors g_1..g_n of the local chart for a single first-column component
/// with λ_{k+1} = 1. x is indexed 0..n-1 and y 0..n (y_0, y_1 unused).
template <class F>
std::vector<Vec<typename F::value_type>> chart_vectors(const F& f, const BilinearSpace& space,
                                                       const SignedSequence& mu, const SignedSequence& lambda,
                                                       const std::vector<typename F::value_type>& x,
                                                       const std::vector<typename F::value_type>& y);

/// Solves the isotropy equations β(g_i, g_j) = 0 (i ≤ k < j) for y_2..y_n.
/// Throws SingularPivot when a needed coefficient vanishes, Stuck otherwise.
template <class F>
std::vector<typename F::value_type> solve_ys(const F& f, Family family, const SignedSequence& mu,
                                             const SignedSequence& lambda,
                                             const std::vector<typename F::value_type>& x);

/// The unique H ∈ X_μ ∩ X'_{λ^c} with v ∈ H. Throws DegenerateVector when v
/// is not general enough for the construction.
template <class F>
Subspace<F> reconstruct(const F& f, const BilinearSpace& space, const SignedSequence& mu,
                        const SignedSequence& lambda, const Vec<typename F::value_type>& v);

/// Scales v so that its first nonzero coordinate is 1.
template <class F>
Vec<typename F::value_type> normalize_line(const F& f, Vec<typename F::value_type> v);

/// Lines of K inside Z, found among caller-supplied candidate vectors.
template <class F>
std::vector<Vec<typename F::value_type>> lines_in_K(const Subspace<F>& k, const FormSystem& fs,
                                                    const std::vector<Vec<typename F::value_type>>& candidates);

/// Lines of K inside Z over F_p, by visiting every projective point of K.
std::vector<Vec<Fp>> lines_in_K(const Subspace<PrimeField>& k, const FormSystem& fs, std::uint64_t budget);

struct TripleCountResult {
    BigInt prediction = 0;
    std::uint64_t count = 0;
    int retries = 0;
    bool stable = false;
    std::uint64_t enumerated = 0;     // last K: points found by enumeration
    std::uint64_t reconstructed = 0;  // last K: points found through lines of K
    int degenerate_samples = 0;
    std::vector<std::string> diagnostics;
};

/// Enumerates every maximal isotropic subspace over F_p once and answers
/// Schubert-intersection queries against that list.
class IntersectionEnumerator {
public:
    IntersectionEnumerator(const PrimeField& f, Family family, int n, std::uint64_t budget);

    const PrimeField& field() const { return field_; }
    const BilinearSpace& space() const { return space_; }
    std::size_t size() const { return all_.size(); }

    /// X_μ ∩ X'_{λ^c} (Y in family C), cached per pair.
    const std::vector<Subspace<PrimeField>>& intersection(const SignedSequence& mu, const SignedSequence& lambda);

    /// Compares enumeration with reconstruction through the lines of random K,
    /// resampling K up to max_retries times until both equal the prediction.
    TripleCountResult triple_count(const SignedSequence& mu, const SignedSequence& lambda, int m,
                                   std::mt19937_64& rng, int max_retries);

private:
    PrimeField field_;
    BilinearSpace space_;
    std::uint64_t budget_;
    std::vector<Subspace<PrimeField>> all_;
    std::vector<FlagProfile> profiles_;
    std::map<std::pair<SignedSequence, SignedSequence>, std::vector<Subspace<PrimeField>>> cache_;
};

/// Throws NeverStabilized if the count does not settle within max_retries.
TripleCountResult triple_count(IntersectionEnumerator& e, const SignedSequence& mu, const SignedSequence& lambda,
                               int m, std::mt19937_64& rng, int max_retries = 20);

/// e_i ↦ f_i (i ≠ 0), e_0 ↦ 0, for shapes without a first-column component.
template <class F>
Subspace<F> transfer_to_symplectic(const Subspace<F>& h, const SignedSequence& mu, const SignedSequence& lambda);

}  // namespace isopieri
