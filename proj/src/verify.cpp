#include "isopieri/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "isopieri/fixtures.hpp"
#include "isopieri/schur_oracle.hpp"
#include "isopieri/triple_intersection.hpp"

namespace isopieri {

namespace {

constexpr std::size_t kKeptFailures = 20;

int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

nlohmann::json big_json(const BigInt& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

std::string family_name(Family f) { return std::string(to_string(f)); }

std::vector<int> matrix_key(const Subspace<PrimeField>& h) {
    std::vector<int> key;
    const auto& b = h.basis();
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) key.push_back(static_cast<int>(b(r, c).v));
    return key;
}

}  // namespace

void VerifyReport::fail(const std::string& message) {
    passed = false;
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back(message);
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["passed"] = passed;
    j["instances"] = instances;
    j["failure_count"] = failure_count;
    j["failures"] = failures;
    j["details"] = details;
    return j;
}

nlohmann::json expansion_json(const ClassExpansion& e) {
    nlohmann::json j;
    j["family"] = family_name(e.family());
    j["n"] = e.n();
    j["terms"] = nlohmann::json::array();
    for (const auto& [lambda, c] : e.ordered_terms())
        j["terms"].push_back({{"lambda", lambda.entries()}, {"coeff", big_json(c)}});
    return j;
}

VerifyReport verify_expansion_fixtures() {
    VerifyReport r;
    r.name = "expansion-fixtures";
    for (const auto& fx : expansion_fixtures()) {
        ++r.instances;
        auto got = pieri(fx.family, fx.mu, fx.m);
        r.details[family_name(fx.family)] = expansion_json(got);
        if (!(got == fx.expected))
            r.fail(family_name(fx.family) + " " + fx.mu.to_string() + " m=" + std::to_string(fx.m) +
                   ": expansion differs from the fixture");
    }
    return r;
}

VerifyReport verify_pieri_oracle(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "pieri-oracle";
    int n_max = or_default(opt.n_max, 5);
    SchurOracle oracle;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& mu : all_sequences(n))
            for (int m = 1; m <= n; ++m)
                for (Family f : opt.families) {
                    ++r.instances;
                    if (!(oracle.product(f, mu, m) == pieri(f, mu, m)))
                        r.fail(family_name(f) + " " + mu.to_string() + " m=" + std::to_string(m));
                }
    r.details["n_max"] = n_max;
    return r;
}

VerifyReport verify_duality(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "duality";
    int n_max = or_default(opt.n_max, opt.extended ? 4 : 3);
    std::uint32_t p = opt.p ? opt.p : 3;
    PrimeField field(p);
    for (Family f : opt.families)
        for (int n = 1; n <= n_max; ++n) {
            IntersectionEnumerator e(field, f, n, opt.budget);
            std::uint64_t points = 0;
            for (const auto& mu : all_sequences(n))
                for (const auto& lambda : all_sequences(n)) {
                    if (codim(mu) != codim(lambda)) continue;
                    ++r.instances;
                    auto count = e.intersection(mu, lambda).size();
                    points += count;
                    std::size_t expected = mu == lambda ? 1 : 0;
                    if (count != expected)
                        r.fail(family_name(f) + " " + mu.to_string() + " vs " + lambda.to_string() + ": " +
                               std::to_string(count) + " points");
                }
            r.details[family_name(f) + std::to_string(n)] = {{"subspaces", e.size()}, {"points", points}};
        }
    r.details["p"] = p;
    return r;
}

VerifyReport verify_triple(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "triple";
    int n = or_default(opt.n_max, 3);
    std::uint32_t p = opt.p ? opt.p : 5;
    PrimeField field(p);
    nlohmann::json cases = nlohmann::json::array();
    std::uint64_t stream = 0;
    int total_retries = 0;
    for (Family f : opt.families) {
        IntersectionEnumerator e(field, f, n, opt.budget);
        for (const auto& mu : all_sequences(n))
            for (int m = 1; m <= n; ++m)
                for (const auto& lambda : all_sequences(n)) {
                    if (codim(lambda) != codim(mu) + m) continue;
                    ++r.instances;
                    std::mt19937_64 rng(split_seed(opt.seed, stream++));
                    auto res = e.triple_count(mu, lambda, m, rng, opt.retries);
                    total_retries += res.retries;
                    cases.push_back({{"family", family_name(f)},
                                     {"mu", mu.entries()},
                                     {"lambda", lambda.entries()},
                                     {"m", m},
                                     {"prediction", big_json(res.prediction)},
                                     {"count", res.count},
                                     {"stable", res.stable},
                                     {"retries", res.retries},
                                     {"degenerate_samples", res.degenerate_samples}});
                    if (!res.stable) {
                        std::string msg = family_name(f) + " " + mu.to_string() + " -> " + lambda.to_string() +
                                          " m=" + std::to_string(m) + ": never stabilized at " +
                                          res.prediction.get_str();
                        if (!res.diagnostics.empty()) msg += " (" + res.diagnostics.back() + ")";
                        r.fail(msg);
                    }
                }
    }
    r.details["n"] = n;
    r.details["p"] = p;
    r.details["seed"] = opt.seed;
    r.details["total_retries"] = total_retries;
    r.details["cases"] = cases;
    return r;
}

VerifyReport verify_column_counts(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "column-counts";
    int n_max = or_default(opt.n_max, 6);
    for (int n = 1; n <= n_max; ++n) {
        auto all = all_sequences(n);
        for (const auto& mu : all)
            for (const auto& lambda : all) {
                if (!bruhat_leq(mu, lambda)) continue;
                ++r.instances;
                auto s = skew(mu, lambda);
                auto c = counts(s);
                int cols = occupied_columns(s);
                if (n + 1 != c.phi + c.delta + cols)
                    r.fail(mu.to_string() + " -> " + lambda.to_string() + ": n+1 != phi+delta+columns");
                if (n != c.psi + c.epsilon + cols)
                    r.fail(mu.to_string() + " -> " + lambda.to_string() + ": n != psi+epsilon+columns");
            }
    }
    r.details["n_max"] = n_max;
    return r;
}

namespace {

// Evaluates every quadratic form on basis vectors and pairwise sums of `plane`,
// which decides whether all of them vanish identically there.
bool forms_vanish_on(const RationalField& f, const BilinearSpace& space, const FormSystem& fs,
                     const std::vector<Vec<mpq_class>>& plane) {
    std::vector<Vec<mpq_class>> probes = plane;
    for (std::size_t i = 0; i < plane.size(); ++i)
        for (std::size_t j = i + 1; j < plane.size(); ++j) {
            auto s = plane[i];
            for (std::size_t t = 0; t < s.size(); ++t) s[t] += plane[j][t];
            probes.push_back(s);
        }
    for (const auto& v : probes)
        for (const auto& cols : fs.betas)
            if (!f.is_zero(beta_value(f, space, cols, v))) return false;
    return true;
}

}  // namespace

VerifyReport verify_rational_fixture(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "rational-fixture";
    RationalField f;
    for (Family fam : opt.families) {
        auto fx = two_line_fixture(fam);
        BilinearSpace space(fam, fx.n);
        auto k = Subspace<RationalField>::span(f, space, fx.k_rows);
        nlohmann::json d;
        std::string tag = family_name(fam) + ": ";
        ++r.instances;
        d["k_isotropic"] = is_isotropic(k);
        d["k_dim"] = k.dim();
        if (!is_isotropic(k) || k.dim() != fx.n + 1 - fx.m) r.fail(tag + "K is not an isotropic 3-plane");

        auto s = skew(fx.mu, fx.lambda);
        auto fs = build_Z(s, fam);
        std::vector<Vec<mpq_class>> candidates = fx.k_rows;
        for (std::size_t i = 0; i < fx.k_rows.size(); ++i)
            for (std::size_t j = i + 1; j < fx.k_rows.size(); ++j) {
                auto v = fx.k_rows[i];
                for (std::size_t t = 0; t < v.size(); ++t) v[t] += fx.k_rows[j][t];
                candidates.push_back(v);
            }
        auto lines = lines_in_K(k, fs, candidates);
        std::vector<Vec<mpq_class>> expected = {normalize_line(f, fx.k_rows[0]), normalize_line(f, fx.k_rows[1])};
        auto sorted = [](std::vector<Vec<mpq_class>> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        d["lines_found"] = lines.size();
        bool lines_ok = sorted(lines) == sorted(expected);
        d["lines_match"] = lines_ok;

        // K ∩ {α = 0}: when every β vanishes there, K meets Z in a whole family of lines.
        std::vector<Vec<mpq_class>> alpha_rows;
        for (int c : fs.alphas) alpha_rows.push_back(unit_vector(f, space, -c));
        auto alpha_plane = intersection(k, orthogonal_complement(Subspace<RationalField>::span(f, space, alpha_rows)));
        bool vanish = !fs.betas.empty() && forms_vanish_on(f, space, fs, alpha_plane.vectors());
        d["alpha_plane_dim"] = alpha_plane.dim();
        d["forms_vanish_on_alpha_plane"] = vanish;
        if (!lines_ok) {
            std::string msg = tag + "found " + std::to_string(lines.size()) + " lines among candidates, expected 2";
            if (vanish) msg += "; every β form vanishes on K ∩ {α = 0}, so K is not general";
            r.fail(msg);
        }

        nlohmann::json params = nlohmann::json::array();
        std::set<std::vector<mpq_class>> rebuilt;
        for (std::size_t i = 0; i < fx.expected_parameters.size(); ++i) {
            ++r.instances;
            const auto& v = fx.k_rows[i];
            try {
                auto h = reconstruct(f, space, fx.mu, fx.lambda, v);
                auto got = two_line_parameters(h);
                if (!got) {
                    r.fail(tag + "reconstruction of row " + std::to_string(i + 1) + " is outside the chart");
                    continue;
                }
                params.push_back({{"x", got->first.get_str()}, {"z", got->second.get_str()}});
                if (*got != fx.expected_parameters[i])
                    r.fail(tag + "row " + std::to_string(i + 1) + " gives x=" + got->first.get_str() +
                           " z=" + got->second.get_str());
                std::vector<mpq_class> key;
                for (const auto& row : h.vectors()) key.insert(key.end(), row.begin(), row.end());
                rebuilt.insert(key);
            } catch (const Error& e) {
                r.fail(tag + "reconstruction of row " + std::to_string(i + 1) + " failed: " + e.what());
            }
        }
        d["parameters"] = params;
        d["distinct_subspaces"] = rebuilt.size();
        r.details[family_name(fam)] = d;
    }
    return r;
}

VerifyReport verify_solver_fixture(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "solver-fixture";
    int samples = or_default(opt.samples, 100);
    auto fx = rank_six_solver_fixture();
    RationalField f(9);
    std::uint64_t stream = 0;
    for (Family fam : opt.families) {
        BilinearSpace space(fam, 6);
        std::mt19937_64 rng(split_seed(opt.seed, stream++));
        for (int t = 0; t < samples; ++t) {
            ++r.instances;
            std::vector<mpq_class> x(6);
            for (int i = 0; i < 6; ++i) x[static_cast<std::size_t>(i)] = f.random(rng);
            x[2] = f.random_nonzero(rng);
            x[4] = f.random_nonzero(rng);
            try {
                auto y = solve_ys(f, fam, fx.mu, fx.lambda, x);
                auto expected = rank_six_closed_form(x);
                for (int i = 2; i <= 6; ++i)
                    if (y[static_cast<std::size_t>(i)] != expected[static_cast<std::size_t>(i)])
                        r.fail(family_name(fam) + " sample " + std::to_string(t) + ": y_" + std::to_string(i) +
                               " differs from its closed form");
                auto g = chart_vectors(f, space, fx.mu, fx.lambda, x, y);
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (std::size_t j = i + 1; j < g.size(); ++j)
                        if (!f.is_zero(form_value(f, space, g[i], g[j])))
                            r.fail(family_name(fam) + " sample " + std::to_string(t) + ": g_" +
                                   std::to_string(i + 1) + ", g_" + std::to_string(j + 1) + " not orthogonal");
            } catch (const Error& e) {
                r.fail(family_name(fam) + " sample " + std::to_string(t) + ": " + e.what());
            }
        }
    }
    r.details["samples_per_family"] = samples;
    r.details["seed"] = opt.seed;
    return r;
}

VerifyReport verify_commutativity(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "commutativity";
    int n_max = or_default(opt.n_max, 5);
    for (int n = 1; n <= n_max; ++n)
        for (const auto& mu : all_sequences(n))
            for (Family f : opt.families) {
                auto base = single_class(f, mu);
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b) {
                        ++r.instances;
                        if (!(multiply_special(multiply_special(base, a), b) ==
                              multiply_special(multiply_special(base, b), a)))
                            r.fail(family_name(f) + " " + mu.to_string() + " a=" + std::to_string(a) +
                                   " b=" + std::to_string(b));
                    }
            }
    r.details["n_max"] = n_max;
    return r;
}

namespace {

// Whether the e_1 coefficient of the first-column part of v equals −2z² after
// scaling e_{-1} to 1, z being half the e_0 coefficient. nullopt if not applicable.
std::optional<bool> e1_relation(const PrimeField& f, const BilinearSpace& space, const SkewShape& s,
                                const Vec<Fp>& v) {
    if (space.family() != Family::B) return std::nullopt;
    auto it = std::find_if(s.components.begin(), s.components.end(),
                           [](const Component& d) { return d.meets_first_column; });
    if (it == s.components.end()) return std::nullopt;
    auto sub = first_column_subproblem(s);
    auto norm = normalize_last_row(sub.mu, sub.lambda);
    int l = sub.mu.n();
    BilinearSpace local(Family::B, l);
    auto w = zero_vector(f, local);
    for (int c = -l; c <= l; ++c) at(local, w, c) = at(space, v, c);
    if (norm.flipped) w = involution(local, w);
    if (f.is_zero(at(local, w, -1))) return std::nullopt;
    Fp inv = f.inv(at(local, w, -1));
    Fp z = f.div(at(local, w, 0) * inv, f.from_int(2));
    return at(local, w, 1) * inv == -(f.from_int(2) * z * z);
}

}  // namespace

VerifyReport verify_reconstruction(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "reconstruction";
    int n = or_default(opt.n_max, 3);
    std::uint32_t p = opt.p ? opt.p : 5;
    int samples = or_default(opt.samples, 5);
    const int max_draws = 200;
    PrimeField field(p);
    std::uint64_t stream = 0;
    int degenerate = 0, shapes = 0, relation_checked = 0, relation_holds = 0;
    for (Family fam : opt.families) {
        IntersectionEnumerator e(field, fam, n, opt.budget);
        const auto& space = e.space();
        for (const auto& mu : all_sequences(n))
            for (const auto& lambda : all_sequences(n)) {
                if (!bruhat_leq(mu, lambda)) continue;
                auto s = skew(mu, lambda);
                if (!is_skew_row(s)) continue;
                ++shapes;
                auto fs = build_Z(s, fam);
                const auto& points = e.intersection(mu, lambda);
                std::mt19937_64 rng(split_seed(opt.seed, stream++));
                int good = 0;
                for (int draw = 0; draw < max_draws && good < samples; ++draw) {
                    auto v = sample_Z_vector(field, space, fs, s, rng);
                    if (is_zero_vector(field, v)) continue;
                    try {
                        auto h = reconstruct(field, space, mu, lambda, v);
                        ++good;
                        ++r.instances;
                        std::vector<const Subspace<PrimeField>*> through;
                        for (const auto& g : points)
                            if (g.contains(v)) through.push_back(&g);
                        if (through.size() != 1 || !(*through.front() == h))
                            r.fail(family_name(fam) + " " + mu.to_string() + " -> " + lambda.to_string() + ": " +
                                   std::to_string(through.size()) + " enumerated subspaces contain v" +
                                   (through.size() == 1 ? " and it differs from the reconstruction" : ""));
                        if (auto rel = e1_relation(field, space, s, v)) {
                            ++relation_checked;
                            if (*rel) ++relation_holds;
                        }
                    } catch (const Error& err) {
                        if (err.code() != Errc::DegenerateVector) throw;
                        ++degenerate;
                    }
                }
                if (good < samples)
                    r.fail(family_name(fam) + " " + mu.to_string() + " -> " + lambda.to_string() + ": only " +
                           std::to_string(good) + " general vectors in " + std::to_string(max_draws) + " draws");
            }
    }
    r.details["n"] = n;
    r.details["p"] = p;
    r.details["seed"] = opt.seed;
    r.details["skew_rows"] = shapes;
    r.details["samples_per_shape"] = samples;
    r.details["degenerate_draws"] = degenerate;
    r.details["e1_relation"] = {{"checked", relation_checked}, {"holds", relation_holds}};
    return r;
}

VerifyReport verify_transfer(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "transfer";
    int n_max = or_default(opt.n_max, opt.extended ? 3 : 2);
    std::uint32_t p = opt.p ? opt.p : 3;
    PrimeField field(p);
    std::uint64_t shapes = 0, points = 0;
    for (int n = 1; n <= n_max; ++n) {
        IntersectionEnumerator eb(field, Family::B, n, opt.budget);
        IntersectionEnumerator ec(field, Family::C, n, opt.budget);
        for (const auto& mu : all_sequences(n))
            for (const auto& lambda : all_sequences(n)) {
                if (!bruhat_leq(mu, lambda)) continue;
                auto s = skew(mu, lambda);
                bool first = std::any_of(s.components.begin(), s.components.end(),
                                         [](const Component& d) { return d.meets_first_column; });
                if (first) continue;
                ++shapes;
                ++r.instances;
                const auto& xb = eb.intersection(mu, lambda);
                const auto& yc = ec.intersection(mu, lambda);
                points += xb.size();
                std::string tag = mu.to_string() + " -> " + lambda.to_string();
                if (xb.size() != yc.size()) {
                    r.fail(tag + ": " + std::to_string(xb.size()) + " orthogonal vs " + std::to_string(yc.size()) +
                           " symplectic points");
                    continue;
                }
                std::set<std::vector<int>> targets, images;
                for (const auto& h : yc) targets.insert(matrix_key(h));
                for (const auto& h : xb) {
                    try {
                        auto t = transfer_to_symplectic(h, mu, lambda);
                        images.insert(matrix_key(t));
                    } catch (const Error& e) {
                        r.fail(tag + ": " + e.what());
                    }
                }
                if (images != targets) r.fail(tag + ": transfer is not a bijection onto the symplectic points");
            }
    }
    r.details["n_max"] = n_max;
    r.details["p"] = p;
    r.details["shapes"] = shapes;
    r.details["points"] = points;
    return r;
}

VerifyReport verify_fixtures(const VerifyOptions& opt) {
    VerifyReport r;
    r.name = "fixtures";
    for (const auto& part : {verify_expansion_fixtures(), verify_rational_fixture(opt), verify_solver_fixture(opt)}) {
        r.instances += part.instances;
        r.failure_count += part.failure_count;
        if (!part.passed) r.passed = false;
        for (const auto& m : part.failures)
            if (r.failures.size() < kKeptFailures) r.failures.push_back(part.name + ": " + m);
        r.details[part.name] = part.to_json();
    }
    return r;
}

}  // namespace isopieri
