#include "isopieri/shifted_shapes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace isopieri {

SignedSequence SignedSequence::validate(int n, std::vector<int> entries) {
    if (n < 1 || static_cast<int>(entries.size()) != n)
        throw Error(Errc::DimensionMismatch, "expected " + std::to_string(n) + " entries");
    for (int e : entries)
        if (e == 0 || e < -n || e > n) throw Error(Errc::OutOfRange, "entry " + std::to_string(e));
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] <= entries[i]) throw Error(Errc::NotDecreasing, "entries must strictly decrease");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int e : entries) {
        auto a = static_cast<std::size_t>(std::abs(e));
        if (seen[a]) throw Error(Errc::AbsValuesNotComplete, "repeated |entry| " + std::to_string(a));
        seen[a] = true;
    }
    return SignedSequence(std::move(entries));
}

SignedSequence SignedSequence::from_positive(int n, const std::vector<int>& positive) {
    std::vector<int> entries(positive);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int p : positive) {
        if (p < 1 || p > n) throw Error(Errc::OutOfRange, "positive part " + std::to_string(p));
        used[static_cast<std::size_t>(p)] = true;
    }
    for (int a = 1; a <= n; ++a)
        if (!used[static_cast<std::size_t>(a)]) entries.push_back(-a);
    return validate(n, std::move(entries));
}

int SignedSequence::positive_count() const {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e > 0; }));
}

std::vector<int> SignedSequence::positive_parts() const {
    std::vector<int> out;
    for (int e : entries_)
        if (e > 0) out.push_back(e);
    return out;
}

std::string SignedSequence::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + "]";
}

std::vector<SignedSequence> all_sequences(int n) {
    std::vector<SignedSequence> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> pos;
        for (int a = n; a >= 1; --a)
            if (mask & (1u << (a - 1))) pos.push_back(a);
        out.push_back(SignedSequence::from_positive(n, pos));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int codim(const SignedSequence& lambda) {
    int total = 0;
    for (int e : lambda.entries())
        if (e > 0) total += e;
    return total;
}

bool bruhat_leq(const SignedSequence& mu, const SignedSequence& lambda) {
    if (mu.n() != lambda.n()) throw Error(Errc::DimensionMismatch, "sequences of different length");
    for (int j = 1; j <= mu.n(); ++j)
        if (mu(j) > lambda(j)) return false;
    return true;
}

SignedSequence complement(const SignedSequence& lambda) {
    int n = lambda.n();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = -lambda(n + 1 - j);
    return SignedSequence::validate(n, std::move(out));
}

SkewShape skew(const SignedSequence& mu, const SignedSequence& lambda) {
    if (!bruhat_leq(mu, lambda))
        throw Error(Errc::NotComparable, mu.to_string() + " is not below " + lambda.to_string());
    SkewShape s;
    s.mu = mu;
    s.lambda = lambda;
    int n = mu.n();
    for (int j = 1; j <= n; ++j) {
        if (mu(j) == lambda(j)) s.fixed_indices.push_back(j);
        if (lambda(j) <= 0) continue;
        for (int c = std::max(mu(j), 0) + 1; c <= lambda(j); ++c) s.boxes.push_back({j, c});
    }

    // Flood fill with 8-neighbour adjacency; boxes are already in reading order.
    std::set<Cell> remaining(s.boxes.begin(), s.boxes.end());
    for (const Cell& start : s.boxes) {
        if (!remaining.count(start)) continue;
        Component comp;
        std::vector<Cell> stack{start};
        remaining.erase(start);
        while (!stack.empty()) {
            Cell b = stack.back();
            stack.pop_back();
            comp.boxes.push_back(b);
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    Cell nb{b.row + dr, b.col + dc};
                    auto it = remaining.find(nb);
                    if (it != remaining.end()) {
                        remaining.erase(it);
                        stack.push_back(nb);
                    }
                }
        }
        std::sort(comp.boxes.begin(), comp.boxes.end());
        std::set<int> rows, cols;
        for (const Cell& b : comp.boxes) {
            rows.insert(b.row);
            cols.insert(b.col);
        }
        comp.rows.assign(rows.begin(), rows.end());
        comp.columns.assign(cols.begin(), cols.end());
        comp.col_set = comp.columns;
        comp.col_set.insert(comp.col_set.begin(), comp.columns.front() - 1);
        comp.meets_first_column = comp.columns.front() == 1;
        if (comp.meets_first_column) s.zero_is_fixed = false;
        s.components.push_back(std::move(comp));
    }
    return s;
}

bool is_skew_row(const SkewShape& s) {
    std::set<int> cols;
    for (const Cell& b : s.boxes)
        if (!cols.insert(b.col).second) return false;
    return true;
}

int occupied_columns(const SkewShape& s) {
    std::set<int> cols;
    for (const Cell& b : s.boxes) cols.insert(b.col);
    return static_cast<int>(cols.size());
}

ShapeCounts counts(const SkewShape& s) {
    ShapeCounts c;
    c.delta = static_cast<int>(s.components.size());
    c.epsilon = static_cast<int>(std::count_if(s.components.begin(), s.components.end(),
                                               [](const Component& d) { return !d.meets_first_column; }));
    c.psi = static_cast<int>(s.fixed_indices.size());
    c.phi = c.psi + (s.zero_is_fixed ? 1 : 0);
    return c;
}

std::string render_diagram(const SkewShape& s) {
    std::map<Cell, char> label;
    for (std::size_t i = 0; i < s.components.size(); ++i)
        for (const Cell& b : s.components[i].boxes) label[b] = static_cast<char>('a' + static_cast<int>(i % 26));
    std::string out;
    for (int j = 1; j <= s.lambda.n(); ++j) {
        if (s.lambda(j) <= 0) continue;
        for (int c = 1; c <= s.lambda(j); ++c) {
            auto it = label.find({j, c});
            out += it == label.end() ? '.' : it->second;
        }
        out += '\n';
    }
    return out;
}

namespace {

void extend_targets(const std::vector<int>& mu_pos, int n, int remaining, std::size_t i,
                    std::vector<int>& current, std::vector<std::vector<int>>& out) {
    // Row i of λ lies between μ_i (or 0 below the last positive row) and μ_{i-1} (or n on top).
    if (i > mu_pos.size()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    int upper = i == 0 ? n : mu_pos[i - 1];
    int lower = i < mu_pos.size() ? mu_pos[i] : 0;
    for (int v = lower; v <= upper; ++v) {
        int added = v - lower;
        if (added > remaining) break;
        if (!current.empty() && v >= current.back()) break;
        if (v == 0) {
            if (remaining == added) out.push_back(current);
            continue;
        }
        current.push_back(v);
        extend_targets(mu_pos, n, remaining - added, i + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<SignedSequence> enumerate_pieri_targets(const SignedSequence& mu, int m) {
    int n = mu.n();
    if (m < 1 || m > n) throw Error(Errc::BadM, "m must lie in [1, n]");
    std::vector<std::vector<int>> positives;
    std::vector<int> current;
    extend_targets(mu.positive_parts(), n, m, 0, current, positives);
    std::vector<SignedSequence> out;
    for (const auto& pos : positives) {
        SignedSequence lambda = SignedSequence::from_positive(n, pos);
        if (!bruhat_leq(mu, lambda)) continue;
        out.push_back(lambda);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Subproblem first_column_subproblem(const SkewShape& s) {
    auto it = std::find_if(s.components.begin(), s.components.end(),
                           [](const Component& d) { return d.meets_first_column; });
    if (it == s.components.end()) throw Error(Errc::NoFirstColumnComponent, "no box in column 1");
    int j = it->rows.front();
    int l = s.lambda(j);
    if (j + l - 1 > s.mu.n()) throw Error(Errc::OutOfRange, "first-column component runs past row n");
    Subproblem sub;
    std::vector<int> mu0, lambda0;
    for (int i = j; i < j + l; ++i) {
        mu0.push_back(s.mu(i));
        lambda0.push_back(s.lambda(i));
        sub.rows.push_back(i);
    }
    sub.mu = SignedSequence::validate(l, mu0);
    sub.lambda = SignedSequence::validate(l, lambda0);
    return sub;
}

Subproblem component_subproblem(const SkewShape& s, const Component& d) {
    if (d.meets_first_column) throw Error(Errc::FirstColumnComponent, "component meets column 1");
    int j = d.rows.front();
    int k = d.rows.back();
    int a = s.mu(k);
    Subproblem sub;
    sub.shift = a - 1;
    std::vector<int> mud, lambdad;
    for (int i = j; i <= k; ++i) {
        mud.push_back(s.mu(i) - a + 1);
        lambdad.push_back(s.lambda(i) - a + 1);
        sub.rows.push_back(i);
    }
    for (int i = 1; i <= s.mu.n(); ++i) {
        if (-s.lambda(j) <= s.mu(i) && s.lambda(i) <= -a) {
            mud.push_back(s.mu(i) + a - 1);
            lambdad.push_back(s.lambda(i) + a - 1);
            sub.rows.push_back(i);
        }
    }
    int p = static_cast<int>(d.col_set.size());
    sub.mu = SignedSequence::validate(p, mud);
    sub.lambda = SignedSequence::validate(p, lambdad);
    return sub;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

ClassicalShadow classical_shadow(const SignedSequence& mu, const SignedSequence& lambda) {
    if (!bruhat_leq(mu, lambda))
        throw Error(Errc::NotComparable, mu.to_string() + " is not below " + lambda.to_string());
    ClassicalShadow sh;
    int n = mu.n();
    int k = mu.positive_count();
    sh.k = k;
    sh.tau = {k, n - k, {}};
    sh.sigma = {k, n - k, {}};
    for (int j = 1; j <= k; ++j) {
        sh.tau.parts.push_back(mu(j) - (k + 1 - j));
        sh.sigma.parts.push_back(lambda(j) - (k + 1 - j));
    }
    for (int j = 0; j < k; ++j) {
        auto t = static_cast<std::size_t>(j);
        if (sh.sigma.parts[t] > n - k) throw Error(Errc::BoxViolation, "σ leaves the k × (n−k) box");
    }
    return sh;
}

bool one_box_per_diagonal(const Partition& tau, const Partition& sigma) {
    std::size_t rows = std::max(tau.parts.size(), sigma.parts.size());
    auto part = [](const Partition& p, std::size_t r) { return r < p.parts.size() ? p.parts[r] : 0; };
    std::vector<int> diagonals;
    for (std::size_t r = 0; r < rows; ++r) {
        int t = part(tau, r), s = part(sigma, r);
        if (t > s) throw Error(Errc::NotContained, "τ is not contained in σ");
        for (int c = t + 1; c <= s; ++c) diagonals.push_back(c - static_cast<int>(r + 1));
    }
    if (diagonals.empty()) return true;
    std::sort(diagonals.begin(), diagonals.end());
    for (std::size_t i = 1; i < diagonals.size(); ++i)
        if (diagonals[i] != diagonals[i - 1] + 1) return false;
    return true;
}

}  // namespace isopieri
