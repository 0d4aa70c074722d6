#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "isopieri/common.hpp"

namespace isopieri {

/// An element of SY_n: n > λ_1 > ... > λ_n with {|λ_j|} = {1..n}.
/// Rows are 1-based in the accessor to match the usual indexing.
class SignedSequence {
public:
    SignedSequence() = default;

    static SignedSequence validate(int n, std::vector<int> entries);
    /// Completes strictly decreasing positive parts with the forced negatives.
    static SignedSequence from_positive(int n, const std::vector<int>& positive);

    int n() const { return static_cast<int>(entries_.size()); }
    int operator()(int row) const { return entries_[static_cast<std::size_t>(row - 1)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Number of positive entries (k with λ_k > 0 > λ_{k+1}).
    int positive_count() const;
    std::vector<int> positive_parts() const;

    std::string to_string() const;

    auto operator<=>(const SignedSequence&) const = default;

private:
    explicit SignedSequence(std::vector<int> entries) : entries_(std::move(entries)) {}
    std::vector<int> entries_;
};

/// All of SY_n in lexicographically increasing order.
std::vector<SignedSequence> all_sequences(int n);

int codim(const SignedSequence& lambda);
bool bruhat_leq(const SignedSequence& mu, const SignedSequence& lambda);
SignedSequence complement(const SignedSequence& lambda);

struct Cell {
    int row;
    int col;
    auto operator<=>(const Cell&) const = default;
};

struct Component {
    std::vector<Cell> boxes;     // sorted by (row, col)
    std::vector<int> rows;       // ascending
    std::vector<int> columns;    // ascending
    std::vector<int> col_set;    // columns plus the column left of the leftmost box
    bool meets_first_column = false;
};

struct SkewShape {
    SignedSequence mu;
    SignedSequence lambda;
    std::vector<Cell> boxes;
    std::vector<Component> components;  // ordered by their first box in reading order
    std::vector<int> fixed_indices;     // rows j with λ_j = μ_j
    bool zero_is_fixed = true;
};

SkewShape skew(const SignedSequence& mu, const SignedSequence& lambda);
bool is_skew_row(const SkewShape& s);
int occupied_columns(const SkewShape& s);

struct ShapeCounts {
    int delta = 0;    // components
    int epsilon = 0;  // components avoiding column 1
    int phi = 0;      // fixed rows plus the synthetic 0
    int psi = 0;      // fixed rows
};

ShapeCounts counts(const SkewShape& s);

/// One line per row with λ_j > 0: '.' for cells of μ, a letter per component.
std::string render_diagram(const SkewShape& s);

std::vector<SignedSequence> enumerate_pieri_targets(const SignedSequence& mu, int m);

/// A reindexed pair living on rows first_row.. of the original shape. Original
/// coordinate c corresponds to c - shift (c > 0) or c + shift (c < 0).
struct Subproblem {
    SignedSequence mu;
    SignedSequence lambda;
    std::vector<int> rows;
    int shift = 0;
};

Subproblem first_column_subproblem(const SkewShape& s);
Subproblem component_subproblem(const SkewShape& s, const Component& d);

/// A partition with at most k parts, each at most width.
struct Partition {
    int k = 0;
    int width = 0;
    std::vector<int> parts;  // length k, weakly decreasing, zeros allowed
    auto operator<=>(const Partition&) const = default;
    int size() const;
};

struct ClassicalShadow {
    Partition tau;
    Partition sigma;
    int k = 0;
};

ClassicalShadow classical_shadow(const SignedSequence& mu, const SignedSequence& lambda);
bool one_box_per_diagonal(const Partition& tau, const Partition& sigma);

}  // namespace isopieri
