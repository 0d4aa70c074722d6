#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace isopieri {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols, const T& zero) {
        Matrix m(0, cols, zero);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    std::vector<T> row(int r) const {
        auto begin = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
        return std::vector<T>(begin, begin + cols_);
    }
    void append_row(const std::vector<T>& r) {
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }
    void truncate_rows(int r) {
        rows_ = r;
        data_.resize(static_cast<std::size_t>(rows_ * cols_));
    }
    void swap_rows(int a, int b) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

/// In-place reduced row echelon form with unit pivots. Returns the pivot
/// column of each nonzero row; zero rows end up at the bottom.
template <class F>
std::vector<int> rref(const F& f, Matrix<typename F::value_type>& m) {
    using T = typename F::value_type;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!f.is_zero(m(i, c))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        m.swap_rows(r, sel);
        T inv = f.inv(m(r, c));
        for (int k = c; k < m.cols(); ++k) m(r, k) = m(r, k) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            T factor = m(i, c);
            for (int k = c; k < m.cols(); ++k) m(i, k) = m(i, k) - factor * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(const F& f, Matrix<typename F::value_type> m) {
    return static_cast<int>(rref(f, m).size());
}

/// Rows form a basis of {x : m·x = 0}.
template <class F>
Matrix<typename F::value_type> nullspace(const F& f, Matrix<typename F::value_type> m) {
    using T = typename F::value_type;
    std::vector<int> pivots = rref(f, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix<T> out(0, m.cols(), f.zero());
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<T> x(static_cast<std::size_t>(m.cols()), f.zero());
        x[static_cast<std::size_t>(free)] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[static_cast<std::size_t>(pivots[r])] = -m(static_cast<int>(r), free);
        out.append_row(x);
    }
    return out;
}

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

template <class T>
struct SolveResult {
    SolveStatus status;
    std::vector<T> x;  // filled when status == Unique
};

/// Solves a·x = b exactly.
template <class F>
SolveResult<typename F::value_type> solve(const F& f, const Matrix<typename F::value_type>& a,
                                          const std::vector<typename F::value_type>& b) {
    using T = typename F::value_type;
    Matrix<T> aug(a.rows(), a.cols() + 1, f.zero());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[static_cast<std::size_t>(r)];
    }
    std::vector<int> pivots = rref(f, aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return {SolveStatus::Inconsistent, {}};
    if (static_cast<int>(pivots.size()) < a.cols()) return {SolveStatus::Underdetermined, {}};
    std::vector<T> x(static_cast<std::size_t>(a.cols()), f.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug(static_cast<int>(r), a.cols());
    return {SolveStatus::Unique, x};
}

}  // namespace isopieri
