#include "ampamp/matrix2.hpp"

#include <algorithm>
#include <cmath>

#include "ampamp/error.hpp"

namespace ampamp {

Matrix2 Matrix2::identity() { return diagonal(1.0, 1.0); }

Matrix2 Matrix2::diagonal(Complex d0, Complex d1) {
    Matrix2 out;
    out(0, 0) = d0;
    out(1, 1) = d1;
    return out;
}

Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
    Matrix2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j);
        }
    }
    return out;
}

Matrix2 operator*(Complex scalar, const Matrix2& mat) {
    Matrix2 out = mat;
    for (auto& row : out.m) {
        for (auto& x : row) x *= scalar;
    }
    return out;
}

Matrix2 operator+(const Matrix2& lhs, const Matrix2& rhs) {
    Matrix2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) out(i, j) = lhs(i, j) + rhs(i, j);
    }
    return out;
}

Matrix2 operator-(const Matrix2& lhs, const Matrix2& rhs) { return lhs + Complex(-1.0) * rhs; }

Vec2 operator*(const Matrix2& mat, const Vec2& vec) {
    return {mat(0, 0) * vec[0] + mat(0, 1) * vec[1], mat(1, 0) * vec[0] + mat(1, 1) * vec[1]};
}

Matrix2 adjoint(const Matrix2& mat) {
    Matrix2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) out(i, j) = std::conj(mat(j, i));
    }
    return out;
}

Complex determinant(const Matrix2& mat) { return mat(0, 0) * mat(1, 1) - mat(0, 1) * mat(1, 0); }

Matrix2 power(const Matrix2& mat, unsigned exponent) {
    Matrix2 result = Matrix2::identity();
    Matrix2 base = mat;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

double max_abs_diff(const Matrix2& lhs, const Matrix2& rhs) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
    }
    return worst;
}

double max_abs_diff(const Vec2& lhs, const Vec2& rhs) {
    return std::max(std::abs(lhs[0] - rhs[0]), std::abs(lhs[1] - rhs[1]));
}

double unitarity_error(const Matrix2& mat) { return max_abs_diff(adjoint(mat) * mat, Matrix2::identity()); }

double operator_norm(const Matrix2& mat) {
    // sigma_max^2 is the larger root of s^2 - F s + |det|^2 with F the
    // squared Frobenius norm.
    double frob = 0.0;
    for (const auto& row : mat.m) {
        for (const auto& x : row) frob += std::norm(x);
    }
    const double det2 = std::norm(determinant(mat));
    const double disc = std::max(0.0, frob * frob - 4.0 * det2);
    return std::sqrt(0.5 * (frob + std::sqrt(disc)));
}

double norm(const Vec2& vec) { return std::sqrt(std::norm(vec[0]) + std::norm(vec[1])); }

Matrix2 rotation_matrix(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Matrix2 out;
    out(0, 0) = c;
    out(0, 1) = -s;
    out(1, 0) = s;
    out(1, 1) = c;
    return out;
}

Matrix2 phase_matrix(double angle) { return Matrix2::diagonal(1.0, std::polar(1.0, angle)); }

Unitary2 Unitary2::from_matrix(const Matrix2& mat, double tol) {
    const double err = unitarity_error(mat);
    if (!(err <= tol)) {
        throw Error(ErrorCode::contract_violation, "matrix is not unitary (error " + std::to_string(err) + ")");
    }
    return Unitary2(mat);
}

Unitary2 rotation_unitary(double angle) { return Unitary2(rotation_matrix(angle)); }
Unitary2 phase_unitary(double angle) { return Unitary2(phase_matrix(angle)); }
Unitary2 global_phase_unitary(double angle) {
    const Complex g = std::polar(1.0, angle);
    return Unitary2(Matrix2::diagonal(g, g));
}

}  // namespace ampamp
