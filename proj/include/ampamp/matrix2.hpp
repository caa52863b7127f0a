#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace ampamp {

using Complex = std::complex<double>;

// Coordinates in the amplification plane. Component order follows the
// closed-form iterate matrix: the normalized bad state first, then the
// normalized good state.
inline constexpr std::size_t kBad = 0;
inline constexpr std::size_t kGood = 1;

using Vec2 = std::array<Complex, 2>;

/// Plain complex 2x2 matrix, row-major.
struct Matrix2 {
    std::array<std::array<Complex, 2>, 2> m{};

    Complex& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

    static Matrix2 identity();
    static Matrix2 diagonal(Complex d0, Complex d1);
};

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);
Matrix2 operator*(Complex scalar, const Matrix2& mat);
Matrix2 operator+(const Matrix2& lhs, const Matrix2& rhs);
Matrix2 operator-(const Matrix2& lhs, const Matrix2& rhs);
Vec2 operator*(const Matrix2& mat, const Vec2& vec);

Matrix2 adjoint(const Matrix2& mat);
Complex determinant(const Matrix2& mat);
Matrix2 power(const Matrix2& mat, unsigned exponent);

/// max_{r,c} |lhs(r,c) - rhs(r,c)|
double max_abs_diff(const Matrix2& lhs, const Matrix2& rhs);
double max_abs_diff(const Vec2& lhs, const Vec2& rhs);

/// ||M^dagger M - I||_max
double unitarity_error(const Matrix2& mat);

/// Largest singular value (operator 2-norm).
double operator_norm(const Matrix2& mat);

double norm(const Vec2& vec);

/// Real rotation [[cos x, -sin x], [sin x, cos x]].
Matrix2 rotation_matrix(double angle);

/// diag(1, e^{i angle}); acts on the good component only.
Matrix2 phase_matrix(double angle);

/// Matrix known to be unitary to within double-precision noise. Instances
/// come from the closed-form builders or from products of other instances.
class Unitary2 {
public:
    Unitary2() : mat_(Matrix2::identity()) {}

    /// Throws Error(contract_violation) when unitarity_error(mat) > tol.
    static Unitary2 from_matrix(const Matrix2& mat, double tol = 1e-12);

    const Matrix2& matrix() const { return mat_; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

    Unitary2 operator*(const Unitary2& rhs) const { return Unitary2(mat_ * rhs.mat_); }
    Vec2 operator*(const Vec2& vec) const { return mat_ * vec; }

    Unitary2 adjoint() const { return Unitary2(ampamp::adjoint(mat_)); }
    Unitary2 power(unsigned exponent) const { return Unitary2(ampamp::power(mat_, exponent)); }

    bool is_unitary(double tol = 1e-12) const { return unitarity_error(mat_) <= tol; }

private:
    explicit Unitary2(const Matrix2& mat) : mat_(mat) {}

    friend Unitary2 rotation_unitary(double angle);
    friend Unitary2 phase_unitary(double angle);
    friend Unitary2 global_phase_unitary(double angle);

    Matrix2 mat_;
};

Unitary2 rotation_unitary(double angle);
Unitary2 phase_unitary(double angle);
Unitary2 global_phase_unitary(double angle);

}  // namespace ampamp
