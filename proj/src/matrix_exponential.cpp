#include <array>
#include <cmath>
#include <stdexcept>

#include "chiralcav/propagator.hpp"

namespace chiralcav {
namespace {

// Higham, "The scaling and squaring method for the matrix exponential revisited" (2005).
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1,
                                          9.504178996162932e-1, 2.097847961257068e0,
                                          5.371920351148152e0};
constexpr std::array<int, 5> kLowDegree = {3, 5, 7, 9, 13};

double one_norm(const Matrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

Matrix pade_low(const Matrix& a, int degree) {
    static const std::array<std::array<double, 10>, 4> c = {{
        {120.0, 60.0, 12.0, 1.0},
        {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0},
        {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0},
        {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0, 2162160.0,
         110880.0, 3960.0, 90.0, 1.0},
    }};
    const auto& coef = c[static_cast<std::size_t>((degree - 3) / 2)];
    const auto n = a.rows();
    const Matrix ident = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    Matrix power = ident;
    Matrix u_inner = Matrix::Zero(n, n);
    Matrix v = Matrix::Zero(n, n);
    for (int k = 0; k <= degree; k += 2) {
        v += coef[static_cast<std::size_t>(k)] * power;
        u_inner += coef[static_cast<std::size_t>(k + 1)] * power;
        power = power * a2;
    }
    const Matrix u = a * u_inner;
    return (v - u).partialPivLu().solve(v + u);
}

Matrix pade13(const Matrix& a) {
    const auto& b = kPade13;
    const auto n = a.rows();
    const Matrix ident = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const Matrix u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
             b[1] * ident);
    const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                     b[2] * a2 + b[0] * ident;
    return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

Matrix matrix_exponential(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exponential: matrix not square");
    if (!m.allFinite()) throw std::invalid_argument("matrix_exponential: non-finite entries");
    if (m.size() == 0) return m;

    const double norm = one_norm(m);
    for (std::size_t i = 0; i < kLowDegree.size() - 1; ++i) {
        if (norm <= kTheta[i]) return pade_low(m, kLowDegree[i]);
    }
    int squarings = 0;
    if (norm > kTheta.back()) {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta.back()))));
    }
    Matrix result = pade13(m / std::ldexp(1.0, squarings));
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

}  // namespace chiralcav
