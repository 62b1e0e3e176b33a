#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace qtt {

using Matrix3d = Eigen::Matrix3d;
using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6cd = Eigen::Matrix<std::complex<double>, 6, 6>;

// Product basis order, fixed everywhere: |00>, |01>, |02>, |10>, |11>, |12>
// (qubit ⊗ qutrit). All serialized matrices use this order.
inline constexpr int kDim = 6;

enum class BathId { S, M, D };

inline const char* to_string(BathId b) {
    switch (b) {
        case BathId::S: return "S";
        case BathId::M: return "M";
        case BathId::D: return "D";
    }
    return "?";
}

}  // namespace qtt
