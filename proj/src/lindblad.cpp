#include "qtt/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <string>

#include "qtt/errors.hpp"

namespace qtt::lindblad {

namespace {

using std::complex;

const bath::RatePair& find_rate(const std::vector<bath::RatePair>& rates, BathId bath, int index) {
    for (const auto& rp : rates) {
        if (rp.bath == bath && rp.index == index) return rp;
    }
    throw ValidationError("missing rate pair for channel " + std::string(to_string(bath)) +
                          std::to_string(index) + " (all nine channels required)");
}

// Population generator projected from the dissipator: for every nonzero
// channel element A(j,i), the bracket convention of the master equation
// moves population i->j at 2 a A(j,i)^2 and j->i at 2 b A(j,i)^2.
Matrix6d generic_population_matrix(const std::vector<spectrum::CollapseChannel>& channels,
                                   const std::vector<bath::RatePair>& rates) {
    Matrix6d M = Matrix6d::Zero();
    for (const auto& ch : channels) {
        const auto& rp = find_rate(rates, ch.bath, ch.index);
        for (int j = 0; j < kDim; ++j) {
            for (int i = 0; i < kDim; ++i) {
                const double c = ch.matrix(j, i);
                if (c == 0.0) continue;
                const double f = 2.0 * c * c;
                M(j, i) += f * rp.alpha_rate;
                M(i, i) -= f * rp.alpha_rate;
                M(i, j) += f * rp.beta_rate;
                M(j, j) -= f * rp.beta_rate;
            }
        }
    }
    return M;
}

// Hard-coded closed-form template of the population rate matrix
// (rows rho_11..rho_66 in the eigenbasis).
Matrix6d template_population_matrix(const std::vector<bath::RatePair>& rates) {
    auto r = [&](BathId b, int l) -> const bath::RatePair& { return find_rate(rates, b, l); };
    const double aS1 = r(BathId::S, 1).alpha_rate, bS1 = r(BathId::S, 1).beta_rate;
    const double aS2 = r(BathId::S, 2).alpha_rate, bS2 = r(BathId::S, 2).beta_rate;
    const double aS3 = r(BathId::S, 3).alpha_rate, bS3 = r(BathId::S, 3).beta_rate;
    const double aM1 = r(BathId::M, 1).alpha_rate, bM1 = r(BathId::M, 1).beta_rate;
    const double aM2 = r(BathId::M, 2).alpha_rate, bM2 = r(BathId::M, 2).beta_rate;
    const double aM3 = r(BathId::M, 3).alpha_rate, bM3 = r(BathId::M, 3).beta_rate;
    const double aD1 = r(BathId::D, 1).alpha_rate, bD1 = r(BathId::D, 1).beta_rate;
    const double aD2 = r(BathId::D, 2).alpha_rate, bD2 = r(BathId::D, 2).beta_rate;
    const double aD3 = r(BathId::D, 3).alpha_rate, bD3 = r(BathId::D, 3).beta_rate;

    const double g1 = -aM2 - aM3 - 2.0 * aD3;
    const double g2 = -aS1 - aM2 - bM3 - aD1;
    const double g3 = -bS1 - bS3 - 2.0 * aM1 - 2.0 * bD3;
    const double g4 = -aS3 - bM2 - aM3 - aD2;
    const double g5 = -2.0 * aS2 - bM2 - bM3;
    const double g6 = -2.0 * bS2 - 2.0 * bM1 - bD1 - bD2;

    Matrix6d M;
    M << g1, bM3, 2.0 * bD3, bM2, 0.0, 0.0,
         aM3, g2, bS1, 0.0, bM2, bD1,
         2.0 * aD3, aS1, g3, aS3, 0.0, 2.0 * bM1,
         aM2, 0.0, bS3, g4, bM3, bD2,
         0.0, aM2, 0.0, aM3, g5, 2.0 * bS2,
         0.0, aD1, 2.0 * aM1, aD2, 2.0 * aS2, g6;
    return M;
}

}  // namespace

PopulationRateMatrix build_rate_matrix(const std::vector<spectrum::CollapseChannel>& channels,
                                       const std::vector<bath::RatePair>& rates) {
    const Matrix6d generic = generic_population_matrix(channels, rates);
    const Matrix6d templ = template_population_matrix(rates);
    const double scale = std::max(generic.cwiseAbs().maxCoeff(), templ.cwiseAbs().maxCoeff());
    const double diff = (generic - templ).cwiseAbs().maxCoeff();
    if (diff > 1e-12 * std::max(scale, 1e-300)) {
        throw TemplateMismatch("generic population generator deviates from the closed-form "
                               "template by " + std::to_string(diff) +
                               " (channel/weight bug)");
    }
    return PopulationRateMatrix{generic};
}

SteadyState steady_state(const PopulationRateMatrix& rm) {
    const Matrix6d& M = rm.M;
    const double scale = M.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        throw DegenerateKernel("rate matrix is zero: every state is stationary");
    }

    // Kernel must be one-dimensional for the steady state to be unique.
    Eigen::JacobiSVD<Matrix6d> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int kernel_dim = 0;
    for (int i = 0; i < kDim; ++i) {
        if (sv(i) <= 1e-10 * sv(0)) ++kernel_dim;
    }
    if (kernel_dim != 1) {
        throw DegenerateKernel("rate matrix kernel dimension is " + std::to_string(kernel_dim) +
                               " (disconnected transition graph)");
    }

    // Replace the first row by the normalization row and solve; the columns
    // of M sum to zero, so this system pins sum(p) = 1.
    Matrix6d A = M;
    A.row(0).setOnes();
    Vector6d b = Vector6d::Zero();
    b(0) = 1.0;
    Eigen::PartialPivLU<Matrix6d> lu(A);
    Vector6d p = lu.solve(b);
    for (int it = 0; it < 2; ++it) {
        p += lu.solve(b - A * p);
    }

    double residual = (M * p).cwiseAbs().maxCoeff();
    if (residual > 1e-10 * scale) {
        // Cross-check path: kernel direction from the SVD.
        Vector6d v = svd.matrixV().col(kDim - 1);
        if (v.sum() != 0.0) {
            v /= v.sum();
            const double r2 = (M * v).cwiseAbs().maxCoeff();
            if (r2 < residual) {
                p = v;
                residual = r2;
            }
        }
        if (residual > 1e-10 * scale) {
            throw Error("steady-state residual " + std::to_string(residual) +
                        " exceeds tolerance");
        }
    }

    const double min_p = p.minCoeff();
    if (min_p < -1e-10) {
        throw NegativePopulation("steady-state population " + std::to_string(min_p) +
                                 " below -1e-10");
    }
    if (min_p < 0.0) {
        // Solver roundoff around hard zeros (populations like e^-80 at cold
        // baths). Warn only when the magnitude is above plain noise level.
        if (min_p < -1e-14) {
            std::cerr << "[qtt] warning: clamping steady-state population " << min_p
                      << " to zero\n";
        }
        p = p.cwiseMax(0.0);
        p /= p.sum();
    }
    return SteadyState{p, residual};
}

double slowest_relaxation_rate(const PopulationRateMatrix& rm) {
    Eigen::EigenSolver<Matrix6d> es(rm.M, false);
    const auto& ev = es.eigenvalues();
    double mag_max = 0.0;
    for (int i = 0; i < kDim; ++i) mag_max = std::max(mag_max, std::abs(ev(i)));
    if (mag_max == 0.0) throw DegenerateKernel("rate matrix is zero");
    double slowest = mag_max;
    for (int i = 0; i < kDim; ++i) {
        if (std::abs(ev(i)) <= 1e-12 * mag_max) continue;  // kernel mode
        slowest = std::min(slowest, std::abs(ev(i).real()));
    }
    return slowest;
}

namespace {

struct FrameChannel {
    Matrix6d A;  // channel matrix in the frame that diagonalizes H
    double a, b;
};

// Dissipator with the commutator removed by the integrating factor:
// sigma(t) = e^{iDt} rho~(t) e^{-iDt} obeys d sigma/dt = L(t)[sigma] with
// every channel matrix phase-conjugated, B(t) = e^{iDt} A e^{-iDt}. When the
// channels are eigenoperators of H the phases cancel inside the products and
// L is slowly varying; if they are not, the stepper sees the oscillations
// and resolves them (no secular assumption is made here).
class LawsonRhs {
  public:
    LawsonRhs(const std::vector<FrameChannel>& channels, const Vector6d& d)
        : channels_(channels) {
        for (int r = 0; r < kDim; ++r)
            for (int c = 0; c < kDim; ++c) gaps_(r, c) = d(r) - d(c);
    }

    Matrix6cd operator()(double t, const Matrix6cd& sigma) const {
        Matrix6cd phases;
        for (int r = 0; r < kDim; ++r) {
            for (int c = 0; c < kDim; ++c) {
                phases(r, c) = std::polar(1.0, gaps_(r, c) * t);
            }
        }
        Matrix6cd out = Matrix6cd::Zero();
        for (const auto& ch : channels_) {
            const Matrix6cd B = ch.A.cast<complex<double>>().cwiseProduct(phases);
            const Matrix6cd Bd = B.adjoint();
            const Matrix6cd BdB = Bd * B;
            const Matrix6cd BBd = B * Bd;
            out += ch.a * (2.0 * (B * sigma * Bd) - BdB * sigma - sigma * BdB);
            out += ch.b * (2.0 * (Bd * sigma * B) - BBd * sigma - sigma * BBd);
        }
        return out;
    }

    double rate_scale() const {
        double s = 0.0;
        for (const auto& ch : channels_) s += ch.a + ch.b;
        return s;
    }

  private:
    std::vector<FrameChannel> channels_;
    Matrix6d gaps_;
};

double error_norm(const Matrix6cd& err, const Matrix6cd& y0, const Matrix6cd& y1,
                  double abs_tol, double rel_tol) {
    double n = 0.0;
    for (int r = 0; r < kDim; ++r) {
        for (int c = 0; c < kDim; ++c) {
            const double sc = abs_tol + rel_tol * std::max(std::abs(y0(r, c)), std::abs(y1(r, c)));
            n = std::max(n, std::abs(err(r, c)) / sc);
        }
    }
    return n;
}

}  // namespace

Matrix6cd evolve(const Matrix6cd& rho0, double duration,
                 const std::vector<spectrum::CollapseChannel>& channels,
                 const std::vector<bath::RatePair>& rates, const Matrix6d& H,
                 const EvolveOptions& opt) {
    if (!(duration >= 0.0) || !std::isfinite(duration)) {
        throw ValidationError("evolve duration must be finite and nonnegative");
    }
    if (duration == 0.0) return rho0;

    Eigen::SelfAdjointEigenSolver<Matrix6d> hdiag(H);
    if (hdiag.info() != Eigen::Success) {
        throw IntegrationFailure("Hamiltonian diagonalization failed");
    }
    const Matrix6d U = hdiag.eigenvectors();
    const Vector6d d = hdiag.eigenvalues();

    std::vector<FrameChannel> frame;
    frame.reserve(channels.size());
    for (const auto& ch : channels) {
        const auto& rp = find_rate(rates, ch.bath, ch.index);
        frame.push_back(FrameChannel{U.transpose() * ch.matrix * U, rp.alpha_rate, rp.beta_rate});
    }
    const LawsonRhs rhs(frame, d);

    Matrix6cd sigma = (U.transpose() * rho0 * U).eval();
    const complex<double> tr0 = sigma.trace();

    // Dormand-Prince 5(4) with FSAL.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const double rate_scale = rhs.rate_scale();
    double t = 0.0;
    double dt = rate_scale > 0.0 ? std::min(duration, 1e-3 / rate_scale) : duration;
    const double min_dt = duration * 1e-14;

    Matrix6cd k1 = rhs(t, sigma);
    std::size_t steps = 0;
    while (t < duration) {
        if (++steps > opt.max_steps) {
            throw IntegrationFailure("evolve exceeded max step count at t = " + std::to_string(t));
        }
        dt = std::min(dt, duration - t);

        const Matrix6cd k2 = rhs(t + c2 * dt, sigma + dt * (a21 * k1));
        const Matrix6cd k3 = rhs(t + c3 * dt, sigma + dt * (a31 * k1 + a32 * k2));
        const Matrix6cd k4 = rhs(t + c4 * dt, sigma + dt * (a41 * k1 + a42 * k2 + a43 * k3));
        const Matrix6cd k5 =
            rhs(t + c5 * dt, sigma + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Matrix6cd k6 =
            rhs(t + dt, sigma + dt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Matrix6cd ynew =
            sigma + dt * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Matrix6cd k7 = rhs(t + dt, ynew);
        const Matrix6cd err =
            dt * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double en = error_norm(err, sigma, ynew, opt.abs_tol, opt.rel_tol);
        if (en <= 1.0) {
            t += dt;
            sigma = ynew;
            k1 = k7;  // FSAL
        }
        const double factor = en > 0.0 ? 0.9 * std::pow(en, -0.2) : 5.0;
        dt *= std::clamp(factor, 0.2, 5.0);
        if (t < duration && dt < min_dt) {
            throw IntegrationFailure("step size underflow at t = " + std::to_string(t) +
                                     " (cannot meet tolerance)");
        }
    }

    // Undo the integrating factor and rotate back: rho = U e^{-iDT} sigma e^{iDT} U^T.
    Matrix6cd rho_tilde;
    for (int r = 0; r < kDim; ++r) {
        for (int c = 0; c < kDim; ++c) {
            rho_tilde(r, c) = sigma(r, c) * std::polar(1.0, -(d(r) - d(c)) * duration);
        }
    }
    const Matrix6cd rho = (U * rho_tilde * U.transpose()).eval();

    if (std::abs(rho.trace() - tr0) > opt.trace_tol * std::max(1.0, std::abs(tr0))) {
        throw IntegrationFailure("trace drift " + std::to_string(std::abs(rho.trace() - tr0)) +
                                 " exceeds tolerance");
    }
    return rho;
}

void validate_density_matrix(const Matrix6cd& rho, double tol) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw ValidationError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > tol) {
        throw ValidationError("density matrix trace differs from one");
    }
    Eigen::SelfAdjointEigenSolver<Matrix6cd> es((rho + rho.adjoint()) / 2.0);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw ValidationError("density matrix has eigenvalue " +
                              std::to_string(es.eigenvalues().minCoeff()) + " below -tol");
    }
}

}  // namespace qtt::lindblad
