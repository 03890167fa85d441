#pragma once

// Continuous LTI systems and their zero-order-hold discretization.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>

namespace acl {

/// x' = A x + B u, y = C x. Single input, single output.
struct StateSpace {
    Eigen::MatrixXd A;
    Eigen::VectorXd B;
    Eigen::RowVectorXd C;

    Eigen::Index order() const { return A.rows(); }
};

/// Exact discretization of a StateSpace under a zero-order hold on the input.
class DiscreteStateSpace {
public:
    DiscreteStateSpace() = default;

    DiscreteStateSpace(const StateSpace& sys, double dt) : C_(sys.C) {
        if (!(dt > 0.0)) throw std::invalid_argument("discretization step must be positive");
        const Eigen::Index n = sys.order();
        // Van Loan block: exp([[A, B], [0, 0]] dt) = [[Ad, Bd], [0, 1]]
        Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n + 1, n + 1);
        block.topLeftCorner(n, n) = sys.A * dt;
        block.topRightCorner(n, 1) = sys.B * dt;
        const Eigen::MatrixXd e = block.exp();
        Ad_ = e.topLeftCorner(n, n);
        Bd_ = e.topRightCorner(n, 1);
        x_ = Eigen::VectorXd::Zero(n);
    }

    /// Advances one step holding `u` and returns the output after the step.
    double step(double u) {
        x_ = Ad_ * x_ + Bd_ * u;
        return output();
    }

    double output() const { return C_.dot(x_); }
    const Eigen::VectorXd& state() const { return x_; }
    void reset() { x_.setZero(); }

    const Eigen::MatrixXd& Ad() const { return Ad_; }
    const Eigen::VectorXd& Bd() const { return Bd_; }

private:
    Eigen::MatrixXd Ad_;
    Eigen::VectorXd Bd_;
    Eigen::RowVectorXd C_;
    Eigen::VectorXd x_;
};

/// Steady-state (DC) gain C (-A)^-1 B of a stable system.
inline double dc_gain(const StateSpace& sys) {
    return sys.C.dot(sys.A.fullPivLu().solve(-sys.B));
}

/// Stationary output variance of `sys` driven by unit-intensity continuous white noise.
inline double stationary_variance(const StateSpace& sys) {
    // Solve A P + P A' + B B' = 0 through its Kronecker form.
    const Eigen::Index n = sys.order();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    // vec(A P + P A') = (I kron A + A kron I) vec(P), column-major vec.
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n * n, n * n);
    for (Eigen::Index j = 0; j < n; ++j) L.block(j * n, j * n, n, n) = sys.A;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) L.block(i * n, j * n, n, n) += sys.A(i, j) * I;
    const Eigen::MatrixXd Q = sys.B * sys.B.transpose();
    const Eigen::VectorXd vecQ = Eigen::Map<const Eigen::VectorXd>(Q.data(), n * n);
    const Eigen::VectorXd vecP = L.fullPivLu().solve(-vecQ);
    const Eigen::MatrixXd P = Eigen::Map<const Eigen::MatrixXd>(vecP.data(), n, n);
    return (sys.C * P * sys.C.transpose())(0, 0);
}

}  // namespace acl
