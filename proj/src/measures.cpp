#include "rgme/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "rgme/linalg.hpp"

namespace rgme {

Real fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw StructuralError("fidelity: dimension mismatch");
  // F = tr sqrt(sqrt(rho) sigma sqrt(rho)) = ||sqrt(rho) sqrt(sigma)||_1.
  // The singular-value route keeps the error linear in machine epsilon;
  // summing sqrt of eigenvalues would amplify null-space noise as sqrt(eps).
  Matrix a = mat_sqrt_psd(rho.matrix(), rho.psd_tolerance());
  Matrix b = mat_sqrt_psd(sigma.matrix(), sigma.psd_tolerance());
  Eigen::BDCSVD<Matrix> svd(a * b);
  Real f = svd.singularValues().sum();
  return std::clamp<Real>(f, 0, 1);
}

Real bures_sq(const DensityMatrix& rho, const DensityMatrix& sigma) {
  Real f = fidelity(rho, sigma);
  return std::clamp<Real>(1 - f * f, 0, 1);
}

Real von_neumann_entropy(const DensityMatrix& rho) {
  EigResult eig = eig_hermitian(rho.matrix());
  Real s = 0;
  for (Index i = 0; i < eig.values.size(); ++i) {
    Real p = eig.values[i];
    if (p > 1e-14) s -= p * std::log2(p);
  }
  return std::max<Real>(s, 0);
}

Real trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw StructuralError("trace_distance: dimension mismatch");
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

Real relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                      Real support_cutoff, Real support_tol) {
  if (rho.dim() != sigma.dim())
    throw StructuralError("relative_entropy: dimension mismatch");
  EigResult rho_eig = eig_hermitian(rho.matrix());
  EigResult sig_eig = eig_hermitian(sigma.matrix());

  Real tr_rho_log_rho = 0;
  for (Index i = 0; i < rho_eig.values.size(); ++i) {
    Real p = rho_eig.values[i];
    if (p > support_cutoff) tr_rho_log_rho += p * std::log2(p);
  }

  Real tr_rho_log_sigma = 0;
  Real null_weight = 0;
  for (Index j = 0; j < sig_eig.values.size(); ++j) {
    Real q = sig_eig.values[j];
    Real weight =
        (sig_eig.vectors.col(j).adjoint() * rho.matrix() * sig_eig.vectors.col(j))
            .real()(0, 0);
    weight = std::max<Real>(weight, 0);
    if (q > support_cutoff) {
      tr_rho_log_sigma += weight * std::log2(q);
    } else {
      null_weight += weight;
    }
  }
  if (null_weight > support_tol) return std::numeric_limits<Real>::infinity();
  return tr_rho_log_rho - tr_rho_log_sigma;
}

Real concurrence(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2})
    throw StructuralError("concurrence: requires a 2x2 subsystem signature");
  Matrix spinflip = Matrix::Zero(4, 4);
  spinflip(0, 3) = -1;
  spinflip(1, 2) = 1;
  spinflip(2, 1) = 1;
  spinflip(3, 0) = -1;
  // mu_i = sqrt(eig(rho rho~)) are the singular values of
  // sqrt(rho) sqrt(rho~); the spin-flipped state is PSD by construction.
  Matrix flipped = spinflip * rho.matrix().conjugate() * spinflip;
  flipped = ((flipped + flipped.adjoint()) / 2.0).eval();
  Matrix a = mat_sqrt_psd(rho.matrix(), rho.psd_tolerance());
  Matrix b = mat_sqrt_psd(flipped, rho.psd_tolerance());
  Eigen::BDCSVD<Matrix> svd(a * b);
  const auto& mu = svd.singularValues();
  return std::max<Real>(0, mu[0] - mu[1] - mu[2] - mu[3]);
}

Real gme_two_qubit(const DensityMatrix& rho) {
  Real c = concurrence(rho);
  return 0.5 * (1 - std::sqrt(std::max<Real>(0, 1 - c * c)));
}

Real negativity(const DensityMatrix& rho, const std::set<std::size_t>& cut) {
  Matrix pt = partial_transpose(rho, cut);
  return std::max<Real>(0, trace_norm(pt) - 1);
}

Real negativity(const DensityMatrix& rho, std::size_t cut_subsystem) {
  return negativity(rho, std::set<std::size_t>{cut_subsystem});
}

Real best_product_approx(const Vector& z, const Dims& dims,
                         std::vector<Vector>& factors, int max_sweeps, Real tol) {
  const std::size_t sites = dims.size();
  if (factors.size() != sites)
    throw StructuralError("best_product_approx: factor count mismatch");
  const Index d = z.size();
  std::vector<std::vector<Index>> digit(d);
  std::vector<Index> tmp;
  for (Index i = 0; i < d; ++i) {
    unpack_index(i, dims, tmp);
    digit[i] = tmp;
  }

  Real lambda = 0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    Real lambda_new = 0;
    for (std::size_t k = 0; k < sites; ++k) {
      // Environment c[i_k] = sum over remaining indices of conj(z) times the
      // other factors; the optimal site update is conj(c)/|c|.
      Vector env = Vector::Zero(dims[k]);
      for (Index i = 0; i < d; ++i) {
        Complex w = std::conj(z[i]);
        for (std::size_t j = 0; j < sites; ++j)
          if (j != k) w *= factors[j][digit[i][j]];
        env[digit[i][k]] += w;
      }
      Real norm = env.norm();
      if (norm < 1e-300) {
        factors[k].setZero();
        factors[k][0] = 1.0;
        lambda_new = 0;
        continue;
      }
      factors[k] = env.conjugate() / norm;
      lambda_new = norm;
    }
    if (std::abs(lambda_new - lambda) < tol * std::max<Real>(1, lambda_new)) {
      lambda = lambda_new;
      break;
    }
    lambda = lambda_new;
  }
  return lambda;
}

MeasureReport gme_pure(const PureState& psi, const GmeOptions& opts) {
  const Dims& dims = psi.dims();
  const std::size_t sites = dims.size();

  Real best_lambda = -1;
  std::vector<Vector> best_factors;
  for (int start = 0; start < opts.starts; ++start) {
    std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * (start + 1)));
    std::normal_distribution<Real> gauss(0, 1);
    std::vector<Vector> factors(sites);
    for (std::size_t k = 0; k < sites; ++k) {
      Vector v(dims[k]);
      for (Index i = 0; i < dims[k]; ++i) v[i] = Complex(gauss(rng), gauss(rng));
      factors[k] = v / v.norm();
    }
    Real lambda = best_product_approx(psi.amplitudes(), dims, factors,
                                      opts.max_sweeps, opts.lambda_tol);
    if (lambda > best_lambda) {
      best_lambda = lambda;
      best_factors = factors;
    }
  }

  Vector product = Vector::Ones(1);
  for (const Vector& f : best_factors) {
    Vector next(product.size() * f.size());
    for (Index a = 0; a < product.size(); ++a)
      for (Index b = 0; b < f.size(); ++b) next[a * f.size() + b] = product[a] * f[b];
    product = next;
  }

  MeasureReport report;
  report.measure = "gme";
  report.value =
      std::clamp<Real>(1 - best_lambda * best_lambda, 0, 1);
  report.witness_pure = PureState(product / product.norm(), dims);
  report.diagnostics["lambda_max"] = best_lambda;
  report.diagnostics["starts"] = opts.starts;
  return report;
}

}  // namespace rgme
