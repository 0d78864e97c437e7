#pragma once

#include <map>

#include "foel/half_int.hpp"
#include "foel/sector_spectra.hpp"
#include "foel/spin_algebra.hpp"

namespace foel {

/// Deformation parameter 0 < q < 1 with Delta = (q + 1/q)/2 > 1.
struct QParam {
  double q = 0.5;
  double delta = 1.25;

  static QParam from_q(double q);
  static QParam from_delta(double delta);
};

/// Dressed total-spin operators on L spin-1/2 sites, t = diag(1/q, q).
struct QTotalOps {
  RealOperator s3;
  RealOperator splus;   // sum_x t (x) ... (x) t (x) S^+_x (x) 1 ...
  RealOperator sminus;  // sum_x 1 ... (x) S^-_x (x) t^-1 (x) ... (x) t^-1
  RealOperator t;       // t (x) ... (x) t
};

QTotalOps suq2_generators(int length, const QParam& qp);

/// C = S^+S^- + ((qT)^-1 + qT)/(1/q - q)^2. Throws InputError for q > 1 - 1e-6.
RealOperator q_casimir(int length, const QParam& qp);

/// (q^-(2S+1) + q^(2S+1)) / (1/q - q)^2.
double q_casimir_value(HalfInt S, const QParam& qp);

struct QSectorReport {
  SectorMap entries;
  std::map<HalfInt, double> casimir_values;
  FoelVerdict foel;
};

/// Sector minima of the XXZ chain on ker(S_q^+) inside each S^3 = S block.
QSectorReport q_sector_energies(int length, const QParam& qp, double foel_tol = 1e-8);

/// All eigenvalues of the XXZ chain on the q-highest-weight space of label S.
VectorXd q_sector_spectrum(int length, const QParam& qp, HalfInt S);

/// (1-q^2)(1-q^n) / ((1+q^2)(1+q^n)).
double droplet_energy(int n, const QParam& qp);

/// 4 q^n (1-q^2) / ((1+q^n)(1-q^n)).
double droplet_bandwidth(int n, const QParam& qp);

/// E(H_L, L/2 - n): lowest XXZ energy on the q-highest-weight space with n
/// overturned spins. Needs n >= 1 and 2n <= L.
double finite_droplet_energy(int length, int n, const QParam& qp);

}  // namespace foel
