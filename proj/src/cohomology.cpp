#include "stringy/cohomology.hpp"

#include "stringy/errors.hpp"

namespace stringy::cohomology {

using qlinalg::transpose;

GradedDims compute_S0(const CohomologyPackage& pkg) {
  const std::size_t n = pkg.n;
  GradedDims g;
  for (std::size_t i = 0; i <= pkg.top_degree(); ++i) {
    if (i < n) {
      g.dims.push_back(pkg.dims_Yo[i]);
    } else if (i > n) {
      g.dims.push_back(pkg.dims_Yo_c[i]);
    } else {
      const std::size_t via_k0 = qlinalg::rank(pkg.a.at(n)) + pkg.dims_Yo[n];
      const std::size_t via_c0 = pkg.dims_Yo_c[n] + qlinalg::rank(pkg.c.at(n));
      if (via_k0 != via_c0) {
        throw InternalError("middle stringy dimension disagrees: K0 + H^n(Y°) = " + std::to_string(via_k0) +
                            " but H^n_c(Y°) + C0 = " + std::to_string(via_c0));
      }
      g.dims.push_back(via_k0);
    }
  }
  return g;
}

GradedDims compute_IC(const CohomologyPackage& pkg) {
  GradedDims g = compute_S0(pkg);
  g.dims[pkg.n] = qlinalg::rank(pkg.b.at(pkg.n));
  return g;
}

GradedDims compute_Q(const CohomologyPackage& pkg) { return pkg.dims_Y; }

MiddleMaps middle_maps(const CohomologyPackage& pkg) {
  const std::size_t n = pkg.n;
  const Matrix& b_n = pkg.b.at(n);
  const std::size_t yo_c = pkg.dims_Yo_c[n];
  const std::size_t yo = pkg.dims_Yo[n];

  // Basis of H^n_c(Y°) starting with a basis of K₀; s reads off the K₀
  // coordinates.
  const qlinalg::Subspace k0 = qlinalg::image_basis(pkg.a.at(n));
  const Matrix extended = qlinalg::hconcat(k0.basis, Matrix::identity(yo_c));
  const auto pivots = qlinalg::row_reduce(extended).pivot_columns;
  const Matrix basis = extended.columns(pivots);
  const auto inv = qlinalg::inverse(basis);
  if (!inv) throw InternalError("failed to extend a basis of K0");
  Matrix s(k0.dim(), yo_c);
  for (std::size_t i = 0; i < k0.dim(); ++i)
    for (std::size_t j = 0; j < yo_c; ++j) s(i, j) = (*inv)(i, j);

  MiddleMaps mm;
  mm.c = qlinalg::vconcat(s, b_n);
  mm.d = qlinalg::hconcat(Matrix::zero(yo, k0.dim()), Matrix::identity(yo));
  if (!(mm.d * mm.c == b_n)) throw InternalError("middle maps do not factor b_n");
  mm.c_injective = qlinalg::is_injective(mm.c);
  mm.d_surjective = qlinalg::is_surjective(mm.d);
  return mm;
}

std::pair<bool, bool> middle_maps_check(const CohomologyPackage& pkg) {
  const MiddleMaps mm = middle_maps(pkg);
  return {mm.c_injective, mm.d_surjective};
}

bool check_poincare(const GradedDims& dims, std::size_t n) {
  if (dims.size() != 2 * n + 1) return false;
  for (std::size_t i = 0; i <= 2 * n; ++i)
    if (dims[i] != dims[2 * n - i]) return false;
  return true;
}

bool operator==(const CohomologyReport& a, const CohomologyReport& b) {
  return a.n == b.n && a.provenance == b.provenance && a.table_S0 == b.table_S0 && a.table_IC == b.table_IC &&
         a.table_Q == b.table_Q && a.table_Yo == b.table_Yo && a.table_Yo_c == b.table_Yo_c &&
         a.K0_dim == b.K0_dim && a.C0_dim == b.C0_dim && a.ses_a_ok == b.ses_a_ok && a.ses_b_ok == b.ses_b_ok &&
         a.middle_injection_ok == b.middle_injection_ok && a.middle_surjection_ok == b.middle_surjection_ok &&
         a.poincare_ok_S0 == b.poincare_ok_S0 && a.poincare_ok_IC == b.poincare_ok_IC &&
         a.poincare_ok_Q == b.poincare_ok_Q && a.support_report.support_ok == b.support_report.support_ok &&
         a.support_report.cosupport_ok == b.support_report.cosupport_ok &&
         a.support_report.notes == b.support_report.notes && a.notes == b.notes;
}

namespace {

// 0 -> A -f-> B -g-> C -> 0 exact at all three terms.
bool short_exact(const Matrix& f, const Matrix& g) {
  return qlinalg::is_exact_at(Matrix(f.cols(), 0), f) && qlinalg::is_exact_at(f, g) &&
         qlinalg::is_exact_at(g, Matrix(0, g.rows()));
}

}  // namespace

CohomologyReport build_report(const CohomologyPackage& pkg) {
  const std::size_t n = pkg.n;
  CohomologyReport r;
  r.n = n;
  r.provenance = stratified::to_string(pkg.provenance);
  r.table_S0 = compute_S0(pkg);
  r.table_IC = compute_IC(pkg);
  r.table_Q = compute_Q(pkg);
  r.table_Yo = pkg.dims_Yo;
  r.table_Yo_c = pkg.dims_Yo_c;
  r.K0_dim = qlinalg::rank(pkg.a.at(n));
  r.C0_dim = qlinalg::rank(pkg.c.at(n));

  const MiddleMaps mm = middle_maps(pkg);
  const std::size_t model_dim = mm.d.cols();
  if (model_dim != r.table_S0[n]) throw InternalError("middle model dimension disagrees with the S0 table");

  // (a): K₀ included as the first summand, then d.
  Matrix k0_in(model_dim, r.K0_dim);
  for (std::size_t i = 0; i < r.K0_dim; ++i) k0_in(i, i) = 1;
  r.ses_a_ok = short_exact(k0_in, mm.d);
  // (b): c, then the projection onto its cokernel, which must be C₀-dimensional.
  const Matrix coker = transpose(qlinalg::kernel_basis(transpose(mm.c)).basis);
  r.ses_b_ok = coker.rows() == r.C0_dim && short_exact(mm.c, coker);

  r.middle_injection_ok = mm.c_injective;
  r.middle_surjection_ok = mm.d_surjective;
  r.poincare_ok_S0 = check_poincare(r.table_S0, n);
  r.poincare_ok_IC = check_poincare(r.table_IC, n);
  r.poincare_ok_Q = check_poincare(r.table_Q, n);
  r.support_report = stratified::support_cosupport_check(pkg, r.table_S0);
  r.notes = pkg.notes;
  r.notes.push_back("S0 middle degree from 0 -> K0 -> H^n(S0) -> H^n(Y°) -> 0, cross-checked against "
                    "0 -> H^n_c(Y°) -> H^n(S0) -> C0 -> 0");
  r.notes.push_back("IC middle degree = rank of H^n_c(Y°) -> H^n(Y°)");
  return r;
}

StringyHomology compute_SH(const CohomologyReport& report) {
  StringyHomology sh;
  sh.dims = report.table_S0;
  sh.middle_from_Y = report.table_Yo_c[report.n];
  sh.middle_from_Y_minus = report.table_Yo[report.n];
  sh.K0_dim = report.K0_dim;
  sh.C0_dim = report.C0_dim;
  return sh;
}

ObstructionReport multinode_obstruction(const MultiNodeData& data) {
  const std::size_t n = data.n;
  if (n == 0) throw InputError("n must be at least 1");
  if (data.node_link_dims.empty()) throw InputError("multi-node data lists no nodes");
  if (data.link_dims_total.size() != 2 * n) throw InputError("total link dims must have 2n entries");
  std::vector<std::size_t> sum(2 * n, 0);
  for (std::size_t b = 0; b < data.node_link_dims.size(); ++b) {
    const auto& node = data.node_link_dims[b];
    if (node.size() != 2 * n) {
      throw InputError("link dims of node " + std::to_string(b) + " have " + std::to_string(node.size()) +
                       " entries, expected " + std::to_string(2 * n));
    }
    for (std::size_t k = 0; k < 2 * n; ++k) sum[k] += node[k];
  }
  for (std::size_t k = 0; k < 2 * n; ++k) {
    if (sum[k] != data.link_dims_total[k]) {
      throw InputError("direct-sum link dim in degree " + std::to_string(k) + " is " +
                       std::to_string(data.link_dims_total[k]) + " but the nodes sum to " + std::to_string(sum[k]));
    }
  }
  const std::size_t a_rows = data.dims_Y[n];
  const std::size_t a_cols = data.link_dims_total[n - 1];
  const std::size_t g_rows = data.link_dims_total[n];
  const std::size_t g_cols = data.dims_Yo[n];
  if (data.alpha2.rows() != a_rows || data.alpha2.cols() != a_cols) {
    throw InputError("alpha2 must be " + std::to_string(a_rows) + "x" + std::to_string(a_cols));
  }
  if (data.gamma1.rows() != g_rows || data.gamma1.cols() != g_cols) {
    throw InputError("gamma1 must be " + std::to_string(g_rows) + "x" + std::to_string(g_cols));
  }

  ObstructionReport rep;
  rep.nodes = data.node_link_dims.size();
  rep.alpha2_is_zero = data.alpha2.is_zero();
  rep.gamma1_is_zero = data.gamma1.is_zero();
  // β₂ has kernel im(α₂) and β₁ has image ker(γ₁).
  rep.c_injective = qlinalg::rank(data.alpha2) == 0;
  rep.d_surjective = qlinalg::rank(data.gamma1) == 0;
  return rep;
}

MultiNodeData embed_single_node(const CohomologyPackage& pkg) {
  const std::size_t n = pkg.n;
  const MiddleMaps mm = middle_maps(pkg);
  MultiNodeData data;
  data.n = n;
  data.node_link_dims = {pkg.dims_L};
  data.link_dims_total = pkg.dims_L;
  data.dims_Y = pkg.dims_Yo_c;
  data.dims_Yo = pkg.dims_Yo;

  const Matrix ker_c = qlinalg::kernel_basis(mm.c).basis;
  const std::size_t src = pkg.dims_L[n - 1];
  if (ker_c.cols() > src) throw InternalError("kernel of c does not fit in H^(n-1)(L)");
  data.alpha2 = qlinalg::hconcat(ker_c, Matrix::zero(ker_c.rows(), src - ker_c.cols()));

  const Matrix coker_d = transpose(qlinalg::kernel_basis(transpose(mm.d)).basis);
  const std::size_t dst = pkg.dims_L[n];
  if (coker_d.rows() > dst) throw InternalError("cokernel of d does not fit in H^n(L)");
  data.gamma1 = qlinalg::vconcat(coker_d, Matrix::zero(dst - coker_d.rows(), coker_d.cols()));
  return data;
}

}  // namespace stringy::cohomology
