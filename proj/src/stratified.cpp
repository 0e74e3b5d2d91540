#include "stringy/stratified.hpp"

#include <algorithm>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy::stratified {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

bool is_rational_sphere(const GradedDims& g, std::size_t dim) {
  if (g.size() != dim + 1) return false;
  for (std::size_t i = 0; i <= dim; ++i) {
    const std::size_t expected = (i == 0 || i == dim) ? 1 : 0;
    if (g[i] != expected) return false;
  }
  return true;
}

std::string label(const char* pattern, std::size_t k) {
  std::string s = pattern;
  return s.replace(s.find("{k}"), 3, std::to_string(k));
}

constexpr const char* kConeLabel = "H^{k}_c(c°L)";
constexpr const char* kYoCLabel = "H^{k}_c(Y°)";
constexpr const char* kYoLabel = "H^{k}(Y°)";

}  // namespace

std::string to_string(Provenance p) { return p == Provenance::simplicial ? "simplicial" : "rank-mode"; }

StratifiedSpace build_stratified(const SimplicialComplex& k, const std::string& y, std::size_t n) {
  if (n == 0) throw InputError("half dimension n must be at least 1");
  if (!k.has_vertex(y)) throw InputError("singular vertex '" + y + "' is not a vertex of the complex");
  const int dim = static_cast<int>(2 * n);
  if (k.dimension() != dim) {
    throw ValidationError("complex has dimension " + std::to_string(k.dimension()) + " but 2n = " +
                          std::to_string(dim));
  }

  StratifiedSpace s{k, y, n, simplicial::vertex_link(k, y)};
  if (s.link.dimension() < 0) throw ValidationError("link of '" + y + "' is empty");
  std::vector<std::string> problems;
  if (!simplicial::is_pseudomanifold(s.link, dim - 1, &problems)) {
    throw ValidationError("link of '" + y + "' is not a " + std::to_string(dim - 1) +
                          "-pseudomanifold: " + join(problems, "; "));
  }

  // Closed star of y must be y * link: every simplex through y is a link
  // simplex joined with y, and the link simplices are exactly the faces of
  // the star that miss y.
  const std::size_t yi = k.vertex_index(y);
  std::size_t star_through_y = 0;
  for (int d = 1; d <= k.dimension(); ++d) {
    for (const auto& sigma : k.simplices(d)) {
      if (!std::binary_search(sigma.begin(), sigma.end(), yi)) continue;
      ++star_through_y;
      std::vector<std::string> rest;
      for (std::size_t v : sigma)
        if (v != yi) rest.push_back(k.vertices()[v]);
      simplicial::Simplex in_link;
      for (const auto& name : rest) {
        if (!s.link.has_vertex(name)) throw ValidationError("closed star of '" + y + "' is not a cone on its link");
        in_link.push_back(s.link.vertex_index(name));
      }
      std::sort(in_link.begin(), in_link.end());
      if (!s.link.contains(in_link)) throw ValidationError("closed star of '" + y + "' is not a cone on its link");
    }
  }
  std::size_t link_simplices = 0;
  for (int d = 0; d <= s.link.dimension(); ++d) link_simplices += s.link.count(d);
  if (link_simplices != star_through_y) throw ValidationError("closed star of '" + y + "' is not a cone on its link");

  for (const auto& v : k.vertices()) {
    if (v == y) continue;
    const SimplicialComplex lk = simplicial::vertex_link(k, v);
    if (!simplicial::is_pseudomanifold(lk, dim - 1) ||
        !is_rational_sphere(simplicial::cohomology_dims(lk), static_cast<std::size_t>(dim - 1))) {
      throw ValidationError("vertex '" + v + "' is also singular (its link is not a rational " +
                            std::to_string(dim - 1) + "-sphere); only one singular vertex is supported");
    }
  }
  return s;
}

ExactSequence CohomologyPackage::sequence() const {
  ExactSequence seq;
  for (std::size_t k = 0; k <= top_degree(); ++k) {
    const int deg = static_cast<int>(k);
    seq.terms.push_back({label(kConeLabel, k), deg, dims_cone_c[k]});
    seq.terms.push_back({label(kYoCLabel, k), deg, dims_Yo_c[k]});
    seq.terms.push_back({label(kYoLabel, k), deg, dims_Yo[k]});
    seq.maps.push_back(a.at(k));
    seq.maps.push_back(b.at(k));
    if (k < top_degree()) seq.maps.push_back(c.at(k));
  }
  return seq;
}

std::vector<std::string> package_problems(const CohomologyPackage& pkg) {
  const std::size_t top = pkg.top_degree();
  std::vector<std::string> problems;
  if (pkg.a.size() != top + 1 || pkg.b.size() != top + 1 || pkg.c.size() != top + 1) {
    problems.push_back("expected maps for degrees 0.." + std::to_string(top));
    return problems;
  }
  auto shape = [&](const Matrix& m, std::size_t rows, std::size_t cols, const std::string& name) {
    if (m.rows() != rows || m.cols() != cols) {
      problems.push_back(name + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }
  };
  for (std::size_t k = 0; k <= top; ++k) {
    const std::string deg = std::to_string(k);
    shape(pkg.a[k], pkg.dims_Yo_c[k], pkg.dims_cone_c[k], "a_" + deg);
    shape(pkg.b[k], pkg.dims_Yo[k], pkg.dims_Yo_c[k], "b_" + deg);
    shape(pkg.c[k], k < top ? pkg.dims_cone_c[k + 1] : 0, pkg.dims_Yo[k], "c_" + deg);
  }
  if (!problems.empty()) return problems;
  const ExactSequence seq = pkg.sequence();
  for (std::size_t t : seq.failing_joints()) problems.push_back(seq.terms[t].label);
  return problems;
}

CohomologyPackage assemble_package_simplicial(const StratifiedSpace& s) {
  const SimplicialComplex& y_complex = s.complex;
  const std::size_t yi = y_complex.vertex_index(s.singular_vertex);
  const std::size_t top = 2 * s.half_dim;

  const SimplicialComplex deleted = simplicial::deleted_complex(y_complex, s.singular_vertex);
  const SimplicialComplex deleted_plus_y = y_complex.filter([&](const simplicial::Simplex& sigma) {
    return !std::binary_search(sigma.begin(), sigma.end(), yi) || sigma.size() == 1;
  });
  const SimplicialComplex point = y_complex.filter([&](const simplicial::Simplex& sigma) {
    return sigma.size() == 1 && sigma[0] == yi;
  });
  const simplicial::TripleLES les =
      simplicial::triple_les(y_complex, deleted_plus_y, point, {kConeLabel, kYoCLabel, kYoLabel});

  CohomologyPackage pkg;
  pkg.n = s.half_dim;
  pkg.provenance = Provenance::simplicial;
  pkg.dims_Y = simplicial::cohomology_dims(y_complex);
  pkg.dims_L = simplicial::cohomology_dims(s.link);
  for (std::size_t k = 0; k <= top; ++k) {
    const int d = static_cast<int>(k);
    pkg.dims_cone_c.dims.push_back(les.dim_KA(d));
    pkg.dims_Yo_c.dims.push_back(les.dim_KB(d));
    pkg.dims_Yo.dims.push_back(les.dim_AB(d));
    pkg.a.push_back(les.map_KA_to_KB(d));
    pkg.b.push_back(les.map_KB_to_AB(d));
    pkg.c.push_back(k < top ? les.connecting(d) : Matrix(0, les.dim_AB(d)));
  }

  // Identifications the triple realizes; any failure is a bug.
  const GradedDims deleted_dims = simplicial::cohomology_dims(deleted);
  for (std::size_t k = 0; k <= top; ++k) {
    if (pkg.dims_Yo[k] != deleted_dims[k])
      throw InternalError("H^" + std::to_string(k) + "(Y°) disagrees with the deleted complex");
    if (k >= 1 && pkg.dims_cone_c[k] != pkg.dims_L[k - 1])
      throw InternalError("H^" + std::to_string(k) + "_c(c°L) disagrees with H^" + std::to_string(k - 1) + "(L)");
    if (k >= 1 && pkg.dims_Yo_c[k] != pkg.dims_Y[k])
      throw InternalError("H^" + std::to_string(k) + "_c(Y°) disagrees with H^" + std::to_string(k) + "(Y)");
  }
  if (pkg.dims_cone_c[0] != 0) throw InternalError("H^0_c(c°L) must vanish");
  if (pkg.dims_Yo_c[0] + 1 != pkg.dims_Y[0]) throw InternalError("H^0_c(Y°) must be reduced H^0(Y)");

  const auto problems = package_problems(pkg);
  if (!problems.empty()) throw InternalError("assembled sequence is not exact at " + join(problems, ", "));

  pkg.notes.push_back("H^k_c(c°L) realized as H^k(Y, Y1+y) by excision; equals unreduced H^(k-1)(L) for k >= 1");
  pkg.notes.push_back("H^k_c(Y°) realized as H^k(Y, y); equals H^k(Y) for k >= 1 and reduced H^0(Y) in degree 0");
  pkg.notes.push_back("H^k(Y°) realized as H^k(Y1), Y1 = full subcomplex on the vertices other than y");
  if (pkg.dims_L[0] != 0) {
    pkg.notes.push_back("H^1_c(c°L) = H^0(L) = " + std::to_string(pkg.dims_L[0]) + " (reduced convention would give " +
                        std::to_string(pkg.dims_L[0] - 1) + ")");
  }
  pkg.notes.push_back("manifold condition on Y - y checked only up to rational-sphere vertex links");
  return pkg;
}

GradedDims cone_dims_from_link(const std::vector<std::size_t>& dims_L, std::size_t n) {
  GradedDims g;
  g.dims.assign(2 * n + 1, 0);
  for (std::size_t k = 1; k <= 2 * n && k - 1 < dims_L.size(); ++k) g.dims[k] = dims_L[k - 1];
  return g;
}

CohomologyPackage assemble_package_ranks(const RankInput& input) {
  const std::size_t n = input.n;
  if (n == 0) throw InputError("n must be at least 1");
  const std::size_t top = 2 * n;
  auto check_len = [&](const std::vector<std::size_t>& v, std::size_t len, const char* name) {
    if (v.size() != len) {
      throw InputError(std::string(name) + " has " + std::to_string(v.size()) + " entries, expected " +
                       std::to_string(len));
    }
  };
  check_len(input.dims_Y, top + 1, "dims_Y");
  check_len(input.dims_Yo, top + 1, "dims_Yo");
  check_len(input.dims_Yo_c, top + 1, "dims_Yo_c");
  check_len(input.dims_L, top, "dims_L");
  if (input.ranks.has_value() == input.matrices.has_value())
    throw InputError("supply exactly one of map ranks or map matrices");

  CohomologyPackage pkg;
  pkg.n = n;
  pkg.provenance = Provenance::rank_mode;
  pkg.dims_Y.dims = input.dims_Y;
  pkg.dims_Yo.dims = input.dims_Yo;
  pkg.dims_Yo_c.dims = input.dims_Yo_c;
  pkg.dims_L.dims = input.dims_L;
  pkg.dims_cone_c = cone_dims_from_link(input.dims_L, n);

  if (input.ranks) {
    const auto& ranks = *input.ranks;
    if (ranks.size() != top + 1) {
      throw InputError("map ranks given for " + std::to_string(ranks.size()) + " degrees, expected " +
                       std::to_string(top + 1));
    }
    // Flatten to the term/map chain, then lay each map out as a partial
    // identity starting just past the image of the incoming map.
    std::vector<std::size_t> dims;
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k <= top; ++k) {
      dims.insert(dims.end(), {pkg.dims_cone_c[k], pkg.dims_Yo_c[k], pkg.dims_Yo[k]});
      r.insert(r.end(), {ranks[k][0], ranks[k][1], ranks[k][2]});
    }
    dims.push_back(0);  // target of c_{2n}
    const char* names[3] = {"a", "b", "c"};
    std::vector<Matrix> maps;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const std::size_t src = dims[j];
      const std::size_t dst = dims[j + 1];
      if (r[j] > std::min(src, dst)) {
        throw InputError("rank of " + std::string(names[j % 3]) + "_" + std::to_string(j / 3) + " is " +
                         std::to_string(r[j]) + ", exceeding min(" + std::to_string(src) + ", " +
                         std::to_string(dst) + ")");
      }
      const std::size_t incoming = j == 0 ? 0 : r[j - 1];
      const std::size_t offset = std::min(incoming, src - r[j]);
      Matrix m(dst, src);
      for (std::size_t i = 0; i < r[j]; ++i) m(i, offset + i) = 1;
      maps.push_back(std::move(m));
    }
    for (std::size_t k = 0; k <= top; ++k) {
      pkg.a.push_back(maps[3 * k]);
      pkg.b.push_back(maps[3 * k + 1]);
      pkg.c.push_back(maps[3 * k + 2]);
    }
  } else {
    const auto& mats = *input.matrices;
    if (mats.size() != top + 1) {
      throw InputError("map matrices given for " + std::to_string(mats.size()) + " degrees, expected " +
                       std::to_string(top + 1));
    }
    for (const auto& [a, b, c] : mats) {
      pkg.a.push_back(a);
      pkg.b.push_back(b);
      pkg.c.push_back(c);
    }
  }

  const auto problems = package_problems(pkg);
  if (!problems.empty()) throw InputError("rank data violates exactness at " + join(problems, ", "));

  pkg.notes.push_back("H^k_c(c°L) populated as unreduced H^(k-1)(L) for k >= 1, zero in degree 0");
  if (input.ranks) pkg.notes.push_back("maps expanded from ranks to canonical partial-identity matrices");
  for (std::size_t k = 1; k <= top; ++k) {
    if (pkg.dims_Y[k] != pkg.dims_Yo_c[k]) {
      pkg.notes.push_back("supplied H^" + std::to_string(k) + "(Y) = " + std::to_string(pkg.dims_Y[k]) +
                          " differs from H^" + std::to_string(k) + "_c(Y°) = " + std::to_string(pkg.dims_Yo_c[k]) +
                          "; stringy degrees above n use H^k_c(Y°)");
    }
  }
  return pkg;
}

RankInput to_rank_input(const CohomologyPackage& pkg) {
  RankInput in;
  in.n = pkg.n;
  in.dims_Y = pkg.dims_Y.dims;
  in.dims_Yo = pkg.dims_Yo.dims;
  in.dims_Yo_c = pkg.dims_Yo_c.dims;
  in.dims_L = pkg.dims_L.dims;
  in.dims_L.resize(2 * pkg.n, 0);
  std::vector<std::array<std::size_t, 3>> ranks;
  for (std::size_t k = 0; k <= pkg.top_degree(); ++k)
    ranks.push_back({qlinalg::rank(pkg.a[k]), qlinalg::rank(pkg.b[k]), qlinalg::rank(pkg.c[k])});
  in.ranks = std::move(ranks);
  return in;
}

bool SupportCheckReport::all_ok() const {
  return std::all_of(support_ok.begin(), support_ok.end(), [](bool b) { return b; }) &&
         std::all_of(cosupport_ok.begin(), cosupport_ok.end(), [](bool b) { return b; });
}

SupportCheckReport support_cosupport_check(const CohomologyPackage& pkg, const GradedDims& s0_table) {
  SupportCheckReport rep;
  const std::size_t n = pkg.n;
  for (std::size_t i = 0; i <= pkg.top_degree(); ++i) {
    bool support = true;
    bool cosupport = true;
    if (i > n) {
      support = s0_table[i] == pkg.dims_Yo_c[i];
      if (!support) {
        rep.notes.push_back("degree " + std::to_string(i) + ": S0 = " + std::to_string(s0_table[i]) +
                            " but H^i_c(Y°) = " + std::to_string(pkg.dims_Yo_c[i]));
      }
    } else if (i < n) {
      cosupport = s0_table[i] == pkg.dims_Yo[i];
      if (!cosupport) {
        rep.notes.push_back("degree " + std::to_string(i) + ": S0 = " + std::to_string(s0_table[i]) +
                            " but H^i(Y°) = " + std::to_string(pkg.dims_Yo[i]));
      }
    }
    rep.support_ok.push_back(support);
    rep.cosupport_ok.push_back(cosupport);
  }
  return rep;
}

}  // namespace stringy::stratified
