#include "stringy/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy::simplicial {

using qlinalg::Rational;

std::string to_string(const GradedDims& g) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < g.dims.size(); ++i) os << (i ? "," : "") << g.dims[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::closure(const std::vector<std::vector<std::string>>& facets,
                                             const std::vector<std::string>& vertex_order) {
  SimplicialComplex k;
  std::map<std::string, std::size_t> order;
  if (!vertex_order.empty()) {
    for (const auto& v : vertex_order) {
      if (!order.emplace(v, order.size()).second) throw InputError("duplicate vertex '" + v + "' in vertex list");
    }
  } else {
    for (const auto& f : facets)
      for (const auto& v : f) order.emplace(v, order.size());
  }

  std::set<Simplex> all;
  std::size_t top = 0;
  for (const auto& f : facets) {
    if (f.empty()) throw InputError("empty facet");
    Simplex s;
    for (const auto& v : f) {
      auto it = order.find(v);
      if (it == order.end()) throw InputError("facet references unknown vertex '" + v + "'");
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("facet repeats a vertex");
    top = std::max(top, s.size());
    // Every nonempty subset of the facet.
    const std::size_t m = s.size();
    if (m > 24) throw InputError("facet too large");
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1UL << i)) face.push_back(s[i]);
      all.insert(std::move(face));
    }
  }

  // Keep only vertices that occur, preserving the requested order.
  std::vector<std::string> names(order.size());
  for (const auto& [name, idx] : order) names[idx] = name;
  std::vector<bool> used(names.size(), false);
  for (const auto& s : all)
    if (s.size() == 1) used[s[0]] = true;
  if (!vertex_order.empty()) {
    for (std::size_t i = 0; i < used.size(); ++i)
      if (!used[i]) throw InputError("vertex '" + names[i] + "' appears in no facet");
  }
  std::vector<std::size_t> remap(names.size(), 0);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = k.vertices_.size();
    k.vertices_.push_back(names[i]);
  }

  k.simplices_.assign(top, {});
  for (const auto& s : all) {
    Simplex t;
    for (std::size_t v : s) t.push_back(remap[v]);
    k.simplices_[t.size() - 1].push_back(std::move(t));
  }
  for (auto& layer : k.simplices_) std::sort(layer.begin(), layer.end());
  k.build_index();
  return k;
}

void SimplicialComplex::build_index() {
  vertex_index_.clear();
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_[vertices_[i]] = i;
  index_.assign(simplices_.size(), {});
  for (std::size_t d = 0; d < simplices_.size(); ++d)
    for (std::size_t i = 0; i < simplices_[d].size(); ++i) index_[d][simplices_[d][i]] = i;
}

std::size_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return simplices_[dim].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim > dimension()) return none;
  return simplices_[dim];
}

std::size_t SimplicialComplex::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw InputError("unknown vertex '" + name + "'");
  return it->second;
}

long SimplicialComplex::index_of(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dimension()) return -1;
  auto it = index_[d].find(s);
  return it == index_[d].end() ? -1 : static_cast<long>(it->second);
}

std::vector<std::string> SimplicialComplex::names_of(const Simplex& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (std::size_t v : s) out.push_back(vertices_.at(v));
  return out;
}

SimplicialComplex SimplicialComplex::filter(const std::function<bool(const Simplex&)>& keep) const {
  SimplicialComplex out;
  std::vector<long> remap(vertices_.size(), -1);
  for (const auto& s : simplices(0)) {
    if (!keep(s)) continue;
    remap[s[0]] = static_cast<long>(out.vertices_.size());
    out.vertices_.push_back(vertices_[s[0]]);
  }
  for (int d = 0; d <= dimension(); ++d) {
    std::vector<Simplex> layer;
    for (const auto& s : simplices_[d]) {
      if (!keep(s)) continue;
      Simplex t;
      for (std::size_t v : s) {
        if (remap[v] < 0) throw InternalError("filter predicate is not closed under faces");
        t.push_back(static_cast<std::size_t>(remap[v]));
      }
      layer.push_back(std::move(t));
    }
    if (layer.empty()) break;
    out.simplices_.push_back(std::move(layer));
  }
  // Remapping is monotone, so lexicographic order is preserved.
  out.build_index();
  return out;
}

std::vector<std::vector<std::string>> SimplicialComplex::facets() const {
  std::vector<std::vector<std::string>> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& s : simplices_[d]) {
      bool maximal = true;
      if (d < dimension()) {
        for (const auto& t : simplices_[d + 1]) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(names_of(s));
    }
  }
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
  return chi;
}

// ---------------------------------------------------------------------------
// Cochains

Matrix coboundary_matrix(const SimplicialComplex& k, int deg) {
  const std::size_t cols = deg < 0 ? 0 : k.count(deg);
  const std::size_t rows = k.count(deg + 1);
  Matrix m(rows, cols);
  if (deg < 0) return m;
  const auto& upper = k.simplices(deg + 1);
  for (std::size_t r = 0; r < upper.size(); ++r) {
    const Simplex& tau = upper[r];
    for (std::size_t i = 0; i < tau.size(); ++i) {
      Simplex face;
      face.reserve(tau.size() - 1);
      for (std::size_t j = 0; j < tau.size(); ++j)
        if (j != i) face.push_back(tau[j]);
      const long c = k.index_of(face);
      if (c < 0) throw InternalError("complex not closed under faces");
      m(r, static_cast<std::size_t>(c)) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

GradedDims cohomology_dims(const SimplicialComplex& k) {
  GradedDims g;
  std::size_t prev_rank = 0;
  for (int d = 0; d <= k.dimension(); ++d) {
    const std::size_t r = qlinalg::rank(coboundary_matrix(k, d));
    g.dims.push_back(k.count(d) - r - prev_rank);
    prev_rank = r;
  }
  return g;
}

std::vector<std::size_t> ExactSequence::failing_joints() const {
  std::vector<std::size_t> bad;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::size_t dim = terms[t].dim;
    const Matrix in = t == 0 ? Matrix(dim, 0) : maps[t - 1];
    const Matrix out = t + 1 == terms.size() ? Matrix(0, dim) : maps[t];
    if (in.rows() != dim || out.cols() != dim) {
      bad.push_back(t);
      continue;
    }
    if (!qlinalg::is_exact_at(in, out)) bad.push_back(t);
  }
  return bad;
}

namespace {

// Cohomology of a cochain complex given by coordinate subsets of K's
// cochains. Representatives are cocycles extending a basis of coboundaries.
struct CohomologyBasis {
  Matrix reps;           // cochains x h
  Matrix boundary_reps;  // [coboundary basis | reps]
  std::size_t boundary_dim = 0;

  std::size_t dim() const { return reps.cols(); }

  // Coordinates in the chosen basis of the classes of the given cocycles.
  Matrix coordinates(const Matrix& cocycles) const {
    auto x = qlinalg::solve_columns(boundary_reps, cocycles);
    if (!x) throw InternalError("cochain is not a cocycle of the expected complex");
    Matrix out(dim(), cocycles.cols());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < cocycles.cols(); ++j) out(i, j) = (*x)(boundary_dim + i, j);
    return out;
  }
};

CohomologyBasis cohomology_basis(const Matrix& delta_in, const Matrix& delta_out) {
  const qlinalg::Subspace cycles = qlinalg::kernel_basis(delta_out);
  const qlinalg::Subspace bounds = qlinalg::image_basis(delta_in);
  const Matrix both = qlinalg::hconcat(bounds.basis, cycles.basis);
  const qlinalg::RowEchelon ech = qlinalg::row_reduce(both);
  std::vector<std::size_t> pick;
  for (std::size_t c : ech.pivot_columns)
    if (c >= bounds.dim()) pick.push_back(c);
  CohomologyBasis cb;
  cb.reps = both.columns(pick);
  cb.boundary_dim = bounds.dim();
  cb.boundary_reps = qlinalg::hconcat(bounds.basis, cb.reps);
  return cb;
}

// Sub-matrix of m on the given row and column index sets.
Matrix restrict(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

// Matrix of the coordinate inclusion from `small` into `big` (small ⊂ big,
// both sorted lists of K-simplex indices).
Matrix coordinate_inclusion(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  Matrix m(big.size(), small.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < big.size() && j < small.size(); ++i) {
    if (big[i] == small[j]) m(i, j++) = 1;
  }
  if (j != small.size()) throw InternalError("coordinate set is not a subset");
  return m;
}

std::string with_degree(const std::string& label, int k) {
  std::string out = label;
  const auto pos = out.find("{k}");
  if (pos != std::string::npos) return out.replace(pos, 3, std::to_string(k));
  return out + "[" + std::to_string(k) + "]";
}

// Membership of `sub` simplices in `k`, by vertex name, per dimension.
std::vector<std::vector<bool>> membership(const SimplicialComplex& k, const SimplicialComplex& sub,
                                          const std::string& what) {
  std::vector<std::vector<bool>> in(static_cast<std::size_t>(std::max(0, k.dimension() + 1)));
  for (int d = 0; d <= k.dimension(); ++d) in[d].assign(k.count(d), false);
  for (int d = 0; d <= sub.dimension(); ++d) {
    for (const auto& s : sub.simplices(d)) {
      Simplex t;
      for (const auto& name : sub.names_of(s)) {
        if (!k.has_vertex(name)) throw InputError(what + ": vertex '" + name + "' is not in the ambient complex");
        t.push_back(k.vertex_index(name));
      }
      std::sort(t.begin(), t.end());
      const long idx = k.index_of(t);
      if (idx < 0) throw InputError(what + ": simplex is not in the ambient complex");
      in[d][static_cast<std::size_t>(idx)] = true;
    }
  }
  return in;
}

}  // namespace

TripleLES triple_les(const SimplicialComplex& k, const SimplicialComplex& a, const SimplicialComplex& b,
                     const std::array<std::string, 3>& labels) {
  const int top = k.dimension();
  const auto in_a = membership(k, a, "subcomplex A");
  const auto in_b = membership(k, b, "subcomplex B");
  for (int d = 0; d <= top; ++d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (in_b[d][i] && !in_a[d][i]) throw InputError("subcomplex B is not contained in A");

  // Coordinate index sets per degree -1..top+1 (shifted by one).
  const int span = top + 3;
  std::vector<std::vector<std::size_t>> ka(span), kb(span), ab(span);
  for (int d = 0; d <= top; ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (!in_a[d][i]) ka[d + 1].push_back(i);
      if (!in_b[d][i]) kb[d + 1].push_back(i);
      if (in_a[d][i] && !in_b[d][i]) ab[d + 1].push_back(i);
    }
  }
  auto delta = [&](const std::vector<std::vector<std::size_t>>& coords, int d) {
    return restrict(coboundary_matrix(k, d), coords[d + 2], coords[d + 1]);
  };

  TripleLES les;
  les.top_degree = top;
  std::vector<CohomologyBasis> h_ka, h_kb, h_ab;
  for (int d = 0; d <= top; ++d) {
    h_ka.push_back(cohomology_basis(delta(ka, d - 1), delta(ka, d)));
    h_kb.push_back(cohomology_basis(delta(kb, d - 1), delta(kb, d)));
    h_ab.push_back(cohomology_basis(delta(ab, d - 1), delta(ab, d)));
  }

  auto& seq = les.sequence;
  for (int d = 0; d <= top; ++d) {
    seq.terms.push_back({with_degree(labels[0], d), d, h_ka[d].dim()});
    seq.terms.push_back({with_degree(labels[1], d), d, h_kb[d].dim()});
    seq.terms.push_back({with_degree(labels[2], d), d, h_ab[d].dim()});

    // Extension by zero C(K,A) -> C(K,B), then restriction C(K,B) -> C(A,B).
    const Matrix extend = coordinate_inclusion(ka[d + 1], kb[d + 1]);
    const Matrix restrict_ab = qlinalg::transpose(coordinate_inclusion(ab[d + 1], kb[d + 1]));
    seq.maps.push_back(h_kb[d].coordinates(extend * h_ka[d].reps));
    seq.maps.push_back(h_ab[d].coordinates(restrict_ab * h_kb[d].reps));

    // Connecting map: extend an (A,B)-cocycle by zero to (K,B), apply the
    // coboundary, and read off the result on K \ A.
    if (d < top) {
      const Matrix lift = qlinalg::transpose(restrict_ab);
      const Matrix image = delta(kb, d) * (lift * h_ab[d].reps);
      const Matrix to_ka = qlinalg::transpose(coordinate_inclusion(ka[d + 2], kb[d + 2]));
      seq.maps.push_back(h_ka[d + 1].coordinates(to_ka * image));
    } else {
      seq.maps.push_back(Matrix(0, h_ab[d].dim()));
    }
  }
  // The trailing map into the zero space is kept so every term has an
  // outgoing map; drop it to keep maps.size() == terms.size() - 1.
  seq.maps.pop_back();
  return les;
}

TripleLES pair_les(const SimplicialComplex& k, const SimplicialComplex& a) {
  return triple_les(k, a, SimplicialComplex{}, {"H^{k}(K,A)", "H^{k}(K)", "H^{k}(A)"});
}

GradedDims relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& a) {
  const TripleLES les = pair_les(k, a);
  GradedDims g;
  for (int d = 0; d <= les.top_degree; ++d) g.dims.push_back(les.dim_KA(d));
  return g;
}

SimplicialComplex vertex_link(const SimplicialComplex& k, const std::string& v) {
  const std::size_t y = k.vertex_index(v);
  return k.filter([&](const Simplex& s) {
    if (std::binary_search(s.begin(), s.end(), y)) return false;
    Simplex joined = s;
    joined.insert(std::upper_bound(joined.begin(), joined.end(), y), y);
    return k.contains(joined);
  });
}

SimplicialComplex deleted_complex(const SimplicialComplex& k, const std::string& v) {
  const std::size_t y = k.vertex_index(v);
  return k.filter([&](const Simplex& s) { return !std::binary_search(s.begin(), s.end(), y); });
}

bool is_pseudomanifold(const SimplicialComplex& k, int dim, std::vector<std::string>* problems) {
  auto spell = [&](const Simplex& s) {
    std::string out = "{";
    const auto names = k.names_of(s);
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    return out + "}";
  };
  bool ok = true;
  if (k.dimension() != dim) {
    if (problems)
      problems->push_back("dimension is " + std::to_string(k.dimension()) + ", expected " + std::to_string(dim));
    return false;
  }
  for (const auto& f : k.facets()) {
    if (static_cast<int>(f.size()) - 1 != dim) {
      ok = false;
      if (problems) {
        std::string s = "maximal simplex of lower dimension: {";
        for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i];
        problems->push_back(s + "}");
      }
    }
  }
  if (dim >= 1) {
    std::vector<std::size_t> cofaces(k.count(dim - 1), 0);
    for (const auto& top : k.simplices(dim)) {
      for (std::size_t i = 0; i < top.size(); ++i) {
        Simplex face;
        for (std::size_t j = 0; j < top.size(); ++j)
          if (j != i) face.push_back(top[j]);
        ++cofaces[static_cast<std::size_t>(k.index_of(face))];
      }
    }
    for (std::size_t i = 0; i < cofaces.size(); ++i) {
      if (cofaces[i] != 2) {
        ok = false;
        if (problems)
          problems->push_back(spell(k.simplices(dim - 1)[i]) + " lies in " + std::to_string(cofaces[i]) +
                              " top simplices");
      }
    }
  }
  return ok;
}

}  // namespace stringy::simplicial
