#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stringy/qlinalg.hpp"

namespace stringy::simplicial {

using qlinalg::Matrix;

/// Strictly increasing vertex indices into SimplicialComplex::vertices().
using Simplex = std::vector<std::size_t>;

/// Betti numbers (or any graded dimension table) indexed by degree.
struct GradedDims {
  std::vector<std::size_t> dims;

  std::size_t size() const noexcept { return dims.size(); }
  /// Zero past the end, so callers can ask for any degree.
  std::size_t operator[](std::size_t degree) const noexcept { return degree < dims.size() ? dims[degree] : 0; }
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

std::string to_string(const GradedDims& g);

/// Finite abstract simplicial complex, canonicalized on construction:
/// simplices of each dimension are sorted lexicographically in vertex index
/// order, so two complexes built from the same data compare equal.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Smallest complex containing every facet. Vertex order is
  /// `vertex_order` when supplied (every facet vertex must appear in it),
  /// otherwise order of first appearance. Throws InputError for empty
  /// facets, repeated vertices within a facet, or unknown vertices.
  static SimplicialComplex closure(const std::vector<std::vector<std::string>>& facets,
                                   const std::vector<std::string>& vertex_order = {});

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(int dim) const;
  const std::vector<Simplex>& simplices(int dim) const;

  bool has_vertex(const std::string& name) const { return vertex_index_.contains(name); }
  /// Throws InputError for unknown names.
  std::size_t vertex_index(const std::string& name) const;

  /// Position of a simplex within simplices(dim), or -1 when absent.
  long index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  /// Vertex names of a simplex of this complex.
  std::vector<std::string> names_of(const Simplex& s) const;

  /// All simplices satisfying `keep`; the predicate must be closed under
  /// faces. Vertices are the survivors, in the original order.
  SimplicialComplex filter(const std::function<bool(const Simplex&)>& keep) const;

  /// Maximal simplices (spelled by vertex name).
  std::vector<std::vector<std::string>> facets() const;

  long euler_characteristic() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  void build_index();

  std::vector<std::string> vertices_;
  std::vector<std::vector<Simplex>> simplices_;
  std::map<std::string, std::size_t> vertex_index_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Matrix of the coboundary C^deg -> C^{deg+1}. The entry at (tau, sigma) is
/// (-1)^i when sigma is tau with its i-th vertex removed.
Matrix coboundary_matrix(const SimplicialComplex& k, int deg);

GradedDims cohomology_dims(const SimplicialComplex& k);

/// A long exact sequence laid out as a flat list of labeled terms with one
/// matrix between each consecutive pair. maps[i] : terms[i] -> terms[i+1].
struct ExactSequence {
  struct Term {
    std::string label;
    int degree = 0;
    std::size_t dim = 0;
  };
  std::vector<Term> terms;
  std::vector<Matrix> maps;

  /// Indices of terms where im(incoming) != ker(outgoing). The first and
  /// last terms are checked against the zero map in / out.
  std::vector<std::size_t> failing_joints() const;
  bool is_exact() const { return failing_joints().empty(); }
};

/// Cohomology long exact sequence of a triple B ⊂ A ⊂ K:
///   ... -> H^k(K,A) -> H^k(K,B) -> H^k(A,B) -> H^{k+1}(K,A) -> ...
/// for degrees 0..dim K. Subcomplexes are matched by vertex name.
/// Throws InputError when B ⊄ A or A ⊄ K.
struct TripleLES {
  int top_degree = -1;
  ExactSequence sequence;  // terms repeat [H(K,A), H(K,B), H(A,B)] per degree

  std::size_t dim_KA(int k) const { return sequence.terms[3 * k].dim; }
  std::size_t dim_KB(int k) const { return sequence.terms[3 * k + 1].dim; }
  std::size_t dim_AB(int k) const { return sequence.terms[3 * k + 2].dim; }
  const Matrix& map_KA_to_KB(int k) const { return sequence.maps[3 * k]; }
  const Matrix& map_KB_to_AB(int k) const { return sequence.maps[3 * k + 1]; }
  /// Connecting map H^k(A,B) -> H^{k+1}(K,A), for k < top_degree.
  const Matrix& connecting(int k) const { return sequence.maps[3 * k + 2]; }
};

TripleLES triple_les(const SimplicialComplex& k, const SimplicialComplex& a, const SimplicialComplex& b,
                     const std::array<std::string, 3>& labels = {"H(K,A)", "H(K,B)", "H(A,B)"});

/// Long exact sequence of the pair (K, A): terms [H^k(K,A), H^k(K), H^k(A)].
TripleLES pair_les(const SimplicialComplex& k, const SimplicialComplex& a);

/// dims of H^*(K, A) for a subcomplex A.
GradedDims relative_cohomology(const SimplicialComplex& k, const SimplicialComplex& a);

/// Simplices s with v ∉ s and s ∪ {v} ∈ K. Throws InputError for unknown v.
SimplicialComplex vertex_link(const SimplicialComplex& k, const std::string& v);

/// Full subcomplex on every vertex except v.
SimplicialComplex deleted_complex(const SimplicialComplex& k, const std::string& v);

/// Pure of dimension `dim`, and every (dim-1)-simplex lies in exactly two
/// dim-simplices. Offending simplices are appended to `problems`.
bool is_pseudomanifold(const SimplicialComplex& k, int dim, std::vector<std::string>* problems = nullptr);

}  // namespace stringy::simplicial
