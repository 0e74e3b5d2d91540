#include "stringy/documents.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy::documents {

using qlinalg::Matrix;
using qlinalg::Rational;

namespace {

// Wraps nlohmann's type errors so every malformed document becomes InputError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

void check_version(const json& j) {
  const json& v = field(j, "format_version");
  if (!v.is_string() || v.get<std::string>() != kFormatVersion)
    throw InputError(std::string("unsupported format_version, expected \"") + kFormatVersion + "\"");
}

std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0))
    throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> natural_array(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(natural(x, what));
  return out;
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    return mpz_class(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad integer string '" + j.get<std::string>() + "'");
    return z;
  }
  throw InputError("rational parts must be integers or decimal strings");
}

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

Matrix canonical_rank_matrix(std::size_t rows, std::size_t cols, std::size_t rank, const char* what) {
  if (rank > std::min(rows, cols)) {
    throw InputError(std::string(what) + " rank " + std::to_string(rank) + " exceeds min(" + std::to_string(rows) +
                     ", " + std::to_string(cols) + ")");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rank; ++i) m(i, i) = 1;
  return m;
}

Matrix map_from_json(const json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (j.is_object() && j.contains("rank")) return canonical_rank_matrix(rows, cols, natural(j.at("rank"), what), what);
  return matrix_from_json(j);
}

json graded_to_json(const simplicial::GradedDims& g) { return json(g.dims); }

simplicial::GradedDims graded_from_json(const json& j, const char* what) {
  return simplicial::GradedDims{natural_array(j, what)};
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (const auto& q : m.entries()) entries.push_back(json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j) {
  return guarded("matrix", [&] {
    const std::size_t rows = natural(field(j, "rows"), "rows");
    const std::size_t cols = natural(field(j, "cols"), "cols");
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows * cols)
      throw InputError("matrix needs " + std::to_string(rows * cols) + " entries");
    std::vector<Rational> data;
    data.reserve(entries.size());
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 2) throw InputError("matrix entries must be [num, den] pairs");
      data.push_back(qlinalg::make_rational(integer_from_json(e[0]), integer_from_json(e[1])));
    }
    return Matrix(rows, cols, std::move(data));
  });
}

SimplicialDocument parse_simplicial(const json& j) {
  return guarded("simplicial document", [&] {
    check_version(j);
    SimplicialDocument doc;
    doc.format_version = kFormatVersion;
    doc.vertices = field(j, "vertices").get<std::vector<std::string>>();
    doc.facets = field(j, "facets").get<std::vector<std::vector<std::string>>>();
    doc.singular_vertex = field(j, "singular_vertex").get<std::string>();
    doc.half_dim = natural(field(j, "half_dim"), "half_dim");
    if (doc.half_dim < 1) throw InputError("half_dim must be at least 1");
    return doc;
  });
}

json to_json(const SimplicialDocument& doc) {
  return json{{"format_version", kFormatVersion},
              {"vertices", doc.vertices},
              {"facets", doc.facets},
              {"singular_vertex", doc.singular_vertex},
              {"half_dim", doc.half_dim}};
}

stratified::StratifiedSpace to_stratified(const SimplicialDocument& doc) {
  const auto k = simplicial::SimplicialComplex::closure(doc.facets, doc.vertices);
  return stratified::build_stratified(k, doc.singular_vertex, doc.half_dim);
}

RankDocument parse_ranks(const json& j) {
  return guarded("rank document", [&] {
    check_version(j);
    RankDocument doc;
    doc.format_version = kFormatVersion;
    doc.n = natural(field(j, "n"), "n");
    if (doc.n < 1) throw InputError("n must be at least 1");
    const std::size_t n = doc.n;

    if (j.contains("maps") || !j.contains("multinode")) {
      stratified::RankInput in;
      in.n = n;
      in.dims_Y = natural_array(field(j, "dims_Y"), "dims_Y");
      in.dims_Yo = natural_array(field(j, "dims_Yo"), "dims_Yo");
      in.dims_Yo_c = natural_array(field(j, "dims_Yo_c"), "dims_Yo_c");
      in.dims_L = natural_array(field(j, "dims_L"), "dims_L");
      const json& maps = field(j, "maps");
      if (maps.contains("ranks") == maps.contains("matrices"))
        throw InputError("maps must contain exactly one of 'ranks' or 'matrices'");
      if (maps.contains("ranks")) {
        std::vector<std::array<std::size_t, 3>> ranks;
        for (const auto& t : maps.at("ranks")) {
          const auto v = natural_array(t, "map ranks");
          if (v.size() != 3) throw InputError("each degree needs a rank triple [a, b, c]");
          ranks.push_back({v[0], v[1], v[2]});
        }
        in.ranks = std::move(ranks);
      } else {
        std::vector<std::array<Matrix, 3>> mats;
        for (const auto& t : maps.at("matrices"))
          mats.push_back({matrix_from_json(field(t, "a")), matrix_from_json(field(t, "b")), matrix_from_json(field(t, "c"))});
        in.matrices = std::move(mats);
      }
      doc.package = std::move(in);
    }

    if (j.contains("multinode")) {
      const json& mn = j.at("multinode");
      cohomology::MultiNodeData data;
      data.n = n;
      for (const auto& node : field(mn, "node_link_dims")) data.node_link_dims.push_back(graded_from_json(node, "node_link_dims"));
      data.link_dims_total = graded_from_json(field(mn, "link_dims_total"), "link_dims_total");
      data.dims_Y = graded_from_json(field(j, "dims_Y"), "dims_Y");
      data.dims_Yo = graded_from_json(field(j, "dims_Yo"), "dims_Yo");
      if (data.dims_Y.size() != 2 * n + 1 || data.dims_Yo.size() != 2 * n + 1)
        throw InputError("dims_Y and dims_Yo need 2n+1 entries");
      if (data.link_dims_total.size() != 2 * n) throw InputError("link_dims_total needs 2n entries");
      data.alpha2 = map_from_json(field(mn, "alpha2"), data.dims_Y[n], data.link_dims_total[n - 1], "alpha2");
      data.gamma1 = map_from_json(field(mn, "gamma1"), data.link_dims_total[n], data.dims_Yo[n], "gamma1");
      doc.multinode = std::move(data);
    }
    return doc;
  });
}

json to_json(const stratified::RankInput& input) {
  json j{{"format_version", kFormatVersion},
         {"n", input.n},
         {"dims_Y", input.dims_Y},
         {"dims_Yo", input.dims_Yo},
         {"dims_Yo_c", input.dims_Yo_c},
         {"dims_L", input.dims_L}};
  if (input.ranks) {
    json ranks = json::array();
    for (const auto& t : *input.ranks) ranks.push_back(json::array({t[0], t[1], t[2]}));
    j["maps"] = json{{"ranks", std::move(ranks)}};
  } else if (input.matrices) {
    json mats = json::array();
    for (const auto& [a, b, c] : *input.matrices)
      mats.push_back(json{{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}, {"c", matrix_to_json(c)}});
    j["maps"] = json{{"matrices", std::move(mats)}};
  }
  return j;
}

json to_json(const cohomology::CohomologyReport& r) {
  auto bools = [](const std::vector<bool>& v) {
    json a = json::array();
    for (bool b : v) a.push_back(b);
    return a;
  };
  return json{{"format_version", kFormatVersion},
              {"n", r.n},
              {"provenance", r.provenance},
              {"tables",
               {{"S0", graded_to_json(r.table_S0)},
                {"IC", graded_to_json(r.table_IC)},
                {"Q", graded_to_json(r.table_Q)},
                {"Yo", graded_to_json(r.table_Yo)},
                {"Yo_c", graded_to_json(r.table_Yo_c)}}},
              {"K0_dim", r.K0_dim},
              {"C0_dim", r.C0_dim},
              {"ses_a_ok", r.ses_a_ok},
              {"ses_b_ok", r.ses_b_ok},
              {"middle_injection_ok", r.middle_injection_ok},
              {"middle_surjection_ok", r.middle_surjection_ok},
              {"poincare_ok_S0", r.poincare_ok_S0},
              {"poincare_ok_IC", r.poincare_ok_IC},
              {"poincare_ok_Q", r.poincare_ok_Q},
              {"support",
               {{"support_ok", bools(r.support_report.support_ok)},
                {"cosupport_ok", bools(r.support_report.cosupport_ok)},
                {"notes", r.support_report.notes}}},
              {"notes", r.notes}};
}

cohomology::CohomologyReport report_from_json(const json& j) {
  return guarded("report", [&] {
    check_version(j);
    cohomology::CohomologyReport r;
    r.n = natural(field(j, "n"), "n");
    r.provenance = field(j, "provenance").get<std::string>();
    const json& t = field(j, "tables");
    r.table_S0 = graded_from_json(field(t, "S0"), "S0");
    r.table_IC = graded_from_json(field(t, "IC"), "IC");
    r.table_Q = graded_from_json(field(t, "Q"), "Q");
    r.table_Yo = graded_from_json(field(t, "Yo"), "Yo");
    r.table_Yo_c = graded_from_json(field(t, "Yo_c"), "Yo_c");
    r.K0_dim = natural(field(j, "K0_dim"), "K0_dim");
    r.C0_dim = natural(field(j, "C0_dim"), "C0_dim");
    r.ses_a_ok = field(j, "ses_a_ok").get<bool>();
    r.ses_b_ok = field(j, "ses_b_ok").get<bool>();
    r.middle_injection_ok = field(j, "middle_injection_ok").get<bool>();
    r.middle_surjection_ok = field(j, "middle_surjection_ok").get<bool>();
    r.poincare_ok_S0 = field(j, "poincare_ok_S0").get<bool>();
    r.poincare_ok_IC = field(j, "poincare_ok_IC").get<bool>();
    r.poincare_ok_Q = field(j, "poincare_ok_Q").get<bool>();
    const json& s = field(j, "support");
    r.support_report.support_ok = field(s, "support_ok").get<std::vector<bool>>();
    r.support_report.cosupport_ok = field(s, "cosupport_ok").get<std::vector<bool>>();
    r.support_report.notes = field(s, "notes").get<std::vector<std::string>>();
    r.notes = field(j, "notes").get<std::vector<std::string>>();
    return r;
  });
}

json to_json(const cohomology::ObstructionReport& r) {
  return json{{"nodes", r.nodes},
              {"alpha2_is_zero", r.alpha2_is_zero},
              {"gamma1_is_zero", r.gamma1_is_zero},
              {"c_injective", r.c_injective},
              {"d_surjective", r.d_surjective}};
}

json to_json(const zigzag::ZigZagObject& z) {
  return json{{"local_system", z.local_system},
              {"dims", {z.left_dim, z.K_dim, z.C_dim, z.right_dim}},
              {"alpha", matrix_to_json(z.alpha)},
              {"beta", matrix_to_json(z.beta)},
              {"gamma", matrix_to_json(z.gamma)}};
}

zigzag::ZigZagObject zigzag_from_json(const json& j) {
  return guarded("zig-zag object", [&] {
    zigzag::ZigZagObject z;
    const auto dims = natural_array(field(j, "dims"), "dims");
    if (dims.size() != 4) throw InputError("zig-zag dims need four entries");
    z.left_dim = dims[0];
    z.K_dim = dims[1];
    z.C_dim = dims[2];
    z.right_dim = dims[3];
    z.alpha = matrix_from_json(field(j, "alpha"));
    z.beta = matrix_from_json(field(j, "beta"));
    z.gamma = matrix_from_json(field(j, "gamma"));
    if (j.contains("local_system")) z.local_system = j.at("local_system").get<std::string>();
    if (!zigzag::shape_valid(z)) throw InputError("zig-zag matrices do not match dims");
    return z;
  });
}

}  // namespace stringy::documents
