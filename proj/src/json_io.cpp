#include "qm/json_io.hpp"

namespace qm {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field: ") + key);
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field must be an integer: ") + key);
  return v.get<int>();
}

std::string entry_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("matrix entries must be rational strings or integers");
}

}  // namespace

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Json matrix_to_json(const Matrix<Rat>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rat> matrix_rat_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  if (static_cast<int>(j.size()) != rows) throw ShapeError("matrix row count mismatch");
  Matrix<Rat> m(rows, cols, Rat());
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    if (static_cast<int>(row.size()) != cols) throw ShapeError("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) m.at(i, c) = Rat::parse(entry_string(row.at(c)));
  }
  return m;
}

Json matrix_fp_to_json(const Matrix<Fp>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Fp> matrix_fp_from_json(const Json& j, int rows, int cols, std::uint32_t q) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  if (static_cast<int>(j.size()) != rows) throw ShapeError("matrix row count mismatch");
  Matrix<Fp> m(rows, cols, Fp::zero(q));
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    if (static_cast<int>(row.size()) != cols) throw ShapeError("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) {
      const Rat r = Rat::parse(entry_string(row.at(c)));
      if (r.den() != 1) throw ParseError("finite-field entries must be integers");
      const long v = static_cast<long>(mpz_fdiv_ui(r.num().get_mpz_t(), q));
      m.at(i, c) = Fp(v, q);
    }
  }
  return m;
}

Json system_to_json(const SigmaSystem& s) {
  Json j;
  j["type"] = "sigma";
  j["n"] = s.n;
  j["m"] = s.m;
  j["p"] = s.p;
  j["A"] = matrix_to_json(s.A);
  j["B"] = matrix_to_json(s.B);
  j["C"] = matrix_to_json(s.C);
  j["D"] = matrix_to_json(s.D);
  return j;
}

Json system_to_json(const LomadzeSystem& s) {
  Json j;
  j["type"] = "lomadze";
  j["n"] = s.n;
  j["m"] = s.m;
  j["p"] = s.p;
  j["K"] = matrix_to_json(s.K);
  j["L"] = matrix_to_json(s.L);
  j["M"] = matrix_to_json(s.M);
  return j;
}

Json system_to_json(const HelmkeSystem& s) {
  Json j;
  j["type"] = "helmke";
  j["n"] = s.n;
  j["m"] = s.m;
  j["p"] = s.p;
  j["E"] = matrix_to_json(s.E);
  j["A"] = matrix_to_json(s.A);
  j["B"] = matrix_to_json(s.B);
  j["C"] = matrix_to_json(s.C);
  j["D"] = matrix_to_json(s.D);
  j["F"] = matrix_to_json(s.F);
  return j;
}

SystemAny system_from_json(const Json& j) {
  const std::string type = field(j, "type").is_string()
                               ? field(j, "type").get<std::string>()
                               : throw ParseError("system type must be a string");
  const int n = int_field(j, "n"), m = int_field(j, "m"), p = int_field(j, "p");
  if (type == "sigma") {
    SigmaSystem s{n, m, p, matrix_rat_from_json(field(j, "A"), n, n),
                  matrix_rat_from_json(field(j, "B"), n, m),
                  matrix_rat_from_json(field(j, "C"), p, n),
                  matrix_rat_from_json(field(j, "D"), p, m)};
    s.validate();
    return s;
  }
  if (type == "lomadze") {
    LomadzeSystem s{n, m, p, matrix_rat_from_json(field(j, "K"), n + p, n),
                    matrix_rat_from_json(field(j, "L"), n + p, n),
                    matrix_rat_from_json(field(j, "M"), n + p, p + m)};
    s.validate();
    return s;
  }
  if (type == "helmke") {
    HelmkeSystem s{n, m, p, matrix_rat_from_json(field(j, "E"), n, n),
                   matrix_rat_from_json(field(j, "A"), n, n),
                   matrix_rat_from_json(field(j, "B"), n, m),
                   matrix_rat_from_json(field(j, "C"), p, n),
                   matrix_rat_from_json(field(j, "D"), p, m),
                   matrix_rat_from_json(field(j, "F"), p, p)};
    s.validate();
    return s;
  }
  throw ParseError("unknown system type: " + type);
}

Json quiver_to_json(const MarkedQuiver& mq) {
  Json j;
  j["vertices"] = mq.quiver.vertices;
  Json edges = Json::array();
  for (const auto& e : mq.quiver.edges) edges.push_back(Json::array({e.src, e.tgt}));
  j["edges"] = std::move(edges);
  j["marked"] = mq.marked;
  j["dims"] = mq.dims;
  if (!mq.quiver.labels.empty()) j["labels"] = mq.quiver.labels;
  return j;
}

MarkedQuiver quiver_from_json(const Json& j) {
  MarkedQuiver mq;
  mq.quiver.vertices = int_field(j, "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e.at(0).is_number_integer() ||
        !e.at(1).is_number_integer())
      throw ParseError("each edge must be [source, target]");
    mq.quiver.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  }
  const Json& marked = field(j, "marked");
  if (!marked.is_array()) throw ParseError("marked must be an array");
  for (const Json& v : marked) {
    if (!v.is_number_integer()) throw ParseError("marked entries must be integers");
    mq.marked.push_back(v.get<int>());
  }
  const Json& dims = field(j, "dims");
  if (!dims.is_array()) throw ParseError("dims must be an array");
  for (const Json& v : dims) {
    if (!v.is_number_integer()) throw ParseError("dims entries must be integers");
    mq.dims.push_back(v.get<int>());
  }
  if (j.contains("labels")) {
    for (const Json& v : j.at("labels")) {
      if (!v.is_string()) throw ParseError("labels must be strings");
      mq.quiver.labels.push_back(v.get<std::string>());
    }
  }
  mq.validate();
  return mq;
}

Json representation_to_json(const Representation<Fp>& rep) {
  Json j;
  j["quiver"] = quiver_to_json(rep.mq);
  std::uint32_t q = 0;
  for (const auto& m : rep.maps) q = m.zero().modulus();
  j["modulus"] = q;
  Json maps = Json::array();
  for (const auto& m : rep.maps) maps.push_back(matrix_fp_to_json(m));
  j["maps"] = std::move(maps);
  return j;
}

Representation<Fp> representation_fp_from_json(const Json& j) {
  MarkedQuiver mq = quiver_from_json(field(j, "quiver"));
  const int q = int_field(j, "modulus");
  if (q < 2) throw ShapeError("modulus must be a prime >= 2");
  const Json& maps_json = field(j, "maps");
  if (!maps_json.is_array() || maps_json.size() != mq.quiver.edges.size())
    throw ShapeError("one matrix per edge required");
  std::vector<Matrix<Fp>> maps;
  maps.reserve(maps_json.size());
  for (std::size_t e = 0; e < maps_json.size(); ++e) {
    const auto& ed = mq.quiver.edges[e];
    maps.push_back(matrix_fp_from_json(maps_json.at(e), mq.dims[ed.tgt], mq.dims[ed.src],
                                       static_cast<std::uint32_t>(q)));
  }
  Representation<Fp> rep{std::move(mq), std::move(maps)};
  rep.validate();
  return rep;
}

Character character_from_json(const Json& j, std::size_t arity) {
  if (!j.is_array()) throw ParseError("character must be an integer array");
  Character chi;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw ParseError("character entries must be integers");
    chi.weights.push_back(v.get<long long>());
  }
  if (chi.weights.size() != arity) throw ShapeError("character arity mismatch");
  return chi;
}

Json chamber_to_json(const ChamberLocation& loc) {
  Json j;
  switch (loc.kind) {
    case ChamberLocation::Kind::Wall:
      j["kind"] = "wall";
      j["lambda"] = loc.wall.str();
      break;
    case ChamberLocation::Kind::Interval:
      j["kind"] = "interval";
      j["lower"] = loc.lower.str();
      j["upper"] = loc.upper.str();
      break;
    case ChamberLocation::Kind::OutsideCone:
      j["kind"] = "outside_cone";
      break;
  }
  return j;
}

Json witness_to_json(const SubrepWitness<Fp>& w) {
  Json subs = Json::array();
  for (const auto& s : w.subspaces) {
    Json e;
    e["ambient_dim"] = s.ambient_dim();
    e["dim"] = s.dim();
    e["basis"] = matrix_fp_to_json(s.basis());
    subs.push_back(std::move(e));
  }
  Json j;
  j["subspaces"] = std::move(subs);
  return j;
}

Json verdict_to_json(const StabilityVerdict& v) {
  Json j;
  j["verdict"] = verdict_name(v.kind);
  if (v.chamber) j["chamber"] = chamber_to_json(*v.chamber);
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

Json presentation_to_json(const GradedPresentation& pres) {
  Json vars = Json::array();
  for (const auto& v : pres.vars) {
    Json e;
    e["name"] = v.name;
    e["weight"] = v.weight;
    vars.push_back(std::move(e));
  }
  Json rels = Json::array();
  for (const auto& r : pres.relations) rels.push_back(poly_to_string(r, pres.vars));
  Json j;
  j["variables"] = std::move(vars);
  j["relations"] = std::move(rels);
  j["top_degree"] = pres.top_degree;
  return j;
}

GradedPresentation presentation_from_json(const Json& j) {
  GradedPresentation pres;
  for (const Json& v : field(j, "variables")) {
    if (!v.contains("name") || !v.contains("weight"))
      throw ParseError("variable needs name and weight");
    pres.vars.push_back({v.at("name").get<std::string>(), v.at("weight").get<unsigned>()});
  }
  for (const Json& r : field(j, "relations")) {
    if (!r.is_string()) throw ParseError("relations must be strings");
    pres.relations.push_back(poly_parse(r.get<std::string>(), pres.vars));
  }
  const Json& top = field(j, "top_degree");
  if (!top.is_number_integer()) throw ParseError("top_degree must be an integer");
  pres.top_degree = top.get<long long>();
  pres.validate();
  return pres;
}

Json rank_report_to_json(const RankReport& r) {
  Json j;
  j["total"] = r.total;
  j["per_degree"] = r.per_degree;
  return j;
}

Json generator_to_json(const GeneratorDescriptor& d, const MarkedQuiver& mq) {
  Json j;
  const bool labeled = !mq.quiver.labels.empty();
  Json edges = Json::array();
  for (int e : d.edges) edges.push_back(e);
  j["kind"] = d.kind == GeneratorDescriptor::Kind::CycleTrace ? "trace" : "coordinate";
  j["edges"] = std::move(edges);
  if (labeled) {
    std::string word;
    // Matrix composition order: the last edge applies last.
    for (auto it = d.edges.rbegin(); it != d.edges.rend(); ++it)
      word += mq.quiver.labels[*it];
    j["word"] = word;
  }
  if (d.kind == GeneratorDescriptor::Kind::PathCoordinate) {
    j["row"] = d.row;
    j["col"] = d.col;
  }
  return j;
}

}  // namespace qm
