// qmod: stability analysis of linear dynamical systems, quiver reductions,
// invariant generators, character chambers, and graded-ring ranks of the
// moduli compactifications. One JSON document per invocation on stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qm/json_io.hpp"

namespace {

using qm::Json;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw qm::ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

// A document per line is treated as a batch; anything else (including
// pretty-printed JSON) is one document.
std::vector<Json> parse_documents(const std::string& text) {
  Json whole = Json::parse(text, nullptr, false);
  if (!whole.is_discarded()) return {std::move(whole)};
  std::vector<Json> docs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string line = text.substr(start, nl - start);
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      docs.push_back(qm::parse_json(line));
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  if (docs.empty()) throw qm::ParseError("malformed JSON");
  return docs;
}

std::vector<long long> parse_weights(const std::string& text) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw qm::ShapeError("character weights must be integers: " + tok);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Json big_to_json(const qm::BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json analyze_lomadze(const qm::LomadzeSystem& s) {
  Json out;
  out["type"] = "lomadze";
  out["n"] = s.n;
  out["m"] = s.m;
  out["p"] = s.p;
  out["controllable"] = qm::lomadze_controllable(s);
  out["observable"] = qm::lomadze_observable(s);
  out["regular"] = qm::lomadze_regular(s);
  out["stabilizer_lie_dim"] = qm::stabilizer_lie_dimension(s);
  return out;
}

Json analyze_one(const Json& doc) {
  const auto sys = qm::system_from_json(doc);
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, qm::SigmaSystem>) {
          Json out;
          out["type"] = "sigma";
          out["n"] = s.n;
          out["m"] = s.m;
          out["p"] = s.p;
          out["controllable"] = qm::sigma_controllable(s);
          out["observable"] = qm::sigma_observable(s);
          return out;
        } else if constexpr (std::is_same_v<T, qm::LomadzeSystem>) {
          return analyze_lomadze(s);
        } else {
          Json out;
          out["type"] = "helmke";
          out["n"] = s.n;
          out["m"] = s.m;
          out["p"] = s.p;
          out["controllable"] = qm::helmke_controllable(s);
          out["observable"] = nullptr;
          out["observable_note"] = "observability is undefined for this system class";
          out["stabilizer_lie_dim"] = qm::stabilizer_lie_dimension(s);
          out["forget_output"] = analyze_lomadze(qm::forget_output(s));
          return out;
        }
      },
      sys);
}

Json stability_one(const Json& doc, const std::vector<long long>& chi) {
  const auto sys = qm::system_from_json(doc);
  return std::visit(
      [&](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, qm::SigmaSystem>) {
          if (chi.size() != 1) throw qm::ShapeError("sigma systems take one character weight");
          Json out = qm::verdict_to_json(qm::sigma_stability(s, chi[0]));
          Json chamber;
          chamber["kind"] = "sign";
          chamber["sign"] = chi[0] > 0 ? 1 : (chi[0] < 0 ? -1 : 0);
          out["chamber"] = std::move(chamber);
          return out;
        } else if constexpr (std::is_same_v<T, qm::LomadzeSystem>) {
          if (chi.size() != 2) throw qm::ShapeError("lomadze systems take two character weights");
          return qm::verdict_to_json(qm::lomadze_stability(s, chi[0], chi[1]));
        } else {
          if (chi.size() != 3) throw qm::ShapeError("helmke systems take three character weights");
          Json out = qm::verdict_to_json(qm::helmke_stability(s, chi[0], chi[1], chi[2]));
          Json chamber;
          chamber["kind"] = "helmke_chamber";
          chamber["inside"] = qm::helmke_chamber_ok(s.n, s.p, chi[0], chi[1], chi[2]);
          out["chamber"] = std::move(chamber);
          return out;
        }
      },
      sys);
}

// Primitive (chi0, chi1) with -chi0/chi1 equal to the given point.
Json sample_character(const qm::ExtRat& x) {
  if (x.inf) return Json::array({-1, 0});
  return Json::array({big_to_json(qm::BigInt(-x.v.num())), big_to_json(x.v.den())});
}

Json cmd_chambers(int n, int p) {
  const qm::LambdaSet lam = qm::lambda_set(n, p);
  Json out;
  out["n"] = n;
  out["p"] = p;
  Json lambda = Json::array();
  for (const auto& v : lam.values) lambda.push_back(v.str());
  out["lambda"] = std::move(lambda);
  Json walls = Json::array();
  for (const auto& v : lam.values) {
    Json w;
    w["lambda"] = v.str();
    w["sample_character"] = sample_character(v);
    walls.push_back(std::move(w));
  }
  out["walls"] = std::move(walls);
  Json intervals = Json::array();
  for (std::size_t i = 0; i + 1 < lam.values.size(); ++i) {
    const auto& lo = lam.values[i];
    const auto& hi = lam.values[i + 1];
    Json iv;
    iv["lower"] = lo.str();
    iv["upper"] = hi.str();
    const qm::ExtRat mid =
        hi.inf ? qm::ExtRat::of(lo.v + qm::Rat(1))
               : qm::ExtRat::of((lo.v + hi.v) * qm::Rat(qm::BigInt(1), qm::BigInt(2)));
    iv["sample_character"] = sample_character(mid);
    intervals.push_back(std::move(iv));
  }
  out["intervals"] = std::move(intervals);
  return out;
}

Json edge_table_to_json(const qm::ReduceResult& rr) {
  Json table = Json::array();
  for (const auto& eo : rr.edge_table) {
    Json e;
    e["edge"] = eo.old_edge;
    switch (eo.kind) {
      case qm::EdgeOrigin::Kind::Whole: e["kind"] = "whole"; break;
      case qm::EdgeOrigin::Kind::Row: e["kind"] = "row"; break;
      case qm::EdgeOrigin::Kind::Col: e["kind"] = "col"; break;
    }
    if (eo.index >= 0) e["index"] = eo.index;
    table.push_back(std::move(e));
  }
  return table;
}

Json cmd_quiver(const std::string& sub, const std::string& input,
                const std::vector<long long>& chi, std::optional<long long> cap) {
  const qm::MarkedQuiver mq = qm::quiver_from_json(qm::parse_json(read_input(input)));
  Json out;
  if (sub == "projective") {
    out["projective"] = qm::is_quotient_projective(mq);
    return out;
  }
  if (sub == "invariants") {
    const auto gens = qm::invariant_generators(mq, cap);
    Json list = Json::array();
    for (const auto& g : gens.generators) list.push_back(qm::generator_to_json(g, mq));
    out["generators"] = std::move(list);
    out["count"] = gens.generators.size();
    out["cap"] = gens.cap;
    out["truncated"] = gens.truncated;
    return out;
  }
  if (sub == "reduce") {
    std::vector<int> stripped;
    const qm::MarkedQuiver clean = qm::strip_unmarked_unmarked_edges(mq, &stripped);
    const qm::ReduceResult rr = qm::reduce_step_one(clean);
    out["stripped_edges"] = stripped;
    out["reduced"] = qm::quiver_to_json(rr.reduced);
    out["collapse_vertex"] = rr.collapse_vertex;
    out["vertex_map"] = rr.vertex_map;
    out["edge_table"] = edge_table_to_json(rr);
    if (!chi.empty()) {
      qm::Character c{chi};
      const qm::Character ext = qm::extend_character_step_two(c, rr.reduced);
      out["fully_marked"] = qm::quiver_to_json(qm::mark_all(rr.reduced));
      out["extended_character"] = ext.weights;
    }
    return out;
  }
  throw qm::ParseError("unknown quiver subcommand: " + sub);
}

Json cmd_chow(const std::string& sub, int n, int m, int p, const std::string& space) {
  Json out;
  out["n"] = n;
  out["m"] = m;
  out["p"] = p;
  if (sub == "rank") {
    out["rank_L"] = big_to_json(qm::rank_L_formula(n, m, p));
    out["rank_H"] = big_to_json(qm::rank_H_formula(n, m, p));
    return out;
  }
  if (sub == "compare") {
    const auto cert = qm::not_isomorphic(n, m, p);
    out["isomorphic"] = !cert.not_isomorphic;
    out["rank_L"] = big_to_json(cert.rank_L);
    out["rank_H"] = big_to_json(cert.rank_H);
    return out;
  }
  if (sub == "presentation") {
    if (m != 1)
      throw qm::UnavailableError(
          "no closed-form bundle data for multi-input systems (m != 1); "
          "use the rank formulas instead");
    const qm::GradedPresentation pres = space == "L" ? qm::presentation_L_single_input(n, p)
                                                     : qm::presentation_H_single_input(n, p);
    out["space"] = space;
    out["presentation"] = qm::presentation_to_json(pres);
    out["rank"] = qm::rank_report_to_json(qm::additive_rank(pres));
    return out;
  }
  throw qm::ParseError("unknown chow subcommand: " + sub);
}

Json oracle_one(const Json& j, const std::vector<long long>& chi_flag) {
  const qm::Representation<qm::Fp> rep = qm::representation_fp_from_json(j);
  qm::Character chi;
  if (!chi_flag.empty()) chi.weights = chi_flag;
  else if (j.contains("character"))
    chi = qm::character_from_json(j.at("character"), rep.mq.marked.size());
  else throw qm::ShapeError("character required (flag --char or field \"character\")");
  if (chi.weights.size() != rep.mq.marked.size())
    throw qm::ShapeError("character arity does not match marked set");
  Json out = qm::verdict_to_json(qm::king_exhaustive(rep, chi));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stability and moduli computations for linear dynamical systems"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string chi_text;
  int n = 1, m = 0, p = 0;
  std::optional<long long> cap;
  std::string quiver_sub, chow_sub, space = "H";

  auto* analyze = app.add_subcommand("analyze", "controllability/observability report");
  analyze->add_option("input", input, "system JSON file, or - for stdin");

  auto* stability = app.add_subcommand("stability", "stability verdict for a character");
  stability->add_option("input", input, "system JSON file, or - for stdin");
  stability->add_option("--char", chi_text, "comma-separated character weights, e.g. --char=-1,1")
      ->required();

  auto* chambers = app.add_subcommand("chambers", "wall-and-chamber structure");
  chambers->add_option("-n", n, "state dimension")->required();
  chambers->add_option("-p", p, "output dimension")->required();

  auto* quiver = app.add_subcommand("quiver", "quiver reductions and invariants");
  quiver->add_option("subcommand", quiver_sub, "reduce | projective | invariants")->required();
  quiver->add_option("input", input, "quiver JSON file, or - for stdin");
  quiver->add_option("--char", chi_text, "comma-separated character weights, one per marked vertex");
  long long cap_value = -1;
  quiver->add_option("--max-len", cap_value, "generator length cap (default: N^2)");

  auto* chow = app.add_subcommand("chow", "graded ring ranks and presentations");
  chow->add_option("subcommand", chow_sub, "rank | presentation | compare")->required();
  chow->add_option("-n", n, "state dimension")->required();
  chow->add_option("-m", m, "input dimension")->required();
  chow->add_option("-p", p, "output dimension")->required();
  chow->add_option("--space", space, "H or L (presentation only)")
      ->check(CLI::IsMember({"H", "L"}));

  auto* oracle = app.add_subcommand("oracle", "exhaustive finite-field stability oracle");
  oracle->add_option("input", input, "representation JSON file, or - for stdin");
  oracle->add_option("--char", chi_text, "comma-separated character weights, one per marked vertex");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::vector<long long> chi = parse_weights(chi_text);
    if (analyze->parsed())
      for (const Json& doc : parse_documents(read_input(input))) emit(analyze_one(doc));
    else if (stability->parsed())
      for (const Json& doc : parse_documents(read_input(input))) emit(stability_one(doc, chi));
    else if (chambers->parsed()) emit(cmd_chambers(n, p));
    else if (quiver->parsed()) {
      if (cap_value >= 0) cap = cap_value;
      emit(cmd_quiver(quiver_sub, input, chi, cap));
    } else if (chow->parsed()) emit(cmd_chow(chow_sub, n, m, p, space));
    else if (oracle->parsed())
      for (const Json& doc : parse_documents(read_input(input))) emit(oracle_one(doc, chi));
  } catch (const qm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const qm::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 5;
  } catch (const qm::UnavailableError& e) {
    std::cerr << "unavailable: " << e.what() << "\n";
    return 4;
  } catch (const qm::ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
