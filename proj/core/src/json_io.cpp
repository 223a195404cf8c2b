#include "hirano/json_io.hpp"

#include <json.hpp>

#include "hirano/error.hpp"

namespace hirano {

namespace {

using nlohmann::json;

json rows_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational entry_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  throw Error(ErrorKind::Parse, "matrix entries must be strings or integers, got " + v.dump());
}

Matrix rows_from(const json& v, const std::string& what) {
  const json& rows = v.is_object() && v.contains("rows") ? v.at("rows") : v;
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::Parse, what + ": expected a non-empty array of rows");
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, what + ": every row must be an array");
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(entry_from(e));
    if (!out.empty() && r.size() != out.front().size()) throw Error(ErrorKind::Parse, what + ": ragged rows");
    out.push_back(std::move(r));
  }
  return Matrix::from_rows(out);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

json cert_body(const Matrix& z, const DefiningResiduals& res, std::size_t nil_exponent, std::size_t split_exponent,
               std::size_t steps) {
  return json{{"inverse", rows_json(z)},
              {"residuals",
               {{"commutator", rows_json(res.commutator)},
                {"reflexive", rows_json(res.reflexive)},
                {"nil_term", rows_json(res.nil_residual)}}},
              {"nil_exponent", nil_exponent},
              {"split_exponent", split_exponent},
              {"newton_steps", steps}};
}

json hirano_json(const HiranoCert& c) {
  // Residuals are recomputed from a = E + N so the file is self-contained.
  const Matrix a = c.tripotent + c.nilpart;
  json j = cert_body(c.z, hirano_residuals(a, c.z), c.nil_exponent, c.split_exponent, c.newton_steps);
  j["kind"] = "hirano";
  j["tripotent"] = rows_json(c.tripotent);
  j["nilpart"] = rows_json(c.nilpart);
  return j;
}

json strong_json(const StrongDrazinCert& c) {
  const Matrix a = c.idem + c.nilpart;
  json j = cert_body(c.z, strong_drazin_residuals(a, c.z), c.nil_exponent, c.split_exponent, c.newton_steps);
  j["kind"] = "strong";
  j["idempotent"] = rows_json(c.idem);
  j["nilpart"] = rows_json(c.nilpart);
  return j;
}

json opt_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

Matrix matrix_from_json(std::string_view text) {
  const json doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("rows")) throw Error(ErrorKind::Parse, "matrix file needs a \"rows\" key");
  return rows_from(doc, "matrix");
}

std::string matrix_to_json(const Matrix& m) { return json{{"rows", rows_json(m)}}.dump(2); }

BlockInstance blocks_from_json(std::string_view text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "block file must be a JSON object");
  const auto get = [&](const char* key, const char* alias) -> std::optional<Matrix> {
    if (doc.contains(key)) return rows_from(doc.at(key), key);
    if (alias && doc.contains(alias)) return rows_from(doc.at(alias), alias);
    return std::nullopt;
  };
  auto a = get("A", "P");
  auto b = get("B", "Q");
  if (!a || !b) throw Error(ErrorKind::Parse, "block file needs at least the blocks A and B (or P and Q)");
  return BlockInstance{std::move(*a), std::move(*b), get("C", nullptr), get("D", nullptr)};
}

std::string blocks_to_json(const BlockInstance& inst, bool pair_names) {
  json j;
  j[pair_names ? "P" : "A"] = rows_json(inst.a);
  j[pair_names ? "Q" : "B"] = rows_json(inst.b);
  if (inst.c) j["C"] = rows_json(*inst.c);
  if (inst.d) j["D"] = rows_json(*inst.d);
  return j.dump(2);
}

std::string report_to_json(const TheoremReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses.items) {
    json e{{"name", h.name},
           {"formula", h.formula},
           {"kind", h.kind == HypothesisKind::Class ? "class" : "annihilation"},
           {"holds", h.holds},
           {"residual", rows_json(h.residual)}};
    if (h.kind == HypothesisKind::Class) e["exponent"] = opt_size(h.exponent);
    hyps.push_back(std::move(e));
  }
  json witness = nullptr;
  if (r.witness) {
    json summands = json::array();
    for (std::size_t i = 0; i < r.witness->summands.size(); ++i) {
      summands.push_back({{"label", r.witness->labels[i]}, {"matrix", rows_json(r.witness->summands[i])}});
    }
    json sides = json::array();
    for (const auto& s : r.witness->side_conditions) {
      sides.push_back({{"name", s.name}, {"holds", s.holds}, {"residual", rows_json(s.residual)}});
    }
    witness = {{"target", rows_json(r.witness->target)}, {"summands", summands}, {"side_conditions", sides}};
  }
  json conclusion = nullptr;
  if (const auto* h = std::get_if<HiranoCert>(&r.conclusion)) conclusion = hirano_json(*h);
  if (const auto* s = std::get_if<StrongDrazinCert>(&r.conclusion)) conclusion = strong_json(*s);

  json j{{"id", std::string(to_string(r.id))},
         {"profile", r.profile == Profile::AsStated ? "as-stated" : "default"},
         {"verdict", std::string(to_string(r.verdict))},
         {"hypotheses", hyps},
         {"target", rows_json(r.target)},
         {"target_class", std::string(to_string(r.target_class))},
         {"target_residual", rows_json(r.target_residual)},
         {"target_exponent", opt_size(r.target_exponent)},
         {"witness", witness},
         {"conclusion", conclusion}};
  if (r.witness_error) j["witness_error"] = *r.witness_error;
  return j.dump(2);
}

std::string drazin_to_json(const DrazinData& d) {
  return json{{"kind", "drazin"},
              {"index", d.index},
              {"inverse", rows_json(d.inverse)},
              {"core_projection", rows_json(d.core_projection)},
              {"nil_projection", rows_json(d.nil_projection)}}
      .dump(2);
}

std::string cert_to_json(const HiranoCert& cert) { return hirano_json(cert).dump(2); }
std::string cert_to_json(const StrongDrazinCert& cert) { return strong_json(cert).dump(2); }

std::string split_to_json(const SplitPair& s) {
  return json{{"structured", rows_json(s.structured)},
              {"nilpotent", rows_json(s.nilpotent)},
              {"nil_exponent", s.nil_exponent},
              {"newton_steps", s.newton_steps}}
      .dump(2);
}

std::string counterexample_to_json(const Counterexample& ce, TheoremId id, std::string_view dropped, Profile profile,
                                   const GenConfig& cfg) {
  json j = json::parse(blocks_to_json(ce.instance));
  j["theorem"] = std::string(to_string(id));
  j["dropped"] = std::string(dropped);
  j["profile"] = profile == Profile::AsStated ? "as-stated" : "default";
  j["seed"] = ce.seed;
  j["sweep_seed"] = cfg.seed;
  j["trial"] = ce.trial;
  j["block_size"] = ce.block_size;
  j["entry_bound"] = cfg.entry_bound;
  j["verdict"] = std::string(to_string(ce.report.verdict));
  j["target_exponent"] = opt_size(ce.report.target_exponent);
  return j.dump(2);
}

}  // namespace hirano
