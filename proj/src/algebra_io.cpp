#include "kary/algebra_io.hpp"

#include <fstream>

#include "kary/errors.hpp"

namespace kary {

namespace {

mpq_class parse_coeff(const nlohmann::json& c) {
  if (c.is_number_integer()) return mpq_class(mpz_class(std::to_string(c.get<std::int64_t>())));
  if (c.is_string()) {
    mpq_class q;
    if (q.set_str(c.get<std::string>(), 10) != 0) throw InputError("bad rational coefficient: " + c.dump());
    if (q.get_den() == 0) throw InputError("zero denominator in coefficient");
    q.canonicalize();
    return q;
  }
  throw InputError("coefficient must be an integer or a \"p/q\" string");
}

template <class T>
T field(const nlohmann::json& doc, const char* name) {
  if (!doc.contains(name)) throw InputError(std::string("missing field: ") + name);
  try {
    return doc.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("malformed field: ") + name);
  }
}

}  // namespace

KaryAlgebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("algebra document must be a JSON object");
  const int arity = field<int>(doc, "arity");
  const int dim = field<int>(doc, "dim");
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = field<std::vector<std::string>>(doc, "labels");
  KaryAlgebra alg(arity, dim, std::move(labels));

  if (doc.contains("brackets")) {
    const auto& list = doc.at("brackets");
    if (!list.is_array()) throw InputError("brackets must be an array");
    for (const auto& entry : list) {
      auto args = field<std::vector<int>>(entry, "args");
      if (static_cast<int>(args.size()) != arity) throw InputError("bracket args length differs from arity");
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] < 0 || args[i] >= dim) throw InputError("bracket arg out of range");
        if (i > 0 && args[i - 1] >= args[i]) throw InputError("bracket args must be strictly increasing");
      }
      if (!entry.contains("value") || !entry.at("value").is_array()) throw InputError("bracket value must be an array");
      std::vector<std::pair<mpq_class, int>> terms;
      mpz_class lcm = 1;
      for (const auto& pair : entry.at("value")) {
        if (!pair.is_array() || pair.size() != 2 || !pair[1].is_number_integer())
          throw InputError("bracket value entries must be [coeff, index]");
        mpq_class q = parse_coeff(pair[0]);
        int idx = pair[1].get<int>();
        if (idx < 0 || idx >= dim) throw InputError("bracket value index out of range");
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        terms.emplace_back(q, idx);
      }
      std::map<Index, mpz_class> merged;
      for (auto& [q, idx] : terms) merged[idx] += mpz_class(q * lcm);
      SparseVector value;
      for (auto& [idx, c] : merged) {
        if (c == 0) continue;
        if (!c.fits_slong_p()) throw InputError("structure constant exceeds 64 bits");
        value.push_back({idx, c.get_si()});
      }
      alg.add_bracket(args, value);
    }
  }
  if (doc.contains("weights") && !doc.at("weights").is_null()) {
    alg.set_weights(field<std::vector<Weight>>(doc, "weights"));
    if (!is_weight_additive(alg)) throw InputError("weights are not additive over the brackets");
  }
  if (doc.contains("name")) alg.set_name(field<std::string>(doc, "name"));
  return alg;
}

KaryAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open algebra file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

nlohmann::json algebra_to_json(const KaryAlgebra& alg) {
  nlohmann::json doc;
  if (!alg.name().empty()) doc["name"] = alg.name();
  doc["arity"] = alg.arity();
  doc["dim"] = alg.dim();
  doc["labels"] = alg.labels();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [key, value] : alg.brackets()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const Term& t : value) terms.push_back({t.coeff, t.index});
    list.push_back({{"args", key}, {"value", terms}});
  }
  doc["brackets"] = list;
  if (alg.has_weights()) doc["weights"] = alg.weights();
  return doc;
}

}  // namespace kary
