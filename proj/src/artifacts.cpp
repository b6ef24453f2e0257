#include "stargb/artifacts.hpp"

#include <fstream>

namespace stargb {

nlohmann::ordered_json basis_to_json(const GroebnerBasis& gb) {
  const Signature& sig = gb.signature;
  nlohmann::ordered_json j;
  j["signature"] = signature_to_json(sig);
  j["status"] = to_string(gb.status);
  j["degree_cap"] = gb.degree_cap;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < gb.elements.size(); ++k) {
    const Poly& e = gb.elements[k];
    elems.push_back({{"id", gb.ids.empty() ? k : gb.ids[k]},
                     {"leading_word", sig.word_text(e.leading_word())},
                     {"degree", e.degree()},
                     {"poly", sig.poly_text(e)}});
  }
  j["elements"] = elems;
  nlohmann::ordered_json dropped = nlohmann::ordered_json::array();
  for (const Word& w : gb.dropped) dropped.push_back(sig.word_text(w));
  j["dropped"] = dropped;
  std::size_t zero = 0, adjoined = 0, dropped_count = 0;
  for (const auto& e : gb.log) {
    switch (e.outcome) {
      case CompositionLogEntry::Outcome::Zero: ++zero; break;
      case CompositionLogEntry::Outcome::Adjoined: ++adjoined; break;
      case CompositionLogEntry::Outcome::Dropped: ++dropped_count; break;
    }
  }
  j["compositions"] = {{"zero", zero}, {"adjoined", adjoined}, {"dropped", dropped_count}};
  if (!gb.certificates.empty()) {
    nlohmann::ordered_json certs = nlohmann::ordered_json::array();
    for (const auto& cert : gb.certificates) {
      nlohmann::ordered_json c = nlohmann::ordered_json::array();
      for (const auto& step : cert) {
        c.push_back({{"coeff", sig.scalar_text(step.coeff)},
                     {"left", sig.word_text(step.left)},
                     {"relation", step.relation},
                     {"right", sig.word_text(step.right)}});
      }
      certs.push_back(c);
    }
    j["certificates"] = certs;
  }
  return j;
}

GroebnerBasis basis_from_json(const nlohmann::json& j) {
  GroebnerBasis gb;
  gb.signature = signature_from_json(j.at("signature"));
  const std::string status = j.at("status").get<std::string>();
  if (status == to_string(BasisStatus::Complete)) {
    gb.status = BasisStatus::Complete;
  } else if (status == to_string(BasisStatus::Truncated)) {
    gb.status = BasisStatus::Truncated;
  } else {
    throw std::invalid_argument("unknown basis status '" + status + "'");
  }
  gb.degree_cap = j.at("degree_cap").get<std::size_t>();
  for (const auto& e : j.at("elements")) {
    gb.elements.push_back(gb.signature.parse_poly(e.at("poly").get<std::string>()).monic());
    gb.ids.push_back(e.at("id").get<std::size_t>());
  }
  for (const auto& w : j.value("dropped", nlohmann::json::array())) gb.dropped.push_back(gb.signature.parse_word(w.get<std::string>()));
  return gb;
}

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return nlohmann::json::parse(in);
}

}  // namespace stargb
