#include "luttinger/json_io.hpp"

#include "luttinger/text_format.hpp"

namespace luttinger {

using nlohmann::json;

json block_to_json(const ManifoldBlock& b) {
  json j;
  j["name"] = b.name;
  j["euler"] = b.euler;
  j["signature"] = b.signature;
  j["complement"] = print_presentation(b.complement);
  j["marked"] = json::array();
  for (const MarkedSubmanifold& m : b.marked) {
    json mj;
    mj["label"] = m.label;
    mj["genus"] = m.genus;
    mj["meridian"] = print_word(m.meridian, b.complement);
    mj["pushoff_basis"] = json::array();
    for (const Word& w : m.pushoff_basis) {
      mj["pushoff_basis"].push_back(print_word(w, b.complement));
    }
    mj["basis_labels"] = m.basis_labels;
    mj["framing_note"] = m.framing_note;
    j["marked"].push_back(std::move(mj));
  }
  j["flags"] = json::array();
  for (const std::string& f : b.flags) j["flags"].push_back(f);
  j["notes"] = b.notes;
  return j;
}

ManifoldBlock block_from_json(const json& j) {
  ManifoldBlock b;
  b.name = j.at("name").get<std::string>();
  b.euler = j.at("euler").get<int>();
  b.signature = j.at("signature").get<int>();
  b.complement = parse_presentation(j.at("complement").get<std::string>());
  for (const json& mj : j.at("marked")) {
    MarkedSubmanifold m;
    m.label = mj.at("label").get<std::string>();
    m.genus = mj.at("genus").get<int>();
    m.meridian = parse_word(mj.at("meridian").get<std::string>(), b.complement);
    for (const json& wj : mj.at("pushoff_basis")) {
      m.pushoff_basis.push_back(parse_word(wj.get<std::string>(), b.complement));
    }
    if (mj.contains("basis_labels")) {
      m.basis_labels = mj.at("basis_labels").get<std::vector<std::string>>();
    }
    if (mj.contains("framing_note")) {
      m.framing_note = mj.at("framing_note").get<std::string>();
    }
    b.marked.push_back(std::move(m));
  }
  if (j.contains("flags")) {
    for (const json& f : j.at("flags")) b.flags.insert(f.get<std::string>());
  }
  if (j.contains("notes")) b.notes = j.at("notes").get<std::vector<std::string>>();
  b.validate();
  return b;
}

json invariants_to_json(const AbelianInvariants& inv) {
  json j;
  j["free_rank"] = inv.free_rank;
  j["torsion"] = json::array();
  for (const mpz_class& d : inv.torsion) {
    if (d.fits_slong_p()) {
      j["torsion"].push_back(d.get_si());
    } else {
      j["torsion"].push_back(d.get_str());
    }
  }
  return j;
}

json enumeration_to_json(const EnumerationResult& r) {
  json j;
  if (r.is_finite()) {
    j["outcome"] = "finite";
    j["order"] = r.order;
    j["work"] = r.work;
  } else {
    j["outcome"] = "exceeded";
    j["cap"] = r.cap;
    j["work"] = r.work;
  }
  return j;
}

}  // namespace luttinger
