#include "omega/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace omega {

namespace {

using ojson = nlohmann::ordered_json;

std::string subset_text(const IndexSubset& s) {
  std::string out = "{";
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (n) out += ",";
    out += kBasisNames[s[n]];
  }
  return out + "}";
}

ojson subset_json(const IndexSubset& s) {
  ojson out = ojson::array();
  for (BasisIndex b : s) out.push_back(std::string(1, kBasisNames[b]));
  return out;
}

ojson num_json(const ExactNum& x) {
  ojson out = ojson::array();
  for (const auto& c : x.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace

MultiplicationTable parse_algebra_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidTable(std::string("algebra file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string() || !j.contains("table"))
    throw InvalidTable("algebra file needs a string \"name\" and a \"table\"");
  const auto& t = j["table"];
  if (!t.is_array() || t.size() != kDim) throw InvalidTable("\"table\" must be a 4x4 array of strings");
  std::array<std::array<std::string, kDim>, kDim> cells;
  for (int r = 0; r < kDim; ++r) {
    if (!t[r].is_array() || t[r].size() != kDim) throw InvalidTable("\"table\" must be a 4x4 array of strings");
    for (int c = 0; c < kDim; ++c) {
      if (!t[r][c].is_string()) throw InvalidTable("\"table\" must be a 4x4 array of strings");
      cells[r][c] = t[r][c].get<std::string>();
    }
  }
  return MultiplicationTable::from_strings(j["name"].get<std::string>(), cells);
}

MultiplicationTable load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read algebra file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_json(buf.str());
}

Algebra resolve_algebra(std::string_view selector) {
  if (auto t = builtin_table(selector)) return Algebra(*t);
  constexpr std::string_view prefix = "file:";
  if (selector.substr(0, prefix.size()) == prefix)
    return Algebra(load_algebra_file(std::string(selector.substr(prefix.size()))));
  throw InvalidTable("unknown algebra '" + std::string(selector) + "' (use omega, quaternion, complex or file:<path>)");
}

std::string algebra_json(const MultiplicationTable& table) {
  ojson j;
  j["name"] = table.name();
  ojson rows = ojson::array();
  for (const auto& row : table.to_strings()) rows.push_back(row);
  j["table"] = rows;
  return j.dump(2) + "\n";
}

std::string property_report_json(const Algebra& alg) {
  const PropertyReport& r = alg.properties();
  ojson j;
  j["algebra"] = alg.name();
  ojson rows = ojson::array();
  for (const auto& row : alg.table().to_strings()) rows.push_back(row);
  j["table"] = rows;
  j["unital"] = r.unital;
  j["commutative"] = r.commutative;
  j["associative"] = r.associative;
  if (r.noncommuting_pair) {
    const auto [a, b] = *r.noncommuting_pair;
    j["noncommuting_pair"] = {std::string(1, kBasisNames[a]), std::string(1, kBasisNames[b])};
  }
  if (r.nonassociative_triple) {
    ojson t = ojson::array();
    for (BasisIndex b : *r.nonassociative_triple) t.push_back(std::string(1, kBasisNames[b]));
    j["nonassociative_triple"] = t;
  }
  if (r.zero_divisor)
    j["zero_divisor_witness"] = {{"left", format(r.zero_divisor->left)},
                                 {"right", format(r.zero_divisor->right)},
                                 {"left_coefficients", num_json(r.zero_divisor->left)},
                                 {"right_coefficients", num_json(r.zero_divisor->right)}};
  else
    j["zero_divisor_witness"] = nullptr;
  ojson closed = ojson::array();
  for (const auto& s : r.closed_subalgebras) closed.push_back(subset_json(s));
  j["closed_subalgebras"] = closed;
  ojson complex = ojson::array();
  for (const auto& cs : r.complex_structures)
    complex.push_back({{"subset", subset_json(cs.subset)},
                       {"unity", format(cs.unity)},
                       {"imaginary", format(cs.imaginary)},
                       {"imaginary_square_scale", to_string(cs.scale)}});
  j["complex_structures"] = complex;
  return j.dump(2) + "\n";
}

std::string table_text(const MultiplicationTable& table) {
  std::ostringstream out;
  out << "      1    i    j    k\n";
  const auto cells = table.to_strings();
  for (int r = 0; r < kDim; ++r) {
    out << "  " << kBasisNames[r] << " ";
    for (int c = 0; c < kDim; ++c) {
      std::string cell = cells[r][c];
      out << std::string(5 - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

std::string property_report_text(const Algebra& alg) {
  const PropertyReport& r = alg.properties();
  std::ostringstream out;
  out << "algebra " << alg.name() << "\n" << table_text(alg.table());
  out << "unital:       " << (r.unital ? "yes" : "no") << "\n";
  out << "commutative:  " << (r.commutative ? "yes" : "no");
  if (r.noncommuting_pair)
    out << " (" << kBasisNames[r.noncommuting_pair->first] << "*" << kBasisNames[r.noncommuting_pair->second]
        << " != " << kBasisNames[r.noncommuting_pair->second] << "*" << kBasisNames[r.noncommuting_pair->first] << ")";
  out << "\nassociative:  " << (r.associative ? "yes" : "no") << "\n";
  out << "zero divisor: ";
  if (r.zero_divisor)
    out << "(" << format(r.zero_divisor->left) << ") * (" << format(r.zero_divisor->right) << ") = 0\n";
  else
    out << "none found\n";
  out << "closed subalgebras:";
  for (const auto& s : r.closed_subalgebras) out << " " << subset_text(s);
  out << "\ncomplex structures:";
  if (r.complex_structures.empty()) out << " none";
  out << "\n";
  for (const auto& cs : r.complex_structures) {
    out << "  " << subset_text(cs.subset) << ": unity " << format(cs.unity) << ", imaginary " << format(cs.imaginary);
    if (!cs.normalised()) out << " / sqrt(" << to_string(cs.scale) << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace omega
