#include "polar/io.hpp"

#include <fstream>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
}

Fq integer_entry(const nlohmann::json& v, const PrimeField& k) {
  if (v.is_number_unsigned()) return k.from_uint(v.get<std::uint64_t>());
  if (v.is_number_integer()) return k.from_int(v.get<std::int64_t>());
  throw ParseError("matrix and point entries must be integers", 1, 1);
}

}  // namespace

ConstMatrix parse_matrix_json(std::string_view text, const PrimeField& k) {
  nlohmann::json j = parse_json(text);
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows", 1, 1);
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be nonempty arrays", 1, 1);
  ConstMatrix m(k, static_cast<int>(j.size()), static_cast<int>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError("matrix row " + std::to_string(r + 1) + " has the wrong length", 1, 1);
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = integer_entry(j[r][c], k);
  }
  return m;
}

Point parse_point_json(std::string_view text, const PrimeField& k) {
  nlohmann::json j = parse_json(text);
  if (!j.is_array()) throw ParseError("point must be an array of integers", 1, 1);
  Point x;
  for (const auto& v : j) x.push_back(integer_entry(v, k));
  return x;
}

nlohmann::ordered_json matrix_to_json(const ConstMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.field().to_signed(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json polynomials_to_json(std::span<const Polynomial> polys) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Polynomial& f : polys) out.push_back(f.to_string());
  return out;
}

nlohmann::ordered_json polar_result_to_json(const PolarSpec& spec, const PolarIdealResult& r) {
  nlohmann::ordered_json j;
  j["flavor"] = to_string(spec.flavor());
  j["n"] = spec.n();
  j["p"] = spec.p();
  j["i"] = spec.i();
  j["prime"] = spec.field().modulus();
  j["matrix"] = matrix_to_json(spec.augmented());
  j["generators"] = r.ideal.generators().size();
  j["dim"] = r.dim;
  j["codim_in_S"] = r.dim >= 0 ? nlohmann::ordered_json(r.codim_in_S) : nlohmann::ordered_json(nullptr);
  j["degree"] = r.degree;
  j["basis"] = polynomials_to_json(r.gb.basis());
  return j;
}

}  // namespace polar
