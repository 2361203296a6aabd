#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "polar/polymat.hpp"
#include "polar/varieties.hpp"

namespace polar {

// Whole file as a string; throws PreconditionError when it cannot be read.
std::string read_text_file(const std::string& path);

// A JSON array of rows, each an array of integers, reduced mod q.
ConstMatrix parse_matrix_json(std::string_view text, const PrimeField& field);
// A JSON array of integers.
Point parse_point_json(std::string_view text, const PrimeField& field);

nlohmann::ordered_json matrix_to_json(const ConstMatrix& m);
nlohmann::ordered_json polynomials_to_json(std::span<const Polynomial> polys);
nlohmann::ordered_json polar_result_to_json(const PolarSpec& spec, const PolarIdealResult& r);

}  // namespace polar
