#pragma once

#include <string>
#include <string_view>

#include "omega/algebra.hpp"

namespace omega {

/// Algebra definition file: {"name": ..., "table": 4x4 strings from 1,-1,i,-i,j,-j,k,-k}.
/// Throws InvalidTable on schema or table errors, IoError if the file cannot be read.
MultiplicationTable parse_algebra_json(std::string_view json_text);
MultiplicationTable load_algebra_file(const std::string& path);

/// "omega", "quaternion", "complex" or "file:<path>".
Algebra resolve_algebra(std::string_view selector);

std::string algebra_json(const MultiplicationTable& table);
std::string property_report_json(const Algebra& alg);
std::string property_report_text(const Algebra& alg);
std::string table_text(const MultiplicationTable& table);

}  // namespace omega
