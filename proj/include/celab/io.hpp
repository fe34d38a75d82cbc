#ifndef CELAB_IO_HPP
#define CELAB_IO_HPP

#include "celab/algebra.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace celab {

using Json = nlohmann::ordered_json;

Json scalar_ring_to_json(const ScalarRing &ring);
ScalarRing scalar_ring_from_json(const Json &j, const std::string &path = "/scalar");

Json vec_to_json(const ScalarRing &ring, const Vec &v);
Vec vec_from_json(const ScalarRing &ring, const Json &j, std::size_t n, const std::string &path);

Json algebra_to_json(const Algebra &A);
Algebra algebra_from_json(const Json &j);

/// Parse text, reporting syntax errors as InvalidJson.
Json parse_json(const std::string &text);
Json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const Json &j);

/// Fetch a member or throw InvalidJson naming the path.
const Json &json_member(const Json &j, const std::string &key, const std::string &path);

}  // namespace celab

#endif
