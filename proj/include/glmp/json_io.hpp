#ifndef GLMP_JSON_IO_HPP
#define GLMP_JSON_IO_HPP

#include <string>

#include "glmp/model.hpp"

namespace glmp {

/// Instance schema:
/// {"name": str, "n": int, "m": int, "A": [[num]], "b": [num],
///  "terms": [{"c": [num], "d": num, "alpha": num}]}
/// Row-major A; every length is validated on load and a mismatch throws
/// std::runtime_error naming the field.
GlmpInstance instance_from_json_text(const std::string& text);
GlmpInstance load_instance(const std::string& path);

std::string instance_to_json_text(const GlmpInstance& instance);
void save_instance(const GlmpInstance& instance, const std::string& path);

}  // namespace glmp

#endif
