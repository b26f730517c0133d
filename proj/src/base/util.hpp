#ifndef CT2_BASE_UTIL_HPP
#define CT2_BASE_UTIL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "base/ints.hpp"

namespace ct2 {

// Fixed-width decimal with 12 significant digits ("%.12g"); all floats in
// reports go through this so reruns are byte-identical.
std::string fmt_g12(double v);

// "mid ± rad" form used for interval fields in reports.
std::string fmt_interval(double mid, double rad);

// 128-bit FNV-1a, hex string; used for content-addressed cache keys.
std::string fnv128_hex(const std::string& bytes);

// Flat "key = value" config text; '#' comments; later keys win. Environment
// variables with the given prefix override file values (CT2_FOO_BAR -> foo_bar).
std::map<std::string, std::string> parse_config_text(const std::string& text);
void apply_env_overrides(std::map<std::string, std::string>& cfg, const std::string& prefix = "CT2_");
std::string render_config_text(const std::map<std::string, std::string>& cfg);

std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);
void ensure_dir(const std::string& path);

std::vector<std::string> split(const std::string& s, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string trim(const std::string& s);

} // namespace ct2

#endif
