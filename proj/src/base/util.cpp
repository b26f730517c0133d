#include "base/util.hpp"

#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "base/error.hpp"

extern char** environ;

namespace ct2 {

const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "Ok";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::maximality_undecided: return "MaximalityUndecided";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::relation_search_exhausted: return "RelationSearchExhausted";
        case errc::not_smooth: return "NotSmooth";
        case errc::empty_box: return "EmptyBox";
        case errc::witness_invalid: return "WitnessInvalid";
        case errc::theorem_violation: return "TheoremViolation";
        case errc::zeta_inconsistent: return "ZetaInconsistent";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::even_degree_model: return "EvenDegreeModel";
        case errc::resolvent_reducible: return "ResolventReducible";
        case errc::reducible_cubic: return "ReducibleCubic";
        case errc::insufficient_data: return "InsufficientData";
        case errc::bad_table_row: return "BadTableRow";
        case errc::square_line: return "SquareLine";
        case errc::usage: return "Usage";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

std::string fmt_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_interval(double mid, double rad) {
    return fmt_g12(mid) + " ± " + fmt_g12(rad);
}

std::string fnv128_hex(const std::string& bytes) {
    // Two independent 64-bit FNV-1a lanes with distinct offsets.
    uint64_t h1 = 0xcbf29ce484222325ULL, h2 = 0x9e3779b97f4a7c15ULL;
    for (unsigned char ch : bytes) {
        h1 = (h1 ^ ch) * 0x100000001b3ULL;
        h2 = (h2 ^ (ch + 0x9eULL)) * 0x100000001b3ULL;
    }
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(h1),
                  static_cast<unsigned long long>(h2));
    return buf;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> cfg;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        size_t eq = t.find('=');
        check(eq != std::string::npos, errc::usage, "config line missing '=': " + t);
        cfg[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return cfg;
}

void apply_env_overrides(std::map<std::string, std::string>& cfg, const std::string& prefix) {
    for (char** e = environ; *e; ++e) {
        std::string kv = *e;
        if (kv.rfind(prefix, 0) != 0) continue;
        size_t eq = kv.find('=');
        if (eq == std::string::npos) continue;
        std::string key = kv.substr(prefix.size(), eq - prefix.size());
        for (auto& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        cfg[key] = kv.substr(eq + 1);
    }
}

std::string render_config_text(const std::map<std::string, std::string>& cfg) {
    std::ostringstream os;
    for (const auto& [k, v] : cfg) os << k << " = " << v << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    check(f.good(), errc::usage, "cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        check(f.good(), errc::usage, "cannot write file: " + tmp);
        f << content;
        f.flush();
        check(f.good(), errc::usage, "short write: " + tmp);
    }
    check(::rename(tmp.c_str(), path.c_str()) == 0, errc::usage,
          "rename failed: " + tmp + " -> " + path + " (" + std::strerror(errno) + ")");
}

bool file_exists(const std::string& path) {
    struct stat st{};
    return ::stat(path.c_str(), &st) == 0;
}

void ensure_dir(const std::string& path) {
    if (path.empty() || file_exists(path)) return;
    // create parents
    size_t pos = 0;
    while ((pos = path.find('/', pos + 1)) != std::string::npos) {
        std::string parent = path.substr(0, pos);
        if (!parent.empty() && !file_exists(parent)) ::mkdir(parent.c_str(), 0755);
    }
    if (::mkdir(path.c_str(), 0755) != 0 && errno != EEXIST)
        fail(errc::usage, "mkdir failed: " + path);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, sep)) out.push_back(tok);
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << sep;
        os << parts[i];
    }
    return os.str();
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace ct2
