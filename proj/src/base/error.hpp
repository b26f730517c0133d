#ifndef CT2_BASE_ERROR_HPP
#define CT2_BASE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ct2 {

// Stable error taxonomy. Codes are mirrored by the C API; do not renumber.
enum class errc : int {
    ok = 0,
    not_irreducible = 1,
    maximality_undecided = 2,
    precision_exhausted = 3,
    budget_exceeded = 4,
    relation_search_exhausted = 5,
    not_smooth = 6,
    empty_box = 7,            // alarm: must never happen for valid inputs
    witness_invalid = 8,
    theorem_violation = 9,    // alarm
    zeta_inconsistent = 10,   // alarm
    even_characteristic = 11,
    even_degree_model = 12,
    resolvent_reducible = 13,
    reducible_cubic = 14,
    insufficient_data = 15,
    bad_table_row = 16,
    square_line = 17,
    usage = 18,
    internal = 19,
};

const char* errc_name(errc c);

class ct2_error : public std::runtime_error {
  public:
    ct2_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

// True for the error classes that signal a broken implementation rather than
// a bad input or an exhausted budget.
inline bool errc_is_alarm(errc c) {
    return c == errc::empty_box || c == errc::theorem_violation || c == errc::zeta_inconsistent;
}

[[noreturn]] inline void fail(errc code, const std::string& what) { throw ct2_error(code, what); }

inline void check(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace ct2

#endif
