#ifndef QOA_ERRORS_HPP
#define QOA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qoa {

// Error categories; the CLI maps these onto distinct exit codes.
enum class errc {
    domain,        // argument outside the mathematical domain of an operation
    arithmetic,    // division by zero and friends
    usage,         // API misuse (alphabet mismatch, ...)
    config,        // run-level configuration insufficient for the request
    degree_bound,  // rewrite system not complete far enough
    evaluation,    // specialization hit a vanishing denominator
    validation,    // invalid specialization point
    parse,         // malformed textual input
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc k, const std::string& msg) { throw error(k, msg); }

inline const char* errc_name(errc k) {
    switch (k) {
    case errc::domain: return "domain";
    case errc::arithmetic: return "arithmetic";
    case errc::usage: return "usage";
    case errc::config: return "config";
    case errc::degree_bound: return "degree_bound";
    case errc::evaluation: return "evaluation";
    case errc::validation: return "validation";
    case errc::parse: return "parse";
    }
    return "unknown";
}

} // namespace qoa

#endif
