#ifndef QSK_ERROR_HPP
#define QSK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qsk {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Input text did not match the expression grammar. */
struct parse_error : error {
    parse_error(const std::string& msg, int line, int col)
        : error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line(line), col(col) {}
    int line, col;
};

/* A sequence with a non-positive entry, an unknown generator, a prime the
   operation does not support, or data requested above a declared bound. */
struct domain_error : error {
    using error::error;
};

/* Two routes through the engine disagreed.  Must never fire. */
struct engine_inconsistency : error {
    explicit engine_inconsistency(const std::string& msg) : error("engine inconsistency: " + msg) {}
};

} // namespace qsk

#endif
