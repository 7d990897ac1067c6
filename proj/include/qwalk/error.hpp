#ifndef QWALK_ERROR_HPP
#define QWALK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qwalk {

/* All precondition violations and unrepresentable results throw. Nothing in
 * this library is allowed to round or silently truncate below the honest
 * order, so an exception always means the caller asked for something the
 * exact model cannot deliver. */
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct invariant_violation : error {
    explicit invariant_violation(const std::string& what) : error(what) {}
};

}  // namespace qwalk

#endif
