#include "planedraw/geometry.hpp"

#include <stdexcept>

#include "planedraw/errors.hpp"

namespace planedraw::geom {

// Accepts "num/den" or a bare integer "num".
Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ArgumentError("empty rational literal");
    try {
        Rat r(text);
        if (r.get_den() == 0) throw ArgumentError("zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ArgumentError("bad rational literal '" + text + "'");
    }
}

}  // namespace planedraw::geom
