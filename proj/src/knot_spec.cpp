#include "slopekit/knot_spec.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <string>

#include "slopekit/error.hpp"

namespace slopekit {

Knot parse_knot(std::string_view text) {
    std::string compact;
    std::copy_if(text.begin(), text.end(), std::back_inserter(compact),
                 [](unsigned char ch) { return !std::isspace(ch); });
    static const std::regex torus(R"(T\((-?\d+),(-?\d+)\))");
    static const std::regex cable(R"(C\((-?\d+),(-?\d+);T\((-?\d+),(-?\d+)\)\))");
    std::smatch m;
    auto num = [&m](std::size_t i) {
        try {
            return static_cast<std::int64_t>(std::stoll(m[i].str()));
        } catch (const std::out_of_range&) {
            throw DomainError("knot spec: number out of range");
        }
    };
    if (std::regex_match(compact, m, torus)) {
        return TorusKnot(num(1), num(2));
    }
    if (std::regex_match(compact, m, cable)) {
        return CableKnot(num(1), num(2), TorusKnot(num(3), num(4)));
    }
    throw DomainError("knot spec '" + std::string(text) + "' is not T(r,s) or C(w,c;T(r,s))");
}

}  // namespace slopekit
