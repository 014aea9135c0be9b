#include "farey/fraction.hpp"

#include <cstdlib>

namespace farey {

Frac Frac::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw DomainError("expected \"h/k\", got \"" + text + "\"");
    errno = 0;
    char* end = nullptr;
    const long long h = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + slash)
        throw DomainError("bad numerator in \"" + text + "\"");
    const long long k = std::strtoll(text.c_str() + slash + 1, &end, 10);
    if (errno != 0 || end != text.c_str() + text.size())
        throw DomainError("bad denominator in \"" + text + "\"");
    return Frac(h, k);
}

} // namespace farey
