#include "targetctl/rational.hpp"

#include "targetctl/errors.hpp"

namespace targetctl {

Rational rational_from_string(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw InputError("invalid rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw InputError("zero denominator in rational literal: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace targetctl
