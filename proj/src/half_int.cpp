#include "qsu2/half_int.hpp"

#include <cctype>

namespace qsu2 {

HalfInt parse_half_int(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("expected an exact spin like \"2\" or \"-3/2\", got \"" +
                                     text + "\"");
    };
    if (text.empty()) throw bad();

    std::size_t slash = text.find('/');
    const auto parse_int = [&](const std::string& s) {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
        return std::stoi(s);
    };

    if (slash == std::string::npos) return HalfInt::of_int(parse_int(text));

    int num = parse_int(text.substr(0, slash));
    int den = parse_int(text.substr(slash + 1));
    if (den == 1) return HalfInt::of_int(num);
    if (den == 2) return HalfInt::from_twice(num);
    throw bad();
}

void SpinTriple::validate() const {
    if (J.twice() < 0)
        throw std::domain_error("SpinTriple: J must be >= 0, got " + J.to_string());
    if (!same_parity(J, M) || !same_parity(J, N))
        throw std::domain_error("SpinTriple: J, M, N must all be integers or all half-integers "
                                "(J=" + J.to_string() + ", M=" + M.to_string() +
                                ", N=" + N.to_string() + ")");
    if (abs(M) > J)
        throw std::domain_error("SpinTriple: |M| <= J violated (J=" + J.to_string() +
                                ", M=" + M.to_string() + ")");
    if (abs(N) > J)
        throw std::domain_error("SpinTriple: |N| <= J violated (J=" + J.to_string() +
                                ", N=" + N.to_string() + ")");
}

} // namespace qsu2
