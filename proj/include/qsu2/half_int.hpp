#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qsu2 {

// Exact half-integer spin label stored as a doubled integer, so parity
// checks and index arithmetic never touch floating point.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt of_int(int n) { return HalfInt(2 * n); }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

    // Exact integer value; throws if the label is half-odd.
    int as_int() const {
        if (!is_integer())
            throw std::domain_error("HalfInt: " + to_string() + " is not an integer");
        return twice_ / 2;
    }

    std::string to_string() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    friend constexpr HalfInt operator+(HalfInt a, int n) { return HalfInt(a.twice_ + 2 * n); }
    friend constexpr HalfInt operator-(HalfInt a, int n) { return HalfInt(a.twice_ - 2 * n); }

    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    friend constexpr bool same_parity(HalfInt a, HalfInt b) {
        return ((a.twice_ - b.twice_) % 2) == 0;
    }

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt a) { return a.twice() < 0 ? -a : a; }

// Parses an exact rational spin: "2", "-1", "3/2", "-5/2".  Floats are
// rejected on purpose; spins must stay exact.
HalfInt parse_half_int(const std::string& text);

// Spin triple (J, M, N) with the representation-theory constraints:
// J >= 0, |M| <= J, |N| <= J, and all three simultaneously integer or
// half-odd-integer.
struct SpinTriple {
    HalfInt J, M, N;

    SpinTriple(HalfInt j, HalfInt m, HalfInt n) : J(j), M(m), N(n) { validate(); }

    void validate() const;

    // Exact integer values of the factorial arguments that appear in the
    // basis-function formulas.
    int j_plus_m() const { return (J + M).as_int(); }
    int j_minus_m() const { return (J - M).as_int(); }
    int j_plus_n() const { return (J + N).as_int(); }
    int j_minus_n() const { return (J - N).as_int(); }
    int m_plus_n() const { return (M + N).as_int(); }
    int two_j() const { return J.twice(); }
};

} // namespace qsu2
