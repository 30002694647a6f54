#include "branchlab/rational.hpp"
#include "branchlab/error.hpp"
#include "branchlab/weight.hpp"

#include <charconv>

namespace branchlab {

std::string to_string(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

long long parse_integer(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw ConfigError("malformed rational: '" + std::string(text) + "'");
    return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    long long num = parse_integer(text.substr(0, slash));
    long long den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Weight Weight::from_ints(std::initializer_list<long long> values) {
    Weight w(values.size());
    std::size_t i = 0;
    for (long long v : values) w.coords_[i++] = Rational(v);
    return w;
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& factor) {
    for (auto& c : coords_) c *= factor;
    return *this;
}

Weight& Weight::add_scaled(const Rational& factor, const Weight& other) {
    if (factor == 0) return *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (other.coords_[i] != 0) coords_[i] += factor * other.coords_[i];
    return *this;
}

Rational dot(const Weight& a, const Weight& b) {
    Rational sum(0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
    return sum;
}

std::string to_string(const Weight& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.dim(); ++i) {
        if (i) out += ", ";
        out += to_string(w[i]);
    }
    return out + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = w.dim();
    for (const auto& c : w.coords()) h ^= hash_value(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace branchlab
