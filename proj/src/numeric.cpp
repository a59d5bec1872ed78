#include "balis/numeric.hpp"

#include <cctype>

namespace balis {

std::optional<BigInt> parse_bigint(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
    BigInt v;
    if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0) return std::nullopt;
    return v;
}

std::optional<Rat> parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        auto num = parse_bigint(text);
        if (!num) return std::nullopt;
        return Rat(*num);
    }
    auto num = parse_bigint(text.substr(0, slash));
    auto den = parse_bigint(text.substr(slash + 1));
    if (!num || !den || sign(*den) == 0) return std::nullopt;
    Rat q(*num, *den);
    q.canonicalize();
    return q;
}

std::size_t hash_bigint(const BigInt& v) {
    const mpz_srcptr z = v.get_mpz_t();
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::size_t>(z->_mp_size));
    const int limbs = std::abs(z->_mp_size);
    for (int i = 0; i < limbs; ++i) mix(static_cast<std::size_t>(z->_mp_d[i]));
    return h;
}

std::size_t hash_rat(const Rat& v) {
    std::size_t h = hash_bigint(v.get_num());
    h ^= hash_bigint(v.get_den()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace balis
