#include "filtadm/rational.hpp"

#include <stdexcept>

namespace filtadm {

std::string to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rat q;
    // mpq_set_str accepts "a/b" and "a"; it does not accept a leading '+'.
    if (s.front() == '+') s.erase(0, 1);
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

namespace {
long int_valuation(Int n, long p) {
    long v = 0;
    Int prime(p);
    while (mpz_divisible_p(n.get_mpz_t(), prime.get_mpz_t())) {
        n /= prime;
        ++v;
    }
    return v;
}
}  // namespace

long valuation(const Rat& q, long p) {
    if (q == 0) throw std::domain_error("valuation of zero");
    return int_valuation(abs(q.get_num()), p) - int_valuation(q.get_den(), p);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace filtadm
