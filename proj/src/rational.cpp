#include "plcover/rational.hpp"

namespace plcover {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("bad rational: " + s);
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rat dyadic_round(const Rat& r, unsigned bits) {
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
    Rat scaled = r * Rat(scale);
    // round half toward -inf; any fixed tie rule works
    Int n = rat_floor(scaled + Rat(1, 2));
    Rat out(n, scale);
    out.canonicalize();
    return out;
}

Rat pow2_neg(unsigned n) {
    Int d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), n);
    Rat r(1, d);
    r.canonicalize();
    return r;
}

} // namespace plcover
