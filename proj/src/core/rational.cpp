#include "core/rational.hpp"

#include <cctype>

namespace gdc {

Rat rat_from_string(std::string_view s) {
    // Accepted forms: "p/q", integers, and plain decimals ("-3.25", "1e-3").
    std::string t;
    t.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ParseError("empty rational literal");

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        Rat q;
        if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
            throw ParseError("bad rational literal: " + t);
        if (sgn(Rat(Rat(q).get_den())) == 0) throw ParseError("zero denominator: " + t);
        q.canonicalize();
        return q;
    }

    // Split off exponent.
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        try {
            exp10 = std::stol(t.substr(epos + 1));
        } catch (...) {
            throw ParseError("bad exponent in rational literal: " + t);
        }
        t = t.substr(0, epos);
    }
    auto dot = t.find('.');
    std::string digits = t;
    long frac = 0;
    if (dot != std::string::npos) {
        frac = static_cast<long>(t.size() - dot - 1);
        digits = t.substr(0, dot) + t.substr(dot + 1);
    }
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("bad rational literal: " + t);
    Int num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
        throw ParseError("bad rational literal: " + t);
    Rat q(num);
    long shift = exp10 - frac;
    Int ten = 10;
    Int pow;
    mpz_pow_ui(pow.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift >= 0 ? shift : -shift));
    if (shift >= 0)
        q *= Rat(pow);
    else
        q /= Rat(pow);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_mul_2exp(const Rat& x, long e) {
    Rat r;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

Rat dyadic_floor(const Rat& x, long bits) {
    Rat scaled = rat_mul_2exp(x, bits);
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    return rat_mul_2exp(Rat(f), -bits);
}

Rat dyadic_ceil(const Rat& x, long bits) {
    Rat scaled = rat_mul_2exp(x, bits);
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    return rat_mul_2exp(Rat(c), -bits);
}

long floor_log2(const Rat& x) {
    if (sgn(x) <= 0) throw DomainError("floor_log2 needs a positive argument");
    // Initial guess from bit lengths, then correct by direct comparison.
    long e = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
    while (rat_mul_2exp(Rat(1), e) > x) --e;
    while (rat_mul_2exp(Rat(1), e + 1) <= x) ++e;
    return e;
}

}  // namespace gdc
