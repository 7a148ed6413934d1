#include "kolchin/numeric.hpp"

#include <stdexcept>

namespace kolchin {

Int binomial(const Int& n, unsigned long k) {
    if (n < 0 || n < Int(k)) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::int64_t to_int64(const Int& v) {
    if (!v.fits_slong_p()) {
        throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
    }
    return static_cast<std::int64_t>(v.get_si());
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

}  // namespace kolchin
