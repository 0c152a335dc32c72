#include "quatunit/rat.hpp"

#include <cctype>

namespace quatunit {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        fail(ErrorKind::InvalidInput, "malformed rational literal: " + text);
    }
    Int n(num), d(den);
    if (d == 0) fail(ErrorKind::InvalidInput, "rational literal with zero denominator: " + text);
    return make_rat(n, d);
}

std::string rat_to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), exp);
    // base canonical => base^e canonical
    return out;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Int floor_log2(const Rat& q) {
    if (q <= 0) fail(ErrorKind::NonPositiveOperand, "floor_log2 of non-positive value");
    const Int& p = q.get_num();
    const Int& d = q.get_den();
    // 2^(a-1) <= p < 2^a, 2^(b-1) <= d < 2^b with a,b = bit sizes.
    long a = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2));
    long b = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    long f = a - b; // value in (2^(f-1), 2^(f+1))
    Int shifted;
    if (f >= 0) {
        mpz_mul_2exp(shifted.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(f));
        return p >= shifted ? Int(f) : Int(f - 1);
    }
    mpz_mul_2exp(shifted.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-f));
    return shifted >= d ? Int(f) : Int(f - 1);
}

Rat pow2_rat(const Int& e) {
    if (!e.fits_slong_p()) fail(ErrorKind::ResourceLimit, "pow2_rat exponent too large to materialize");
    long le = e.get_si();
    Rat out(1);
    if (le >= 0) {
        mpz_mul_2exp(out.get_num_mpz_t(), out.get_num().get_mpz_t(), static_cast<unsigned long>(le));
    } else {
        mpz_mul_2exp(out.get_den_mpz_t(), out.get_den().get_mpz_t(), static_cast<unsigned long>(-le));
    }
    return out;
}

namespace {

// floor(sqrt(n * 4^k)) for integer n >= 0 gives dyadic lower bound sqrt(n) >= s / 2^k.
Int scaled_isqrt(const Int& n, unsigned long k) {
    Int scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), n.get_mpz_t(), 2 * k);
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return root;
}

} // namespace

Rat rat_sqrt_lower(const Rat& q, unsigned bits) {
    if (q < 0) fail(ErrorKind::NegativeOperand, "sqrt of negative value");
    if (q == 0) return Rat(0);
    // sqrt(p/d) = sqrt(p*d)/d
    Int prod = q.get_num() * q.get_den();
    Int root = scaled_isqrt(prod, bits);
    return make_rat(root, Int(q.get_den() << bits));
}

Rat rat_sqrt_upper(const Rat& q, unsigned bits) {
    if (q < 0) fail(ErrorKind::NegativeOperand, "sqrt of negative value");
    if (q == 0) return Rat(0);
    Int prod = q.get_num() * q.get_den();
    Int root = scaled_isqrt(prod, bits);
    return make_rat(root + 1, Int(q.get_den() << bits));
}

std::optional<Rat> rat_sqrt_exact(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(q.get_den().get_mpz_t())) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
        return make_rat(rn, rd);
    }
    return std::nullopt;
}

int ScaledRat::compare_rat(const Rat& other) const {
    if (other <= 0) return 1;
    return compare(ScaledRat(other, Int(0)));
}

int ScaledRat::compare(const ScaledRat& other) const {
    // sign of (m * 2^e - 1) with m = mantissa ratio, e = exponent difference
    Rat m = mantissa / other.mantissa;
    Int e = exp2 - other.exp2;
    Int l = e + floor_log2(m);
    if (l >= 1) return 1;  // value >= 2
    if (l <= -1) return -1; // value < 1
    // value in [1,2): equal iff m == 2^-e exactly
    const Int& num = m.get_num();
    const Int& den = m.get_den();
    if (mpz_popcount(num.get_mpz_t()) == 1 && mpz_popcount(den.get_mpz_t()) == 1) {
        long en = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - 1;
        long ed = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
        if (Int(en - ed) + e == 0) return 0;
    }
    return 1;
}

bool ScaledRat::materializable() const {
    Int bound(1 << 24);
    return exp2 <= bound && exp2 >= -bound;
}

Rat ScaledRat::to_rat() const {
    return Rat(mantissa * pow2_rat(exp2));
}

std::string ScaledRat::to_string() const {
    if (exp2 == 0) return rat_to_string(mantissa);
    return rat_to_string(mantissa) + "*2^" + exp2.get_str();
}

ScaledRat ScaledRat::parse(const std::string& text) {
    std::size_t pos = text.find("*2^");
    if (pos == std::string::npos) {
        return ScaledRat(rat_from_string(text), Int(0));
    }
    std::string m = text.substr(0, pos);
    std::string e = text.substr(pos + 3);
    if (!is_integer_token(e)) fail(ErrorKind::InvalidInput, "malformed scaled rational: " + text);
    return ScaledRat(rat_from_string(m), Int(e));
}

} // namespace quatunit
