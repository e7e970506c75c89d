#include "kfission/rational.h"

#include "kfission/error.h"

#include <cctype>

namespace kfission {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::DegenerateSegment: return "DegenerateSegment";
        case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
        case ErrorKind::OddPointCount: return "OddPointCount";
        case ErrorKind::NotGeneralPosition: return "NotGeneralPosition";
        case ErrorKind::DuplicateParam: return "DuplicateParam";
        case ErrorKind::ConstructionFailed: return "ConstructionFailed";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::PlanInvariantViolation: return "PlanInvariantViolation";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::NotOneForest: return "NotOneForest";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ArithmeticMismatch: return "ArithmeticMismatch";
        case ErrorKind::NoCommonFrame: return "NoCommonFrame";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::ArithmeticMismatch, "division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num_text, true) || !is_integer_text(den_text, false)) {
        throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
    }
    std::string num_str(num_text);
    if (num_str[0] == '+') num_str.erase(0, 1);
    const mpz_class num(num_str, 10);
    const mpz_class den(std::string(den_text), 10);
    return Rational(num, den);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow2(int exp) {
    mpz_class p = 1;
    if (exp >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exp));
        return Rational(p, mpz_class(1));
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp));
    return Rational(mpz_class(1), p);
}

int Rational::floor_log2() const {
    // |x| = n/d; floor(log2) = bits(n) - bits(d) or one less.
    const mpz_class n = ::abs(v_.get_num());
    const mpz_class d = v_.get_den();
    int e = static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
            static_cast<int>(mpz_sizeinbase(d.get_mpz_t(), 2));
    if (pow2(e) > abs()) --e;
    return e;
}

std::size_t RationalHash::operator()(const Rational& r) const {
    const std::size_t h1 = std::hash<std::string>{}(r.num().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(r.den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace kfission
