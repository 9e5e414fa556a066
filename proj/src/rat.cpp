#include "polychow/rat.hpp"

#include <sstream>
#include <stdexcept>

namespace polychow {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

bool is_integral(const Rat& r) { return r.get_den() == 1; }

Int dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const ZVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

QVec to_qvec(const ZVec& v) {
    QVec q;
    q.reserve(v.size());
    for (const Int& x : v) q.emplace_back(x);
    return q;
}

Int common_denominator(const QVec& v) {
    Int l = 1;
    for (const Rat& x : v) {
        Int g;
        mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        l = g;
    }
    return l;
}

ZVec clear_denominators(const QVec& v) {
    Int l = common_denominator(v);
    ZVec out;
    out.reserve(v.size());
    for (const Rat& x : v) {
        Rat y = x * Rat(l);
        out.push_back(y.get_num());
    }
    return out;
}

template <class V>
static std::string join_vec(const V& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << to_string(v[i]);
    }
    os << ")";
    return os.str();
}

std::string to_string(const QVec& v) { return join_vec(v); }
std::string to_string(const ZVec& v) { return join_vec(v); }

}  // namespace polychow
