#include "strand/boij_soderberg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace strand {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN)
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(r);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd64(a, b), b);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = gcd64(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_mul(num, o.den) + checked_mul(o.num, den),
                    checked_mul(den, o.den));
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(checked_mul(num, o.den) - checked_mul(o.num, den),
                    checked_mul(den, o.den));
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}
Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
}
bool Rational::operator<(const Rational& o) const {
    return checked_mul(num, o.den) < checked_mul(o.num, den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string DegreeSequence::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ",";
        os << degrees[i];
    }
    os << ")";
    return os.str();
}

bool RationalBettiTable::is_zero() const {
    for (auto& [k, v] : entries)
        if (!v.is_zero()) return false;
    return true;
}

bool RationalBettiTable::operator==(const RationalBettiTable& o) const {
    for (auto& [k, v] : entries)
        if (o.at(k.first, k.second) != v) return false;
    for (auto& [k, v] : o.entries)
        if (at(k.first, k.second) != v) return false;
    return true;
}

RationalBettiTable pure_table(const DegreeSequence& d) {
    const auto& ds = d.degrees;
    if (ds.empty()) throw std::invalid_argument("pure_table: empty sequence");
    for (std::size_t i = 1; i < ds.size(); ++i)
        if (ds[i] <= ds[i - 1])
            throw std::invalid_argument(
                "pure_table: degree sequence must strictly increase");
    int s = static_cast<int>(ds.size());
    std::vector<Rational> raw(s);
    for (int i = 0; i < s; ++i) {
        Rational r(1);
        for (int j = 0; j < s; ++j) {
            if (j == i) continue;
            std::int64_t diff = ds[j] - ds[i];
            if (diff < 0) diff = -diff;
            r = r / Rational(diff);
        }
        raw[i] = r;
    }
    // smallest positive scalar making every entry integral
    std::int64_t scale = 1;
    for (auto& r : raw) scale = lcm64(scale, r.den);
    std::vector<std::int64_t> ints(s);
    for (int i = 0; i < s; ++i)
        ints[i] = checked_mul(raw[i].num, scale / raw[i].den);
    std::int64_t g = 0;
    for (auto v : ints) g = gcd64(g, v);
    RationalBettiTable out;
    for (int i = 0; i < s; ++i) out.set(i, ds[i], Rational(ints[i] / g));
    return out;
}

std::vector<BsComponent> decompose(const RationalBettiTable& table) {
    RationalBettiTable work = table;
    std::vector<BsComponent> peeled;
    int guard = static_cast<int>(table.entries.size()) + 2;
    while (!work.is_zero()) {
        if (--guard < 0)
            throw NotDecomposable("decompose: peeling failed to terminate");
        // maximal degree sequence: per column the least total degree present
        std::map<int, int> min_deg;
        for (auto& [k, v] : work.entries) {
            if (v.is_zero()) continue;
            auto it = min_deg.find(k.first);
            if (it == min_deg.end() || k.second < it->second)
                min_deg[k.first] = k.second;
        }
        DegreeSequence d;
        int expect = 0;
        for (auto& [i, t] : min_deg) {
            if (i != expect)
                throw NotDecomposable(
                    "decompose: column " + std::to_string(expect) +
                    " vanished before column " + std::to_string(i) +
                    "; table is outside the cone");
            d.degrees.push_back(t);
            ++expect;
        }
        for (std::size_t i = 1; i < d.degrees.size(); ++i)
            if (d.degrees[i] <= d.degrees[i - 1])
                throw NotDecomposable(
                    "decompose: degree sequence " + d.str() +
                    " is not strictly increasing; table is outside the cone");
        RationalBettiTable pure = pure_table(d);
        bool first = true;
        Rational c;
        for (std::size_t i = 0; i < d.degrees.size(); ++i) {
            Rational ratio = work.at(static_cast<int>(i), d.degrees[i]) /
                             pure.at(static_cast<int>(i), d.degrees[i]);
            if (first || ratio < c) {
                c = ratio;
                first = false;
            }
        }
        if (first || c.is_zero() || c.negative())
            throw NotDecomposable("decompose: nonpositive peeling coefficient");
        RationalBettiTable next;
        for (auto& [k, v] : work.entries) {
            Rational nv = v - c * pure.at(k.first, k.second);
            if (nv.negative())
                throw NotDecomposable(
                    "decompose: negative entry after peeling " + d.str());
            next.set(k.first, k.second, nv);
        }
        peeled.push_back(BsComponent{c, d});
        work = std::move(next);
    }
    // recomposition must be exact
    RationalBettiTable check;
    for (auto& comp : peeled) {
        RationalBettiTable pure = pure_table(comp.degrees);
        for (auto& [k, v] : pure.entries) {
            Rational cur = check.at(k.first, k.second) + comp.coeff * v;
            check.entries[{k.first, k.second}] = cur;
        }
    }
    if (!(check == table))
        throw std::logic_error("decompose: recomposition mismatch");
    // peeling already runs up the chain: longer sequences are smaller, so
    // the emission order is ascending
    return peeled;
}

RationalBettiTable to_rational_table(const BettiTable& table) {
    RationalBettiTable out;
    for (auto& [ij, b] : table.entries)
        if (b != 0) out.set(ij.first, ij.first + ij.second, Rational(b));
    return out;
}

}  // namespace strand
