#include "qchar/tpoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "qchar/errors.hpp"

namespace qchar {

TPoly::TPoly(long long constant) {
    if (constant != 0) terms_.emplace_back(0, constant);
}

TPoly::TPoly(BigInt constant) {
    if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

TPoly TPoly::term(BigInt coeff, int exp) {
    TPoly p;
    if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
    return p;
}

TPoly TPoly::t_power(int exp) { return term(1, exp); }

bool TPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

BigInt TPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

int TPoly::min_exp() const {
    assert(!terms_.empty());
    return terms_.front().first;
}

int TPoly::max_exp() const {
    assert(!terms_.empty());
    return terms_.back().first;
}

void TPoly::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {exp, c});
    }
}

TPoly& TPoly::operator+=(const TPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.terms_.emplace_back(e, -c);
    return out;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    std::map<int, BigInt> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    TPoly out;
    for (auto& [e, c] : acc)
        if (c != 0) out.terms_.emplace_back(e, std::move(c));
    return out;
}

TPoly TPoly::shifted(int k) const {
    TPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.terms_.emplace_back(e + k, c);
    return out;
}

TPoly TPoly::bar() const {
    TPoly out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.terms_.emplace_back(-it->first, it->second);
    return out;
}

TPoly TPoly::negative_part() const {
    TPoly out;
    for (const auto& [e, c] : terms_)
        if (e < 0) out.terms_.emplace_back(e, c);
    return out;
}

BigInt TPoly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string TPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigInt c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        int e = it->first;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

TPoly t_binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n)
        throw ArgumentOutOfRange("t_binomial(" + std::to_string(n) + ", " +
                                 std::to_string(r) + ")");
    // Pascal row by row: [n, r] = t^r [n-1, r] + t^{r-n} [n-1, r-1].
    std::vector<TPoly> row{TPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<TPoly> next(std::min(m, r) + 1);
        for (int k = 0; k < static_cast<int>(next.size()); ++k) {
            TPoly v;
            if (k <= m - 1 && k < static_cast<int>(row.size()))
                v += row[k].shifted(k);
            if (k >= 1 && k - 1 < static_cast<int>(row.size()))
                v += row[k - 1].shifted(k - m);
            next[k] = std::move(v);
        }
        row = std::move(next);
    }
    return row[r];
}

}  // namespace qchar
