#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace adc {

using Id = std::string;
using Int = std::int64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input (bad files, dangling references, bad flags).
struct InputError : Error {
    using Error::Error;
};

// Exact integer arithmetic only; wrapping would silently corrupt signs.
struct OverflowError : Error {
    using Error::Error;
};

// A "cannot happen" condition (e.g. composite and closed-form disagree).
struct InternalError : Error {
    using Error::Error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

// An integer combination of basis identifiers in a single degree.
// Zero coefficients are never stored.
class ChainElement {
public:
    ChainElement() = default;
    explicit ChainElement(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }

    const std::map<Id, Int>& terms() const { return terms_; }

    Int coef(const Id& id) const {
        auto it = terms_.find(id);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Id& id, Int c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(id, 0);
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }

    ChainElement& operator+=(const ChainElement& other) {
        require_compatible(other);
        for (const auto& [id, c] : other.terms_)
            add_term(id, c);
        return *this;
    }

    ChainElement& operator-=(const ChainElement& other) {
        require_compatible(other);
        for (const auto& [id, c] : other.terms_)
            add_term(id, checked_mul(c, -1));
        return *this;
    }

    ChainElement& operator*=(Int k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [id, c] : terms_)
            c = checked_mul(c, k);
        return *this;
    }

    friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
    friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
    friend ChainElement operator*(Int k, ChainElement a) { return a *= k; }

    ChainElement operator-() const {
        ChainElement r(*this);
        r *= -1;
        return r;
    }

    bool operator==(const ChainElement& other) const {
        return terms_ == other.terms_ && (is_zero() || other.is_zero() || degree_ == other.degree_);
    }
    bool operator!=(const ChainElement& other) const { return !(*this == other); }

    // All stored coefficients strictly positive; 0 counts as positive.
    bool is_positive() const {
        for (const auto& [id, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    std::set<Id> support() const {
        std::set<Id> s;
        for (const auto& [id, c] : terms_)
            s.insert(id);
        return s;
    }

    static ChainElement single(int degree, const Id& id, Int c = 1) {
        ChainElement x(degree);
        x.add_term(id, c);
        return x;
    }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [id, c] : terms_) {
            if (!first)
                out += c >= 0 ? "+" : "";
            out += (c == 1) ? "" : (c == -1 ? "-" : std::to_string(c) + "*");
            out += "(" + id + ")";
            first = false;
        }
        return out;
    }

private:
    void require_compatible(const ChainElement& other) {
        if (!is_zero() && !other.is_zero() && degree_ != other.degree_)
            throw InternalError("degree mismatch in chain arithmetic: " + std::to_string(degree_) +
                                " vs " + std::to_string(other.degree_));
        if (is_zero() && !other.is_zero())
            degree_ = other.degree_;
    }

    int degree_ = 0;
    std::map<Id, Int> terms_;
};

}  // namespace adc
