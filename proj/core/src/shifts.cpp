#include <divcor/shifts.hpp>

#include <algorithm>
#include <sstream>

namespace divcor {

namespace {

// Strictly decimal signed integer: cpp_int's string constructor would read a
// leading zero as an octal prefix.
Integer parse_decimal(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("malformed integer '" + s + "'");
    Integer v = 0;
    for (char c : body) v = v * 10 + (c - '0');
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    std::string t = s;
    // trim
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    t.erase(t.begin(), std::find_if(t.begin(), t.end(), notspace));
    t.erase(std::find_if(t.rbegin(), t.rend(), notspace).base(), t.end());
    if (t.empty()) throw ConfigError("empty rational literal");
    try {
        auto slash = t.find('/');
        if (slash != std::string::npos) {
            Integer num = parse_decimal(t.substr(0, slash));
            Integer den = parse_decimal(t.substr(slash + 1));
            if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
            return Rational(num, den);
        }
        auto dot = t.find('.');
        if (dot != std::string::npos) {
            std::string digits = t.substr(0, dot) + t.substr(dot + 1);
            std::size_t frac_len = t.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+")
                throw ConfigError("malformed rational '" + s + "'");
            Integer num = parse_decimal(digits);
            Integer den = 1;
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rational(num, den);
        }
        return Rational(parse_decimal(t));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("malformed rational '" + s + "'");
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

ShiftSet::ShiftSet(std::vector<Rational> shifts, std::string label)
    : shifts_(std::move(shifts)), label_(std::move(label)) {
    const Rational half(1, 2);
    for (std::size_t i = 0; i < shifts_.size(); ++i) {
        if (abs(shifts_[i]) > half)
            throw TailBoundViolation("shift magnitude exceeds 1/2 in set '" + label_ + "'");
        for (std::size_t j = i + 1; j < shifts_.size(); ++j)
            if (shifts_[i] == shifts_[j])
                throw DuplicateShift("duplicate shift in set '" + label_ + "'");
    }
}

bool ShiftSet::contains(const Rational& r) const {
    return std::find(shifts_.begin(), shifts_.end(), r) != shifts_.end();
}

Rational ShiftSet::max_abs() const {
    Rational m = 0;
    for (const auto& s : shifts_) m = std::max(m, Rational(abs(s)));
    return m;
}

ShiftSet ShiftSet::adjusted(const Rational& alpha) const {
    std::vector<Rational> v;
    v.reserve(shifts_.size());
    for (const auto& s : shifts_) v.push_back(s + alpha);
    return ShiftSet(std::move(v), label_);
}

ShiftSet ShiftSet::with(const Rational& extra) const {
    std::vector<Rational> v = shifts_;
    v.push_back(extra);
    return ShiftSet(std::move(v), label_);
}

ShiftSet ShiftSet::negated() const {
    std::vector<Rational> v;
    v.reserve(shifts_.size());
    for (const auto& s : shifts_) v.push_back(-s);
    return ShiftSet(std::move(v), label_);
}

ShiftSet ShiftSet::unite(const ShiftSet& other) const {
    std::vector<Rational> v = shifts_;
    v.insert(v.end(), other.shifts_.begin(), other.shifts_.end());
    return ShiftSet(std::move(v), label_.empty() ? other.label_ : label_);
}

std::string ShiftSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < shifts_.size(); ++i) {
        if (i) os << ',';
        os << shifts_[i];
    }
    os << '}';
    return os.str();
}

void validate_swap(const ShiftSet& A, const ShiftSet& B, const SwapSelection& sel) {
    if (sel.u_indices.size() != sel.v_indices.size())
        throw InvalidArity("swap selections must have equal size");
    auto check = [](const std::vector<std::size_t>& idx, std::size_t n) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= n) throw InvalidArity("swap index out of range");
            if (i && idx[i] <= idx[i - 1]) throw InvalidArity("swap indices not increasing");
        }
    };
    check(sel.u_indices, A.size());
    check(sel.v_indices, B.size());
}

std::pair<ShiftSet, ShiftSet> swap_transform(const ShiftSet& A, const ShiftSet& B,
                                             const SwapSelection& sel) {
    validate_swap(A, B, sel);
    std::vector<Rational> a, b;
    std::vector<bool> in_u(A.size(), false), in_v(B.size(), false);
    for (auto i : sel.u_indices) in_u[i] = true;
    for (auto i : sel.v_indices) in_v[i] = true;
    for (std::size_t i = 0; i < A.size(); ++i)
        if (!in_u[i]) a.push_back(A[i]);
    for (auto i : sel.v_indices) a.push_back(-B[i]);
    for (std::size_t i = 0; i < B.size(); ++i)
        if (!in_v[i]) b.push_back(B[i]);
    for (auto i : sel.u_indices) b.push_back(-A[i]);
    return {ShiftSet(std::move(a), A.label()), ShiftSet(std::move(b), B.label())};
}

namespace {
void subsets_of_size(std::size_t k, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == r) { out.push_back(cur); return; }
        for (std::size_t i = start; i + (r - cur.size()) <= k; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}
} // namespace

std::vector<SwapSelection> enumerate_swaps(std::size_t k, std::size_t max_swaps) {
    std::vector<SwapSelection> out;
    for (std::size_t r = 0; r <= std::min(k, max_swaps); ++r) {
        std::vector<std::vector<std::size_t>> subs;
        subsets_of_size(k, r, subs);
        for (const auto& u : subs)
            for (const auto& v : subs)
                out.push_back(SwapSelection{u, v});
    }
    return out;
}

std::vector<OrderedPartition> enumerate_ordered_partitions(int k, int l) {
    if (l <= 0 || l > k) throw InvalidArity("need 1 <= l <= k for ordered partitions");
    std::vector<OrderedPartition> out;
    std::vector<int> label(k, 0);
    while (true) {
        std::vector<bool> hit(l, false);
        for (int x : label) hit[x] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
            out.push_back(OrderedPartition{label, l});
        int i = k - 1;
        while (i >= 0 && label[i] == l - 1) label[i--] = 0;
        if (i < 0) break;
        ++label[i];
    }
    return out;
}

Integer surjection_count(int k, int l) {
    // sum_i (-1)^i C(l,i) (l-i)^k
    Integer total = 0;
    Integer binom = 1;
    for (int i = 0; i <= l; ++i) {
        Integer pw = 1;
        for (int e = 0; e < k; ++e) pw *= (l - i);
        total += (i % 2 ? -binom : binom) * pw;
        binom = binom * (l - i) / (i + 1);
    }
    return total;
}

Integer common_denominator(const std::vector<const ShiftSet*>& sets) {
    Integer d = 1;
    for (const auto* s : sets)
        for (const auto& r : s->values())
            d = boost::multiprecision::lcm(d, denom(r));
    return d;
}

std::vector<std::vector<int>> compositions(int n, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

} // namespace divcor
