#include "phicoord/series_io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "phicoord/errors.hpp"

namespace phicoord {

namespace {

std::string term_text(const Rat& c, const std::vector<std::pair<std::string, int>>& factors, bool first)
{
    std::string mono;
    for (const auto& [v, e] : factors) {
        if (e == 0) {
            continue;
        }
        if (!mono.empty()) {
            mono += "*";
        }
        mono += v;
        if (e != 1) {
            mono += "^" + std::to_string(e);
        }
    }
    const bool negative = c.sign() < 0;
    const Rat mag = negative ? -c : c;
    std::string body;
    if (mono.empty()) {
        body = mag.str();
    } else if (mag == Rat(1)) {
        body = mono;
    } else {
        body = mag.str() + "*" + mono;
    }
    if (first) {
        return negative ? "-" + body : body;
    }
    return negative ? " - " + body : " + " + body;
}

std::string power_text(std::string_view v, int n)
{
    return std::string(v) + (n == 1 ? "" : "^" + std::to_string(n));
}

// One parsed summand: coefficient times a monomial, or an order marker O(v^n)
// optionally multiplied by a monomial.
struct ParsedTerm {
    Rat coeff{1};
    std::map<std::string, int> exps;
    std::optional<std::pair<std::string, int>> big_o;
};

class TermParser {
public:
    explicit TermParser(std::string_view s) : s_(s) {}

    std::vector<ParsedTerm> parse()
    {
        std::vector<ParsedTerm> out;
        skip();
        if (pos_ == s_.size()) {
            throw ParseError("empty series text");
        }
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) {
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            ParsedTerm t = term();
            t.coeff *= Rat(sign);
            out.push_back(std::move(t));
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    int integer()
    {
        skip();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        const std::string d = digits();
        if (d.size() > 9) {
            fail("exponent too large");
        }
        const int v = std::stoi(d);
        return neg ? -v : v;
    }

    std::string identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    void factor(ParsedTerm& t)
    {
        skip();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (peek() == '/') {
                ++pos_;
                num += "/" + digits();
            }
            t.coeff *= Rat::parse(num);
            return;
        }
        if (c == 'O' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
            pos_ += 2;
            skip();
            std::string v = identifier();
            if (v.empty()) {
                fail("expected variable inside O(...)");
            }
            skip();
            int n = 1;
            if (peek() == '^') {
                ++pos_;
                n = integer();
            }
            skip();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            if (t.big_o) {
                fail("two order markers in one term");
            }
            t.big_o = std::make_pair(v, n);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string v = identifier();
            skip();
            int e = 1;
            if (peek() == '^') {
                ++pos_;
                e = integer();
            }
            t.exps[v] += e;
            return;
        }
        fail("unexpected character");
    }

    ParsedTerm term()
    {
        ParsedTerm t;
        factor(t);
        while (true) {
            skip();
            if (peek() != '*') {
                break;
            }
            ++pos_;
            factor(t);
        }
        return t;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

void require_vars(const ParsedTerm& t, std::initializer_list<std::string_view> allowed)
{
    auto ok = [&](const std::string& v) {
        for (auto a : allowed) {
            if (v == a) {
                return true;
            }
        }
        return false;
    };
    for (const auto& [v, e] : t.exps) {
        if (!ok(v)) {
            throw ParseError("unknown variable '" + v + "'");
        }
    }
    if (t.big_o && !ok(t.big_o->first)) {
        throw ParseError("unknown variable '" + t.big_o->first + "' in order marker");
    }
}

int exponent_of(const ParsedTerm& t, std::string_view v)
{
    auto it = t.exps.find(std::string(v));
    return it == t.exps.end() ? 0 : it->second;
}

std::string rat_json(const Rat& r) { return r.str(); }

} // namespace

std::string format(const Laurent& l, std::string_view var)
{
    std::string out;
    for (const auto& [e, c] : l.terms()) {
        out += term_text(c, {{std::string(var), e}}, out.empty());
    }
    if (!l.is_exact()) {
        const std::string o = "O(" + power_text(var, l.hi() + 1) + ")";
        out += out.empty() ? o : " + " + o;
    }
    return out.empty() ? "0" : out;
}

std::string format(const TruncatedSeries& s, std::string_view var)
{
    return format(s.to_laurent(), var);
}

std::string format(const Bivariate& b, std::string_view x, std::string_view z)
{
    std::string out;
    auto append = [&](const std::string& piece) {
        out += out.empty() ? piece : " + " + piece;
    };
    for (int k = 0; k <= b.zorder(); ++k) {
        for (const auto& [e, c] : b[k].terms()) {
            out += term_text(c, {{std::string(x), e}, {std::string(z), k}}, out.empty());
        }
        if (!b[k].is_exact()) {
            std::string o = "O(" + power_text(x, b[k].hi() + 1) + ")";
            if (k > 0) {
                o += "*" + power_text(z, k);
            }
            append(o);
        }
    }
    append("O(" + power_text(z, b.zorder() + 1) + ")");
    return out;
}

std::string format(const MultiLaurent& m)
{
    std::string out;
    for (const auto& [e, c] : m.terms()) {
        std::vector<std::pair<std::string, int>> f;
        for (int s = 0; s < m.nvars(); ++s) {
            f.emplace_back(m.names()[static_cast<std::size_t>(s)], e[static_cast<std::size_t>(s)]);
        }
        out += term_text(c, f, out.empty());
    }
    if (out.empty()) {
        out = "0";
    }
    if (!m.is_exact()) {
        out += "  [";
        for (int s = 0; s < m.nvars(); ++s) {
            const Window& w = m.windows()[static_cast<std::size_t>(s)];
            if (s > 0) {
                out += ", ";
            }
            out += m.names()[static_cast<std::size_t>(s)] + ": ";
            out += w.is_all() ? std::string("all") : std::to_string(w.lo) + ".." + std::to_string(w.hi);
        }
        out += "]";
    }
    return out;
}

Laurent parse_laurent(std::string_view text, std::string_view var)
{
    std::map<int, Rat> terms;
    int hi = kExact;
    for (const auto& t : TermParser(text).parse()) {
        require_vars(t, {var});
        if (t.big_o) {
            if (!t.exps.empty() || t.coeff != Rat(1)) {
                throw ParseError("order marker must stand alone in a univariate series");
            }
            hi = std::min(hi, t.big_o->second - 1);
            continue;
        }
        terms[exponent_of(t, var)] += t.coeff;
    }
    return Laurent(std::move(terms), hi);
}

TruncatedSeries parse_truncated(std::string_view text, int order, std::string_view var)
{
    const Laurent l = parse_laurent(text, var);
    if (l.is_exact() && order < 0) {
        throw ParseError("power series text needs an O(" + std::string(var) + "^n) term or an explicit order");
    }
    return TruncatedSeries::from_laurent(l, l.is_exact() ? order : std::min(l.hi(), order < 0 ? l.hi() : order));
}

Bivariate parse_bivariate(std::string_view text, int zorder, std::string_view x, std::string_view z)
{
    std::map<int, std::map<int, Rat>> coeffs;
    std::map<int, int> his;
    std::optional<int> parsed_order;
    int max_z = 0;
    for (const auto& t : TermParser(text).parse()) {
        require_vars(t, {x, z});
        const int k = exponent_of(t, z);
        if (k < 0) {
            throw ParseError("negative power of " + std::string(z));
        }
        if (t.big_o) {
            if (t.coeff != Rat(1) || exponent_of(t, x) != 0) {
                throw ParseError("malformed order marker term");
            }
            if (t.big_o->first == z) {
                if (k != 0) {
                    throw ParseError("O(z^n) cannot carry a z factor");
                }
                parsed_order = std::min(parsed_order.value_or(kExact), t.big_o->second - 1);
            } else {
                auto [it, inserted] = his.try_emplace(k, t.big_o->second - 1);
                if (!inserted) {
                    it->second = std::min(it->second, t.big_o->second - 1);
                }
                max_z = std::max(max_z, k);
            }
            continue;
        }
        coeffs[k][exponent_of(t, x)] += t.coeff;
        max_z = std::max(max_z, k);
    }
    const int n = parsed_order ? *parsed_order : (zorder >= 0 ? zorder : max_z);
    if (n < 0) {
        throw ParseError("z-order must be nonnegative");
    }
    std::vector<Laurent> out(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        auto hit = his.find(k);
        auto cit = coeffs.find(k);
        out[static_cast<std::size_t>(k)] =
            Laurent(cit == coeffs.end() ? std::map<int, Rat>{} : cit->second, hit == his.end() ? kExact : hit->second);
    }
    return Bivariate(std::move(out));
}

nlohmann::json to_json(const Laurent& l, std::string_view var)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : l.terms()) {
        terms.push_back({e, rat_json(c)});
    }
    nlohmann::json j{{"var", var}, {"terms", terms}};
    j["hi"] = l.is_exact() ? nlohmann::json(nullptr) : nlohmann::json(l.hi());
    return j;
}

nlohmann::json to_json(const TruncatedSeries& s, std::string_view var)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(rat_json(c));
    }
    return {{"var", var}, {"order", s.order()}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const Bivariate& b, std::string_view x, std::string_view z)
{
    nlohmann::json zc = nlohmann::json::array();
    for (const auto& l : b.zcoeffs()) {
        zc.push_back(to_json(l, x));
    }
    return {{"vars", {x, z}}, {"zorder", b.zorder()}, {"zcoeffs", zc}};
}

nlohmann::json to_json(const MultiLaurent& m)
{
    nlohmann::json windows = nlohmann::json::array();
    for (int s = 0; s < m.nvars(); ++s) {
        const Window& w = m.windows()[static_cast<std::size_t>(s)];
        windows.push_back(w.is_all() ? nlohmann::json(nullptr) : nlohmann::json::array({w.lo, w.hi}));
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : m.terms()) {
        nlohmann::json ex = nlohmann::json::array();
        for (int s = 0; s < m.nvars(); ++s) {
            ex.push_back(e[static_cast<std::size_t>(s)]);
        }
        terms.push_back({ex, rat_json(c)});
    }
    return {{"vars", m.names()}, {"windows", windows}, {"terms", terms}};
}

Laurent laurent_from_json(const nlohmann::json& j)
{
    try {
        std::map<int, Rat> terms;
        for (const auto& t : j.at("terms")) {
            terms[t.at(0).get<int>()] += Rat::parse(t.at(1).get<std::string>());
        }
        const auto& hi = j.at("hi");
        return Laurent(std::move(terms), hi.is_null() ? kExact : hi.get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed Laurent series record: ") + e.what());
    }
}

TruncatedSeries truncated_from_json(const nlohmann::json& j)
{
    try {
        std::vector<Rat> c;
        for (const auto& v : j.at("coeffs")) {
            c.push_back(Rat::parse(v.get<std::string>()));
        }
        if (static_cast<int>(c.size()) != j.at("order").get<int>() + 1) {
            throw ParseError("coefficient count does not match order");
        }
        return TruncatedSeries(std::move(c));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed power series record: ") + e.what());
    }
}

Bivariate bivariate_from_json(const nlohmann::json& j)
{
    try {
        std::vector<Laurent> z;
        for (const auto& l : j.at("zcoeffs")) {
            z.push_back(laurent_from_json(l));
        }
        if (static_cast<int>(z.size()) != j.at("zorder").get<int>() + 1) {
            throw ParseError("z-coefficient count does not match zorder");
        }
        return Bivariate(std::move(z));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed bivariate series record: ") + e.what());
    }
}

MultiLaurent multi_from_json(const nlohmann::json& j)
{
    try {
        auto names = j.at("vars").get<std::vector<std::string>>();
        std::array<Window, 3> windows{};
        const auto& wj = j.at("windows");
        for (std::size_t s = 0; s < names.size(); ++s) {
            if (!wj.at(s).is_null()) {
                windows[s] = {wj.at(s).at(0).get<int>(), wj.at(s).at(1).get<int>()};
            }
        }
        MultiLaurent m(names, windows);
        for (const auto& t : j.at("terms")) {
            Exponents e{0, 0, 0};
            for (std::size_t s = 0; s < names.size(); ++s) {
                e[s] = t.at(0).at(s).get<int>();
            }
            m.add_term(e, Rat::parse(t.at(1).get<std::string>()));
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed multivariate record: ") + e.what());
    }
}

} // namespace phicoord
