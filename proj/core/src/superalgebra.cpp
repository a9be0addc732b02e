#include "phicoord/superalgebra.hpp"

#include "phicoord/errors.hpp"

namespace phicoord {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::string format_vec(const DifferentialSuperalgebra& a, const Vec& v)
{
    std::string out;
    for (int i = 0; i < a.dim; ++i) {
        const Rat& c = v[sz(i)];
        if (c.is_zero()) {
            continue;
        }
        const bool neg = c.sign() < 0;
        const Rat mag = neg ? -c : c;
        std::string term = mag == Rat(1) ? a.labels[sz(i)] : mag.str() + "*" + a.labels[sz(i)];
        if (out.empty()) {
            out = neg ? "-" + term : term;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

std::string triple(const DifferentialSuperalgebra& a, std::initializer_list<int> idx)
{
    std::string out;
    for (int i : idx) {
        out += (out.empty() ? "" : ",") + a.labels[sz(i)];
    }
    return "(" + out + ")";
}

Vec scaled(Vec a, const Rat& c)
{
    for (auto& x : a) {
        x *= c;
    }
    return a;
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

int resolve(const DifferentialSuperalgebra& a, const nlohmann::json& j)
{
    if (j.is_string()) {
        const int i = a.index_of(j.get<std::string>());
        if (i < 0) {
            throw ParseError("unknown basis label '" + j.get<std::string>() + "'");
        }
        return i;
    }
    const int i = j.get<int>();
    if (i < 0 || i >= a.dim) {
        throw ParseError("basis index " + std::to_string(i) + " out of range");
    }
    return i;
}

Rat rat_of(const nlohmann::json& j)
{
    if (j.is_number_integer()) {
        return Rat(j.get<long>());
    }
    return Rat::parse(j.get<std::string>());
}

} // namespace

DifferentialSuperalgebra::DifferentialSuperalgebra(int n)
    : dim(n), parity(sz(n), 0), unit(sz(n), Rat(0)), mul(sz(n * n * n), Rat(0)), der(n, n, Rat(0))
{
    for (int i = 0; i < n; ++i) {
        labels.push_back("e" + std::to_string(i));
    }
}

Rat& DifferentialSuperalgebra::m(int i, int j, int k)
{
    return mul.at(sz((i * dim + j) * dim + k));
}

const Rat& DifferentialSuperalgebra::m(int i, int j, int k) const
{
    return mul.at(sz((i * dim + j) * dim + k));
}

Vec DifferentialSuperalgebra::product(const Vec& a, const Vec& b) const
{
    Vec out(sz(dim), Rat(0));
    for (int i = 0; i < dim; ++i) {
        if (a[sz(i)].is_zero()) {
            continue;
        }
        for (int j = 0; j < dim; ++j) {
            if (b[sz(j)].is_zero()) {
                continue;
            }
            const Rat c = a[sz(i)] * b[sz(j)];
            for (int k = 0; k < dim; ++k) {
                out[sz(k)] += c * m(i, j, k);
            }
        }
    }
    return out;
}

RatMatrix DifferentialSuperalgebra::left(const Vec& a) const
{
    RatMatrix out(dim, dim, Rat(0));
    for (int j = 0; j < dim; ++j) {
        const Vec col = product(a, basis_vector(dim, j));
        for (int k = 0; k < dim; ++k) {
            out(k, j) = col[sz(k)];
        }
    }
    return out;
}

int DifferentialSuperalgebra::parity_of(const Vec& a) const
{
    int p = -1;
    for (int i = 0; i < dim; ++i) {
        if (a[sz(i)].is_zero()) {
            continue;
        }
        if (p >= 0 && p != parity[sz(i)]) {
            return -1;
        }
        p = parity[sz(i)];
    }
    return p;
}

int DifferentialSuperalgebra::index_of(const std::string& label) const
{
    for (int i = 0; i < dim; ++i) {
        if (labels[sz(i)] == label) {
            return i;
        }
    }
    return -1;
}

Report validate(const DifferentialSuperalgebra& a)
{
    Report r;
    r.name = "superalgebra";
    const int n = a.dim;
    auto fail = [&](const std::string& law, const std::string& where, const Vec& lhs, const Vec& rhs) {
        if (r.witnesses.size() < 8) {
            r.fail({where, format_vec(a, lhs), format_vec(a, rhs), law});
        } else {
            r.status = Status::fail;
        }
    };
    if (n <= 0 || a.parity.size() != sz(n) || a.unit.size() != sz(n) || a.mul.size() != sz(n * n * n) ||
        a.der.rows() != n || a.der.cols() != n || a.labels.size() != sz(n)) {
        throw DomainError("structure data does not match the dimension");
    }
    for (int p : a.parity) {
        if (p != 0 && p != 1) {
            throw DomainError("parities must be 0 or 1");
        }
    }
    if (a.parity_of(a.unit) != 0) {
        fail("unit is even", "(1)", a.unit, a.unit);
    }
    for (int i = 0; i < n; ++i) {
        const Vec ei = basis_vector(n, i);
        if (a.product(a.unit, ei) != ei) {
            fail("left unit", triple(a, {i}), a.product(a.unit, ei), ei);
        }
        if (a.product(ei, a.unit) != ei) {
            fail("right unit", triple(a, {i}), a.product(ei, a.unit), ei);
        }
        const Vec di = a.derive(ei);
        if (!is_zero(di) && a.parity_of(di) != a.parity[sz(i)]) {
            fail("derivation preserves parity", triple(a, {i}), di, di);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Vec ei = basis_vector(n, i);
            const Vec ej = basis_vector(n, j);
            const Vec ij = a.product(ei, ej);
            const int want = (a.parity[sz(i)] + a.parity[sz(j)]) % 2;
            if (!is_zero(ij) && a.parity_of(ij) != want) {
                fail("product respects parity", triple(a, {i, j}), ij, ij);
            }
            const int sign = a.parity[sz(i)] * a.parity[sz(j)] == 1 ? -1 : 1;
            const Vec ji = scaled(a.product(ej, ei), Rat(sign));
            if (ij != ji) {
                fail("supercommutativity", triple(a, {i, j}), ij, ji);
            }
            const Vec leib = a.derive(ij);
            Vec rhs = a.product(a.derive(ei), ej);
            const Vec second = a.product(ei, a.derive(ej));
            for (int k = 0; k < n; ++k) {
                rhs[sz(k)] += second[sz(k)];
            }
            if (leib != rhs) {
                fail("Leibniz rule", triple(a, {i, j}), leib, rhs);
            }
            for (int k = 0; k < n; ++k) {
                const Vec ek = basis_vector(n, k);
                const Vec lhs = a.product(ij, ek);
                const Vec rhs3 = a.product(ei, a.product(ej, ek));
                if (lhs != rhs3) {
                    fail("associativity", triple(a, {i, j, k}), lhs, rhs3);
                }
            }
        }
    }
    RatMatrix power = identity_matrix(n);
    for (int k = 0; k < n; ++k) {
        power = multiply(a.der, power, Rat(0));
    }
    for (int i = 0; i < n; ++i) {
        const Vec col = column(power, i);
        if (!is_zero(col)) {
            fail("derivation is nilpotent", triple(a, {i}), col, Vec(sz(n), Rat(0)));
            break;
        }
    }
    return r;
}

DifferentialSuperalgebra truncated_polynomial(int m)
{
    if (m < 1) {
        throw DomainError("Q[t]/(t^m) needs m >= 1");
    }
    DifferentialSuperalgebra a(m);
    for (int i = 0; i < m; ++i) {
        a.labels[sz(i)] = i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i));
        for (int j = 0; i + j < m; ++j) {
            a.m(i, j, i + j) = Rat(1);
        }
        if (i > 0 && i + 1 < m) {
            a.der(i + 1, i) = Rat(i);
        }
    }
    a.unit[0] = Rat(1);
    return a;
}

DifferentialSuperalgebra grassmann2()
{
    DifferentialSuperalgebra a(4);
    a.labels = {"1", "theta1", "theta2", "theta1theta2"};
    a.parity = {0, 1, 1, 0};
    a.unit[0] = Rat(1);
    for (int i = 0; i < 4; ++i) {
        a.m(0, i, i) = Rat(1);
        a.m(i, 0, i) = Rat(1);
    }
    a.m(1, 2, 3) = Rat(1);
    a.m(2, 1, 3) = Rat(-1);
    a.der(2, 1) = Rat(1);
    return a;
}

DifferentialSuperalgebra algebra_from_json(const nlohmann::json& j)
{
    try {
        const int n = j.at("dim").get<int>();
        if (n < 1 || n > 64) {
            throw ParseError("dim must be between 1 and 64");
        }
        DifferentialSuperalgebra a(n);
        if (j.contains("labels")) {
            a.labels = j.at("labels").get<std::vector<std::string>>();
            if (a.labels.size() != sz(n)) {
                throw ParseError("labels must list dim entries");
            }
        }
        if (j.contains("parity")) {
            a.parity = j.at("parity").get<std::vector<int>>();
            if (a.parity.size() != sz(n)) {
                throw ParseError("parity must list dim entries");
            }
            for (int p : a.parity) {
                if (p != 0 && p != 1) {
                    throw ParseError("parities must be 0 or 1");
                }
            }
        }
        for (const auto& e : j.at("unit")) {
            a.unit[sz(resolve(a, e.at(0)))] += rat_of(e.at(1));
        }
        for (const auto& e : j.at("mul")) {
            a.m(resolve(a, e.at(0)), resolve(a, e.at(1)), resolve(a, e.at(2))) += rat_of(e.at(3));
        }
        if (j.contains("der")) {
            for (const auto& e : j.at("der")) {
                a.der(resolve(a, e.at(1)), resolve(a, e.at(0))) += rat_of(e.at(2));
            }
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed algebra instance: ") + e.what());
    }
}

nlohmann::json to_json(const DifferentialSuperalgebra& a)
{
    nlohmann::json unit = nlohmann::json::array();
    for (int i = 0; i < a.dim; ++i) {
        if (!a.unit[sz(i)].is_zero()) {
            unit.push_back({a.labels[sz(i)], a.unit[sz(i)].str()});
        }
    }
    nlohmann::json mul = nlohmann::json::array();
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            for (int k = 0; k < a.dim; ++k) {
                if (!a.m(i, j, k).is_zero()) {
                    mul.push_back({a.labels[sz(i)], a.labels[sz(j)], a.labels[sz(k)], a.m(i, j, k).str()});
                }
            }
        }
    }
    nlohmann::json der = nlohmann::json::array();
    for (int i = 0; i < a.dim; ++i) {
        for (int k = 0; k < a.dim; ++k) {
            if (!a.der(k, i).is_zero()) {
                der.push_back({a.labels[sz(i)], a.labels[sz(k)], a.der(k, i).str()});
            }
        }
    }
    return {{"dim", a.dim}, {"labels", a.labels}, {"parity", a.parity}, {"unit", unit}, {"mul", mul}, {"der", der}};
}

} // namespace phicoord
