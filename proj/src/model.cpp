#include "perispec/model.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "perispec/errors.hpp"

namespace perispec {

using nlohmann::json;

const char* to_string(OperatorClass cls) {
    switch (cls) {
        case OperatorClass::JacobiBlockJacobi: return "jacobi-block-jacobi";
        case OperatorClass::PartialDifference: return "partial-difference";
        case OperatorClass::Schroedinger: return "schroedinger";
    }
    return "?";
}

OperatorClass PeriodicCoefficients::classify() const {
    const bool alpha_zero = (alpha.array() == Complex(0.0)).all();
    if (!alpha_zero) return OperatorClass::JacobiBlockJacobi;
    const bool a_one = (a.array() == 1.0).all();
    const bool b_one = (b.array() == Complex(1.0)).all();
    if (a_one && b_one) return OperatorClass::Schroedinger;
    return OperatorClass::PartialDifference;
}

double PeriodicCoefficients::max_abs() const {
    double m = a.cwiseAbs().maxCoeff();
    m = std::max(m, c.cwiseAbs().maxCoeff());
    m = std::max(m, alpha.cwiseAbs().maxCoeff());
    m = std::max(m, b.cwiseAbs().maxCoeff());
    return m;
}

namespace {

template <class Array>
void check_array(const Array& arr, int p1, int p2, const char* name) {
    if (arr.rows() != p1 || arr.cols() != p2) {
        throw ShapeMismatch(std::string(name) + ": expected " +
                            std::to_string(p1) + "x" + std::to_string(p2) +
                            ", got " + std::to_string(arr.rows()) + "x" +
                            std::to_string(arr.cols()));
    }
    if (!arr.allFinite()) {
        throw NonFiniteEntry(std::string(name) + " contains a non-finite entry");
    }
}

void check_periods(int p1, int p2) {
    if (p1 < 2 || p2 < 2) {
        throw UnsupportedPeriod("periods must satisfy p1 >= 2 and p2 >= 2, got (" +
                                std::to_string(p1) + "," + std::to_string(p2) + ")");
    }
}

} // namespace

PeriodicCoefficients make_coefficients(int p1, int p2, RealArray a,
                                       ComplexArray alpha, RealArray c,
                                       ComplexArray b) {
    check_periods(p1, p2);
    check_array(a, p1, p2, "a");
    check_array(alpha, p1, p2, "alpha");
    check_array(c, p1, p2, "c");
    check_array(b, p1, p2, "b");
    return PeriodicCoefficients{p1, p2, std::move(a), std::move(alpha),
                                std::move(c), std::move(b)};
}

PeriodicCoefficients schroedinger_potential(int p1, int p2, RealArray c) {
    check_periods(p1, p2);
    check_array(c, p1, p2, "c");
    return PeriodicCoefficients{p1, p2, RealArray::Ones(p1, p2),
                                ComplexArray::Zero(p1, p2), std::move(c),
                                ComplexArray::Ones(p1, p2)};
}

namespace {

int mod(int k, int p) {
    int r = k % p;
    return r < 0 ? r + p : r;
}

template <class Array>
Array shifted(const Array& arr, int m, int n, int p1, int p2) {
    Array out(p1, p2);
    for (int q = 0; q < p1; ++q)
        for (int r = 0; r < p2; ++r)
            out(q, r) = arr(mod(q + m, p1), mod(r + n, p2));
    return out;
}

} // namespace

PeriodicCoefficients shift_entries(const PeriodicCoefficients& x, int m, int n) {
    return PeriodicCoefficients{
        x.p1, x.p2,
        shifted(x.a, m, n, x.p1, x.p2),
        shifted(x.alpha, m, n, x.p1, x.p2),
        shifted(x.c, m, n, x.p1, x.p2),
        shifted(x.b, m, n, x.p1, x.p2)};
}

PeriodicCoefficients random_coefficients(int p1, int p2, std::uint64_t seed,
                                         double max_abs) {
    check_periods(p1, p2);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-max_abs, max_abs);
    RealArray a(p1, p2), c(p1, p2);
    ComplexArray alpha(p1, p2), b(p1, p2);
    for (int q = 0; q < p1; ++q)
        for (int r = 0; r < p2; ++r) {
            a(q, r) = u(rng);
            c(q, r) = u(rng);
            alpha(q, r) = Complex(u(rng), u(rng));
            b(q, r) = Complex(u(rng), u(rng));
        }
    return PeriodicCoefficients{p1, p2, std::move(a), std::move(alpha),
                                std::move(c), std::move(b)};
}

namespace {

json real_array_to_json(const RealArray& arr) {
    json rows = json::array();
    for (int q = 0; q < arr.rows(); ++q) {
        json row = json::array();
        for (int r = 0; r < arr.cols(); ++r) row.push_back(arr(q, r));
        rows.push_back(std::move(row));
    }
    return rows;
}

json complex_array_to_json(const ComplexArray& arr) {
    json rows = json::array();
    for (int q = 0; q < arr.rows(); ++q) {
        json row = json::array();
        for (int r = 0; r < arr.cols(); ++r)
            row.push_back({arr(q, r).real(), arr(q, r).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

RealArray real_array_from_json(const json& j, int p1, int p2, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != p1)
        throw ParseError(std::string(name) + ": expected " + std::to_string(p1) + " rows");
    RealArray arr(p1, p2);
    for (int q = 0; q < p1; ++q) {
        const json& row = j[q];
        if (!row.is_array() || static_cast<int>(row.size()) != p2)
            throw ParseError(std::string(name) + ": row " + std::to_string(q) +
                             " must have " + std::to_string(p2) + " entries");
        for (int r = 0; r < p2; ++r) {
            if (!row[r].is_number())
                throw ParseError(std::string(name) + ": entries must be numbers");
            arr(q, r) = row[r].get<double>();
        }
    }
    return arr;
}

ComplexArray complex_array_from_json(const json& j, int p1, int p2, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != p1)
        throw ParseError(std::string(name) + ": expected " + std::to_string(p1) + " rows");
    ComplexArray arr(p1, p2);
    for (int q = 0; q < p1; ++q) {
        const json& row = j[q];
        if (!row.is_array() || static_cast<int>(row.size()) != p2)
            throw ParseError(std::string(name) + ": row " + std::to_string(q) +
                             " must have " + std::to_string(p2) + " entries");
        for (int r = 0; r < p2; ++r) {
            const json& e = row[r];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError(std::string(name) + ": entries must be [re, im] pairs");
            arr(q, r) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return arr;
}

} // namespace

std::string to_json_string(const PeriodicCoefficients& x) {
    json j;
    j["p1"] = x.p1;
    j["p2"] = x.p2;
    if (x.classify() == OperatorClass::Schroedinger) {
        j["schroedinger"] = true;
        j["c"] = real_array_to_json(x.c);
    } else {
        j["a"] = real_array_to_json(x.a);
        j["alpha"] = complex_array_to_json(x.alpha);
        j["c"] = real_array_to_json(x.c);
        j["b"] = complex_array_to_json(x.b);
    }
    return j.dump(2);
}

PeriodicCoefficients coefficients_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("p1") || !j.contains("p2") || !j["p1"].is_number_integer() ||
        !j["p2"].is_number_integer())
        throw ParseError("config must contain integer fields p1, p2");
    const int p1 = j["p1"].get<int>();
    const int p2 = j["p2"].get<int>();
    check_periods(p1, p2);
    if (!j.contains("c")) throw ParseError("config must contain field c");
    RealArray c = real_array_from_json(j["c"], p1, p2, "c");
    if (j.value("schroedinger", false)) {
        return schroedinger_potential(p1, p2, std::move(c));
    }
    if (!j.contains("a") || !j.contains("alpha") || !j.contains("b"))
        throw ParseError("config must contain a, alpha, c, b (or schroedinger shorthand)");
    return make_coefficients(p1, p2,
                             real_array_from_json(j["a"], p1, p2, "a"),
                             complex_array_from_json(j["alpha"], p1, p2, "alpha"),
                             std::move(c),
                             complex_array_from_json(j["b"], p1, p2, "b"));
}

PeriodicCoefficients load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return coefficients_from_json(ss.str());
}

} // namespace perispec
