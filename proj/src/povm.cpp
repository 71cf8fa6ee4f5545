#include "entswap/povm.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace entswap {

void validate(const Povm& p) {
    if (p.elements.empty())
        throw PovmValidationError(PovmDefect::NotComplete, 0, "povm: no elements");
    ComplexMatrix sum(4, 4);
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const ComplexMatrix& e = p.elements[i];
        if (e.rows() != 4 || e.cols() != 4)
            throw PovmValidationError(PovmDefect::NotHermitian, i,
                                      "povm: element " + std::to_string(i) + " is not 4x4");
        if (e.hermiticity_defect() > 1e-10)
            throw PovmValidationError(PovmDefect::NotHermitian, i,
                                      "povm: element " + std::to_string(i) + " not Hermitian within 1e-10");
        const EigResult eig = hermitian_eig(e);
        if (eig.eigenvalues.front() < -1e-10)
            throw PovmValidationError(PovmDefect::NotPsd, i,
                                      "povm: element " + std::to_string(i) + " has eigenvalue below -1e-10");
        sum += e;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(4)) > 1e-9)
        throw PovmValidationError(PovmDefect::NotComplete, p.elements.size(),
                                  "povm: elements do not sum to identity within 1e-9");
}

Povm bell_measurement() {
    Povm p;
    for (int i = 1; i <= 4; ++i) p.elements.push_back(outer(bell_vector(i)));
    return p;
}

Povm com_from_basis(const std::array<StateVector, 4>& basis) {
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
            const cdouble ip = inner_product(basis[k], basis[l]);
            const cdouble expected = (k == l) ? 1.0 : 0.0;
            if (std::abs(ip - expected) > 1e-10)
                throw NotOrthonormal("com_from_basis: vectors " + std::to_string(k) + "," +
                                     std::to_string(l) + " not orthonormal within 1e-10");
        }
    Povm p;
    for (const StateVector& v : basis) p.elements.push_back(outer(v));
    return p;
}

Povm white_noise_family(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw BadLambda("white_noise_family: lambda must be in [0,1]");
    Povm p;
    for (int i = 1; i <= 4; ++i) {
        ComplexMatrix e = lambda * outer(bell_vector(i));
        e += (1.0 - lambda) * 0.25 * ComplexMatrix::identity(4);
        p.elements.push_back(e);
    }
    return p;
}

Povm rank2_family(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw BadLambda("rank2_family: lambda must be in [0,1]");
    const int partner[4] = {2, 1, 4, 3};
    Povm p;
    for (int i = 1; i <= 4; ++i) {
        ComplexMatrix e = lambda * outer(bell_vector(i));
        e += (1.0 - lambda) * outer(bell_vector(partner[i - 1]));
        p.elements.push_back(e);
    }
    return p;
}

void validate_spec(const BellDiagonalPovmSpec& spec) {
    if (!(spec.lambda >= 0.0 && spec.lambda <= 1.0))
        throw BadSpec("bell_diagonal_family: lambda must be in [0,1]");
    for (int l = 0; l < 4; ++l) {
        double col = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double qil = spec.q[i][l];
            if (!(qil >= 0.0 && qil <= 1.0))
                throw BadSpec("bell_diagonal_family: q entries must be in [0,1]");
            col += qil;
        }
        if (std::abs(col - 1.0) > 1e-10)
            throw BadSpec("bell_diagonal_family: q column " + std::to_string(l) +
                          " sums to " + std::to_string(col) + ", expected 1");
    }
}

Povm bell_diagonal_family(const BellDiagonalPovmSpec& spec) {
    validate_spec(spec);
    Povm p;
    for (int i = 0; i < 4; ++i) {
        ComplexMatrix e(4, 4);
        for (int l = 0; l < 4; ++l) {
            const double w = (l == i) ? spec.lambda + (1.0 - spec.lambda) * spec.q[i][i]
                                      : (1.0 - spec.lambda) * spec.q[i][l];
            e += w * outer(bell_vector(l + 1));
        }
        p.elements.push_back(e);
    }
    return p;
}

namespace {

nlohmann::json element_to_json(const ComplexMatrix& e) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < 4; ++c)
            row.push_back({e(r, c).real(), e(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

ComplexMatrix element_from_json(const nlohmann::json& rows, std::size_t index) {
    const auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("povm element " + std::to_string(index) + ": " + why);
    };
    if (!rows.is_array() || rows.size() != 4) throw fail("expected 4 rows");
    ComplexMatrix e(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 4)
            throw fail("row " + std::to_string(r) + " must have 4 entries");
        for (std::size_t c = 0; c < 4; ++c) {
            const auto& cell = rows[r][c];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
                throw fail("entry (" + std::to_string(r) + "," + std::to_string(c) +
                           ") must be a [re,im] number pair");
            e(r, c) = cdouble(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return e;
}

}  // namespace

std::string povm_to_json_string(const Povm& p) {
    nlohmann::json j;
    j["elements"] = nlohmann::json::array();
    for (const ComplexMatrix& e : p.elements) j["elements"].push_back(element_to_json(e));
    return j.dump(2);
}

Povm povm_from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("povm json: ") + err.what());
    }
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw ParseError("povm json: expected object with an \"elements\" array");
    Povm p;
    for (std::size_t i = 0; i < j["elements"].size(); ++i)
        p.elements.push_back(element_from_json(j["elements"][i], i));
    validate(p);
    return p;
}

void povm_to_file(const Povm& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("povm_to_file: cannot open " + path);
    out << povm_to_json_string(p) << '\n';
    if (!out) throw IoError("povm_to_file: write failed for " + path);
}

Povm povm_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("povm_from_file: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return povm_from_json_string(buf.str());
}

}  // namespace entswap
