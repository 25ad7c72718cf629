#include "symbidisc/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace symbidisc {

namespace {

[[noreturn]] void parse_error(const std::string& what)
{
    throw Error(ErrorKind::Parse, what);
}

double finite_number(const nlohmann::json& j, const char* what)
{
    if (!j.is_number()) {
        parse_error(std::string(what) + " is not a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        parse_error(std::string(what) + " is not finite");
    }
    return v;
}

int nonnegative_int(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        parse_error(std::string("missing integer field \"") + key + "\"");
    }
    const long long v = j.at(key).get<long long>();
    if (v < 0 || v > (1LL << 20)) {
        parse_error(std::string("field \"") + key + "\" out of range");
    }
    return static_cast<int>(v);
}

}  // namespace

nlohmann::json complex_to_json(cplx z)
{
    return nlohmann::json::array({z.real(), z.imag()});
}

cplx complex_from_json(const nlohmann::json& j)
{
    if (j.is_number()) {
        return {finite_number(j, "entry"), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        parse_error("complex entry must be [re, im]");
    }
    return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

nlohmann::json matrix_to_json(const Matrix& m)
{
    nlohmann::json data = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back(complex_to_json(m(r, c)));
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) {
        parse_error("matrix document must be an object");
    }
    const int rows = nonnegative_int(j, "rows");
    const int cols = nonnegative_int(j, "cols");
    if (!j.contains("data") || !j.at("data").is_array()) {
        parse_error("missing array field \"data\"");
    }
    const auto& data = j.at("data");
    if (data.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        std::ostringstream os;
        os << "data has " << data.size() << " entries, expected " << rows << "x" << cols;
        parse_error(os.str());
    }
    Matrix m(rows, cols);
    std::size_t i = 0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            m(r, c) = complex_from_json(data[i++]);
        }
    }
    return m;
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        parse_error("cannot open " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        parse_error(path + ": " + e.what());
    }
}

Matrix read_matrix_file(const std::string& path)
{
    return matrix_from_json(read_json_file(path));
}

std::string dump_json(const nlohmann::json& j)
{
    return j.dump(2) + "\n";
}

void write_matrix_file(const std::string& path, const Matrix& m)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    }
    out << dump_json(matrix_to_json(m));
}

nlohmann::json polynomial_to_json(const MatrixPolynomial& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (int i = 0; i <= f.degree_s(); ++i) {
        for (int j = 0; j <= f.degree_p(); ++j) {
            const Matrix& c = f.coeff(i, j);
            if (c.cwiseAbs().maxCoeff() != 0.0) {
                terms.push_back({{"s", i}, {"p", j}, {"coeff", matrix_to_json(c)}});
            }
        }
    }
    return {{"size", f.coeff_size()}, {"terms", terms}};
}

MatrixPolynomial polynomial_from_json(const nlohmann::json& j)
{
    if (j.is_object() && j.contains("rows")) {
        const Matrix c = matrix_from_json(j);
        if (c.rows() != c.cols() || c.rows() == 0) {
            parse_error("constant coefficient must be square and nonempty");
        }
        return MatrixPolynomial::monomial(0, 0, c);
    }
    if (!j.is_object()) {
        parse_error("polynomial document must be an object");
    }
    const int size = nonnegative_int(j, "size");
    if (size < 1) {
        parse_error("polynomial size must be positive");
    }
    if (!j.contains("terms") || !j.at("terms").is_array()) {
        parse_error("missing array field \"terms\"");
    }
    MatrixPolynomial f(size);
    for (const auto& term : j.at("terms")) {
        if (!term.is_object() || !term.contains("coeff")) {
            parse_error("term needs \"s\", \"p\" and \"coeff\"");
        }
        const int i = nonnegative_int(term, "s");
        const int jj = nonnegative_int(term, "p");
        if (i > 64 || jj > 64) {
            parse_error("exponent above 64");
        }
        const auto& coeff = term.at("coeff");
        Matrix c = coeff.is_object() ? matrix_from_json(coeff) : Matrix::Constant(1, 1, complex_from_json(coeff));
        if (c.rows() != size || c.cols() != size) {
            parse_error("coefficient shape does not match size");
        }
        // Repeated exponents add up.
        if (i <= f.degree_s() && jj <= f.degree_p()) {
            c += f.coeff(i, jj);
        }
        f.set(i, jj, c);
    }
    return f;
}

}  // namespace symbidisc
