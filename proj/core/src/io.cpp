#include "qsent/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsent/error.hpp"

namespace qsent {

namespace {

using nlohmann::json;

json matrix_object(const ComplexMatrix& m) {
    std::vector<double> re;
    std::vector<double> im;
    re.reserve(static_cast<std::size_t>(m.size()));
    im.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            re.push_back(m(i, j).real());
            im.push_back(m(i, j).imag());
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_object(const json& obj) {
    if (!obj.is_object() || !obj.contains("rows") || !obj.contains("cols") || !obj.contains("re")) {
        throw Error(ErrorCode::ParseError, "matrix object needs rows, cols, re");
    }
    const auto rows = obj.at("rows").get<Eigen::Index>();
    const auto cols = obj.at("cols").get<Eigen::Index>();
    if (rows <= 0 || cols <= 0) throw Error(ErrorCode::ParseError, "matrix shape must be positive");
    const auto re = obj.at("re").get<std::vector<double>>();
    const auto im = obj.contains("im") ? obj.at("im").get<std::vector<double>>()
                                       : std::vector<double>(re.size(), 0.0);
    const auto n = static_cast<std::size_t>(rows * cols);
    if (re.size() != n || im.size() != n) {
        throw Error(ErrorCode::ParseError, "matrix arrays must have rows*cols = " + std::to_string(n) + " entries");
    }
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const auto k = static_cast<std::size_t>(i * cols + j);
            m(i, j) = Complex(re[k], im[k]);
        }
    }
    return m;
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::string matrix_to_json(const ComplexMatrix& m) { return matrix_object(m).dump(); }

ComplexMatrix matrix_from_json(std::string_view text) {
    try {
        return matrix_from_object(parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string channel_to_json(const KrausChannel& ch) {
    json kraus = json::array();
    for (const auto& a : ch.kraus_ops()) kraus.push_back(matrix_object(a));
    return json{{"dim", ch.dim()}, {"kraus", std::move(kraus)}}.dump(2);
}

KrausChannel channel_from_json(std::string_view text) {
    const json obj = parse(text);
    std::vector<ComplexMatrix> ops;
    try {
        if (!obj.contains("kraus") || !obj.at("kraus").is_array()) {
            throw Error(ErrorCode::ParseError, "channel object needs a kraus array");
        }
        for (const auto& m : obj.at("kraus")) ops.push_back(matrix_from_object(m));
        if (obj.contains("dim") && !ops.empty() && obj.at("dim").get<Eigen::Index>() != ops.front().rows()) {
            throw Error(ErrorCode::DimensionMismatch, "dim field disagrees with Kraus operator shape");
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return KrausChannel(std::move(ops));
}

ComplexMatrix load_matrix(const std::filesystem::path& path) { return matrix_from_json(read_file(path)); }

KrausChannel load_channel(const std::filesystem::path& path) { return channel_from_json(read_file(path)); }

void save_channel(const std::filesystem::path& path, const KrausChannel& ch) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    out << channel_to_json(ch) << '\n';
}

} // namespace qsent
