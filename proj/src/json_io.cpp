#include "brach/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace brach {

nlohmann::json to_json(const ComplexMat& m)
{
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (const cplx& z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"dim", m.dim()}, {"re", re}, {"im", im}};
}

ComplexMat matrix_from_json(const nlohmann::json& j)
{
    const int dim = j.at("dim").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    ComplexMat out(dim);
    if (static_cast<int>(re.size()) != dim * dim || static_cast<int>(im.size()) != dim * dim) {
        throw DimensionError("matrix_from_json: entry count does not match dim");
    }
    for (int k = 0; k < dim * dim; ++k) out(k / dim, k % dim) = {re[k].get<double>(), im[k].get<double>()};
    return out;
}

nlohmann::json to_json(const Spinor& v)
{
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (const cplx& z : v) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"re", re}, {"im", im}};
}

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_row(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ',';
        out += format_double(values[k]);
    }
    return out;
}

void write_text(const std::string& path, const std::string& text)
{
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    os << text;
    if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace brach
