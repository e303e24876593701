#pragma once

#include <complex>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "maasskit/characters.hpp"
#include "maasskit/errors.hpp"
#include "maasskit/lseries.hpp"
#include "maasskit/maassform.hpp"

namespace maasskit {

// ---- coefficient CSV: header "n,re,im", rows contiguous from n = 1 --------

inline void write_coeff_csv(const std::string& path, const std::vector<cplx>& values) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << "n,re,im\n";
    out << std::setprecision(17);
    for (std::size_t n = 1; n <= values.size(); ++n)
        out << n << ',' << values[n - 1].real() << ',' << values[n - 1].imag() << '\n';
}

inline std::vector<cplx> read_coeff_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("n,re,im", 0) != 0)
        throw FormatError("expected header n,re,im in " + path);
    std::vector<cplx> values;
    std::size_t expect = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string f1, f2, f3;
        if (!std::getline(row, f1, ',') || !std::getline(row, f2, ',') || !std::getline(row, f3))
            throw FormatError("malformed row: " + line);
        if (static_cast<std::size_t>(std::stoul(f1)) != expect)
            throw FormatError("coefficient rows must be contiguous from n=1");
        values.emplace_back(std::stod(f2), std::stod(f3));
        ++expect;
    }
    if (values.empty()) throw FormatError("no coefficient rows in " + path);
    return values;
}

// ---- MaassSpec JSON -------------------------------------------------------

namespace detail {

inline nlohmann::json complex_json(cplx z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

inline cplx complex_from(const nlohmann::json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace detail

inline nlohmann::json spec_to_json(const MaassSpec& spec, const std::string& coeff_file) {
    return nlohmann::json{
        {"level", spec.level},
        {"parity", spec.parity},
        {"nu", detail::complex_json(spec.nu.nu)},
        {"chi", {{"modulus", spec.chi.modulus()}, {"exponent_vector", spec.chi.exps}}},
        {"coeff_file", coeff_file},
        {"growth", {{"C", spec.a.bound_constant}, {"sigma", spec.a.growth_exponent}}},
        {"residues",
         {{"f_minus_nu", detail::complex_json(spec.residues.f_minus_nu)},
          {"f_plus_nu", detail::complex_json(spec.residues.f_plus_nu)},
          {"g_one_plus_nu", detail::complex_json(spec.residues.g_one_plus_nu)},
          {"g_one_minus_nu", detail::complex_json(spec.residues.g_one_minus_nu)}}}};
}

// Writes spec.json plus the coefficient CSV next to it.
inline void save_spec(const MaassSpec& spec, const std::string& json_path,
                      const std::string& coeff_file_name) {
    namespace fs = std::filesystem;
    fs::path jp(json_path);
    if (jp.has_parent_path()) fs::create_directories(jp.parent_path());
    write_coeff_csv((jp.has_parent_path() ? jp.parent_path() / coeff_file_name
                                          : fs::path(coeff_file_name))
                        .string(),
                    spec.a.values);
    std::ofstream out(json_path);
    if (!out) throw FormatError("cannot write " + json_path);
    out << spec_to_json(spec, coeff_file_name).dump(2) << '\n';
}

inline MaassSpec load_spec(const std::string& json_path) {
    std::ifstream in(json_path);
    if (!in) throw FormatError("cannot open " + json_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    try {
        long level = j.at("level").get<long>();
        int parity = j.at("parity").get<int>();
        SpectralParam nu(detail::complex_from(j.at("nu")));
        long chi_mod = j.at("chi").at("modulus").get<long>();
        auto exps = j.at("chi").at("exponent_vector").get<std::vector<long>>();
        DirichletCharacter chi(shared_group(chi_mod), exps);
        std::filesystem::path jp(json_path);
        std::filesystem::path cf = j.at("coeff_file").get<std::string>();
        if (cf.is_relative() && jp.has_parent_path()) cf = jp.parent_path() / cf;
        std::vector<cplx> values = read_coeff_csv(cf.string());
        CoeffSeq a{values, j.at("growth").at("C").get<double>(),
                   j.at("growth").at("sigma").get<double>()};
        const auto& r = j.at("residues");
        ResidueData res{detail::complex_from(r.at("f_minus_nu")),
                        detail::complex_from(r.at("f_plus_nu")),
                        detail::complex_from(r.at("g_one_plus_nu")),
                        detail::complex_from(r.at("g_one_minus_nu"))};
        return {level, parity, nu, chi, a, a, res};
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("spec JSON missing field: ") + e.what());
    }
}

}  // namespace maasskit
