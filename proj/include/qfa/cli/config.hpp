#ifndef QFA_CLI_CONFIG_HPP
#define QFA_CLI_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <qfa/fock.hpp>
#include <qfa/laplace.hpp>
#include <qfa/renorm.hpp>
#include <qfa/scalar.hpp>

namespace qfa::cli
{

class config_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// {
//   "dimension": 4,
//   "pairing": [["1", "1/2", ...], ...],        d x d scalar strings
//   "symmetric": true,
//   "zeta": {"1,2": "1/3", "1,1,2,4": "-1/2"},   sorted comma-joined indices, size >= 2
//   "fock": {"creation": [1, 2], "annihilation": [3, 4], "involution": {"1": 3, "2": 4}},
//   "seed": 0, "max_grade": 4, "trials": 100
// }
struct config {
    std::uint32_t dimension = 0;
    pairing_matrix pairing;
    bool symmetric = false;
    scheme zeta;
    std::optional<fock_structure> fock;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> max_grade;
    std::optional<std::uint64_t> trials;
};

namespace detail
{

inline scalar scalar_field(const nlohmann::json &j, const std::string &where)
{
    if (!j.is_string()) {
        throw config_error(where + ": scalars must be strings such as \"1/2\" or \"1/2+3/4 i\"");
    }
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::exception &e) {
        throw config_error(where + ": " + e.what());
    }
}

inline monomial zeta_key(const std::string &key, std::uint32_t dim)
{
    std::vector<generator_index> idx;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto trimmed_begin = part.find_first_not_of(' ');
        const auto trimmed_end = part.find_last_not_of(' ');
        if (trimmed_begin == std::string::npos) {
            throw config_error("zeta key \"" + key + "\": empty index");
        }
        part = part.substr(trimmed_begin, trimmed_end - trimmed_begin + 1);
        if (part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9) {
            throw config_error("zeta key \"" + key + "\": \"" + part + "\" is not an index");
        }
        const auto i = static_cast<generator_index>(std::stoul(part));
        if (i < 1 || i > dim) {
            throw config_error("zeta key \"" + key + "\": index " + part + " outside 1.." + std::to_string(dim));
        }
        if (!idx.empty() && i < idx.back()) {
            throw config_error("zeta key \"" + key + "\": indices must be sorted");
        }
        idx.push_back(i);
    }
    if (idx.size() < 2) {
        throw config_error("zeta key \"" + key + "\": zeta is fixed on gradings 0 and 1; keys need at least two indices");
    }
    return monomial::from_indices(idx);
}

inline std::set<generator_index> index_set(const nlohmann::json &j, const std::string &where, std::uint32_t dim)
{
    if (!j.is_array()) {
        throw config_error(where + " must be an array of indices");
    }
    std::set<generator_index> out;
    for (const auto &x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > dim) {
            throw config_error(where + ": indices must be integers in 1.." + std::to_string(dim));
        }
        out.insert(static_cast<generator_index>(x.get<long long>()));
    }
    return out;
}

template <typename T>
std::optional<T> optional_unsigned(const nlohmann::json &j, const char *key)
{
    if (!j.contains(key)) {
        return std::nullopt;
    }
    const auto &v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw config_error(std::string(key) + " must be a non-negative integer");
    }
    return static_cast<T>(v.get<unsigned long long>());
}

} // namespace detail

inline config parse_config(const nlohmann::json &j)
{
    if (!j.is_object()) {
        throw config_error("config must be a JSON object");
    }
    config cfg;
    if (!j.contains("dimension") || !j.at("dimension").is_number_integer() || j.at("dimension").get<long long>() < 1) {
        throw config_error("dimension must be a positive integer");
    }
    cfg.dimension = static_cast<std::uint32_t>(j.at("dimension").get<long long>());
    const auto d = cfg.dimension;

    cfg.symmetric = j.value("symmetric", false);
    if (!j.contains("pairing") || !j.at("pairing").is_array() || j.at("pairing").size() != d) {
        throw config_error("pairing must be a " + std::to_string(d) + "x" + std::to_string(d) + " array of scalar strings");
    }
    std::vector<scalar> entries;
    for (std::uint32_t r = 0; r < d; ++r) {
        const auto &row = j.at("pairing")[r];
        if (!row.is_array() || row.size() != d) {
            throw config_error("pairing row " + std::to_string(r + 1) + " must have " + std::to_string(d) + " entries");
        }
        for (std::uint32_t c = 0; c < d; ++c) {
            entries.push_back(detail::scalar_field(row[c], "pairing[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]"));
        }
    }
    try {
        cfg.pairing = pairing_matrix(d, std::move(entries), cfg.symmetric);
    } catch (const std::invalid_argument &e) {
        throw config_error(e.what());
    }

    scheme::value_map values;
    if (j.contains("zeta")) {
        if (!j.at("zeta").is_object()) {
            throw config_error("zeta must be an object mapping \"i,j,...\" to scalar strings");
        }
        for (const auto &[key, v] : j.at("zeta").items()) {
            auto m = detail::zeta_key(key, d);
            if (values.count(m) != 0) {
                throw config_error("zeta key \"" + key + "\" given twice");
            }
            values.emplace(std::move(m), detail::scalar_field(v, "zeta[\"" + key + "\"]"));
        }
    }
    cfg.zeta = scheme(std::move(values));

    if (j.contains("fock") && !j.at("fock").is_null()) {
        const auto &f = j.at("fock");
        if (!f.is_object() || !f.contains("creation") || !f.contains("annihilation") || !f.contains("involution")) {
            throw config_error("fock needs creation, annihilation and involution");
        }
        auto creation = detail::index_set(f.at("creation"), "fock.creation", d);
        auto annihilation = detail::index_set(f.at("annihilation"), "fock.annihilation", d);
        std::map<generator_index, generator_index> involution;
        if (!f.at("involution").is_object()) {
            throw config_error("fock.involution must map \"i\" to j");
        }
        for (const auto &[key, v] : f.at("involution").items()) {
            if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos || !v.is_number_integer()) {
                throw config_error("fock.involution entries must map \"i\" to an integer j");
            }
            involution[static_cast<generator_index>(std::stoul(key))] = static_cast<generator_index>(v.get<long long>());
        }
        try {
            cfg.fock.emplace(d, std::move(creation), std::move(annihilation), std::move(involution));
        } catch (const std::invalid_argument &e) {
            throw config_error(std::string("fock: ") + e.what());
        }
    }

    cfg.seed = detail::optional_unsigned<std::uint64_t>(j, "seed");
    cfg.max_grade = detail::optional_unsigned<std::uint32_t>(j, "max_grade");
    cfg.trials = detail::optional_unsigned<std::uint64_t>(j, "trials");
    return cfg;
}

inline config parse_config_text(const std::string &text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw config_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_config(j);
    } catch (const nlohmann::json::exception &e) {
        throw config_error(std::string("malformed config: ") + e.what());
    }
}

inline config load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

} // namespace qfa::cli

#endif
