#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "srdepth/complex.hpp"
#include "srdepth/error.hpp"

namespace srdepth {

namespace {

int parse_int(const std::string& token, int line_no)
{
    try {
        std::size_t used = 0;
        const long value = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        if (value < -1000000 || value > 1000000) throw std::out_of_range(token);
        return static_cast<int>(value);
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": bad integer '" + token + "'");
    }
}

}  // namespace

SimplicialComplex parse_facet_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_m = -1;
    int max_seen = 0;
    std::vector<std::vector<int>> facets;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string token;
        std::vector<std::string> words;
        while (tokens >> token) words.push_back(token);
        if (words.empty()) continue;
        if (words.front() == "m") {
            if (words.size() != 2 || declared_m >= 0 || !facets.empty())
                throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": malformed header");
            declared_m = parse_int(words[1], line_no);
            if (declared_m < 0) throw Error(ErrorCode::Parse, "negative vertex count");
            continue;
        }
        std::vector<int> facet;
        for (const auto& w : words) {
            const int v = parse_int(w, line_no);
            max_seen = std::max(max_seen, v);
            facet.push_back(v);
        }
        facets.push_back(std::move(facet));
    }
    if (facets.empty() && declared_m == 0) return validate({{}}, 0);
    return validate(facets, declared_m >= 0 ? declared_m : max_seen);
}

SimplicialComplex parse_complex_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("facets") ||
        !doc["m"].is_number_integer() || !doc["facets"].is_array())
        throw Error(ErrorCode::Parse, "expected {\"m\": int, \"facets\": [[int,...],...]}");
    std::vector<std::vector<int>> facets;
    for (const auto& f : doc["facets"]) {
        if (!f.is_array()) throw Error(ErrorCode::Parse, "facet must be an array");
        std::vector<int> facet;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "vertex must be an integer");
            facet.push_back(v.get<int>());
        }
        facets.push_back(std::move(facet));
    }
    return validate(facets, doc["m"].get<int>());
}

SimplicialComplex parse_complex(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_complex_json(text);
    return parse_facet_text(text);
}

SimplicialComplex read_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str());
}

std::string to_facet_text(const SimplicialComplex& K)
{
    std::ostringstream out;
    out << "m " << (K.labels().empty() ? 0 : K.labels().back()) << '\n';
    if (K.is_empty_complex()) return out.str();
    for (Face f : K.facets()) {
        const auto labels = K.labels_of(f);
        for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
        out << '\n';
    }
    return out.str();
}

std::string to_complex_json(const SimplicialComplex& K)
{
    nlohmann::json facets = nlohmann::json::array();
    for (Face f : K.facets()) facets.push_back(K.labels_of(f));
    const int m = K.labels().empty() ? 0 : K.labels().back();
    return nlohmann::json{{"m", m}, {"facets", facets}}.dump();
}

}  // namespace srdepth
