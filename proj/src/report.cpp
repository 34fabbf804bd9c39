#include "srdepth/report.hpp"

#include <sstream>

#include "srdepth/error.hpp"

namespace srdepth {

bool AnalysisReport::all_pass() const
{
    if (!verdicts) return true;
    for (const auto& [name, word] : *verdicts)
        if (word != "pass") return false;
    return true;
}

AnalysisReport analyze(const SimplicialComplex& K, const FieldSpec& field, const AnalysisOptions& options)
{
    AnalysisReport report;
    report.m = K.m();
    report.dim = K.dim();
    report.f_vector = K.f_vector();
    report.field = field.name();

    const DepthReport depth_report = depth(K, field);
    report.depth_reisner = depth_report.r_reisner;
    report.depth_topological = depth_report.r_topological;
    report.depth_auslander_buchsbaum = depth_report.r_ab;
    report.agree = depth_report.agree;
    report.cohen_macaulay = depth_report.cohen_macaulay;

    const CohomologyProfile h = reduced_cohomology(K, field);
    for (int i = h.min_degree; i <= h.max_degree(); ++i) report.reduced_cohomology[i] = h.at(i);

    if (!options.limits && !options.verify && !options.srdec) return report;

    const int d_max = options.d_max >= 0 ? options.d_max : default_d_max(K);
    const LimitsProfile profile = derived_limit_dims(K, field, d_max);
    if (options.limits) {
        std::map<int, std::map<int, long long>> limits;
        std::map<int, std::map<int, long long>> rho_dims;
        for (const auto& [d, entry] : profile.by_degree) {
            for (std::size_t i = 0; i < entry.lim.size(); ++i) limits[static_cast<int>(i)][d] = entry.lim[i];
            rho_dims[-1][d] = entry.rho_kernel;
            rho_dims[0][d] = entry.rho_cokernel;
        }
        report.limits = std::move(limits);
        report.rho = std::move(rho_dims);
    }
    if (options.verify || options.srdec) {
        std::map<std::string, std::string> verdicts;
        const auto record = [&](const std::string& name, const Verdict& v) {
            verdicts[name] = verdict_word(v);
            if (!v.detail.empty()) report.verdict_details[name] = v.detail;
        };
        record("srdec", verify_srdec(profile, K).verdict);
        if (options.verify) {
            record("star_link", verify_star_link(K, field));
            record("key_lemma", verify_key_lemma(K, profile, depth_report.depth()).verdict);
            record("munkres", verify_munkres(K, field));
        }
        report.verdicts = std::move(verdicts);
    }
    return report;
}

namespace {

nlohmann::json graded_to_json(const std::map<int, std::map<int, long long>>& table)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [i, by_degree] : table) {
        nlohmann::json inner = nlohmann::json::object();
        for (const auto& [d, value] : by_degree) inner[std::to_string(d)] = value;
        out[std::to_string(i)] = inner;
    }
    return out;
}

std::map<int, std::map<int, long long>> graded_from_json(const nlohmann::json& doc)
{
    std::map<int, std::map<int, long long>> table;
    for (const auto& [i, inner] : doc.items())
        for (const auto& [d, value] : inner.items()) table[std::stoi(i)][std::stoi(d)] = value.get<long long>();
    return table;
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& report)
{
    nlohmann::json doc;
    doc["m"] = report.m;
    doc["dim"] = report.dim;
    doc["f_vector"] = report.f_vector;
    doc["field"] = report.field;
    doc["depth"] = {{"reisner", report.depth_reisner},
                    {"topological", report.depth_topological},
                    {"auslander_buchsbaum", report.depth_auslander_buchsbaum},
                    {"agree", report.agree}};
    doc["cohen_macaulay"] = report.cohen_macaulay;
    nlohmann::json cohomology = nlohmann::json::object();
    for (const auto& [i, value] : report.reduced_cohomology) cohomology[std::to_string(i)] = value;
    doc["reduced_cohomology"] = cohomology;
    if (report.limits) doc["limits"] = graded_to_json(*report.limits);
    if (report.rho) doc["rho"] = graded_to_json(*report.rho);
    if (report.verdicts) doc["verdicts"] = *report.verdicts;
    if (!report.verdict_details.empty()) doc["verdict_details"] = report.verdict_details;
    return doc;
}

AnalysisReport report_from_json(const nlohmann::json& doc)
{
    try {
        AnalysisReport report;
        report.m = doc.at("m").get<int>();
        report.dim = doc.at("dim").get<int>();
        report.f_vector = doc.at("f_vector").get<std::vector<long long>>();
        report.field = doc.at("field").get<std::string>();
        const auto& depth_doc = doc.at("depth");
        report.depth_reisner = depth_doc.at("reisner").get<int>();
        report.depth_topological = depth_doc.at("topological").get<int>();
        report.depth_auslander_buchsbaum = depth_doc.at("auslander_buchsbaum").get<int>();
        report.agree = depth_doc.at("agree").get<bool>();
        report.cohen_macaulay = doc.at("cohen_macaulay").get<bool>();
        for (const auto& [i, value] : doc.at("reduced_cohomology").items())
            report.reduced_cohomology[std::stoi(i)] = value.get<long long>();
        if (doc.contains("limits")) report.limits = graded_from_json(doc["limits"]);
        if (doc.contains("rho")) report.rho = graded_from_json(doc["rho"]);
        if (doc.contains("verdicts")) report.verdicts = doc["verdicts"].get<std::map<std::string, std::string>>();
        if (doc.contains("verdict_details"))
            report.verdict_details = doc["verdict_details"].get<std::map<std::string, std::string>>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
    }
}

std::string to_text(const AnalysisReport& report)
{
    std::ostringstream out;
    out << "vertices: " << report.m << "\n";
    out << "dimension: " << report.dim << "\n";
    out << "f-vector:";
    for (long long f : report.f_vector) out << ' ' << f;
    out << "\nfield: " << report.field << "\n";
    out << "depth: " << report.depth_reisner << " (reisner " << report.depth_reisner << ", topological "
        << report.depth_topological << ", auslander-buchsbaum " << report.depth_auslander_buchsbaum << ", "
        << (report.agree ? "agree" : "DISAGREE") << ")\n";
    out << "krull dimension: " << report.dim + 1 << "\n";
    out << "cohen-macaulay: " << (report.cohen_macaulay ? "yes" : "no") << "\n";
    out << "reduced cohomology:";
    for (const auto& [i, value] : report.reduced_cohomology) out << " H~^" << i << "=" << value;
    out << "\n";
    if (report.limits) {
        out << "limits (internal degree / algebraic degree):\n";
        std::map<int, bool> degrees;
        for (const auto& [i, by_degree] : *report.limits)
            for (const auto& [d, value] : by_degree) degrees[d] = true;
        for (const auto& [d, unused] : degrees) {
            out << "  degree " << d << " / " << d / 2 << ":";
            for (const auto& [i, by_degree] : *report.limits) {
                const auto it = by_degree.find(d);
                out << " lim^" << i << "=" << (it == by_degree.end() ? 0 : it->second);
            }
            if (report.rho) {
                for (const auto& [i, by_degree] : *report.rho) {
                    const auto it = by_degree.find(d);
                    out << " L^" << i << "=" << (it == by_degree.end() ? 0 : it->second);
                }
            }
            out << "\n";
        }
    }
    if (report.verdicts) {
        out << "verdicts:\n";
        for (const auto& [name, word] : *report.verdicts) {
            out << "  " << name << ": " << word;
            if (const auto it = report.verdict_details.find(name); it != report.verdict_details.end())
                out << " (" << it->second << ")";
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace srdepth
