#include "balis/record.hpp"

#include <sstream>

#include "balis/errors.hpp"

namespace balis {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Auto: return "auto";
        case Algorithm::Wedge: return "wedge";
        case Algorithm::Strip: return "strip";
        case Algorithm::Fast: return "fast";
        case Algorithm::Brute: return "brute";
    }
    return "auto";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "auto") return Algorithm::Auto;
    if (name == "wedge") return Algorithm::Wedge;
    if (name == "strip") return Algorithm::Strip;
    if (name == "fast") return Algorithm::Fast;
    if (name == "brute") return Algorithm::Brute;
    throw input_error("unknown algorithm: " + name + " (expected auto|wedge|strip|fast|brute)");
}

std::string family_name(CertFamily f) {
    switch (f) {
        case CertFamily::Empty: return "empty";
        case CertFamily::Wedge: return "wedge";
        case CertFamily::Strip: return "strip";
        case CertFamily::Path: return "path";
        case CertFamily::Oracle: return "oracle";
    }
    return "empty";
}

namespace {

nlohmann::json rat_json(const Rat& q) { return rat_to_string(q); }

nlohmann::json point_json(const RatPoint& p) {
    return nlohmann::json{{"x", rat_json(p.x)}, {"y", rat_json(p.y)}};
}

nlohmann::json certificate_json(const Certificate& cert) {
    nlohmann::json j;
    j["family"] = family_name(cert.family);
    if (cert.wedge) {
        j["apex"] = point_json(cert.wedge->apex);
        j["first"] = cert.wedge->first_id;
        j["last"] = cert.wedge->last_id;
    }
    if (cert.strip) {
        j["direction"] = {cert.strip->dir_x.get_str(), cert.strip->dir_y.get_str()};
        j["first"] = cert.strip->first_id;
        j["last"] = cert.strip->last_id;
    }
    if (cert.path) {
        j["apex"] = point_json(cert.path->apex);
        j["positive_window"] = {cert.path->positive_first, cert.path->positive_last};
        j["negative_window"] = {cert.path->negative_first, cert.path->negative_last};
    }
    return j;
}

}  // namespace

nlohmann::json record_to_json(const ColoredPointSet& ps, const ResultRecord& rec) {
    if (rec.found && !is_island(ps, rec.island))
        throw internal_error("record emission: island failed re-verification");
    nlohmann::json q;
    if (rec.alpha) q["alpha"] = rat_json(*rec.alpha);
    if (rec.theorem_case) q["case"] = *rec.theorem_case;
    q["algorithm"] = rec.algorithm;
    q["r_target"] = rec.targets.red;
    q["b_target"] = rec.targets.blue;

    nlohmann::json j;
    j["query"] = q;
    j["found"] = rec.found;
    if (rec.found) {
        j["island"] = {{"members", rec.island.members},
                       {"red", rec.island.red},
                       {"blue", rec.island.blue}};
        j["certificate"] = certificate_json(rec.certificate);
    }
    j["timing_ms"] = rec.timing_ms;
    return j;
}

std::string record_to_text(const ColoredPointSet& ps, const ResultRecord& rec) {
    if (rec.found && !is_island(ps, rec.island))
        throw internal_error("record emission: island failed re-verification");
    std::ostringstream os;
    os << "query: algorithm=" << rec.algorithm;
    if (rec.alpha) os << " alpha=" << rat_to_string(*rec.alpha);
    if (rec.theorem_case) os << " case=" << *rec.theorem_case;
    os << " targets=(" << rec.targets.red << "R," << rec.targets.blue << "B)\n";
    if (!rec.found) {
        os << "found: no\n";
        return os.str();
    }
    os << "found: yes via " << family_name(rec.certificate.family) << "\n";
    os << "island (" << rec.island.red << "R+" << rec.island.blue << "B):";
    for (int id : rec.island.members) os << ' ' << id;
    os << "\n";
    if (rec.certificate.wedge) {
        os << "wedge apex=(" << rat_to_string(rec.certificate.wedge->apex.x) << ", "
           << rat_to_string(rec.certificate.wedge->apex.y) << ") rays through points "
           << rec.certificate.wedge->first_id << " and " << rec.certificate.wedge->last_id
           << "\n";
    }
    if (rec.certificate.strip) {
        os << "strip axis=(" << rec.certificate.strip->dir_x.get_str() << ", "
           << rec.certificate.strip->dir_y.get_str() << ") boundaries through points "
           << rec.certificate.strip->first_id << " and " << rec.certificate.strip->last_id
           << "\n";
    }
    os << "timing: " << rec.timing_ms << " ms\n";
    return os.str();
}

}  // namespace balis
