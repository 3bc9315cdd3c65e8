#include "colorwitt/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace colorwitt {

namespace {

GroupElement parse_element(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("spec: group element must be an array");
    std::vector<int> residues;
    for (const auto& v : j) residues.push_back(v.get<int>());
    return GroupElement(std::move(residues));
}

Integer parse_dim(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<uint64_t>()));
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("table: dim must be an integer or decimal string");
}

nlohmann::json dim_to_json(const Integer& dim) {
    if (dim.fits_slong_p()) return nlohmann::json(static_cast<int64_t>(dim.get_si()));
    return nlohmann::json(dim.get_str());
}

}  // namespace

GradingSpec parse_spec_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("spec: top level must be an object");

    std::optional<FiniteAbelianGroup> group;
    if (j.contains("group") && !j.at("group").is_null()) {
        const auto& jg = j.at("group");
        std::vector<int> moduli;
        for (const auto& m : jg.at("moduli")) moduli.push_back(m.get<int>());
        std::vector<GroupElement> negatives;
        if (jg.contains("negatives"))
            for (const auto& g : jg.at("negatives")) negatives.push_back(parse_element(g));
        group.emplace(std::move(moduli), negatives);
    }

    if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
        throw std::invalid_argument("spec: needs a non-empty generators array");

    std::vector<GeneratorClass> classes;
    for (const auto& jc : j.at("generators")) {
        GeneratorClass cls;
        cls.count = jc.value("count", 1);
        const auto& label = jc.at("label");
        if (label.is_string()) {
            if (group) throw std::invalid_argument("spec: parity label given but a group is present");
            const std::string s = label.get<std::string>();
            if (s == "even") cls.parity = Parity::even;
            else if (s == "odd") cls.parity = Parity::odd;
            else throw std::invalid_argument("spec: label must be \"even\", \"odd\", or a group element");
        } else {
            if (!group) throw std::invalid_argument("spec: group element label given without a group");
            cls.label = group->reduce(parse_element(label));
            cls.parity = group->is_negative(*cls.label) ? Parity::odd : Parity::even;
        }
        classes.push_back(std::move(cls));
    }

    const int max_degree = j.value("maxDegree", kDefaultMaxDegree);
    return GradingSpec(std::move(classes), max_degree, std::move(group));
}

GradingSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("spec file " + path + ": " + e.what());
    }
    return parse_spec_json(j);
}

nlohmann::json spec_to_json(const GradingSpec& spec) {
    nlohmann::json j;
    if (spec.has_group()) {
        nlohmann::json jg;
        jg["moduli"] = spec.group().moduli();
        auto negatives = nlohmann::json::array();
        for (const auto& g : spec.group().elements())
            if (spec.group().is_negative(g)) negatives.push_back(g.residues);
        jg["negatives"] = negatives;
        j["group"] = jg;
    }
    auto gens = nlohmann::json::array();
    for (const auto& cls : spec.classes()) {
        nlohmann::json jc;
        jc["count"] = cls.count;
        if (cls.label) jc["label"] = cls.label->residues;
        else jc["label"] = cls.parity == Parity::even ? "even" : "odd";
        gens.push_back(jc);
    }
    j["generators"] = gens;
    j["maxDegree"] = spec.truncation();
    return j;
}

std::string spec_digest(const GradingSpec& spec) {
    const std::string dump = spec_to_json(spec).dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

void DimensionTable::sort_rows() {
    std::sort(rows.begin(), rows.end(), [](const DimensionRow& a, const DimensionRow& b) {
        if (a.total_degree != b.total_degree) return a.total_degree < b.total_degree;
        if (a.multidegree != b.multidegree) return a.multidegree < b.multidegree;
        return a.group_element < b.group_element;
    });
}

nlohmann::json DimensionTable::to_json() const {
    nlohmann::json j;
    j["metadata"] = {{"specDigest", digest},
                     {"truncation", truncation},
                     {"prime", prime ? nlohmann::json(*prime) : nlohmann::json(nullptr)},
                     {"toolVersion", tool_version}};
    auto jr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["multidegree"] = row.multidegree.exp;
        r["totalDegree"] = row.total_degree;
        if (row.group_element) r["groupElement"] = row.group_element->residues;
        r["dim"] = dim_to_json(row.dim);
        r["method"] = row.method;
        jr.push_back(r);
    }
    j["rows"] = jr;
    return j;
}

DimensionTable DimensionTable::from_json(const nlohmann::json& j) {
    DimensionTable t;
    const auto& meta = j.at("metadata");
    t.digest = meta.at("specDigest").get<std::string>();
    t.truncation = meta.at("truncation").get<int>();
    if (!meta.at("prime").is_null()) t.prime = meta.at("prime").get<long>();
    t.tool_version = meta.at("toolVersion").get<std::string>();
    for (const auto& r : j.at("rows")) {
        DimensionRow row;
        row.multidegree = Multidegree(r.at("multidegree").get<std::vector<int>>());
        row.total_degree = r.at("totalDegree").get<int>();
        if (r.contains("groupElement"))
            row.group_element = GroupElement(r.at("groupElement").get<std::vector<int>>());
        row.dim = parse_dim(r.at("dim"));
        row.method = r.at("method").get<std::string>();
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string DimensionTable::to_csv() const {
    std::ostringstream os;
    os << "totalDegree,multidegree,groupElement,dim,method\n";
    for (const auto& row : rows) {
        os << row.total_degree << ",";
        for (size_t i = 0; i < row.multidegree.exp.size(); ++i)
            os << (i ? " " : "") << row.multidegree.exp[i];
        os << ",";
        if (row.group_element)
            for (size_t i = 0; i < row.group_element->residues.size(); ++i)
                os << (i ? " " : "") << row.group_element->residues[i];
        os << "," << row.dim.get_str() << "," << row.method << "\n";
    }
    return os.str();
}

}  // namespace colorwitt
