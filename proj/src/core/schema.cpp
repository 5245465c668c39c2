#include "core/schema.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace zslpose {

std::string to_string(Side side) {
    switch (side) {
        case Side::left: return "left";
        case Side::right: return "right";
        case Side::center: return "center";
    }
    return "?";
}

std::string to_string(JointKind kind) {
    return kind == JointKind::classification ? "classification" : "regression";
}

static Side side_from_string(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    if (s == "center") return Side::center;
    throw_error(ErrorCode::parse, "unknown joint side '" + s + "'");
}

static JointKind kind_from_string(const std::string& s) {
    if (s == "classification") return JointKind::classification;
    if (s == "regression") return JointKind::regression;
    throw_error(ErrorCode::parse, "unknown joint kind '" + s + "'");
}

std::string JointSpec::id() const {
    switch (side) {
        case Side::left: return name + "_l";
        case Side::right: return name + "_r";
        case Side::center: return name;
    }
    return name;
}

int JointSpec::label_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

JointSpec classification_joint(std::string name, Side side, std::vector<std::string> labels) {
    JointSpec j;
    j.name = std::move(name);
    j.side = side;
    j.kind = JointKind::classification;
    j.labels = std::move(labels);
    return j;
}

JointSpec regression_joint(std::string name, Side side) {
    JointSpec j;
    j.name = std::move(name);
    j.side = side;
    j.kind = JointKind::regression;
    return j;
}

AttributeSpace::AttributeSpace(std::vector<JointSpec> joints) : joints_(std::move(joints)) {
    if (joints_.empty()) throw_error(ErrorCode::validation, "attribute space has no joints");

    std::set<std::string> seen_ids;
    offsets_.reserve(joints_.size());
    for (const auto& j : joints_) {
        if (!seen_ids.insert(j.id()).second)
            throw_error(ErrorCode::validation, "duplicate joint id '" + j.id() + "'");
        if (j.kind == JointKind::classification) {
            if (j.labels.size() < 2)
                throw_error(ErrorCode::validation,
                            "classification joint '" + j.id() + "' needs at least 2 labels");
            std::set<std::string> distinct(j.labels.begin(), j.labels.end());
            if (distinct.size() != j.labels.size())
                throw_error(ErrorCode::validation,
                            "classification joint '" + j.id() + "' has duplicate labels");
        } else {
            if (!j.labels.empty())
                throw_error(ErrorCode::validation,
                            "regression joint '" + j.id() + "' must not list labels");
            if (!(j.range.lo < j.range.hi))
                throw_error(ErrorCode::validation,
                            "regression joint '" + j.id() + "' has an empty range");
        }
        offsets_.push_back(dim_);
        dim_ += j.width();
    }
}

AttributeSpace AttributeSpace::default_space() {
    const std::vector<std::string> directions{"up", "down", "left", "right", "front"};
    const std::vector<std::string> hand_states{"normal", "grasp", "pointing"};
    const std::vector<std::string> waist_states{"straight", "bend", "twist_l", "twist_r"};

    std::vector<JointSpec> joints;
    joints.push_back(classification_joint("head", Side::center, directions));
    joints.push_back(classification_joint("shoulder", Side::left, directions));
    joints.push_back(classification_joint("shoulder", Side::right, directions));
    joints.push_back(regression_joint("elbow", Side::left));
    joints.push_back(regression_joint("elbow", Side::right));
    joints.push_back(regression_joint("wrist", Side::left));
    joints.push_back(regression_joint("wrist", Side::right));
    joints.push_back(classification_joint("hand", Side::left, hand_states));
    joints.push_back(classification_joint("hand", Side::right, hand_states));
    joints.push_back(classification_joint("waist", Side::center, waist_states));
    joints.push_back(regression_joint("hip_joint", Side::left));
    joints.push_back(regression_joint("hip_joint", Side::right));
    joints.push_back(regression_joint("knee", Side::left));
    joints.push_back(regression_joint("knee", Side::right));
    return AttributeSpace(std::move(joints));
}

int AttributeSpace::joint_of(int d) const {
    if (d < 0 || d >= dim_) throw_error(ErrorCode::argument, "attribute index out of range");
    int j = static_cast<int>(offsets_.size()) - 1;
    while (offsets_[static_cast<std::size_t>(j)] > d) --j;
    return j;
}

std::optional<int> AttributeSpace::find_joint(std::string_view id) const {
    for (std::size_t j = 0; j < joints_.size(); ++j)
        if (joints_[j].id() == id) return static_cast<int>(j);
    return std::nullopt;
}

std::vector<std::string> AttributeSpace::attribute_names() const {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(dim_));
    for (const auto& j : joints_) {
        if (j.kind == JointKind::classification)
            for (const auto& label : j.labels) names.push_back(j.id() + ":" + label);
        else
            names.push_back(j.id());
    }
    return names;
}

int vector_dim(const AttributeSpace& space) { return space.dim(); }

std::optional<std::string> validate_vector(const AttributeSpace& space, const AttributeVector& v) {
    if (static_cast<int>(v.size()) != space.dim()) {
        std::ostringstream os;
        os << "length " << v.size() << ", expected " << space.dim();
        return os.str();
    }
    for (int j = 0; j < space.joint_count(); ++j) {
        const JointSpec& spec = space.joint(j);
        const int off = space.offset(j);
        if (spec.kind == JointKind::regression) {
            const double x = v[static_cast<std::size_t>(off)];
            if (!(x >= spec.range.lo && x <= spec.range.hi)) {
                std::ostringstream os;
                os << "attribute " << off << " (" << spec.id() << ") = " << x
                   << " outside [" << spec.range.lo << ", " << spec.range.hi << "]";
                return os.str();
            }
            continue;
        }
        double sum = 0.0;
        for (int i = 0; i < spec.width(); ++i) {
            const double x = v[static_cast<std::size_t>(off + i)];
            if (!(x >= 0.0 && x <= 1.0)) {
                std::ostringstream os;
                os << "attribute " << off + i << " (" << spec.id() << ":" << spec.labels[static_cast<std::size_t>(i)]
                   << ") = " << x << " outside [0, 1]";
                return os.str();
            }
            sum += x;
        }
        if (std::abs(sum - 1.0) > kSimplexTolerance) {
            std::ostringstream os;
            os << "classification block '" << spec.id() << "' sums to " << sum
               << " (expected 1 within " << kSimplexTolerance << ")";
            return os.str();
        }
    }
    return std::nullopt;
}

nlohmann::ordered_json space_to_json(const AttributeSpace& space) {
    nlohmann::ordered_json joints = nlohmann::ordered_json::array();
    for (const auto& j : space.joints()) {
        nlohmann::ordered_json item;
        item["name"] = j.name;
        item["side"] = to_string(j.side);
        item["kind"] = to_string(j.kind);
        if (j.kind == JointKind::classification)
            item["labels"] = j.labels;
        else
            item["range"] = {j.range.lo, j.range.hi};
        joints.push_back(std::move(item));
    }
    nlohmann::ordered_json out;
    out["format_version"] = 1;
    out["joints"] = std::move(joints);
    return out;
}

AttributeSpace space_from_json(const nlohmann::ordered_json& j) {
    try {
        std::vector<JointSpec> joints;
        for (const auto& item : j.at("joints")) {
            JointSpec spec;
            spec.name = item.at("name").get<std::string>();
            spec.side = side_from_string(item.at("side").get<std::string>());
            spec.kind = kind_from_string(item.at("kind").get<std::string>());
            if (spec.kind == JointKind::classification) {
                spec.labels = item.at("labels").get<std::vector<std::string>>();
            } else if (item.contains("range")) {
                auto r = item.at("range");
                spec.range = Interval{r.at(0).get<double>(), r.at(1).get<double>()};
            }
            joints.push_back(std::move(spec));
        }
        return AttributeSpace(std::move(joints));
    } catch (const nlohmann::json::exception& e) {
        throw_error(ErrorCode::parse, std::string("bad space JSON: ") + e.what());
    }
}

AttributeSpace load_space(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw_error(ErrorCode::io, "cannot open space file '" + path.string() + "'");
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw_error(ErrorCode::parse, "malformed JSON in '" + path.string() + "': " + e.what());
    }
    return space_from_json(j);
}

void save_space(const AttributeSpace& space, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw_error(ErrorCode::io, "cannot write space file '" + path.string() + "'");
    out << space_to_json(space).dump(2) << '\n';
}

}  // namespace zslpose
