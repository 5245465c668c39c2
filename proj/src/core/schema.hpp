#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zslpose {

enum class Side { left, right, center };
enum class JointKind { classification, regression };

std::string to_string(Side side);
std::string to_string(JointKind kind);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool operator==(const Interval&) const = default;
};

/// One body joint of the attribute space. Classification joints contribute
/// one attribute per label (a probability simplex block); regression joints
/// contribute a single scalar in `range`.
struct JointSpec {
    std::string name;
    Side side = Side::center;
    JointKind kind = JointKind::classification;
    std::vector<std::string> labels;  // classification only, canonical order
    Interval range;                   // regression only

    /// Unique key: name plus "_l"/"_r" suffix for sided joints.
    std::string id() const;

    /// Attributes contributed to the flat vector.
    int width() const {
        return kind == JointKind::classification ? static_cast<int>(labels.size()) : 1;
    }

    /// Index of `label` in the canonical order, or -1.
    int label_index(std::string_view label) const;

    bool operator==(const JointSpec&) const = default;
};

JointSpec classification_joint(std::string name, Side side, std::vector<std::string> labels);
JointSpec regression_joint(std::string name, Side side);

/// Ordered joint list plus the canonical mapping between joints and
/// attribute-vector indices. Immutable after construction; safe to share
/// read-only across threads.
class AttributeSpace {
public:
    /// Validates the joint list (classification joints need >= 2 distinct
    /// labels, regression joints none; ids must be unique) and lays out
    /// contiguous per-joint offsets.
    explicit AttributeSpace(std::vector<JointSpec> joints);

    /// The 14-joint full-body space: head and waist centered, everything
    /// else in left/right pairs; 33 attributes in total.
    static AttributeSpace default_space();

    int dim() const { return dim_; }
    int joint_count() const { return static_cast<int>(joints_.size()); }
    const JointSpec& joint(int j) const { return joints_[static_cast<std::size_t>(j)]; }
    const std::vector<JointSpec>& joints() const { return joints_; }

    /// Start index of joint j's block in the flat vector.
    int offset(int j) const { return offsets_[static_cast<std::size_t>(j)]; }

    /// Joint owning attribute index d.
    int joint_of(int d) const;

    /// Joint index by id, or nullopt.
    std::optional<int> find_joint(std::string_view id) const;

    /// Column names of the flat vector ("head:up", ..., "elbow_l", ...).
    std::vector<std::string> attribute_names() const;

    bool operator==(const AttributeSpace& other) const { return joints_ == other.joints_; }

private:
    std::vector<JointSpec> joints_;
    std::vector<int> offsets_;
    int dim_ = 0;
};

/// A point of the attribute space: flat vector of length space.dim(),
/// every entry in [0,1], classification blocks summing to 1.
using AttributeVector = std::vector<double>;

/// Tolerance on classification-block sums; estimator outputs are normalized
/// so only rounding error remains.
inline constexpr double kSimplexTolerance = 1e-6;

int vector_dim(const AttributeSpace& space);

/// Returns std::nullopt when `v` is valid for `space`, otherwise a
/// description of the first violation (length, out-of-range entry, or
/// classification block off the simplex). Never throws.
std::optional<std::string> validate_vector(const AttributeSpace& space, const AttributeVector& v);

nlohmann::ordered_json space_to_json(const AttributeSpace& space);
AttributeSpace space_from_json(const nlohmann::ordered_json& j);

AttributeSpace load_space(const std::filesystem::path& path);
void save_space(const AttributeSpace& space, const std::filesystem::path& path);

}  // namespace zslpose
