#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aquiver/morphism.hpp"

namespace aquiver {

/// P_a (point), P_{a)} (open_right) and P_{(a} (open_left); the injective
/// forms I_a, I_{a)}, I_{(a} use the same shapes.
enum class LabelForm { open_right, point, open_left };

/// An indecomposable projective. `at` is finite except for the point form
/// at an infinity that acts as a virtual source; its support is then the
/// whole unbounded end segment.
struct ProjectiveLabel {
  LabelForm form;
  ExtReal at;
  friend bool operator==(const ProjectiveLabel&, const ProjectiveLabel&) = default;
};

struct InjectiveLabel {
  LabelForm form;
  ExtReal at;
  friend bool operator==(const InjectiveLabel&, const InjectiveLabel&) = default;
};

/// Support of the labelled module; throws InputError when it would be zero.
Interval realize(const Orientation& o, const ProjectiveLabel& p);
Interval realize(const Orientation& o, const InjectiveLabel& i);

/// "P_a", "P_{a)}", "P_{(a}", with braces around multi-character arguments.
std::string format_label(const ProjectiveLabel& p);
std::string format_label(const InjectiveLabel& i);
/// The same with a custom name for the position, e.g. a table parameter.
std::string format_label(char prefix, LabelForm form, const std::string& at);

std::optional<ProjectiveLabel> classify_projective(const Orientation& o, const Interval& i);
std::optional<InjectiveLabel> classify_injective(const Orientation& o, const Interval& i);

/// dim Hom(M_I, M_J); throws InternalError if it exceeds one.
std::size_t hom_dim(const Orientation& o, const Interval& i, const Interval& j);

/// Every bar of the decomposition classifies as projective. When the direct
/// criterion applies its verdict must agree, else InternalError.
bool is_projective_rep(const TameRep& v);

/// The direct criterion for representations supported in one segment away
/// from its source end: every composite map towards the sink end is
/// injective. Nothing when the support does not fit in such a segment.
std::optional<bool> projectivity_criterion(const TameRep& v);

struct FiltrationStep {
  std::size_t dim;
  Interval support;
  friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// Distinct images V(x, b)(V(x)) inside V(b), largest first, each with the
/// interval of points x whose image contains it.
using FiltrationReport = std::vector<FiltrationStep>;

/// Requires the support of v to lie in `segment` with b in the support and
/// below every other support point in the orientation order; throws
/// InputError otherwise. The zero representation gives an empty report.
FiltrationReport image_filtration(const TameRep& v, const Segment& segment, const Rational& b);

struct ProjPresentation {
  std::vector<ProjectiveLabel> p1;
  std::vector<ProjectiveLabel> p0;
  /// P_1 -> P_0 with entries in {0, 1, -1}; summands in list order.
  Morphism map;
};

/// Realization of a list of projectives as a direct sum in list order.
TameRep realize_sum(const Orientation& o, const std::vector<ProjectiveLabel>& labels,
                    Field field = Field::rationals());

/// Minimal projective presentation of M_I.
ProjPresentation proj_presentation(const Orientation& o, const Interval& i,
                                   Field field = Field::rationals());

/// dim Ext^1(M_V, M_W), computed from the presentation of M_V.
std::size_t ext_dim(const Orientation& o, const Interval& v, const Interval& w);

/// ker f for a morphism between sums of projectives. Throws InputError if f
/// is not a morphism and InternalError if the kernel is not projective.
TameRep kernel_of_projective_map(const Morphism& f);

}  // namespace aquiver
