#pragma once

// JSON, DOT and plain-text renderings of the library's record types. Every
// JSON conversion has an inverse so that parse(render(x)) == x.

#include "liefoliate/foliate.hpp"
#include "liefoliate/slmodel.hpp"

#include "json.hpp"

#include <string>

namespace liefoliate {

using nlohmann::json;

void to_json(json& j, Family f);
void from_json(const json& j, Family& f);
void to_json(json& j, const Root& r);
void to_json(json& j, const RootSystem& rs);
void from_json(const json& j, RootSystem& rs);
void to_json(json& j, const DynkinVertex& v);
void from_json(const json& j, DynkinVertex& v);
void to_json(json& j, const DynkinEdge& e);
void from_json(const json& j, DynkinEdge& e);
void to_json(json& j, const DynkinDiagram& d);
void from_json(const json& j, DynkinDiagram& d);
void to_json(json& j, const SpaceDescriptor& d);
void from_json(const json& j, SpaceDescriptor& d);
void to_json(json& j, const PhiSubset& p);
void from_json(const json& j, PhiSubset& p);  // rank is not stored; validated against 64
void to_json(json& j, const RootSubsystem& s);
void from_json(const json& j, RootSubsystem& s);
void to_json(json& j, const ParabolicData& d);
void from_json(const json& j, ParabolicData& d);
void to_json(json& j, const BoundaryFactor& b);
void from_json(const json& j, BoundaryFactor& b);
void to_json(json& j, const HorosphericalData& h);
void from_json(const json& j, HorosphericalData& h);
void to_json(json& j, const HyperbolicFactor& h);
void from_json(const json& j, HyperbolicFactor& h);
void to_json(json& j, const FoliationClass& f);
void from_json(const json& j, FoliationClass& f);

namespace sl {
void to_json(json& j, const IwasawaFactors& f);
void from_json(const json& j, IwasawaFactors& f);
}  // namespace sl

/// Undirected DOT graph; double-circled vertices get peripheries=2, edges
/// carry their line count as label and an arrow toward the shorter root.
std::string to_dot(const DynkinDiagram& d);

std::string table(const RootSystem& rs);
std::string table(const DynkinDiagram& d);
std::string table(const std::vector<SpaceDescriptor>& spaces);
std::string table(const SpaceDescriptor& space, const PhiSubset& phi, const ParabolicData& d);
std::string table(const SpaceDescriptor& space, const PhiSubset& phi, const HorosphericalData& h);
std::string table(const std::vector<FoliationClass>& classes);

}  // namespace liefoliate

// Root has no default state, so it converts through a serializer that
// constructs it directly.
/// Dense matrices are arrays of rows.
template <>
struct nlohmann::adl_serializer<Eigen::MatrixXd> {
  static void to_json(json& j, const Eigen::MatrixXd& m);
  static void from_json(const json& j, Eigen::MatrixXd& m);
};

template <>
struct nlohmann::adl_serializer<liefoliate::Root> {
  static liefoliate::Root from_json(const json& j) { return liefoliate::Root(j.get<std::vector<int>>()); }
  static void to_json(json& j, const liefoliate::Root& r) { liefoliate::to_json(j, r); }
};
