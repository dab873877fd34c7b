#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qfrob/algebras.hpp"
#include "qfrob/brackets.hpp"
#include "qfrob/geometry.hpp"

namespace qfrob {

inline constexpr int kFormatVersion = 1;
// Largest dimension a definition file may declare. Algebras need room for
// N deformation parameters next to the N coordinates.
inline constexpr std::size_t kMaxDefinitionDim = 5;

enum class DefinitionKind { metric, bracket, pencil, potential_family, scalar_potential, algebra };
enum class PencilType { metric, bracket };

std::string_view to_string(DefinitionKind kind);

// A validated definition file. Entries are kept as parsed polynomial
// tensors keyed by symbol (g, b, H, ...); the accessors assemble the
// library objects and fail with the same errors the loader reports.
class Definition {
 public:
  DefinitionKind kind = DefinitionKind::metric;
  std::string name;
  std::size_t dim = 0;
  std::optional<PencilType> pencil;
  // Only meaningful for algebras: which structure the file claims.
  std::string structure = "all";

  bool has(const std::string& symbol) const { return entries_.count(symbol) != 0; }
  const Tensor<Polynomial>& entry(const std::string& symbol) const;
  Rational constant(const std::string& symbol) const;

  FlatCoordinateData flat() const;
  Metric metric(const std::string& symbol = "g") const;
  BracketCoefficients bracket(const std::string& g = "g", const std::string& b = "b",
                              const std::string& K = "K") const;
  MetricPencil metric_pencil() const;
  PotentialFamily family() const;
  ScalarPotential scalar_potential() const;
  FiniteAlgebra algebra() const;
  std::optional<BilinearForm> form() const;

 private:
  friend Definition parse_definition(std::string_view, const std::string&);
  std::map<std::string, Tensor<Polynomial>> entries_;
  std::map<std::string, Rational> constants_;
};

// Parses the text of a definition file. `source` names the file in error
// messages. Throws SchemaError, ParseError, DimensionMismatch,
// AsymmetricMetric (and DegenerateMetric for singular metrics).
Definition parse_definition(std::string_view text, const std::string& source = "<input>");
Definition load_definition(const std::filesystem::path& path);

}  // namespace qfrob
