#include "qfrob/definition.hpp"

#include <cctype>
#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "qfrob/parser.hpp"

namespace qfrob {

std::string_view to_string(DefinitionKind kind) {
  switch (kind) {
    case DefinitionKind::metric:
      return "metric";
    case DefinitionKind::bracket:
      return "bracket";
    case DefinitionKind::pencil:
      return "pencil";
    case DefinitionKind::potential_family:
      return "potential-family";
    case DefinitionKind::scalar_potential:
      return "scalar-potential";
    case DefinitionKind::algebra:
      return "algebra";
  }
  return "?";
}

namespace {

enum class Symmetry { none, symmetric, skew };

struct Slot {
  std::size_t rank;
  bool constant_only;
  Symmetry symmetry;
};

using Schema = std::map<std::string, Slot>;

struct Line {
  std::size_t number;
  std::string key;
  std::vector<std::size_t> indices;  // 1-based, as written
  std::string value;
  std::size_t value_column;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void schema_error(const std::string& source, std::size_t line, const std::string& msg) {
  throw SchemaError(source + ":" + std::to_string(line) + ": " + msg);
}

Line split_line(const std::string& source, std::size_t number, std::string_view raw) {
  auto hash = raw.find('#');
  std::string_view body = raw.substr(0, hash);
  auto eq = body.find('=');
  if (eq == std::string_view::npos) schema_error(source, number, "expected 'key = value'");
  Line line;
  line.number = number;
  std::string lhs = trim(body.substr(0, eq));
  std::size_t vstart = eq + 1;
  while (vstart < body.size() && std::isspace(static_cast<unsigned char>(body[vstart]))) ++vstart;
  line.value = trim(body.substr(eq + 1));
  line.value_column = vstart + 1;
  if (line.value.empty()) schema_error(source, number, "missing value for '" + lhs + "'");

  auto open = lhs.find('[');
  line.key = trim(lhs.substr(0, open));
  if (line.key.empty()) schema_error(source, number, "missing key");
  for (char c : line.key)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_')
      schema_error(source, number, "invalid key '" + line.key + "'");
  if (open == std::string::npos) return line;

  if (lhs.back() != ']') schema_error(source, number, "unterminated index list in '" + lhs + "'");
  std::string inside = lhs.substr(open + 1, lhs.size() - open - 2);
  std::stringstream ss(inside);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t = trim(item);
    if (t.empty() || t.size() > 3 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      schema_error(source, number, "invalid index '" + t + "' in '" + lhs + "'");
    line.indices.push_back(std::stoul(t));
  }
  if (line.indices.empty()) schema_error(source, number, "empty index list in '" + lhs + "'");
  return line;
}

Schema schema_for(DefinitionKind kind, std::optional<PencilType> pencil) {
  const Slot sym_const{2, true, Symmetry::symmetric};
  switch (kind) {
    case DefinitionKind::metric:
      return {{"g", {2, false, Symmetry::symmetric}}, {"K", {0, true, Symmetry::none}}};
    case DefinitionKind::bracket:
      return {{"g", {2, false, Symmetry::none}},
              {"b", {3, false, Symmetry::none}},
              {"K", {0, true, Symmetry::none}},
              {"eta", sym_const}};
    case DefinitionKind::pencil:
      if (pencil == PencilType::metric)
        return {{"g1", {2, false, Symmetry::symmetric}},
                {"g2", {2, false, Symmetry::symmetric}},
                {"K1", {0, true, Symmetry::none}},
                {"K2", {0, true, Symmetry::none}}};
      return {{"g1", {2, false, Symmetry::none}}, {"b1", {3, false, Symmetry::none}},
              {"K1", {0, true, Symmetry::none}},  {"g2", {2, false, Symmetry::none}},
              {"b2", {3, false, Symmetry::none}}, {"K2", {0, true, Symmetry::none}}};
    case DefinitionKind::potential_family:
      return {{"eta", sym_const}, {"H", {1, false, Symmetry::none}}, {"K1", {0, true, Symmetry::none}}};
    case DefinitionKind::scalar_potential:
      return {{"eta", sym_const},
              {"phi", {0, false, Symmetry::none}},
              {"c", {2, true, Symmetry::skew}},
              {"K1", {0, true, Symmetry::none}}};
    case DefinitionKind::algebra:
      return {{"f", {3, false, Symmetry::none}}, {"form", {2, false, Symmetry::symmetric}}};
  }
  return {};
}

std::vector<std::string> required_for(DefinitionKind kind) {
  switch (kind) {
    case DefinitionKind::metric:
    case DefinitionKind::bracket:
      return {"g"};
    case DefinitionKind::pencil:
      return {"g1", "g2"};
    case DefinitionKind::potential_family:
      return {"H"};
    case DefinitionKind::scalar_potential:
      return {"phi"};
    case DefinitionKind::algebra:
      return {"f"};
  }
  return {};
}

DefinitionKind parse_kind(const std::string& source, const Line& line) {
  static const std::map<std::string, DefinitionKind> kinds = {
      {"metric", DefinitionKind::metric},
      {"bracket", DefinitionKind::bracket},
      {"pencil", DefinitionKind::pencil},
      {"potential-family", DefinitionKind::potential_family},
      {"scalar-potential", DefinitionKind::scalar_potential},
      {"algebra", DefinitionKind::algebra},
  };
  auto it = kinds.find(line.value);
  if (it == kinds.end()) schema_error(source, line.number, "unknown kind '" + line.value + "'");
  return it->second;
}

}  // namespace

Definition parse_definition(std::string_view text, const std::string& source) {
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      std::string_view stripped = raw.substr(0, raw.find('#'));
      if (!trim(stripped).empty()) lines.push_back(split_line(source, number, raw));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  // Header fields first; everything else needs dim and kind.
  static const std::set<std::string> header = {"format-version", "kind", "dim", "name", "pencil-type", "structure"};
  std::map<std::string, const Line*> head;
  for (const Line& l : lines) {
    if (!header.count(l.key)) continue;
    if (!l.indices.empty()) schema_error(source, l.number, "'" + l.key + "' takes no indices");
    if (head.count(l.key)) schema_error(source, l.number, "duplicate '" + l.key + "'");
    head[l.key] = &l;
  }
  if (!head.count("format-version")) throw SchemaError(source + ": missing 'format-version'");
  if (head["format-version"]->value != std::to_string(kFormatVersion))
    schema_error(source, head["format-version"]->number,
                 "unsupported format-version '" + head["format-version"]->value + "' (expected " +
                     std::to_string(kFormatVersion) + ")");
  if (!head.count("kind")) throw SchemaError(source + ": missing 'kind'");
  if (!head.count("dim")) throw SchemaError(source + ": missing 'dim'");

  Definition def;
  def.kind = parse_kind(source, *head["kind"]);
  {
    const Line& l = *head["dim"];
    bool digits = l.value.size() <= 2 &&
                  std::all_of(l.value.begin(), l.value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    std::size_t n = digits ? std::stoul(l.value) : 0;
    if (n < 1 || n > kMaxDefinitionDim)
      schema_error(source, l.number, "dim must be an integer in 1.." + std::to_string(kMaxDefinitionDim));
    def.dim = n;
  }
  if (head.count("name")) def.name = head["name"]->value;
  if (def.kind == DefinitionKind::pencil) {
    if (!head.count("pencil-type")) throw SchemaError(source + ": pencil definitions need 'pencil-type'");
    const Line& l = *head["pencil-type"];
    if (l.value == "metric")
      def.pencil = PencilType::metric;
    else if (l.value == "bracket")
      def.pencil = PencilType::bracket;
    else
      schema_error(source, l.number, "pencil-type must be 'metric' or 'bracket'");
  } else if (head.count("pencil-type")) {
    schema_error(source, head["pencil-type"]->number, "'pencil-type' only applies to pencils");
  }
  if (head.count("structure")) {
    const Line& l = *head["structure"];
    if (def.kind != DefinitionKind::algebra) schema_error(source, l.number, "'structure' only applies to algebras");
    static const std::set<std::string> structures = {"all", "quasi-frobenius", "frobenius", "novikov"};
    if (!structures.count(l.value)) schema_error(source, l.number, "unknown structure '" + l.value + "'");
    def.structure = l.value;
  }

  const Schema schema = schema_for(def.kind, def.pencil);
  const VariableNames names = coordinate_names(def.dim);
  // given[symbol] holds the flat positions written explicitly.
  std::map<std::string, std::set<std::size_t>> given;
  for (const Line& l : lines) {
    if (header.count(l.key)) continue;
    auto slot_it = schema.find(l.key);
    if (slot_it == schema.end())
      schema_error(source, l.number, "unknown entry '" + l.key + "' for kind " + std::string(to_string(def.kind)));
    const Slot& slot = slot_it->second;
    if (l.indices.size() != slot.rank)
      throw DimensionMismatch(source + ":" + std::to_string(l.number) + ": '" + l.key + "' takes " +
                              std::to_string(slot.rank) + " indices, got " + std::to_string(l.indices.size()));
    for (std::size_t ix : l.indices)
      if (ix < 1 || ix > def.dim)
        throw DimensionMismatch(source + ":" + std::to_string(l.number) + ": index " + std::to_string(ix) +
                                " out of range 1.." + std::to_string(def.dim));

    Polynomial value;
    try {
      value = parse_expression(l.value, names, SourcePosition{l.number, l.value_column});
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), source + ":" + e.what());
    }
    if (slot.constant_only && !value.is_constant())
      schema_error(source, l.number, "'" + l.key + "' must be a rational constant");

    if (slot.rank == 0 && slot.constant_only) {
      if (def.constants_.count(l.key)) schema_error(source, l.number, "duplicate '" + l.key + "'");
      def.constants_[l.key] = value.constant_term();
      continue;
    }
    auto [it, fresh] = def.entries_.try_emplace(l.key, def.dim, slot.rank);
    (void)fresh;
    std::size_t flat = 0;
    for (std::size_t ix : l.indices) flat = flat * def.dim + (ix - 1);
    if (!given[l.key].insert(flat).second) schema_error(source, l.number, "duplicate entry for '" + l.key + "'");
    it->second.flat(flat) = std::move(value);
  }

  // Mirror one-sided off-diagonal entries of symmetric and skew matrices;
  // two-sided entries must agree.
  for (auto& [symbol, tensor] : def.entries_) {
    const Slot& slot = schema.at(symbol);
    if (slot.symmetry == Symmetry::none) continue;
    const auto& seen = given[symbol];
    for (std::size_t i = 0; i < def.dim; ++i)
      for (std::size_t j = i; j < def.dim; ++j) {
        std::size_t ij = i * def.dim + j, ji = j * def.dim + i;
        bool has_ij = seen.count(ij) != 0, has_ji = seen.count(ji) != 0;
        std::string where = source + ": " + symbol + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
        if (slot.symmetry == Symmetry::symmetric) {
          if (has_ij && !has_ji) tensor(j, i) = tensor(i, j);
          if (has_ji && !has_ij) tensor(i, j) = tensor(j, i);
          if (!(tensor(i, j) - tensor(j, i)).is_zero()) throw AsymmetricMetric(where + " is not symmetric");
        } else {
          if (i == j && !tensor(i, i).is_zero()) throw SchemaError(where + " must vanish (c is skew)");
          if (has_ij && !has_ji) tensor(j, i) = -tensor(i, j);
          if (has_ji && !has_ij) tensor(i, j) = -tensor(j, i);
          if (!(tensor(i, j) + tensor(j, i)).is_zero()) throw SchemaError(where + " breaks skew symmetry");
        }
      }
  }

  for (const std::string& symbol : required_for(def.kind))
    if (!def.entries_.count(symbol)) throw SchemaError(source + ": missing entry '" + symbol + "'");

  // Build the library objects once so that semantic errors surface at load.
  switch (def.kind) {
    case DefinitionKind::metric:
      def.metric();
      break;
    case DefinitionKind::bracket:
      def.bracket();
      def.flat();
      break;
    case DefinitionKind::pencil:
      if (def.pencil == PencilType::metric)
        def.metric_pencil();
      else
        def.bracket("g1", "b1", "K1"), def.bracket("g2", "b2", "K2");
      break;
    case DefinitionKind::potential_family:
      def.family();
      break;
    case DefinitionKind::scalar_potential:
      def.scalar_potential();
      break;
    case DefinitionKind::algebra:
      def.algebra();
      def.form();
      break;
  }
  return def;
}

Definition load_definition(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_definition(ss.str(), path.filename().string());
}

const Tensor<Polynomial>& Definition::entry(const std::string& symbol) const {
  auto it = entries_.find(symbol);
  if (it == entries_.end()) throw SchemaError("definition has no entry '" + symbol + "'");
  return it->second;
}

Rational Definition::constant(const std::string& symbol) const {
  auto it = constants_.find(symbol);
  return it == constants_.end() ? Rational(0) : it->second;
}

FlatCoordinateData Definition::flat() const {
  if (!has("eta")) return FlatCoordinateData::identity(dim);
  return FlatCoordinateData(entry("eta").map([](const Polynomial& p) { return p.constant_term(); }));
}

Metric Definition::metric(const std::string& symbol) const { return Metric(entry(symbol)); }

BracketCoefficients Definition::bracket(const std::string& g, const std::string& b, const std::string& K) const {
  auto lift = [](const Polynomial& p) { return RationalFunction(p); };
  Tensor<RationalFunction> bt = has(b) ? entry(b).map(lift) : Tensor<RationalFunction>(dim, 3);
  return BracketCoefficients(entry(g).map(lift), std::move(bt), RationalFunction(constant(K)));
}

MetricPencil Definition::metric_pencil() const {
  return MetricPencil{metric("g1"), metric("g2"), constant("K1"), constant("K2")};
}

PotentialFamily Definition::family() const {
  const auto& h = entry("H");
  return PotentialFamily(flat(), std::vector<Polynomial>(h.data().begin(), h.data().end()), constant("K1"));
}

ScalarPotential Definition::scalar_potential() const {
  Matrix<Rational> c(dim, 2);
  if (has("c")) c = entry("c").map([](const Polynomial& p) { return p.constant_term(); });
  return ScalarPotential{flat(), entry("phi").flat(0), std::move(c), constant("K1")};
}

FiniteAlgebra Definition::algebra() const {
  return FiniteAlgebra(entry("f").map([](const Polynomial& p) { return RationalFunction(p); }));
}

std::optional<BilinearForm> Definition::form() const {
  if (!has("form")) return std::nullopt;
  return BilinearForm(entry("form").map([](const Polynomial& p) { return RationalFunction(p); }));
}

}  // namespace qfrob
