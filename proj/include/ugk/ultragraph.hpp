#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ugk/epset.hpp"

namespace ugk {

/// n -> coef*n + offset. Offsets may be negative as long as every value
/// taken on the schema's domain is a natural number.
struct Affine {
  Natural coef = 0;
  std::int64_t offset = 0;

  std::optional<Natural> eval(Natural n) const;
  bool is_constant() const { return coef == 0; }
  std::string to_string() const;
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// One declaration of the ultragraph DSL: either a single edge (`edge`) or
/// a family of edges indexed by an EP set (`family`).
struct EdgeSchema {
  std::string name;
  bool family = false;
  EPSet domain = EPSet::singleton(0);
  Affine source;
  std::vector<Affine> range_terms;
  EPSet range_const;

  friend bool operator==(const EdgeSchema&, const EdgeSchema&) = default;
};

struct EdgeRef {
  std::uint32_t schema = 0;
  Natural index = 0;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

using EdgeSet = std::set<EdgeRef>;

struct Presentation {
  EPSet universe;
  std::vector<EdgeSchema> schemas;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct Diagnostic {
  enum class Kind { BadSchema, EmptyRange, OutsideUniverse, NoSink, RfumViolation };
  Kind kind;
  std::string message;
  std::optional<Natural> vertex;
  std::optional<EdgeRef> edge;
};

std::string to_string(Diagnostic::Kind kind);

/// An element of the generalized-vertex lattice together with its
/// decomposition into minimal infinite emitters plus a finite vertex set.
/// `mies` lists every minimal infinite emitter contained in `set`.
struct GeneralizedVertex {
  EPSet set;
  std::vector<int> mies;
  EPSet finite_part;

  bool is_minimal_infinite_emitter() const { return mies.size() == 1 && finite_part.is_empty(); }
  friend bool operator==(const GeneralizedVertex& a, const GeneralizedVertex& b) { return a.set == b.set; }
};

/// A finitely presented ultragraph with no sinks. Construction never throws
/// on semantic problems; call validate() / require_valid() for those.
class Ultragraph {
 public:
  explicit Ultragraph(Presentation presentation);

  const Presentation& presentation() const { return pres_; }
  const EPSet& vertices() const { return pres_.universe; }
  std::size_t schema_count() const { return pres_.schemas.size(); }
  const EdgeSchema& schema(std::size_t i) const { return pres_.schemas.at(i); }

  std::vector<Diagnostic> validate() const;
  bool is_valid() const { return validate().empty(); }
  /// Throws ValidationError carrying the first diagnostic.
  void require_valid() const;

  bool has_edge(EdgeRef e) const;
  Natural source(EdgeRef e) const;
  EPSet range(EdgeRef e) const;
  std::string edge_name(EdgeRef e) const;
  std::optional<std::uint32_t> find_schema(const std::string& name) const;

  /// Range part shared by every member of schema `s`: the constant set plus
  /// all constant affine terms.
  const EPSet& core(std::size_t s) const { return norm_.at(s).core; }
  const std::vector<Affine>& moving_terms(std::size_t s) const { return norm_.at(s).moving; }

  /// Per schema: indices n with s(e_n) in A.
  std::vector<EPSet> epsilon(const EPSet& a) const;
  bool epsilon_is_infinite(const EPSet& a) const;
  /// Edges with source in A, schema order then index, at most `cap` per
  /// schema. `truncated` is set when some schema had more.
  std::vector<EdgeRef> out_edges(const EPSet& a, std::size_t cap, bool* truncated = nullptr) const;
  /// All edges with source in A; throws when there are infinitely many.
  std::vector<EdgeRef> out_edges_all(const EPSet& a) const;
  /// Per schema: indices n with v in r(e_n).
  std::vector<EPSet> edges_into(Natural v) const;
  std::vector<EPSet> edges_between(Natural v, Natural w) const;
  /// Per schema: indices n with S contained in r(e_n).
  std::vector<EPSet> edges_with_range_containing(const EPSet& s) const;
  /// Per schema: indices n with r(e_n) meeting S.
  std::vector<EPSet> edges_with_range_meeting(const EPSet& s) const;
  /// Union of the sources of the given per-schema index sets.
  EPSet sources_of(const std::vector<EPSet>& indices) const;
  /// Vertices lying in at least one range (i.e. not sources).
  const EPSet& non_sources() const { return non_sources_; }

  const std::vector<Natural>& infinite_emitter_vertices() const { return ie_vertices_; }
  bool is_infinite_emitter_vertex(Natural v) const;

  /// Minimal infinite emitters ordered by canonical EPSet fields; the id
  /// of an emitter is its position (`mie#k`).
  const std::vector<EPSet>& mie_sets() const { return mies_; }
  std::vector<GeneralizedVertex> minimal_infinite_emitters() const;
  GeneralizedVertex mie(int id) const;
  std::optional<int> mie_id(const EPSet& set) const;
  static std::string mie_name(int id) { return "mie#" + std::to_string(id); }

  /// Ids of the minimal infinite emitters contained in B.
  std::vector<int> mies_within(const EPSet& b) const;
  /// Decomposes B as a union of minimal infinite emitters and a finite set;
  /// nullopt when B is empty, leaves the vertex set, or the remainder is
  /// infinite.
  std::optional<GeneralizedVertex> decompose(const EPSet& b) const;
  /// Like decompose but throws ValidationError on failure.
  GeneralizedVertex gv(const EPSet& b) const;

  /// Elements of the intersection semilattice generated by schema cores
  /// and exact ranges of single edges.
  const std::vector<EPSet>& core_semilattice() const { return semilattice_; }

  /// Vertex bound below which every EP predicate of the presentation has
  /// shown its periodic behaviour; used for scans over all vertices.
  Natural window() const { return window_; }
  std::vector<Natural> window_vertices() const { return pres_.universe.enumerate_up_to(window_); }

 private:
  struct NormalizedSchema {
    EPSet core;
    std::vector<Affine> moving;
  };

  void compute_mies();

  Presentation pres_;
  std::vector<NormalizedSchema> norm_;
  std::vector<Natural> ie_vertices_;
  std::vector<EPSet> semilattice_;
  std::vector<EPSet> mies_;
  EPSet non_sources_;
  Natural window_ = 0;
};

/// rfum_check: empty when every edge range decomposes.
std::vector<Diagnostic> rfum_check(const Ultragraph& g);

}  // namespace ugk
