#include "hqft/cobordism.hpp"

#include <omp.h>

#include <array>
#include <optional>
#include <sstream>

namespace hqft {

namespace {

constexpr std::array kGenNames = {"Id",     "Swap",   "Cup", "Cap",  "Mult",   "Comult",
                                  "Pair",   "Copair", "Hol", "Flip", "Moebius"};
constexpr std::array<std::size_t, 11> kLabelCounts = {1, 2, 0, 0, 2, 2, 1, 1, 2, 1, 1};

BoundarySignature sig(std::initializer_list<GroupElement> circles) { return {circles}; }

void require_rank(const AlgebraData& A, const Generator& g) {
  if (g.pi_rank != A.pi_rank) {
    throw InputError("generator " + g.to_string() + " is labelled over a group of rank " +
                     std::to_string(g.pi_rank) + ", algebra has rank " +
                     std::to_string(A.pi_rank));
  }
}

Matrix swap_matrix(const RingDesc& ring, std::size_t ra, std::size_t rb) {
  Matrix out(ring, ra * rb, ra * rb);
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < rb; ++j) out(j * ra + i, i * rb + j) = ring.one();
  }
  return out;
}

Matrix flat_row(const Matrix& m) {
  return Matrix(m.ring(), 1, m.rows() * m.cols(),
                std::vector<Scalar>(m.entries().begin(), m.entries().end()));
}

// Small builder for the words used by surfaces and the relation suite.
CobordismWord word(std::initializer_list<Layer> layers) { return {std::vector<Layer>(layers)}; }

Layer ids(const std::vector<GroupElement>& circles) {
  Layer layer;
  for (const auto& c : circles) layer.push_back(Generator::id(c));
  return layer;
}

Layer join(Layer a, const Layer& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::string BoundarySignature::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < circles.size(); ++i) {
    if (i) out += ", ";
    out += circles[i].to_string();
  }
  return out + "]";
}

BoundarySignature concat(const BoundarySignature& a, const BoundarySignature& b) {
  BoundarySignature out = a;
  out.circles.insert(out.circles.end(), b.circles.begin(), b.circles.end());
  return out;
}

std::string_view gen_name(GenKind kind) { return kGenNames.at(static_cast<std::size_t>(kind)); }

GenKind parse_gen_name(std::string_view name) {
  for (std::size_t i = 0; i < kGenNames.size(); ++i) {
    if (name == kGenNames[i]) return static_cast<GenKind>(i);
  }
  throw InputError("unknown generator '" + std::string(name) + "'");
}

std::size_t gen_label_count(GenKind kind) {
  return kLabelCounts.at(static_cast<std::size_t>(kind));
}

Generator Generator::make(GenKind kind, std::vector<GroupElement> labels, int pi_rank) {
  if (labels.size() != gen_label_count(kind)) {
    throw InputError(std::string(gen_name(kind)) + " takes " +
                     std::to_string(gen_label_count(kind)) + " labels, got " +
                     std::to_string(labels.size()));
  }
  for (const auto& l : labels) {
    if (l.rank() != pi_rank) {
      throw InputError("label " + l.to_string() + " does not have rank " +
                       std::to_string(pi_rank));
    }
  }
  return Generator{kind, std::move(labels), pi_rank};
}

Generator Generator::id(const GroupElement& a) { return make(GenKind::Id, {a}, a.rank()); }
Generator Generator::swap(const GroupElement& a, const GroupElement& b) {
  return make(GenKind::Swap, {a, b}, a.rank());
}
Generator Generator::cup(int pi_rank) { return make(GenKind::Cup, {}, pi_rank); }
Generator Generator::cap(int pi_rank) { return make(GenKind::Cap, {}, pi_rank); }
Generator Generator::mult(const GroupElement& a, const GroupElement& b) {
  return make(GenKind::Mult, {a, b}, a.rank());
}
Generator Generator::comult(const GroupElement& a, const GroupElement& b) {
  return make(GenKind::Comult, {a, b}, a.rank());
}
Generator Generator::pair(const GroupElement& a) { return make(GenKind::Pair, {a}, a.rank()); }
Generator Generator::copair(const GroupElement& a) { return make(GenKind::Copair, {a}, a.rank()); }
Generator Generator::hol(const GroupElement& a, const GroupElement& by) {
  return make(GenKind::Hol, {a, by}, a.rank());
}
Generator Generator::flip(const GroupElement& a) { return make(GenKind::Flip, {a}, a.rank()); }
Generator Generator::moebius(const GroupElement& a) {
  return make(GenKind::Moebius, {a}, a.rank());
}

BoundarySignature Generator::inputs() const {
  const GroupElement one = GroupElement::identity(pi_rank);
  switch (kind) {
    case GenKind::Id:
    case GenKind::Hol:
    case GenKind::Flip:
      return sig({labels[0]});
    case GenKind::Swap:
    case GenKind::Mult:
      return sig({labels[0], labels[1]});
    case GenKind::Cap:
      return sig({one});
    case GenKind::Comult:
      return sig({labels[0] * labels[1]});
    case GenKind::Pair:
      return sig({labels[0], labels[0]});
    case GenKind::Cup:
    case GenKind::Copair:
    case GenKind::Moebius:
      return {};
  }
  return {};
}

BoundarySignature Generator::outputs() const {
  const GroupElement one = GroupElement::identity(pi_rank);
  switch (kind) {
    case GenKind::Id:
    case GenKind::Hol:
    case GenKind::Flip:
      return sig({labels[0]});
    case GenKind::Swap:
      return sig({labels[1], labels[0]});
    case GenKind::Cup:
    case GenKind::Moebius:
      return sig({one});
    case GenKind::Mult:
      return sig({labels[0] * labels[1]});
    case GenKind::Comult:
      return sig({labels[0], labels[1]});
    case GenKind::Copair:
      return sig({labels[0], labels[0]});
    case GenKind::Cap:
    case GenKind::Pair:
      return {};
  }
  return {};
}

std::string Generator::to_string() const {
  std::string out(gen_name(kind));
  out += "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += kind == GenKind::Hol ? "; " : ", ";
    out += labels[i].to_string();
  }
  return out + ")";
}

BoundarySignature layer_inputs(const Layer& layer) {
  BoundarySignature out;
  for (const auto& g : layer) out = concat(out, g.inputs());
  return out;
}

BoundarySignature layer_outputs(const Layer& layer) {
  BoundarySignature out;
  for (const auto& g : layer) out = concat(out, g.outputs());
  return out;
}

std::pair<BoundarySignature, BoundarySignature> typecheck(const CobordismWord& w) {
  if (w.layers.empty()) return {};
  BoundarySignature source = layer_inputs(w.layers[0]);
  BoundarySignature current = layer_outputs(w.layers[0]);
  for (std::size_t i = 1; i < w.layers.size(); ++i) {
    BoundarySignature in = layer_inputs(w.layers[i]);
    if (in != current) {
      throw SignatureMismatch(i, "layer expects " + in.to_string() + " but receives " +
                                     current.to_string());
    }
    current = layer_outputs(w.layers[i]);
  }
  return {source, current};
}

CobordismWord concatenate(const CobordismWord& first, const CobordismWord& second) {
  CobordismWord out = first;
  out.layers.insert(out.layers.end(), second.layers.begin(), second.layers.end());
  typecheck(out);
  return out;
}

std::string LinearMap::to_text() const {
  std::ostringstream os;
  os << source.to_string() << " -> " << target.to_string() << '\n';
  os << matrix.rows() << "x" << matrix.cols() << '\n';
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) os << (c ? " " : "") << matrix(r, c);
    os << '\n';
  }
  return os.str();
}

std::size_t boundary_dim(const AlgebraData& A, const BoundarySignature& s) {
  std::size_t d = 1;
  for (const auto& c : s.circles) d *= A.rank(c);
  return d;
}

Matrix generator_matrix(const AlgebraData& A, const Generator& g) {
  require_rank(A, g);
  const auto& l = g.labels;
  switch (g.kind) {
    case GenKind::Id:
      return Matrix::identity(A.ring, A.rank(l[0]));
    case GenKind::Swap:
      return swap_matrix(A.ring, A.rank(l[0]), A.rank(l[1]));
    case GenKind::Cup:
      return Matrix::column(A.unit);
    case GenKind::Cap:
      return Matrix::row(A.pairing[0].apply(A.unit));
    case GenKind::Mult:
      return A.mult_block(l[0], l[1]);
    case GenKind::Comult:
      return comult_matrix(A, l[0], l[1]);
    case GenKind::Pair:
      return flat_row(A.pairing[l[0].index()]);
    case GenKind::Copair:
      return Matrix::column(copair(A, l[0]));
    case GenKind::Hol:
      return A.action_block(l[1], l[0]);
    case GenKind::Flip:
      return A.reversal_block(l[0]);
    case GenKind::Moebius:
      return Matrix::column(A.crosscap[l[0].index()]);
  }
  throw InputError("unknown generator");
}

LinearMap evaluate_layer(const AlgebraData& A, const Layer& layer) {
  Matrix m = Matrix::identity(A.ring, 1);
  for (const auto& g : layer) m = mat_tensor(m, generator_matrix(A, g));
  return {layer_inputs(layer), layer_outputs(layer), std::move(m)};
}

LinearMap evaluate(const AlgebraData& A, const CobordismWord& w) {
  auto [source, target] = typecheck(w);
  Matrix m = Matrix::identity(A.ring, boundary_dim(A, source));
  for (const auto& layer : w.layers) m = evaluate_layer(A, layer).matrix * m;
  return {std::move(source), std::move(target), std::move(m)};
}

// Surfaces ---------------------------------------------------------------------

std::string SurfaceSpec::to_string() const {
  std::string out = "handles=[";
  for (std::size_t i = 0; i < handles.size(); ++i) {
    if (i) out += ",";
    out += "(" + handles[i].first.to_string() + "," + handles[i].second.to_string() + ")";
  }
  out += "] crosscaps=[";
  for (std::size_t i = 0; i < crosscaps.size(); ++i) {
    if (i) out += ",";
    out += crosscaps[i].to_string();
  }
  return out + "]";
}

CobordismWord handle_word(const GroupElement& a, const GroupElement& b) {
  return word({{Generator::copair(a)},
               {Generator::hol(a, b), Generator::id(a)},
               {Generator::mult(a, a)}});
}

namespace {

// Appends layers that fold one more L_1 element, produced by `piece`, into
// the rightmost circle of `prefix`, which must be trivially labelled.
void fold_right(CobordismWord& w, const std::vector<GroupElement>& prefix,
                const CobordismWord& piece) {
  const GroupElement one = GroupElement::identity(prefix.back().rank());
  for (const auto& layer : piece.layers) w.layers.push_back(join(ids(prefix), layer));
  std::vector<GroupElement> rest(prefix.begin(), prefix.end() - 1);
  w.layers.push_back(join(ids(rest), {Generator::mult(one, one)}));
}

CobordismWord product_word(const std::vector<CobordismWord>& pieces,
                           const std::vector<GroupElement>& prefix, int pi_rank) {
  CobordismWord w;
  const GroupElement one = GroupElement::identity(pi_rank);
  if (pieces.empty()) {
    w.layers.push_back(join(ids(prefix), {Generator::cup(pi_rank)}));
    return w;
  }
  for (const auto& layer : pieces[0].layers) w.layers.push_back(join(ids(prefix), layer));
  std::vector<GroupElement> grown = prefix;
  grown.push_back(one);
  for (std::size_t i = 1; i < pieces.size(); ++i) fold_right(w, grown, pieces[i]);
  return w;
}

std::vector<CobordismWord> handle_pieces(const SurfaceSpec& s) {
  std::vector<CobordismWord> out;
  for (const auto& [a, b] : s.handles) out.push_back(handle_word(a, b));
  return out;
}

std::vector<CobordismWord> crosscap_pieces(const SurfaceSpec& s) {
  std::vector<CobordismWord> out;
  for (const auto& g : s.crosscaps) out.push_back(word({{Generator::moebius(g)}}));
  return out;
}

Scalar closed_value(const AlgebraData& A, const CobordismWord& w) {
  LinearMap m = evaluate(A, w);
  if (m.matrix.rows() != 1 || m.matrix.cols() != 1) {
    throw InputError("closed surface word does not evaluate to a scalar");
  }
  return m.matrix(0, 0);
}

}  // namespace

CobordismWord surface_word(const SurfaceSpec& s, int pi_rank) {
  const GroupElement one = GroupElement::identity(pi_rank);
  // 1_L times the handles.
  std::vector<CobordismWord> pieces{word({{Generator::cup(pi_rank)}})};
  for (auto& h : handle_pieces(s)) pieces.push_back(std::move(h));
  CobordismWord w = product_word(pieces, {}, pi_rank);
  if (s.crosscaps.empty()) {
    w.layers.push_back({Generator::cap(pi_rank)});
    return w;
  }
  CobordismWord thetas = product_word(crosscap_pieces(s), {one}, pi_rank);
  w.layers.insert(w.layers.end(), thetas.layers.begin(), thetas.layers.end());
  w.layers.push_back({Generator::pair(one)});
  return w;
}

Scalar surface_invariant(const AlgebraData& A, const SurfaceSpec& s) {
  return closed_value(A, surface_word(s, A.pi_rank));
}

Scalar surface_invariant_alt(const AlgebraData& A, const SurfaceSpec& s) {
  std::vector<CobordismWord> pieces = crosscap_pieces(s);
  for (auto& h : handle_pieces(s)) pieces.push_back(std::move(h));
  CobordismWord w = product_word(pieces, {}, A.pi_rank);
  w.layers.push_back({Generator::cap(A.pi_rank)});
  return closed_value(A, w);
}

bool three_crosscap_check(const AlgebraData& A, const GroupElement& a, const GroupElement& b,
                          const GroupElement& c) {
  SurfaceSpec caps{{}, {a, b, c}};
  SurfaceSpec traded{{{b * a, b * c}}, {a * b * c}};
  return surface_invariant(A, caps) == surface_invariant(A, traded);
}

std::vector<SurfaceSpec> surfaces_up_to(int pi_rank, int max_complexity) {
  std::vector<SurfaceSpec> out;
  const std::size_t order = group_order(pi_rank);
  for (int n = 0; n <= max_complexity; ++n) {
    for (int h = 0; h <= n; ++h) {
      const int c = n - h;
      const std::size_t labels = static_cast<std::size_t>(2 * h + c);
      std::size_t count = 1;
      for (std::size_t i = 0; i < labels; ++i) count *= order;
      for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<GroupElement> digits(labels);
        std::size_t rest = idx;
        for (std::size_t i = labels; i-- > 0;) {
          digits[i] = GroupElement(pi_rank, static_cast<std::uint32_t>(rest % order));
          rest /= order;
        }
        SurfaceSpec s;
        for (int k = 0; k < h; ++k) s.handles.emplace_back(digits[2 * k], digits[2 * k + 1]);
        s.crosscaps.assign(digits.begin() + 2 * h, digits.end());
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

namespace {

TableEntry table_entry(const AlgebraData& A, const SurfaceSpec& s) {
  TableEntry e{s, surface_invariant(A, s), true, {}};
  Scalar alt = surface_invariant_alt(A, s);
  if (alt != e.value) {
    e.consistent = false;
    e.detail = "alternate word gives " + alt.to_string();
  }
  if (s.crosscaps.size() >= 3) {
    const auto& g = s.crosscaps;
    SurfaceSpec traded = s;
    traded.handles.emplace_back(g[1] * g[0], g[1] * g[2]);
    traded.crosscaps.erase(traded.crosscaps.begin(), traded.crosscaps.begin() + 3);
    traded.crosscaps.insert(traded.crosscaps.begin(), g[0] * g[1] * g[2]);
    Scalar moved = surface_invariant(A, traded);
    if (moved != e.value) {
      e.consistent = false;
      if (!e.detail.empty()) e.detail += "; ";
      e.detail += "crosscap trade gives " + moved.to_string();
    }
  }
  return e;
}

}  // namespace

std::vector<TableEntry> surface_table_serial(const AlgebraData& A, int max_complexity) {
  std::vector<TableEntry> out;
  for (const auto& s : surfaces_up_to(A.pi_rank, max_complexity)) {
    out.push_back(table_entry(A, s));
  }
  return out;
}

std::vector<TableEntry> surface_table(const AlgebraData& A, int max_complexity) {
  const std::vector<SurfaceSpec> surfaces = surfaces_up_to(A.pi_rank, max_complexity);
  std::vector<std::optional<TableEntry>> slots(surfaces.size());
  std::vector<std::string> errors(surfaces.size());
  const auto n = static_cast<std::ptrdiff_t>(surfaces.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      slots[i] = table_entry(A, surfaces[i]);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  std::vector<TableEntry> out;
  out.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw Degenerate("surface " + surfaces[i].to_string() + ": " + errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

// Underlying algebra -----------------------------------------------------------

AlgebraData extract_underlying(const AlgebraData& A) {
  A.validate();
  AlgebraData out = make_blank(A.ring, A.pi_rank, A.ranks);
  out.unit = evaluate(A, word({{Generator::cup(A.pi_rank)}})).matrix.col(0);
  out.reversal = Matrix(A.ring, A.total_rank(), A.total_rank());
  for (const auto& a : A.elements()) {
    for (const auto& b : A.elements()) {
      out.mult_block(a, b) = evaluate(A, word({{Generator::mult(a, b)}})).matrix;
      out.action_block(b, a) = evaluate(A, word({{Generator::hol(a, b)}})).matrix;
    }
    const std::size_t r = A.rank(a);
    const Matrix row = evaluate(A, word({{Generator::pair(a)}})).matrix;
    out.pairing[a.index()] =
        Matrix(A.ring, r, r, std::vector<Scalar>(row.entries().begin(), row.entries().end()));
    out.crosscap[a.index()] = evaluate(A, word({{Generator::moebius(a)}})).matrix.col(0);
    const Matrix flip = evaluate(A, word({{Generator::flip(a)}})).matrix;
    const std::size_t off = A.offset(a);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) out.reversal(off + i, off + j) = flip(i, j);
    }
  }
  return out;
}

namespace {

struct Relation {
  std::string id;
  std::vector<std::size_t> grades;
  CobordismWord lhs;
  CobordismWord rhs;
  /// When set, the right-hand side is q(1) at these labels instead of a word.
  std::optional<std::array<GroupElement, 3>> q_labels;
};

std::vector<std::size_t> idx(std::initializer_list<GroupElement> gs) {
  std::vector<std::size_t> out;
  for (const auto& g : gs) out.push_back(g.index());
  return out;
}

std::vector<Relation> build_relations(const AlgebraData& A) {
  std::vector<Relation> rel;
  const int k = A.pi_rank;
  const GroupElement one = A.identity();
  const auto G = A.elements();
  auto add = [&](std::string id, std::vector<std::size_t> grades, CobordismWord lhs,
                 CobordismWord rhs) {
    rel.push_back({std::move(id), std::move(grades), std::move(lhs), std::move(rhs), {}});
  };
  const auto Id = Generator::id;
  const auto Flip = Generator::flip;
  const auto Mb = Generator::moebius;
  const auto Mult = Generator::mult;

  add("cup-flip", {}, word({{Generator::cup(k)}, {Flip(one)}}), word({{Generator::cup(k)}}));
  for (const auto& a : G) {
    add("flip-involution", idx({a}), word({{Flip(a)}, {Flip(a)}}), word({{Id(a)}}));
    add("pairing-flip", idx({a}), word({{Flip(a), Flip(a)}, {Generator::pair(a)}}),
        word({{Generator::pair(a)}}));
    add("zigzag-left", idx({a}),
        word({{Generator::copair(a), Id(a)}, {Id(a), Generator::pair(a)}}), word({{Id(a)}}));
    add("zigzag-right", idx({a}),
        word({{Id(a), Generator::copair(a)}, {Generator::pair(a), Id(a)}}), word({{Id(a)}}));
    for (const auto& b : G) {
      add("flip-antimultiplicative", idx({a, b}), word({{Mult(a, b)}, {Flip(a * b)}}),
          word({{Generator::swap(a, b)}, {Flip(b), Flip(a)}, {Mult(b, a)}}));
      add("flip-conjugates-holonomy", idx({a, b}),
          word({{Flip(a)}, {Generator::hol(a, b)}, {Flip(a)}}), word({{Generator::hol(a, b)}}));
      add("crosscap-slide", idx({a, b}), word({{Mb(b), Id(a)}, {Mult(one, a)}, {Flip(a)}}),
          word({{Mb(b * a), Id(a)}, {Mult(one, a)}, {Generator::hol(a, b * a)}}));
      add("holonomy-fixes-crosscap", idx({a, b}), word({{Mb(a)}, {Generator::hol(one, b)}}),
          word({{Mb(a)}}));
      add("comult-duality", idx({a, b}),
          word({{Generator::comult(a, b), Id(b)}, {Id(a), Generator::pair(b)}}),
          word({{Mult(a * b, b)}}));
      add("klein-x", idx({a, b}), word({{Mb(a), Mb(b)}, {Mult(one, one)}}),
          word({{Mb(b), Mb(a)}, {Mult(one, one)}}));
      add("klein-y", idx({a, b}), word({{Mb(a), Mb(b)}, {Mult(one, one)}, {Flip(one)}}),
          word({{Mb(a), Mb(b)}, {Mult(one, one)}}));
      for (const auto& c : G) {
        const GroupElement d = a * b;
        const auto grades = idx({a, b, c});
        add("comult-flip-left", grades,
            word({{Generator::comult(a, b)}, {Flip(a), Generator::hol(b, c)}, {Mult(a, b)}}),
            word({{Mb(a * c), Mb(c), Id(d)},
                  {Mult(one, one), Id(d)},
                  {Mult(one, d)},
                  {Generator::hol(d, c)}}));
        add("comult-flip-right", grades,
            word({{Generator::comult(a, b)}, {Generator::hol(a, c), Flip(b)}, {Mult(a, b)}}),
            word({{Mb(b * c), Mb(c), Id(d)},
                  {Mult(one, one), Id(d)},
                  {Mult(one, d)},
                  {Generator::hol(d, c)}}));
        add("three-crosscaps", grades,
            word({{Mb(a), Mb(b), Mb(c)}, {Mult(one, one), Id(one)}, {Mult(one, one)}}),
            word({{Generator::copair(d), Mb(a * b * c)},
                  {Generator::hol(d, b * c), Id(d), Id(one)},
                  {Mult(d, d), Id(one)},
                  {Mult(one, one)}}));
        add("handle-duality", grades,
            word({{Generator::copair(d), Id(d)},
                  {Generator::hol(d, b * c), Id(d), Id(d)},
                  {Id(d), Generator::pair(d)}}),
            word({{Generator::hol(d, b * c)}}));
        add("crosscap-factor-input", grades,
            word({{Mb(c), Id(a), Id(b)}, {Mult(one, a), Id(b)}, {Mult(a, b)}}),
            word({{Id(a), Mb(c), Id(b)}, {Id(a), Mult(one, b)}, {Mult(a, b)}}));
        add("crosscap-factor-output", grades,
            word({{Mb(c), Generator::comult(a, b)}, {Mult(one, a), Id(b)}}),
            word({{Generator::comult(a, b), Mb(c)}, {Id(a), Mult(b, one)}}));
        rel.push_back({"handle-matches-q", grades, handle_word(d, b * c), {},
                       std::array<GroupElement, 3>{a, b, c}});
      }
    }
  }
  return rel;
}

std::optional<Violation> check_relation(const AlgebraData& A, const Relation& r) {
  try {
    Matrix lhs = evaluate(A, r.lhs).matrix;
    Matrix rhs = r.q_labels ? Matrix::column(q_element(A, (*r.q_labels)[0], (*r.q_labels)[1],
                                                       (*r.q_labels)[2])
                                                 .coords)
                            : evaluate(A, r.rhs).matrix;
    if (lhs == rhs) return std::nullopt;
    return Violation{r.id, r.grades, {}, lhs.to_string(), rhs.to_string(), {}};
  } catch (const Error& ex) {
    return Violation{r.id, r.grades, {}, "-", "-", std::string("not evaluable: ") + ex.what()};
  }
}

}  // namespace

std::vector<std::string> relation_names() {
  return {"cup-flip",
          "flip-involution",
          "pairing-flip",
          "zigzag-left",
          "zigzag-right",
          "flip-antimultiplicative",
          "flip-conjugates-holonomy",
          "crosscap-slide",
          "holonomy-fixes-crosscap",
          "comult-duality",
          "klein-x",
          "klein-y",
          "comult-flip-left",
          "comult-flip-right",
          "three-crosscaps",
          "handle-duality",
          "crosscap-factor-input",
          "crosscap-factor-output",
          "handle-matches-q"};
}

AxiomReport relation_suite_serial(const AlgebraData& A) {
  AxiomReport report;
  report.tier = Tier::Extended;
  for (const auto& r : build_relations(A)) {
    if (auto v = check_relation(A, r)) report.violations.push_back(std::move(*v));
  }
  return report;
}

AxiomReport relation_suite(const AlgebraData& A) {
  const std::vector<Relation> rel = build_relations(A);
  std::vector<std::optional<Violation>> slots(rel.size());
  const auto n = static_cast<std::ptrdiff_t>(rel.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) slots[i] = check_relation(A, rel[i]);
  AxiomReport report;
  report.tier = Tier::Extended;
  for (auto& v : slots) {
    if (v) report.violations.push_back(std::move(*v));
  }
  return report;
}

}  // namespace hqft
