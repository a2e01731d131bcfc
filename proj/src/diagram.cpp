#include "superbrauer/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace superbrauer {

BrauerDiagram::BrauerDiagram(std::size_t p, std::size_t q,
                             std::vector<Arc> arcs)
    : p_(p), q_(q), arcs_(std::move(arcs)) {
  if ((p_ + q_) % 2 != 0)
    throw std::invalid_argument("diagram needs an even number of points");
  if (arcs_.size() * 2 != p_ + q_)
    throw std::invalid_argument("diagram is not a perfect matching");
  std::vector<bool> seen(p_ + q_, false);
  for (auto& arc : arcs_) {
    if (arc.first > arc.second) std::swap(arc.first, arc.second);
    if (arc.second >= p_ + q_ || arc.first == arc.second)
      throw std::invalid_argument("arc endpoint out of range");
    if (seen[arc.first] || seen[arc.second])
      throw std::invalid_argument("diagram is not a perfect matching");
    seen[arc.first] = seen[arc.second] = true;
  }
  std::sort(arcs_.begin(), arcs_.end());
}

std::uint32_t BrauerDiagram::partner(std::uint32_t point) const {
  for (const auto& arc : arcs_) {
    if (arc.first == point) return arc.second;
    if (arc.second == point) return arc.first;
  }
  throw std::out_of_range("point not in diagram");
}

bool BrauerDiagram::operator==(const BrauerDiagram& other) const {
  return p_ == other.p_ && q_ == other.q_ && arcs_ == other.arcs_;
}

bool BrauerDiagram::operator<(const BrauerDiagram& other) const {
  if (p_ != other.p_) return p_ < other.p_;
  if (q_ != other.q_) return q_ < other.q_;
  return arcs_ < other.arcs_;
}

namespace {

void enumerate_matchings(std::vector<std::uint32_t>& free_points,
                         std::vector<BrauerDiagram::Arc>& partial,
                         std::size_t p, std::size_t q,
                         std::vector<BrauerDiagram>& out) {
  if (free_points.empty()) {
    out.emplace_back(p, q, partial);
    return;
  }
  // Always matching the smallest free point with each larger one in order
  // makes the output lexicographic on sorted arc lists.
  std::uint32_t first = free_points.front();
  for (std::size_t k = 1; k < free_points.size(); ++k) {
    std::uint32_t second = free_points[k];
    std::vector<std::uint32_t> rest;
    rest.reserve(free_points.size() - 2);
    for (std::size_t j = 1; j < free_points.size(); ++j)
      if (j != k) rest.push_back(free_points[j]);
    partial.emplace_back(first, second);
    enumerate_matchings(rest, partial, p, q, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<BrauerDiagram> enumerate_diagrams(std::size_t p, std::size_t q) {
  if ((p + q) % 2 != 0) return {};
  std::vector<std::uint32_t> points(p + q);
  for (std::size_t i = 0; i < p + q; ++i) points[i] = i;
  std::vector<BrauerDiagram::Arc> partial;
  std::vector<BrauerDiagram> out;
  enumerate_matchings(points, partial, p, q, out);
  return out;
}

HomElement HomElement::of(const BrauerDiagram& d, long long delta,
                          const Rational& coeff) {
  HomElement x(d.p(), d.q(), delta);
  x.add_term(d, coeff);
  return x;
}

Rational HomElement::coeff(const BrauerDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomElement::add_term(const BrauerDiagram& d, const Rational& coeff) {
  if (d.p() != p_ || d.q() != q_)
    throw std::invalid_argument("hom element arity mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

HomElement HomElement::operator+(const HomElement& other) const {
  if (p_ != other.p_ || q_ != other.q_ || delta_ != other.delta_)
    throw std::invalid_argument("hom element arity or parameter mismatch");
  HomElement result = *this;
  for (const auto& [d, c] : other.terms_) result.add_term(d, c);
  return result;
}

HomElement HomElement::operator-(const HomElement& other) const {
  if (p_ != other.p_ || q_ != other.q_ || delta_ != other.delta_)
    throw std::invalid_argument("hom element arity or parameter mismatch");
  HomElement result = *this;
  for (const auto& [d, c] : other.terms_) result.add_term(d, -c);
  return result;
}

HomElement HomElement::operator*(const Rational& scalar) const {
  HomElement result(p_, q_, delta_);
  if (scalar == 0) return result;
  for (const auto& [d, c] : terms_) result.add_term(d, c * scalar);
  return result;
}

bool HomElement::operator==(const HomElement& other) const {
  return p_ == other.p_ && q_ == other.q_ && delta_ == other.delta_ &&
         terms_ == other.terms_;
}

StackedComposition stack_diagrams(const BrauerDiagram& top,
                                  const BrauerDiagram& bottom) {
  if (top.p() != bottom.q())
    throw std::invalid_argument("composition arity mismatch");
  const std::size_t p = bottom.p(), q = bottom.q(), t = top.q();

  // Combined point set: bottom sources 0..p-1, middle 0..q-1, top targets
  // 0..t-1. Walk from each boundary point through alternating arcs.
  // Encode: bottom source i -> i; middle j -> p + j; top target k -> p+q+k.
  auto bottom_partner = [&](std::uint32_t point) {
    return bottom.partner(point);
  };
  auto top_partner = [&](std::uint32_t point) { return top.partner(point); };

  std::vector<bool> visited_middle(q, false);
  std::vector<BrauerDiagram::Arc> arcs;

  auto walk = [&](std::uint32_t start_boundary) -> std::uint32_t {
    // start_boundary: combined label of a bottom source or top target.
    // Returns the combined label of the boundary point reached.
    bool in_bottom = start_boundary < p;
    std::uint32_t point = in_bottom
                              ? start_boundary
                              : static_cast<std::uint32_t>(
                                    q + (start_boundary - (p + q)));
    // `point` is a point label inside the current diagram
    // (bottom: sources 0..p-1, targets p..p+q-1 are middles;
    //  top: sources 0..q-1 are middles, targets q..q+t-1).
    while (true) {
      std::uint32_t partner =
          in_bottom ? bottom_partner(point) : top_partner(point);
      if (in_bottom) {
        if (partner < p) return partner;  // bottom source reached
        std::uint32_t middle = partner - p;
        visited_middle[middle] = true;
        in_bottom = false;
        point = middle;  // middles are the top diagram's sources
      } else {
        if (partner >= q)
          return static_cast<std::uint32_t>(p + q + (partner - q));
        visited_middle[partner] = true;
        in_bottom = true;
        point = static_cast<std::uint32_t>(p + partner);
      }
    }
  };

  std::vector<bool> matched(p + q + t, false);
  for (std::uint32_t b = 0; b < p + t; ++b) {
    std::uint32_t combined =
        b < p ? b : static_cast<std::uint32_t>(p + q + (b - p));
    if (matched[combined]) continue;
    std::uint32_t other = walk(combined);
    matched[combined] = matched[other] = true;
    // Final labels: sources keep 0..p-1, targets p+q+k -> p+k.
    auto final_label = [&](std::uint32_t c) {
      return c < p ? c : static_cast<std::uint32_t>(c - q);
    };
    arcs.emplace_back(final_label(combined), final_label(other));
  }

  // Any middle point not visited lies on a closed loop; each loop has an
  // even number of middle points, alternating bottom/top arcs.
  std::size_t loops = 0;
  for (std::uint32_t j = 0; j < q; ++j) {
    if (visited_middle[j]) continue;
    ++loops;
    bool in_bottom = true;  // start by crossing the bottom diagram
    std::uint32_t point = static_cast<std::uint32_t>(p + j);
    std::uint32_t middle = j;
    while (!visited_middle[middle]) {
      visited_middle[middle] = true;
      std::uint32_t partner =
          in_bottom ? bottom_partner(point) : top_partner(point);
      if (in_bottom) {
        middle = partner - p;  // loops never touch the boundary
        in_bottom = false;
        point = middle;
      } else {
        middle = partner;
        in_bottom = true;
        point = static_cast<std::uint32_t>(p + partner);
      }
    }
  }

  return {BrauerDiagram(p, t, std::move(arcs)), loops};
}

HomElement compose(const BrauerDiagram& top, const BrauerDiagram& bottom,
                   long long delta) {
  StackedComposition stacked = stack_diagrams(top, bottom);
  Rational coeff(1);
  const Rational delta_value(static_cast<long>(delta));
  for (std::size_t i = 0; i < stacked.loops; ++i) coeff *= delta_value;
  HomElement result(bottom.p(), top.q(), delta);
  result.add_term(stacked.diagram, coeff);
  return result;
}

HomElement compose(const HomElement& top, const HomElement& bottom) {
  if (top.delta() != bottom.delta())
    throw std::invalid_argument("loop parameter mismatch");
  if (top.p() != bottom.q())
    throw std::invalid_argument("composition arity mismatch");
  HomElement result(bottom.p(), top.q(), top.delta());
  for (const auto& [dt, ct] : top.terms())
    for (const auto& [db, cb] : bottom.terms()) {
      HomElement piece = compose(dt, db, top.delta());
      for (const auto& [d, c] : piece.terms()) result.add_term(d, c * ct * cb);
    }
  return result;
}

BrauerDiagram adjacent_pairing(std::size_t d) {
  std::vector<BrauerDiagram::Arc> arcs;
  arcs.reserve(d);
  for (std::uint32_t k = 0; k < d; ++k) arcs.emplace_back(2 * k, 2 * k + 1);
  return BrauerDiagram(2 * d, 0, std::move(arcs));
}

Permutation pairing_permutation(const BrauerDiagram& diagram) {
  if (diagram.q() != 0)
    throw std::invalid_argument("pairing permutation needs a 2d -> 0 diagram");
  std::vector<std::uint32_t> images(diagram.points());
  for (std::size_t k = 0; k < diagram.arcs().size(); ++k) {
    images[diagram.arcs()[k].first] = static_cast<std::uint32_t>(2 * k);
    images[diagram.arcs()[k].second] = static_cast<std::uint32_t>(2 * k + 1);
  }
  return Permutation::from_images(std::move(images));
}

BrauerDiagram permutation_diagram(const Permutation& pi) {
  const std::size_t r = pi.degree();
  std::vector<BrauerDiagram::Arc> arcs;
  arcs.reserve(r);
  for (std::uint32_t i = 0; i < r; ++i)
    arcs.emplace_back(i, static_cast<std::uint32_t>(r + pi(i)));
  return BrauerDiagram(r, r, std::move(arcs));
}

bool is_permutation_diagram(const BrauerDiagram& diagram) {
  if (diagram.p() != diagram.q()) return false;
  for (const auto& arc : diagram.arcs())
    if (arc.second < diagram.p() || arc.first >= diagram.p()) return false;
  return true;
}

Permutation diagram_permutation(const BrauerDiagram& diagram) {
  if (!is_permutation_diagram(diagram))
    throw std::invalid_argument("diagram has horizontal arcs");
  std::vector<std::uint32_t> images(diagram.p());
  for (const auto& arc : diagram.arcs())
    images[arc.first] = static_cast<std::uint32_t>(arc.second - diagram.p());
  return Permutation::from_images(std::move(images));
}

GroupAlgebraElement symmetrized_representative(const BrauerDiagram& diagram) {
  if (diagram.q() != 0 || diagram.p() % 2 != 0)
    throw std::invalid_argument("representative needs a 2d -> 0 diagram");
  std::size_t d = diagram.p() / 2;
  return hyperoctahedral_symmetrizer(d) *
         GroupAlgebraElement::of(pairing_permutation(diagram));
}

BrauerDiagram bend(const BrauerDiagram& diagram) {
  if (diagram.p() == 0)
    throw std::invalid_argument("cannot bend a diagram with no sources");
  const std::size_t p = diagram.p();
  // Source 0 becomes the new leftmost target (new label p-1); the remaining
  // sources shift down by one; old targets keep their labels.
  auto relabel = [&](std::uint32_t point) -> std::uint32_t {
    if (point == 0) return static_cast<std::uint32_t>(p - 1);
    if (point < p) return point - 1;
    return point;
  };
  std::vector<BrauerDiagram::Arc> arcs;
  arcs.reserve(diagram.arcs().size());
  for (const auto& arc : diagram.arcs())
    arcs.emplace_back(relabel(arc.first), relabel(arc.second));
  return BrauerDiagram(p - 1, diagram.q() + 1, std::move(arcs));
}

HomElement bend(const HomElement& element) {
  if (element.p() == 0)
    throw std::invalid_argument("cannot bend a diagram with no sources");
  HomElement result(element.p() - 1, element.q() + 1, element.delta());
  for (const auto& [d, c] : element.terms()) result.add_term(bend(d), c);
  return result;
}

namespace {

// Adjacent-transposition word with pi = s_{a_1} * s_{a_2} * ... * s_{a_k}
// (composition order, rightmost acts first). Bubble sort of the image array;
// swapping positions i, i+1 multiplies by s_i on the right.
std::vector<std::uint32_t> adjacent_word(const Permutation& pi) {
  std::vector<std::uint32_t> images = pi.images();
  std::vector<std::uint32_t> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      if (images[i] > images[i + 1]) {
        std::swap(images[i], images[i + 1]);
        swaps.push_back(static_cast<std::uint32_t>(i));
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

void append_permutation_letters(const Permutation& pi, GeneratorWord& word) {
  for (std::uint32_t i : adjacent_word(pi))
    word.letters.push_back({GeneratorWord::Kind::Crossing, i});
}

}  // namespace

GeneratorWord factorize(const BrauerDiagram& diagram) {
  if (diagram.p() != diagram.q())
    throw std::invalid_argument("factorize needs a d -> d diagram");
  const std::size_t d = diagram.p();

  std::vector<BrauerDiagram::Arc> bottom_arcs, top_arcs;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> through;  // (src, tgt)
  for (const auto& arc : diagram.arcs()) {
    if (arc.second < d) {
      bottom_arcs.push_back(arc);
    } else if (arc.first >= d) {
      top_arcs.emplace_back(arc.first - d, arc.second - d);
    } else {
      through.emplace_back(arc.first, arc.second - d);
    }
  }
  std::sort(top_arcs.begin(), top_arcs.end());
  std::sort(through.begin(), through.end());
  const std::size_t k = bottom_arcs.size();

  // D = sigma . E_k . tau, where E_k contracts slots (0,1), (2,3), ...,
  // (2k-2, 2k-1) and passes the remaining strands straight through.
  std::vector<std::uint32_t> tau_images(d), sigma_images(d);
  for (std::size_t i = 0; i < k; ++i) {
    tau_images[bottom_arcs[i].first] = static_cast<std::uint32_t>(2 * i);
    tau_images[bottom_arcs[i].second] = static_cast<std::uint32_t>(2 * i + 1);
    sigma_images[2 * i] = top_arcs[i].first;
    sigma_images[2 * i + 1] = top_arcs[i].second;
  }
  for (std::size_t j = 0; j < through.size(); ++j) {
    tau_images[through[j].first] = static_cast<std::uint32_t>(2 * k + j);
    sigma_images[2 * k + j] = through[j].second;
  }

  GeneratorWord word;
  word.degree = d;
  append_permutation_letters(Permutation::from_images(sigma_images), word);
  for (std::size_t i = 0; i < k; ++i)
    word.letters.push_back(
        {GeneratorWord::Kind::Contraction, static_cast<std::uint32_t>(2 * i)});
  append_permutation_letters(Permutation::from_images(tau_images), word);
  return word;
}

HomElement evaluate_word(const GeneratorWord& word, long long delta) {
  const std::size_t d = word.degree;
  HomElement result =
      HomElement::of(permutation_diagram(Permutation(d)), delta);
  for (const auto& letter : word.letters) {
    BrauerDiagram next = [&] {
      if (letter.kind == GeneratorWord::Kind::Crossing)
        return permutation_diagram(
            Permutation::transposition(d, letter.index, letter.index + 1));
      // Contraction: horizontal arcs at slots (i, i+1) on both boundaries.
      std::vector<BrauerDiagram::Arc> arcs;
      arcs.emplace_back(letter.index, letter.index + 1);
      arcs.emplace_back(d + letter.index, d + letter.index + 1);
      for (std::uint32_t j = 0; j < d; ++j)
        if (j != letter.index && j != letter.index + 1)
          arcs.emplace_back(j, static_cast<std::uint32_t>(d + j));
      return BrauerDiagram(d, d, std::move(arcs));
    }();
    result = compose(result, HomElement::of(next, delta));
  }
  return result;
}

HomElement hom_from_group_algebra(const GroupAlgebraElement& x,
                                  long long delta) {
  HomElement result(x.degree(), x.degree(), delta);
  for (const auto& [p, c] : x.terms()) result.add_term(permutation_diagram(p), c);
  return result;
}

GroupAlgebraElement group_algebra_from_hom(const HomElement& x) {
  if (x.p() != x.q())
    throw std::invalid_argument("not a square hom element");
  GroupAlgebraElement result(x.p());
  for (const auto& [d, c] : x.terms())
    result.add_term(diagram_permutation(d), c);
  return result;
}

}  // namespace superbrauer
