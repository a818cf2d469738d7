#include "eac/worked_example.hpp"

namespace eac::worked_example {

namespace {
ElemSet s(std::initializer_list<int> elems) { return ElemSet::of(elems); }
}  // namespace

OrderedMatroid matroid() {
  return OrderedMatroid::from_bases(
      5, {s({1, 2, 4}), s({1, 2, 5}), s({1, 3, 4}), s({1, 3, 5}),
          s({2, 3, 4}), s({2, 3, 5}), s({2, 4, 5}), s({3, 4, 5})});
}

OrderedMatroid matroid_from_graph() {
  return OrderedMatroid::from_graph(
      4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
}

const std::vector<BasisActivity>& golden_activities() {
  static const std::vector<BasisActivity> rows = {
      {s({1, 2, 4}), s({}), s({3, 5}), s({1, 2, 4}), s({})},
      {s({1, 2, 5}), s({}), s({3, 4}), s({1, 2}), s({5})},
      {s({1, 3, 4}), s({}), s({2, 5}), s({1, 4}), s({3})},
      {s({1, 3, 5}), s({}), s({2, 4}), s({1}), s({3, 5})},
      {s({2, 3, 4}), s({1}), s({5}), s({4}), s({2, 3})},
      {s({2, 3, 5}), s({1}), s({4}), s({}), s({2, 3, 5})},
      {s({2, 4, 5}), s({1}), s({3}), s({2}), s({4, 5})},
      {s({3, 4, 5}), s({1, 2}), s({}), s({}), s({3, 4, 5})},
  };
  return rows;
}

const std::vector<GoldenFacet>& golden_facets() {
  static const std::vector<GoldenFacet> rows = {
      {s({1, 2, 4}), s({1, 2, 3, 4, 5}), s({1, 2, 4}), s({1, 2}), s({2, 4}),
       s({})},
      {s({1, 2, 5}), s({1, 2, 3, 4, 5}), s({1, 2, 5}), s({1, 2}), s({2, 5}),
       s({5})},
      {s({1, 3, 4}), s({1, 2, 3, 4, 5}), s({1, 3, 4}), s({1, 2}), s({3, 4}),
       s({3})},
      {s({1, 3, 5}), s({1, 2, 3, 4, 5}), s({1, 3, 5}), s({1, 2}), s({3, 5}),
       s({3, 5})},
      {s({2, 3, 4}), s({2, 3, 4, 5}), s({1, 2, 3, 4}), s({2}), s({2, 3, 4}),
       s({2, 3})},
      {s({2, 3, 5}), s({2, 3, 4, 5}), s({1, 2, 3, 5}), s({2}), s({2, 3, 5}),
       s({2, 3, 5})},
      {s({2, 4, 5}), s({2, 3, 4, 5}), s({1, 2, 4, 5}), s({2}), s({2, 4, 5}),
       s({4, 5})},
      {s({3, 4, 5}), s({3, 4, 5}), s({1, 2, 3, 4, 5}), s({}),
       s({2, 3, 4, 5}), s({3, 4, 5})},
  };
  return rows;
}

ElemSet cone_plain() { return s({3, 4, 5}); }
ElemSet cone_barred() { return s({1}); }
ElemSet golden_aea() { return s({1}); }
ElemSet golden_aep() { return s({3, 4, 5}); }

const std::vector<GoldenNonface>& golden_nonfaces() {
  static const std::vector<GoldenNonface> faces = {
      {s({1}), s({2, 3})},
      {s({1}), s({4, 5})},
      {s({2}), s({3, 4, 5})},
  };
  return faces;
}

const TuttePolynomial& golden_tutte() {
  // x^3 + 2x^2 + x + 2xy + y + y^2
  static const TuttePolynomial t({{3, 0, 1},
                                  {2, 0, 2},
                                  {1, 0, 1},
                                  {1, 1, 2},
                                  {0, 1, 1},
                                  {0, 2, 1}});
  return t;
}

const std::vector<long long>& golden_h() {
  static const std::vector<long long> h = {1, 2, 3, 2};
  return h;
}

const std::vector<ElemSet>& control_order_ext() {
  static const std::vector<ElemSet> order = {
      s({1, 2, 4}), s({1, 3, 5}), s({1, 2, 5}), s({1, 3, 4}),
      s({2, 3, 4}), s({2, 3, 5}), s({2, 4, 5}), s({3, 4, 5})};
  return order;
}

const std::vector<ElemSet>& control_order_int() {
  static const std::vector<ElemSet> order = {
      s({1, 2, 4}), s({1, 2, 5}), s({1, 3, 4}), s({1, 3, 5}),
      s({2, 4, 5}), s({3, 4, 5}), s({2, 3, 4}), s({2, 3, 5})};
  return order;
}

std::vector<int> as_indices(const OrderedMatroid& m,
                            const std::vector<ElemSet>& order) {
  std::vector<int> idx;
  idx.reserve(order.size());
  for (const ElemSet& b : order) {
    int i = m.basis_index(b);
    if (i < 0) fail(Errc::WrongBasisSet, b.to_string() + " is not a basis");
    idx.push_back(i);
  }
  return idx;
}

}  // namespace eac::worked_example
