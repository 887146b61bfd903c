#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "liekv/corpus.hpp"
#include "liekv/lie_algebra.hpp"

namespace liekv::test {

inline Vector vec(std::initializer_list<const char*> entries) {
  Vector v;
  for (const char* e : entries) v.push_back(parse_scalar(e));
  return v;
}

inline Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

struct Entry {
  std::size_t i, j, k;
  const char* c;
};

inline LieAlgebra make_algebra(std::vector<std::string> names, std::initializer_list<Entry> entries,
                               DeclaredStructure declared = {}) {
  StructureTable t = empty_table(names.size());
  std::vector<Vector> acc(names.size() * names.size(), zero_vector(names.size()));
  for (const auto& en : entries) acc[en.i * names.size() + en.j][en.k] += parse_scalar(en.c);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (!is_zero(acc[i * names.size() + j])) set_bracket(t, i, j, acc[i * names.size() + j]);
  return LieAlgebra::create(std::move(names), std::move(t), std::move(declared));
}

// [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
inline LieAlgebra so3() { return make_algebra({"e1", "e2", "e3"}, {{0, 1, 2, "1"}, {1, 2, 0, "1"}, {0, 2, 1, "-1"}}); }
// [e1,e2]=e3
inline LieAlgebra heis3() { return make_algebra({"e1", "e2", "e3"}, {{0, 1, 2, "1"}}); }
// [h,e]=2e, [h,f]=-2f, [e,f]=h
inline LieAlgebra sl2() { return make_algebra({"h", "e", "f"}, {{0, 1, 1, "2"}, {0, 2, 2, "-2"}, {1, 2, 0, "1"}}); }
// [r,x]=y, [r,y]=-x
inline LieAlgebra e2(DeclaredStructure d = {}) {
  return make_algebra({"r", "x", "y"}, {{0, 1, 2, "1"}, {0, 2, 1, "-1"}}, std::move(d));
}

inline ReductiveSpace space_of(const SpaceDocument& d) { return to_space(d); }

}  // namespace liekv::test
