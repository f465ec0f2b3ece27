#include "hypermap/reference_data.hpp"

#include <stdexcept>
#include <string>

namespace hypermap {

namespace {

constexpr RefRow kR1[] = {
    {1, 1, 1, 1ull},
};

constexpr RefRow kR2[] = {
    {1, 1, 2, 1ull},
};

constexpr RefRow kR3[] = {
    {1, 1, 1, 1ull},
    {1, 1, 3, 1ull},
    {1, 2, 2, 3ull},
};

constexpr RefRow kR4[] = {
    {1, 1, 2, 5ull},
    {1, 1, 4, 1ull},
    {1, 2, 3, 6ull},
    {2, 2, 2, 17ull},
};

constexpr RefRow kR5[] = {
    {1, 1, 1, 8ull},
    {1, 1, 3, 15ull},
    {1, 1, 5, 1ull},
    {1, 2, 2, 40ull},
    {1, 2, 4, 10ull},
    {1, 3, 3, 20ull},
    {2, 2, 3, 55ull},
};

constexpr RefRow kR6[] = {
    {1, 1, 2, 84ull},
    {1, 1, 4, 35ull},
    {1, 1, 6, 1ull},
    {1, 2, 3, 175ull},
    {1, 2, 5, 15ull},
    {1, 3, 4, 50ull},
    {2, 2, 2, 456ull},
    {2, 2, 4, 135ull},
    {2, 3, 3, 262ull},
};

constexpr RefRow kR7[] = {
    {1, 1, 1, 180ull},
    {1, 1, 3, 469ull},
    {1, 1, 5, 70ull},
    {1, 1, 7, 1ull},
    {1, 2, 2, 1183ull},
    {1, 2, 4, 560ull},
    {1, 2, 6, 21ull},
    {1, 3, 3, 1050ull},
    {1, 3, 5, 105ull},
    {1, 4, 4, 175ull},
    {2, 2, 3, 2695ull},
    {2, 2, 5, 280ull},
    {2, 3, 4, 889ull},
    {3, 3, 3, 1694ull},
};

constexpr RefRow kR13[] = {
    {1, 1, 1, 68428800ull},
    {1, 1, 3, 292271616ull},
    {1, 1, 5, 109425316ull},
    {1, 1, 7, 8691683ull},
    {1, 1, 9, 183183ull},
    {1, 1, 11, 1001ull},
    {1, 1, 13, 1ull},
    {1, 2, 2, 686597184ull},
    {1, 2, 4, 687238552ull},
    {1, 2, 6, 108452916ull},
    {1, 2, 8, 4114110ull},
    {1, 2, 10, 40040ull},
    {1, 2, 12, 78ull},
    {1, 3, 3, 1194737544ull},
    {1, 3, 5, 414918075ull},
    {1, 3, 7, 29135106ull},
    {1, 3, 9, 495495ull},
    {1, 3, 11, 1716ull},
    {1, 4, 4, 636184120ull},
    {1, 4, 6, 87933846ull},
    {1, 4, 8, 2642640ull},
    {1, 4, 10, 15730ull},
    {1, 5, 5, 125855730ull},
    {1, 5, 7, 6936930ull},
    {1, 5, 9, 70785ull},
    {1, 6, 6, 9513504ull},
    {1, 6, 8, 169884ull},
    {1, 7, 7, 226512ull},
    {2, 2, 3, 2820651496ull},
    {2, 2, 5, 988043771ull},
    {2, 2, 7, 70367479ull},
    {2, 2, 9, 1225653ull},
    {2, 2, 11, 4433ull},
    {2, 3, 4, 2646424729ull},
    {2, 3, 6, 374127663ull},
    {2, 3, 8, 11674663ull},
    {2, 3, 10, 74217ull},
    {2, 4, 5, 824962502ull},
    {2, 4, 7, 47604648ull},
    {2, 4, 9, 525525ull},
    {2, 5, 6, 93880696ull},
    {2, 5, 8, 1827683ull},
    {2, 6, 7, 3356522ull},
    {3, 3, 3, 4623070842ull},
    {3, 3, 5, 1453414846ull},
    {3, 3, 7, 85050784ull},
    {3, 3, 9, 960960ull},
    {3, 4, 4, 2239280420ull},
    {3, 4, 6, 260619268ull},
    {3, 4, 8, 5264545ull},
    {3, 5, 5, 374805834ull},
    {3, 5, 7, 14019928ull},
    {3, 6, 6, 19315114ull},
    {4, 4, 5, 582408775ull},
    {4, 4, 7, 22089600ull},
    {4, 5, 6, 44136820ull},
    {5, 5, 5, 64013222ull},
};

}  // namespace

bool has_reference(int r) { return (r >= 1 && r <= 7) || r == 13; }

std::span<const RefRow> reference_rows(int r) {
  switch (r) {
    case 1: return kR1;
    case 2: return kR2;
    case 3: return kR3;
    case 4: return kR4;
    case 5: return kR5;
    case 6: return kR6;
    case 7: return kR7;
    case 13: return kR13;
    default: return {};
  }
}

CoeffTable reference_table(int r) {
  if (!has_reference(r)) {
    throw std::domain_error("reference_table: no data for r=" + std::to_string(r));
  }
  CoeffTable t;
  t.darts = r;
  for (const RefRow& row : reference_rows(r)) {
    t.entries.emplace(std::array<int, 3>{row.v, row.e, row.f}, BigInt(row.count));
  }
  return t;
}

}  // namespace hypermap
