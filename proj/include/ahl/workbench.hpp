#pragma once

#include "ahl/io/json_io.hpp"

#include <filesystem>
#include <memory>
#include <optional>

namespace ahl {

// Everything derived from one KL table: Hecke algebra, cells and J.
struct Workbench {
  const WeylGroup* group = nullptr;
  TableSource source;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const CellStructure> cells;
  std::shared_ptr<const JRing> jring;

  static Workbench build(const std::string& datum, int radius,
                         const std::optional<std::filesystem::path>& cache_dir = std::nullopt, int jobs = 1,
                         bool write_cache = false) {
    Workbench wb;
    wb.group = &WeylGroup::get(datum);
    wb.source = load_or_build_table(*wb.group, radius, cache_dir, jobs, write_cache);
    wb.hecke = std::make_shared<HeckeAlgebra>(wb.source.table);
    wb.cells = CellStructure::compute(wb.hecke);
    wb.jring = std::make_shared<JRing>(wb.cells);
    return wb;
  }
};

}  // namespace ahl
