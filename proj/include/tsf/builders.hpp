#pragma once

#include "tsf/model.hpp"
#include "tsf/storage.hpp"

namespace tsf {

struct BuildOptions {
  // When set, e[0] becomes a bounded decision variable instead of the fixed
  // constant p.e_initial. Basic families get explicit t=0 state bounds;
  // tight families bound e[0] through their period-1 rows already.
  bool e0_variable = false;
};

// Paper-numbered relations become labeled rows ("eq:bso-a[t=1]", global rows
// without the period suffix); nonnegativity and binary domains become
// variable bounds/marks. Objectives start at zero; harness code sets them.
ModelInstance build_bo(const StorageParams& p, int T, const BuildOptions& opt = {});
ModelInstance build_to(const StorageParams& p, int T, const BuildOptions& opt = {});
ModelInstance build_bor(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt = {});
ModelInstance build_tor(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt = {});
ModelInstance build_bir(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt = {});
ModelInstance build_tir(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt = {});
ModelInstance build_bof(const StorageParams& p, int T, const ReserveProfile& rp,
                        const BuildOptions& opt = {});

// Dispatch on family; rp ignored by BO/TO.
ModelInstance build_family(Family f, const StorageParams& p, int T,
                           const ReserveProfile& rp = {}, const BuildOptions& opt = {});

} // namespace tsf
