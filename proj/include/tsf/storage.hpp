#pragma once

#include "tsf/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tsf {

enum class Family { BO, TO, BOR, TOR, BIR, TIR, BOF };

std::string family_name(Family f);
Family family_parse(const std::string& s);  // case-insensitive; throws std::invalid_argument
bool family_has_reserves(Family f);         // BOR/TOR/BOF (four-way split only in BOR/TOR)
bool family_has_investment(Family f);       // BIR/TIR
bool family_is_tight(Family f);             // TO/TOR/TIR
Family family_basic_of(Family f);           // TO->BO, TOR->BOR, TIR->BIR, identity otherwise
Family family_tight_of(Family f);           // BO->TO, BOR->TOR, BIR->TIR; BOF has none (throws)

// Every storage parameter symbol. JSON keys use the field names below.
struct StorageParams {
  Rat E_min = 0;          // minimum storage level, MWh
  Rat E_max = 0;          // maximum storage level, MWh
  Rat P_C_max = 0;        // charge capacity, MW
  Rat P_D_max = 0;        // discharge capacity, MW
  Rat eta_C = 1;          // charging efficiency, (0,1]
  Rat eta_D = 1;          // discharging efficiency, (0,1]
  Rat delta_t = 1;        // period length, hours
  Rat R_up = 0;           // up-reserve cap, MW
  Rat R_down = 0;         // down-reserve cap, MW
  Rat E0_installed = 0;   // installed max storage level, MWh (investment families)
  Rat PC0_installed = 0;  // installed charge capacity, MW
  Rat PD0_installed = 0;  // installed discharge capacity, MW
  Rat C_max = 0;          // investable charge capacity, MW
  Rat D_max = 0;          // investable discharge capacity, MW
  Rat E_invest_max = 0;   // investable storage capacity, MWh
  Rat theta = 0;          // minimum level as fraction of maximum, [0,1)
  Rat e_initial = 0;      // state of charge entering period 1, MWh
};

// Structural checks make the models well defined (efficiencies in (0,1],
// positive period length, ordered storage levels, nonnegative capacities,
// initial state inside the box). Full additionally enforces the capacity
// cap inequalities the tightness results rest on; builders accept
// cap-violating data so that hull certification can exhibit the failure,
// while the CLI build/case paths insist on Full.
enum class ParamCheck { Full, Structural };

// Empty list iff the parameters satisfy every assumption the family relies
// on. Messages name the JSON keys of the offending fields.
std::vector<std::string> validate_params(const StorageParams& p, Family f,
                                         ParamCheck mode = ParamCheck::Full);

struct InvalidParams : std::runtime_error {
  std::vector<std::string> violations;
  explicit InvalidParams(std::vector<std::string> v);
};

// Per-period minimum reserve requirements; empty vectors mean zero minima.
struct ReserveProfile {
  std::vector<Rat> r_up_min;
  std::vector<Rat> r_down_min;

  Rat up_at(int t) const;    // t is 1-based
  Rat down_at(int t) const;
};

} // namespace tsf
