#include "morrey/space.hpp"

#include <cmath>

#include "morrey/errors.hpp"

namespace morrey {

namespace {

void check_weighted(const SpaceSpec& spec) {
  if (!spec.phi) throw config_error("this scale requires a weight");
  if (spec.phi->d != spec.d)
    throw config_error("weight dimension does not match the space");
  if (!(spec.p > 0) || is_pos_inf(spec.p))
    throw config_error("integrability p must be finite positive");
  if (!(spec.q > 0)) throw config_error("fine index q must be positive or inf");
  const GpReport rep = validate_gp(*spec.phi, spec.p, 24);
  if (!rep.monotone_ok || !rep.gp_ok)
    throw config_error("weight fails the admissibility conditions at this p");
}

}  // namespace

void validate_space(const SpaceSpec& spec) {
  if (spec.d < 1 || spec.d > 4) throw config_error("dimension must be in 1..4");
  if (!std::isfinite(spec.s)) throw config_error("smoothness s must be finite");
  switch (spec.scale) {
    case Scale::N:
    case Scale::B:
      check_weighted(spec);
      return;
    case Scale::E:
      check_weighted(spec);
      if (!is_pos_inf(spec.q) && !intc_satisfiable(*spec.phi))
        throw config_error(
            "finite q needs a weight with strictly positive decay exponent");
      return;
    case Scale::M:
      check_weighted(spec);
      return;
    case Scale::classical_besov:
      if (spec.phi) throw config_error("classical scale takes no weight");
      if (!(spec.p > 0)) throw config_error("p must be positive or inf");
      if (!(spec.q > 0)) throw config_error("q must be positive or inf");
      return;
    case Scale::Lr:
      if (spec.phi) throw config_error("Lebesgue target takes no weight");
      if (!(spec.r >= 1)) throw config_error("Lebesgue exponent r must be >= 1");
      return;
    case Scale::bmo:
      if (spec.phi)
        throw config_error("mean-oscillation target takes no weight");
      return;
  }
  throw internal_error("validate_space: unreachable scale");
}

const char* scale_name(Scale s) {
  switch (s) {
    case Scale::N:
      return "N";
    case Scale::B:
      return "B";
    case Scale::E:
      return "E";
    case Scale::M:
      return "M";
    case Scale::classical_besov:
      return "classical_besov";
    case Scale::Lr:
      return "Lr";
    case Scale::bmo:
      return "bmo";
  }
  return "?";
}

Scale scale_from_string(const std::string& name) {
  if (name == "N") return Scale::N;
  if (name == "B") return Scale::B;
  if (name == "E") return Scale::E;
  if (name == "M") return Scale::M;
  if (name == "classical_besov") return Scale::classical_besov;
  if (name == "Lr") return Scale::Lr;
  if (name == "bmo") return Scale::bmo;
  throw config_error("unknown scale: " + name);
}

PhiSpec effective_phi(const SpaceSpec& spec) {
  switch (spec.scale) {
    case Scale::N:
    case Scale::B:
    case Scale::E:
    case Scale::M:
      if (!spec.phi) throw config_error("this scale requires a weight");
      return *spec.phi;
    case Scale::classical_besov:
      return is_pos_inf(spec.p) ? make_constant(spec.d)
                                : make_power(spec.d, spec.p);
    case Scale::bmo:
      return make_constant(spec.d);
    case Scale::Lr:
      break;
  }
  throw config_error("this scale carries no weight");
}

}  // namespace morrey
